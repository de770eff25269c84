from .exterior import *
from .LInfStructure import *
from .Coderivation import *
from .correspondence import *
from .jacobi import *
from .LInfMorphismTables import *
from .morphisms import *
from .quillen_chains import *
