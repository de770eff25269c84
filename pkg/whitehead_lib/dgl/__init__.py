from .ParamElement import *
from .HomologyBasis import *
from .LieTarget import *
from .DGLPresentation import *
from .HomologyLieAlgebra import *
from .operations import *
