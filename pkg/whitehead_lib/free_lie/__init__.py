from .LieExpr import *
from .GeneratorSet import *
from .tensor import *
from .basis import *
