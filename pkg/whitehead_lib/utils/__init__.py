from .constraints import *
from .linear_algebra import *
from .polynomials import *
from .rationals import *
