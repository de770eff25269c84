from .SullivanAlgebraPresentation import *
from .PairingTable import *
from .AutomorphismFamily import *
from .dualize import *
from .graded_det import *
from .andrews_arkowitz import *
from .lower_central import *
from .conjugation import *
from .intrinsic import *
