from .FilteredCDGC import *
from .SSPage import *
from .spectral_sequence import *
from .diagonal import *
