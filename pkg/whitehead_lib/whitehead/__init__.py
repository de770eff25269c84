from .model import *
from .BracketSet import *
from .extension import *
from .classify import *
from .formality import *
