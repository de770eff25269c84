from .grammar import *
from .PresentationDocument import *
from .documents import *
