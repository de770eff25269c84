from .nine_cell import *
from .projective_plane import *
from .noncoformal_collapse import *
from .sphere_products import *
from .random_structures import *
from .regression import *
