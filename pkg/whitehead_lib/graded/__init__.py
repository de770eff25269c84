from .degrees import *
from .signs import *
from .GradedVector import *
from .Suspension import *
from .GradedPolynomial import *
