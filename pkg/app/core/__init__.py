from .errors import *
from .settings import *
