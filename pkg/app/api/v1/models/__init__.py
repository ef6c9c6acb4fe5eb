from .adhm import *
from .base import *
from .field import *
from .observable import *
from .representation import *
