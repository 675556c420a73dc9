# -*- coding: utf-8 -*-

__version__ = "0.1.0"

from . import errors
from . import logic
from . import sat
from . import reasoning
from .session import *
from .logic import *
from .sat import *
from .reasoning import *
