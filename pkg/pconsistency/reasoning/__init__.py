# -*- coding: utf-8 -*-

from .kb import *
from .consistency import *
from .semantics import *
from .entailment import *
