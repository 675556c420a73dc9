# -*- coding: utf-8 -*-

from .results import *
from .dpll import *
from .horn import *
from .dispatch import *
