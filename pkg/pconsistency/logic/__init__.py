# -*- coding: utf-8 -*-

from .formula import *
from .parser import *
from .clauses import *
