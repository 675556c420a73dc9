# -*- coding: utf-8 -*-

import sys

from pconsistency.cli import main

sys.exit(main())
