# -*- coding: utf-8 -*-

"""Worked examples in the knowledge-base file format."""

# birds fly, penguins are birds, penguins do not fly
PENGUINS_STRICT = """\
b => f
p -> b
p -> ~f
"""

PENGUINS = """\
b -> f
p -> b
p -> ~f
"""

# Nixonites, quakers and republicans
NIXON_STRICT_PACIFISM = """\
n -> r
n -> q
q => p
r => ~p
p -> c
"""

NIXON_STRICT_MEMBERSHIP = """\
n => r
n => q
q -> p
r -> ~p
p -> c
"""

NIXON_MIXED = """\
n -> r   # typically Nixonites are republicans
n => q   # all Nixonites are quakers
q -> p
r => ~p
p -> c
"""

GOLDEN = {
  'penguins_strict': PENGUINS_STRICT,
  'penguins': PENGUINS,
  'nixon_strict_pacifism': NIXON_STRICT_PACIFISM,
  'nixon_strict_membership': NIXON_STRICT_MEMBERSHIP,
  'nixon_mixed': NIXON_MIXED,
}
