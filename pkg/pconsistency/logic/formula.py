# -*- coding: utf-8 -*-

from collections.abc import Mapping
from dataclasses import dataclass

from pconsistency.errors import ContractError, UnknownAtomError

__all__ = [
  'Formula',
  'Atom',
  'Not',
  'Or',
  'And',
  'MaterialImplies',
  'ConstTrue',
  'ConstFalse',
  'TRUE',
  'FALSE',
  'conjoin',
  'disjoin',
  'evaluate',
  'expand_abbreviations',
  'format_formula',
  'TruthAssignment',
]

# binding strength used by the printer; higher binds tighter
_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_NOT = 4
_PREC_ATOM = 5


class Formula(object):
  r"""Propositional formula over named atoms.

  Formulas are immutable trees built from

  ============================ ===================== ===================
  **Node**                     **Text form**         **Primitive?**
  ---------------------------- --------------------- -------------------
  ``Atom(name)``               ``name``              yes
  ``Not(f)``                   ``~f`` or ``!f``      yes
  ``Or(f, g)``                 ``f | g``             yes
  ``And(f, g)``                ``f & g``             :math:`\neg(\neg f \vee \neg g)`
  ``MaterialImplies(f, g)``    ``f > g``             :math:`\neg f \vee g`
  ``ConstTrue()``              ``true``              constant
  ``ConstFalse()``             ``false``             constant
  ============================ ===================== ===================

  Python operators build formulas too: ``a & b``, ``a | b``, ``~a`` and
  ``a.implies(b)``.
  """
  __slots__ = ()

  precedence = _PREC_ATOM

  def atoms(self):
    """The set of atom names occurring in the formula."""
    found = set()
    stack = [self]
    while stack:
      node = stack.pop()
      if isinstance(node, Atom):
        found.add(node.name)
      else:
        stack.extend(node.children())
    return frozenset(found)

  def children(self):
    return ()

  def evaluate(self, assignment):
    return evaluate(self, assignment)

  def implies(self, other):
    return MaterialImplies(self, other)

  def __and__(self, other):
    return And(self, other)

  def __or__(self, other):
    return Or(self, other)

  def __invert__(self):
    return Not(self)

  def __str__(self):
    return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
  name: str

  def __repr__(self):
    return f'Atom({self.name!r})'


@dataclass(frozen=True)
class Not(Formula):
  operand: Formula
  precedence = _PREC_NOT

  def children(self):
    return (self.operand,)


@dataclass(frozen=True)
class Or(Formula):
  left: Formula
  right: Formula
  precedence = _PREC_OR

  def children(self):
    return (self.left, self.right)


@dataclass(frozen=True)
class And(Formula):
  left: Formula
  right: Formula
  precedence = _PREC_AND

  def children(self):
    return (self.left, self.right)


@dataclass(frozen=True)
class MaterialImplies(Formula):
  antecedent: Formula
  consequent: Formula
  precedence = _PREC_IMPLIES

  def children(self):
    return (self.antecedent, self.consequent)


@dataclass(frozen=True)
class ConstTrue(Formula):

  def __repr__(self):
    return 'TRUE'


@dataclass(frozen=True)
class ConstFalse(Formula):

  def __repr__(self):
    return 'FALSE'


TRUE = ConstTrue()
FALSE = ConstFalse()


def conjoin(formulas):
  """Left-nested conjunction of ``formulas``; ``TRUE`` when empty."""
  result = None
  for f in formulas:
    result = f if result is None else And(result, f)
  return TRUE if result is None else result


def disjoin(formulas):
  """Left-nested disjunction of ``formulas``; ``FALSE`` when empty."""
  result = None
  for f in formulas:
    result = f if result is None else Or(result, f)
  return FALSE if result is None else result


def _postorder(f, visit):
  """Fold ``f`` bottom-up without recursion: ``visit(node, values)`` gets the
  folded values of ``node.children()`` in order."""
  values = []
  stack = [(f, False)]
  while stack:
    node, expanded = stack.pop()
    if not isinstance(node, Formula):
      raise TypeError(f'Not a formula: {node!r}')
    children = node.children()
    if children and not expanded:
      stack.append((node, True))
      stack.extend((child, False) for child in reversed(children))
      continue
    start = len(values) - len(children)
    args = values[start:]
    del values[start:]
    values.append(visit(node, args))
  return values[0]


def evaluate(f, t):
  """Truth value (0 or 1) of formula ``f`` under the truth assignment ``t``.

  ``Not`` and ``Or`` are evaluated directly; ``And`` and ``MaterialImplies``
  through their abbreviations.

  Raises
  ------
  UnknownAtomError
    When an atom of ``f`` is outside the universe of ``t``.
  """

  def visit(node, args):
    if isinstance(node, Atom):
      return t[node.name]
    if isinstance(node, Not):
      return 1 - args[0]
    if isinstance(node, Or):
      return _or(*args)
    if isinstance(node, And):
      return 1 - _or(1 - args[0], 1 - args[1])
    if isinstance(node, MaterialImplies):
      return _or(1 - args[0], args[1])
    if isinstance(node, ConstTrue):
      return 1
    if isinstance(node, ConstFalse):
      return 0
    raise TypeError(f'Not a formula: {node!r}')

  return _postorder(f, visit)


def _or(x, y):
  # every operand is folded before this, so unknown atoms always surface
  return 1 if x or y else 0


def expand_abbreviations(f):
  """Rewrite ``And`` and ``MaterialImplies`` into ``Not``/``Or``."""

  def visit(node, args):
    if isinstance(node, Not):
      return Not(args[0])
    if isinstance(node, Or):
      return Or(*args)
    if isinstance(node, And):
      return Not(Or(Not(args[0]), Not(args[1])))
    if isinstance(node, MaterialImplies):
      return Or(Not(args[0]), args[1])
    return node

  return _postorder(f, visit)


def format_formula(f):
  """Print ``f`` in the formula grammar with the fewest parentheses.

  The output parses back to a structurally equal formula.
  """

  def visit(node, args):
    if isinstance(node, Atom):
      return node.name
    if isinstance(node, ConstTrue):
      return 'true'
    if isinstance(node, ConstFalse):
      return 'false'
    if isinstance(node, Not):
      return '~' + _wrap(args[0], node.operand.precedence < _PREC_NOT)
    if isinstance(node, (And, Or)):
      op = ' & ' if isinstance(node, And) else ' | '
      # left-associative: a right operand of equal strength needs parentheses
      return (_wrap(args[0], node.left.precedence < node.precedence) + op +
              _wrap(args[1], node.right.precedence <= node.precedence))
    if isinstance(node, MaterialImplies):
      # right-associative
      return (_wrap(args[0], node.antecedent.precedence <= _PREC_IMPLIES) + ' > ' +
              _wrap(args[1], node.consequent.precedence < _PREC_IMPLIES))
    raise TypeError(f'Not a formula: {node!r}')

  return _postorder(f, visit)


def _wrap(text, parens):
  return f'({text})' if parens else text


class TruthAssignment(Mapping):
  """A total map from the variables of a universe to ``{0, 1}``.

  Parameters
  ----------
  values : mapping
    Variable name to truth value: 0, 1, False or True.
  universe : iterable of str, optional
    The declared universe. Variables of the universe missing from
    ``values`` are set to 0. Defaults to the keys of ``values``.

  Raises
  ------
  ContractError
    When a value is not a truth value, e.g. the string ``"0"``.

  Assignments are immutable and hashable, so equal assignments can be merged
  in dictionaries and sets.
  """
  __slots__ = ('_values', '_hash')

  def __init__(self, values=(), universe=None):
    values = dict(values)
    if universe is not None:
      for name in universe:
        values.setdefault(name, 0)
    for name, value in values.items():
      if not isinstance(value, int) or value not in (0, 1):
        raise ContractError(f'{name} must be 0 or 1, got {value!r}')
    self._values = {k: int(values[k]) for k in sorted(values)}
    self._hash = None

  @property
  def universe(self):
    return frozenset(self._values)

  def __getitem__(self, name):
    try:
      return self._values[name]
    except KeyError:
      raise UnknownAtomError(name) from None

  def __iter__(self):
    return iter(self._values)

  def __len__(self):
    return len(self._values)

  def __hash__(self):
    if self._hash is None:
      self._hash = hash(frozenset(self._values.items()))
    return self._hash

  def __eq__(self, other):
    if isinstance(other, TruthAssignment):
      return self._values == other._values
    return NotImplemented

  def __repr__(self):
    bits = ', '.join(f'{k}={v}' for k, v in self._values.items())
    return f'TruthAssignment({bits})'

  def project(self, universe):
    """Restrict to ``universe``, completing absent variables with 0."""
    return TruthAssignment({k: self._values.get(k, 0) for k in universe})

  def extend(self, universe):
    """Add the variables of ``universe`` not yet assigned, set to 0."""
    return TruthAssignment(self._values, universe=universe)

  def to_dict(self):
    return dict(self._values)
