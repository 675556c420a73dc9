# -*- coding: utf-8 -*-

import itertools
from collections import namedtuple

from pconsistency.logic.formula import (Atom, Not, Or, And, MaterialImplies,
                                        ConstTrue, ConstFalse, TRUE, FALSE)

__all__ = [
  'Literal',
  'ClauseSet',
  'to_nnf',
  'to_clauses',
  'is_horn',
]

AUX_PREFIX = '_d'


class Literal(namedtuple('Literal', ['variable', 'positive'])):
  """A variable with a polarity; ``positive=False`` is the negated variable."""
  __slots__ = ()

  def negate(self):
    return Literal(self.variable, not self.positive)

  def __str__(self):
    return self.variable if self.positive else '~' + self.variable


class ClauseSet(object):
  """A conjunction of clauses, each clause a disjunction of literals.

  Parameters
  ----------
  clauses : iterable of iterable of Literal
    The clauses. An empty clause is unsatisfiable.
  universe : iterable of str, optional
    The variables of the source formula. Defaults to every non-auxiliary
    variable of ``clauses``.
  auxiliaries : dict, optional
    Auxiliary variable name to the sub-formula it stands for.
  """

  def __init__(self, clauses, universe=None, auxiliaries=None):
    self.clauses = tuple(tuple(c) for c in clauses)
    self.auxiliaries = dict(auxiliaries or {})
    if universe is None:
      universe = {lit.variable for c in self.clauses for lit in c
                  if lit.variable not in self.auxiliaries}
    self.universe = frozenset(universe)

  @property
  def variables(self):
    """Every variable of the clauses plus the source universe."""
    found = set(self.universe)
    for clause in self.clauses:
      found.update(lit.variable for lit in clause)
    return frozenset(found)

  def is_horn(self):
    return is_horn(self)

  def satisfied_by(self, assignment):
    """Whether every clause has a literal made true by ``assignment``."""
    return all(any(assignment[lit.variable] == lit.positive for lit in clause)
               for clause in self.clauses)

  def __len__(self):
    return len(self.clauses)

  def __iter__(self):
    return iter(self.clauses)

  def __repr__(self):
    text = ' & '.join('(' + ' | '.join(map(str, c)) + ')' for c in self.clauses)
    return f'ClauseSet({text or "empty"})'


def to_nnf(f, positive=True):
  """Negation normal form over ``Atom``, ``Not(Atom)``, ``And``, ``Or`` and the
  two constants. ``positive=False`` yields the NNF of ``Not(f)``.

  Runs on an explicit stack, so formulas of any depth are accepted.
  """
  values = []
  stack = [(f, positive, False)]
  while stack:
    node, positive, expanded = stack.pop()
    if isinstance(node, Atom):
      values.append(node if positive else Not(node))
    elif isinstance(node, ConstTrue):
      values.append(TRUE if positive else FALSE)
    elif isinstance(node, ConstFalse):
      values.append(FALSE if positive else TRUE)
    elif isinstance(node, Not):
      stack.append((node.operand, not positive, False))
    elif not isinstance(node, (And, Or, MaterialImplies)):
      raise TypeError(f'Not a formula: {node!r}')
    elif expanded:
      right = values.pop()
      left = values.pop()
      # De Morgan: negation swaps the connective; f > g reads as ~f | g
      conjunctive = isinstance(node, And) == positive
      values.append(And(left, right) if conjunctive else Or(left, right))
    else:
      if isinstance(node, MaterialImplies):
        first, second = (node.antecedent, not positive), (node.consequent, positive)
      else:
        first, second = (node.left, positive), (node.right, positive)
      stack.append((node, positive, True))
      stack.append(second + (False,))
      stack.append(first + (False,))
  return values[0]


def _flatten(f, kind):
  stack, parts = [f], []
  while stack:
    node = stack.pop()
    if isinstance(node, kind):
      stack.append(node.right)
      stack.append(node.left)
    else:
      parts.append(node)
  return parts


class _ClauseBuilder(object):
  def __init__(self):
    self.clauses = []
    self.auxiliaries = {}
    self.counter = itertools.count(1)

  def require(self, node, guard=()):
    """Emit clauses for ``guard -> node`` where ``guard`` is a tuple of
    literals already in clause form (negated auxiliaries)."""
    pending = [(node, guard)]
    while pending:
      node, guard = pending.pop()
      for conjunct in _flatten(node, And):
        literals = []
        satisfied = False
        for disjunct in _flatten(conjunct, Or):
          if isinstance(disjunct, ConstTrue):
            satisfied = True
            break
          if isinstance(disjunct, ConstFalse):
            continue
          if isinstance(disjunct, Atom):
            literals.append(Literal(disjunct.name, True))
          elif isinstance(disjunct, Not):
            literals.append(Literal(disjunct.operand.name, False))
          else:
            # a conjunction inside a disjunction gets a definitional variable;
            # one direction suffices as the auxiliary only occurs positively
            name = self.define(disjunct)
            literals.append(Literal(name, True))
            pending.append((disjunct, (Literal(name, False),)))
        if satisfied:
          continue
        clause = list(dict.fromkeys(guard + tuple(literals)))
        if any(lit.negate() in clause for lit in clause):
          continue
        self.clauses.append(clause)

  def define(self, node):
    name = f'{AUX_PREFIX}{next(self.counter)}'
    self.auxiliaries[name] = node
    return name


def to_clauses(f):
  """Equisatisfiable clause form of ``f``.

  The formula is brought into negation normal form, top-level conjunctions
  are split, and each conjunct that is a plain disjunction of literals is
  kept as it is. Sub-conjunctions nested under a disjunction are replaced by
  fresh auxiliary variables implying them, so the result is linear in the
  size of ``f`` and the material counterparts of Horn-like conditionals stay
  Horn. Any model of the result, projected to the atoms of ``f``, satisfies
  ``f``.

  Parameters
  ----------
  f : Formula
    The source formula.

  Returns
  -------
  ClauseSet
    ``universe`` is ``f.atoms()``; auxiliary names start with an underscore
    and never collide with atoms.
  """
  builder = _ClauseBuilder()
  builder.require(to_nnf(f))
  return ClauseSet(builder.clauses, universe=f.atoms(), auxiliaries=builder.auxiliaries)


def is_horn(cs):
  """True iff every clause has at most one positive literal."""
  clauses = cs.clauses if isinstance(cs, ClauseSet) else cs
  return all(sum(1 for lit in clause if lit.positive) <= 1 for clause in clauses)
