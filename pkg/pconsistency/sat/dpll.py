# -*- coding: utf-8 -*-

import logging
from collections import Counter

from pconsistency.logic.clauses import Literal
from pconsistency.logic.formula import TruthAssignment
from pconsistency.sat.results import Satisfiable, UNSAT

__all__ = [
  'solve_dpll',
]

logger = logging.getLogger(__name__)


def solve_dpll(cs):
  """Decide a clause set with the Davis-Putnam-Logemann-Loveland procedure.

  Unit propagation runs to a fixed point before every decision. The decision
  variable is the one with the most occurrences in the remaining clauses
  (ties broken by name) and is tried true first, so the procedure and the
  returned model are deterministic. Variables left open once every clause
  is satisfied are set to 0.

  Parameters
  ----------
  cs : ClauseSet
    The clauses to decide.

  Returns
  -------
  SatResult
    ``Satisfiable(model)`` with a model over ``cs.variables``, or ``UNSAT``.
  """
  clauses = [frozenset(c) for c in cs.clauses]
  assignment = _search(clauses, {})
  if assignment is None:
    return UNSAT
  return Satisfiable(TruthAssignment(assignment, universe=cs.variables))


def _search(clauses, assignment):
  # depth-first on an explicit stack; the false branch is pushed first so
  # the true branch is tried first
  stack = [(clauses, assignment)]
  decisions = 0
  while stack:
    clauses, assignment = _propagate(*stack.pop())
    if clauses is None:
      continue
    if not clauses:
      return assignment
    variable = _choose(clauses)
    decisions += 1
    for value in (False, True):
      trial = dict(assignment)
      trial[variable] = value
      stack.append((_assign(clauses, variable, value), trial))
  logger.debug('dpll: unsatisfiable after %d decisions', decisions)
  return None


def _assign(clauses, variable, value):
  satisfied = Literal(variable, value)
  falsified = Literal(variable, not value)
  remaining = []
  for clause in clauses:
    if satisfied in clause:
      continue
    if falsified in clause:
      clause = clause - {falsified}
    remaining.append(clause)
  return remaining


def _propagate(clauses, assignment):
  assignment = dict(assignment)
  while True:
    unit = None
    for clause in clauses:
      if not clause:
        return None, None
      if unit is None and len(clause) == 1:
        unit = next(iter(clause))
    if unit is None:
      return clauses, assignment
    assignment[unit.variable] = unit.positive
    clauses = _assign(clauses, unit.variable, unit.positive)


def _choose(clauses):
  occurrences = Counter(lit.variable for clause in clauses for lit in clause)
  return min(occurrences, key=lambda v: (-occurrences[v], v))
