# -*- coding: utf-8 -*-

from collections import defaultdict, deque

from pconsistency.errors import NotHornError
from pconsistency.logic.clauses import is_horn
from pconsistency.logic.formula import TruthAssignment
from pconsistency.sat.results import Satisfiable, UNSAT

__all__ = [
  'solve_horn',
]


def solve_horn(cs):
  r"""Decide a Horn clause set in time linear in its literal occurrences.

  Every clause is read as a rule :math:`b_1 \wedge \dots \wedge b_k \supset h`
  (the head :math:`h` is absent for purely negative clauses). Each clause
  keeps a counter of body variables not yet forced true; starting from the
  clauses with an empty body, forcing a variable decrements the counters of
  the clauses it occurs negatively in, and a counter reaching zero forces the
  head. A clause reaching zero without a head is violated.

  Parameters
  ----------
  cs : ClauseSet
    A Horn clause set (at most one positive literal per clause).

  Returns
  -------
  SatResult
    ``UNSAT``, or ``Satisfiable`` with the minimal model: exactly the forced
    variables are 1.

  Raises
  ------
  NotHornError
    If some clause has two or more positive literals.
  """
  if not is_horn(cs):
    raise NotHornError('solve_horn needs clauses with at most one positive literal')

  heads = []
  pending = []
  occurs_in = defaultdict(list)
  for index, clause in enumerate(cs.clauses):
    head = None
    body = set()
    for lit in clause:
      if lit.positive:
        head = lit.variable
      else:
        body.add(lit.variable)
    heads.append(head)
    pending.append(len(body))
    for variable in body:
      occurs_in[variable].append(index)

  forced = set()
  queue = deque()

  def fire(index):
    head = heads[index]
    if head is None:
      return False
    if head not in forced:
      forced.add(head)
      queue.append(head)
    return True

  for index, count in enumerate(pending):
    if count == 0 and not fire(index):
      return UNSAT
  while queue:
    variable = queue.popleft()
    for index in occurs_in[variable]:
      pending[index] -= 1
      if pending[index] == 0 and not fire(index):
        return UNSAT

  return Satisfiable(TruthAssignment({v: v in forced for v in cs.variables}))
