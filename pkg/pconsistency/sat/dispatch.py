# -*- coding: utf-8 -*-

import logging

from pconsistency.logic.clauses import is_horn
from pconsistency.sat.dpll import solve_dpll
from pconsistency.sat.horn import solve_horn

__all__ = [
  'Dispatcher',
  'solve',
]

logger = logging.getLogger(__name__)


class Dispatcher(object):
  """Routes clause sets to the Horn or the DPLL solver and counts the calls.

  Parameters
  ----------
  use_horn : bool
    Send Horn clause sets to :py:func:`solve_horn`. When false every call
    goes to :py:func:`solve_dpll`.

  The counters are read-only properties; a dispatcher belongs to one
  session and is never shared.
  """

  def __init__(self, use_horn=True):
    self.use_horn = use_horn
    self._num_calls = 0
    self._num_horn_calls = 0

  @property
  def num_calls(self):
    """Number of :py:meth:`solve` invocations so far."""
    return self._num_calls

  @property
  def num_horn_calls(self):
    """How many of those took the Horn path."""
    return self._num_horn_calls

  def solve(self, cs):
    self._num_calls += 1
    if self.use_horn and is_horn(cs):
      self._num_horn_calls += 1
      result = solve_horn(cs)
      path = 'horn'
    else:
      result = solve_dpll(cs)
      path = 'dpll'
    logger.debug('sat call #%d (%s, %d clauses): %s',
                 self._num_calls, path, len(cs.clauses),
                 'sat' if result.satisfiable else 'unsat')
    return result

  def reset(self):
    self._num_calls = 0
    self._num_horn_calls = 0


def solve(cs, dispatcher=None):
  """Decide ``cs`` with the Horn solver when possible, else with DPLL.

  Parameters
  ----------
  cs : ClauseSet
    The clauses to decide.
  dispatcher : Dispatcher, optional
    Owner of the call counter to increment. A throw-away dispatcher is used
    when omitted.
  """
  if dispatcher is None:
    dispatcher = Dispatcher()
  return dispatcher.solve(cs)
