# -*- coding: utf-8 -*-

import enum
import itertools
import logging

from pconsistency.errors import BoundExceededError, ContractError
from pconsistency.reasoning.kb import KnowledgeBase, falsifies, is_tolerated, verifies
from pconsistency.session import Session

__all__ = [
  'StallPhase',
  'ConsistencyVerdict',
  'Consistent',
  'Inconsistent',
  'is_confirmable',
  'check_consistency',
  'brute_force_consistency',
  'minimize_core',
  'verify_certificate',
  'tolerance_partition',
]

logger = logging.getLogger(__name__)


class StallPhase(enum.Enum):
  DEFEASIBLE = 'DefeasibleStall'
  STRICT = 'StrictStall'


class ConsistencyVerdict(object):
  """Result of :py:func:`check_consistency`.

  Both verdict kinds serialize to the same keys: ``verdict``, ``removals``,
  ``strict_witnesses``, ``core`` and ``phase``. The keys that do not apply
  are empty (``null`` for ``phase``).
  """
  consistent = False
  name = None

  def __bool__(self):
    return self.consistent


class Consistent(ConsistencyVerdict):
  r"""Certificate of p-consistency.

  Parameters
  ----------
  kb : KnowledgeBase
    The checked knowledge base.
  removals : sequence of (int, TruthAssignment)
    Defeasible sentence ids in removal order, each with the assignment that
    verified it while falsifying nothing still active.
  strict_witnesses : dict
    Strict sentence id to an assignment verifying it and falsifying no
    strict sentence.
  """
  consistent = True
  name = 'Consistent'

  def __init__(self, kb, removals=(), strict_witnesses=None):
    self.kb = kb
    self.removals = tuple(removals)
    self.strict_witnesses = dict(sorted((strict_witnesses or {}).items()))

  @property
  def assignments(self):
    r"""The witness sequence :math:`t_1, \dots, t_n`: removal witnesses in
    order, then strict witnesses by id."""
    return ([t for _, t in self.removals] +
            [t for _, t in self.strict_witnesses.items()])

  def to_json(self):
    return {
      'verdict': self.name,
      'removals': [[id, t.to_dict()] for id, t in self.removals],
      'strict_witnesses': {str(id): t.to_dict() for id, t in self.strict_witnesses.items()},
      'core': [],
      'phase': None,
    }

  def __repr__(self):
    order = [id for id, _ in self.removals]
    return f'Consistent(removals={order}, strict={list(self.strict_witnesses)})'


class Inconsistent(ConsistencyVerdict):
  """Evidence of p-inconsistency: a sub-base that is not confirmable.

  Parameters
  ----------
  kb : KnowledgeBase
    The checked knowledge base.
  core : iterable of int
    Ids of the non-confirmable remainder where the procedure halted.
  phase : StallPhase
    Whether the defeasible removal or the strict check halted.
  """
  name = 'Inconsistent'

  def __init__(self, kb, core, phase):
    self.kb = kb
    self.core = frozenset(core)
    self.phase = phase

  def to_json(self):
    return {
      'verdict': self.name,
      'removals': [],
      'strict_witnesses': {},
      'core': sorted(self.core),
      'phase': self.phase.value,
    }

  def __repr__(self):
    return f'Inconsistent(core={sorted(self.core)}, phase={self.phase.value})'


def _others(x, sentences):
  return [y for y in sentences if y.id != x.id]


def is_confirmable(X, session=None):
  """Whether the non-empty base ``X`` is confirmable.

  With defeasible sentences present, some defeasible sentence must be
  tolerated by all the other sentences. A purely strict base is confirmable
  when every sentence is tolerated by the others.

  Raises
  ------
  ContractError
    When ``X`` is empty.
  """
  if not len(X):
    raise ContractError('confirmability is only defined for non-empty sets')
  session = Session.ensure(session)
  sentences = list(X)
  if X.defeasible:
    return any(is_tolerated(d, _others(d, sentences), session) is not None
               for d in X.defeasible)
  return all(is_tolerated(s, _others(s, sentences), session) is not None
             for s in X.strict)


def check_consistency(X, session=None):
  """Decide p-consistency of ``X`` with the two-phase removal procedure.

  Phase one repeatedly removes a defeasible sentence tolerated by the strict
  part together with the defeasible sentences still active, scanning
  candidates by ascending id (descending with ``session.reverse_scan``) and
  taking the first hit. Phase two requires every strict sentence to be
  tolerated by the remaining strict sentences. The number of satisfiability
  calls is at most :math:`|D|(|D|+1)/2 + |S|`.

  Parameters
  ----------
  X : KnowledgeBase
  session : Session, optional

  Returns
  -------
  ConsistencyVerdict
    ``Consistent`` with its certificate, or ``Inconsistent`` with the
    remainder at the point of halting (not minimized, see
    :py:func:`minimize_core`). The empty base is consistent.
  """
  session = Session.ensure(session)
  universe = X.universe
  strict = list(X.strict)
  active = list(X.defeasible)
  removals = []

  while active:
    candidates = sorted(active, key=lambda x: x.id, reverse=session.reverse_scan)
    for d in candidates:
      witness = is_tolerated(d, strict + _others(d, active), session, universe)
      if witness is not None:
        break
    else:
      core = [x.id for x in active] + [x.id for x in strict]
      logger.debug('no defeasible sentence tolerated among %s', sorted(core))
      logger.info('inconsistent: defeasible stall')
      return Inconsistent(X, core, StallPhase.DEFEASIBLE)
    logger.debug('removed sentence %d (%s)', d.id, d)
    removals.append((d.id, witness))
    active = _others(d, active)

  strict_witnesses = {}
  for s in sorted(strict, key=lambda x: x.id):
    witness = is_tolerated(s, _others(s, strict), session, universe)
    if witness is None:
      logger.debug('strict sentence %d (%s) not tolerated', s.id, s)
      logger.info('inconsistent: strict stall')
      return Inconsistent(X, [x.id for x in strict], StallPhase.STRICT)
    strict_witnesses[s.id] = witness

  logger.info('consistent (%d satisfiability calls in session)', session.num_sat_calls)
  return Consistent(X, removals, strict_witnesses)


def brute_force_consistency(X, session=None):
  """Decide p-consistency by testing confirmability of every non-empty
  subset of ``X``. Exponential; meant as a reference oracle.

  Raises
  ------
  BoundExceededError
    When ``X`` has more sentences than ``session.brute_force_bound``.
  """
  session = Session.ensure(session)
  if len(X) > session.brute_force_bound:
    raise BoundExceededError(f'{len(X)} sentences exceed the brute-force bound '
                             f'of {session.brute_force_bound}')
  sentences = list(X)
  for size in range(1, len(sentences) + 1):
    for subset in itertools.combinations(sentences, size):
      if not is_confirmable(KnowledgeBase(subset), session):
        logger.debug('subset %s is not confirmable', [x.id for x in subset])
        return False
  return True


def minimize_core(X, core, session=None):
  """Shrink an inconsistent set of ids of ``X`` to an inconsistency-minimal one.

  Sentences are dropped one at a time in ascending id order; a drop is kept
  when the reduced set is still inconsistent, and the reduced set is then
  narrowed further to the core reported for it. Every proper subset of the
  result is consistent.

  Raises
  ------
  ContractError
    When the sentences of ``core`` are consistent.
  """
  session = Session.ensure(session)
  verdict = check_consistency(X.subset(core), session)
  if verdict.consistent:
    raise ContractError(f'core {sorted(core)} is consistent; nothing to minimize')
  current = sorted(verdict.core)
  for id in sorted(current):
    if id not in current or len(current) == 1:
      continue
    trial = [i for i in current if i != id]
    verdict = check_consistency(X.subset(trial), session)
    if not verdict.consistent:
      current = sorted(verdict.core)
      logger.debug('dropped sentence %d, core now %s', id, current)
  return frozenset(current)


def verify_certificate(X, verdict, session=None):
  """Re-check a verdict of :py:func:`check_consistency` against ``X``.

  For ``Consistent``, every defeasible id must be removed exactly once with
  a witness that verifies it and falsifies nothing active at that step, and
  every strict sentence must have a witness verifying it without falsifying
  any strict sentence. For ``Inconsistent``, the core must not be
  confirmable.
  """
  if not verdict.consistent:
    return not is_confirmable(X.subset(verdict.core), session)

  defeasible = [x.id for x in X.defeasible]
  if sorted(id for id, _ in verdict.removals) != sorted(defeasible):
    return False
  strict = list(X.strict)
  active = list(X.defeasible)
  for id, t in verdict.removals:
    d = X[id]
    if not verifies(t, d):
      return False
    if any(falsifies(t, y) for y in strict + active):
      return False
    active = _others(d, active)
  if sorted(verdict.strict_witnesses) != sorted(x.id for x in strict):
    return False
  for id, t in verdict.strict_witnesses.items():
    if not verifies(t, X[id]) or any(falsifies(t, y) for y in strict):
      return False
  return True


def tolerance_partition(X, session=None):
  """Group the defeasible sentences of ``X`` into tolerance layers.

  The first layer holds every defeasible sentence tolerated by all of
  ``X``; the next layer every sentence tolerated by what is left after
  removing the first layer, and so on. Strict sentences stay in every
  tolerance test and are not partitioned.

  Returns
  -------
  list of tuple of int or None
    The layers as id tuples, or ``None`` when some remainder has no
    tolerated sentence.
  """
  session = Session.ensure(session)
  universe = X.universe
  strict = list(X.strict)
  active = list(X.defeasible)
  layers = []
  while active:
    layer = [d for d in active
             if is_tolerated(d, strict + _others(d, active), session, universe) is not None]
    if not layer:
      return None
    layers.append(tuple(d.id for d in layer))
    active = [d for d in active if d.id not in layers[-1]]
  return layers
