# -*- coding: utf-8 -*-

import enum
import itertools
import logging

from pconsistency.errors import BoundExceededError, ContractError, InconsistentKBError
from pconsistency.logic.formula import Not, TRUE
from pconsistency.reasoning.consistency import check_consistency
from pconsistency.reasoning.kb import Conditional, KnowledgeBase, is_tolerated, negate
from pconsistency.session import Session

__all__ = [
  'SubstantiveClass',
  'Entailment',
  'EntailmentVerdict',
  'probe_sentence',
  'classify_substantive',
  'p_entails',
  'strict_p_entails',
  'entail',
]

logger = logging.getLogger(__name__)


class SubstantiveClass(enum.Enum):
  CONSISTENT_WITH = 'ConsistentWith'
  SUBSTANTIVELY_INCONSISTENT = 'SubstantivelyInconsistent'
  NON_SUBSTANTIVE = 'NonSubstantive'


class Entailment(enum.Enum):
  ENTAILED = 'Entailed'
  NEGATION_ENTAILED = 'NegationEntailed'
  AMBIGUOUS = 'Ambiguous'
  ANTECEDENT_IMPOSSIBLE = 'AntecedentImpossible'
  # strict queries are answered yes/no
  NOT_ENTAILED = 'NotEntailed'


class EntailmentVerdict(object):
  """Outcome of an entailment query with the verdicts that support it.

  Parameters
  ----------
  status : Entailment
  query : Conditional
  evidence : dict
    Name to the :py:class:`ConsistencyVerdict` examined (for defeasible
    queries) or to the strict subset found (for strict queries).
  """

  def __init__(self, status, query, evidence=None):
    self.status = status
    self.query = query
    self.evidence = dict(evidence or {})

  @property
  def entailed(self):
    return self.status is Entailment.ENTAILED

  def to_json(self):
    evidence = {}
    for key, value in self.evidence.items():
      evidence[key] = value.to_json() if hasattr(value, 'to_json') else value
    return {'verdict': self.status.value, 'query': str(self.query), 'evidence': evidence}

  def __repr__(self):
    return f'EntailmentVerdict({self.status.value}, {self.query})'


def _require_consistent(X, session):
  verdict = check_consistency(X, session)
  if not verdict.consistent:
    raise InconsistentKBError('entailment is only defined for p-consistent knowledge bases',
                              verdict=verdict)
  return verdict


def probe_sentence(x, session=None):
  r"""The auxiliary defeasible sentence of the substantive-inconsistency test.

  With ``session.probe == 'antecedent'`` (default) it is
  :math:`\phi \rightarrow true`, which can be added consistently exactly when
  some proper model of the base gives :math:`\phi` positive probability.
  With ``'literal'`` it is :math:`true \rightarrow \phi`.
  """
  session = Session.ensure(session)
  if session.probe == 'literal':
    return Conditional.defeasible(TRUE, x.antecedent)
  return Conditional.defeasible(x.antecedent, TRUE)


def _classify(X, x, session):
  with_x, _ = X.add(x)
  added = check_consistency(with_x, session)
  if added.consistent:
    return SubstantiveClass.CONSISTENT_WITH, {'added': added}
  with_probe, _ = X.add(probe_sentence(x, session))
  probe = check_consistency(with_probe, session)
  evidence = {'added': added, 'probe': probe}
  if probe.consistent:
    return SubstantiveClass.SUBSTANTIVELY_INCONSISTENT, evidence
  return SubstantiveClass.NON_SUBSTANTIVE, evidence


def classify_substantive(X, x, session=None):
  """Classify how the conditional ``x`` relates to the consistent base ``X``.

  Returns
  -------
  SubstantiveClass
    ``CONSISTENT_WITH`` when ``X ∪ {x}`` is p-consistent;
    ``SUBSTANTIVELY_INCONSISTENT`` when it is not but ``X`` plus the probe
    sentence of ``x`` (see :py:func:`probe_sentence`) is;
    ``NON_SUBSTANTIVE`` when both are p-inconsistent.

  Raises
  ------
  InconsistentKBError
    When ``X`` itself is p-inconsistent.
  """
  session = Session.ensure(session)
  _require_consistent(X, session)
  return _classify(X, x, session)[0]


def p_entails(X, d, session=None):
  """Decide whether the consistent base ``X`` p-entails the defeasible ``d``.

  Both ``d`` and its negation are classified against ``X``:

  ============================================ ========================
  **Classification**                           **Verdict**
  -------------------------------------------- ------------------------
  negation substantively inconsistent          ``ENTAILED``
  ``d`` substantively inconsistent             ``NEGATION_ENTAILED``
  both consistent with ``X``                   ``AMBIGUOUS``
  either non-substantive                       ``ANTECEDENT_IMPOSSIBLE``
  ============================================ ========================

  Raises
  ------
  ContractError
    When ``d`` is strict.
  InconsistentKBError
    When ``X`` is p-inconsistent.
  """
  if not d.is_defeasible:
    raise ContractError('p_entails takes a defeasible query; use strict_p_entails')
  session = Session.ensure(session)
  base = _require_consistent(X, session)
  negated, negated_evidence = _classify(X, negate(d), session)
  plain, plain_evidence = _classify(X, d, session)
  evidence = {'base': base}
  evidence.update({f'negation_{k}': v for k, v in negated_evidence.items()})
  evidence.update({f'query_{k}': v for k, v in plain_evidence.items()})
  logger.debug('query %s: negation %s, query %s', d, negated.value, plain.value)

  if negated is SubstantiveClass.SUBSTANTIVELY_INCONSISTENT:
    # both cannot be substantively inconsistent with a consistent base
    assert plain is not SubstantiveClass.SUBSTANTIVELY_INCONSISTENT
    status = Entailment.ENTAILED
  elif plain is SubstantiveClass.SUBSTANTIVELY_INCONSISTENT:
    status = Entailment.NEGATION_ENTAILED
  elif SubstantiveClass.NON_SUBSTANTIVE in (negated, plain):
    status = Entailment.ANTECEDENT_IMPOSSIBLE
  else:
    status = Entailment.AMBIGUOUS
  logger.info('%s: %s', d, status.value)
  return EntailmentVerdict(status, d, evidence)


def _strict_support(X, query, session):
  if not query.is_strict:
    raise ContractError('strict_p_entails takes a strict query; use p_entails')
  strict = list(X.strict)
  if len(strict) > session.subset_bound:
    raise BoundExceededError(f'{len(strict)} strict sentences exceed the subset bound '
                             f'of {session.subset_bound}')
  _require_consistent(X, session)

  opposite = Conditional.strict(query.antecedent, Not(query.consequent))
  probe = probe_sentence(query, session)
  universe = X.universe | query.atoms
  for size in range(len(strict), -1, -1):
    for subset in itertools.combinations(strict, size):
      if is_tolerated(opposite, subset, session, universe) is not None:
        continue
      with_probe, _ = KnowledgeBase(subset).add(probe)
      if check_consistency(with_probe, session).consistent:
        ids = [s.id for s in subset]
        logger.info('%s strictly entailed through %s', query, ids)
        return ids
  logger.info('%s not strictly entailed', query)
  return None


def strict_p_entails(X, query, session=None):
  r"""Decide whether the consistent base ``X`` strictly p-entails the strict
  ``query`` :math:`\phi \Rightarrow \psi`.

  Searches the subsets ``S'`` of the strict part, largest first, for one
  that stays p-consistent together with the probe sentence of the query and
  does not tolerate :math:`\phi \Rightarrow \neg \psi`. The first such
  subset ends the search.

  Raises
  ------
  BoundExceededError
    When ``X`` has more strict sentences than ``session.subset_bound``.
  InconsistentKBError
    When ``X`` is p-inconsistent.
  ContractError
    When ``query`` is defeasible.
  """
  return _strict_support(X, query, Session.ensure(session)) is not None


def entail(X, query, session=None):
  """Answer ``query`` with :py:func:`p_entails` when it is defeasible and with
  :py:func:`strict_p_entails` when it is strict.

  Strict queries come back as ``ENTAILED`` (with the supporting strict ids
  under ``evidence['subset']``) or ``NOT_ENTAILED``.
  """
  session = Session.ensure(session)
  if not query.is_strict:
    return p_entails(X, query, session)
  support = _strict_support(X, query, session)
  if support is None:
    return EntailmentVerdict(Entailment.NOT_ENTAILED, query)
  return EntailmentVerdict(Entailment.ENTAILED, query, {'subset': support})
