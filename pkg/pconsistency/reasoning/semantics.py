# -*- coding: utf-8 -*-

import json
import logging
from fractions import Fraction

from pconsistency.errors import ContractError, ImproperModelError
from pconsistency.logic.formula import TruthAssignment, conjoin, disjoin
from pconsistency.reasoning.kb import Conditional, material_counterpart

__all__ = [
  'ProbabilityModel',
  'parse_rational',
  'format_rational',
  'conditional_probability',
  'probabilities',
  'is_proper',
  'build_witness_model',
  'quasi_conjunction',
  'uncertainty',
]

logger = logging.getLogger(__name__)


def parse_rational(text):
  """Read an exact rational from ``"p/q"``, an integer or a decimal string.

  Raises
  ------
  ContractError
    When ``text`` is not a rational number.
  """
  if isinstance(text, (Fraction, int)):
    return Fraction(text)
  try:
    return Fraction(str(text).strip())
  except (ValueError, ZeroDivisionError):
    raise ContractError(f'not a rational number: {text!r}') from None


class ProbabilityModel(object):
  """A finite probability distribution over truth assignments.

  Parameters
  ----------
  points : iterable of (TruthAssignment, rational)
    Assignments with their weights. Repeated assignments are merged by
    summing their weights.
  universe : iterable of str, optional
    The variables every assignment covers. Defaults to the union of the
    assignments' universes; assignments are completed with 0 over it.

  Raises
  ------
  ContractError
    When a weight is negative or the weights do not sum to exactly 1.
  """

  def __init__(self, points, universe=None):
    points = [(t, Fraction(w)) for t, w in points]
    if universe is None:
      universe = frozenset().union(*(t.universe for t, _ in points))
    self.universe = frozenset(universe)
    merged = {}
    for t, w in points:
      if w < 0:
        raise ContractError(f'negative weight {w}')
      t = t.extend(self.universe)
      merged[t] = merged.get(t, Fraction(0)) + w
    total = sum(merged.values(), Fraction(0))
    if total != 1:
      raise ContractError(f'weights sum to {total}, not 1')
    self.points = tuple(merged.items())

  @property
  def weights(self):
    return [w for _, w in self.points]

  def __len__(self):
    return len(self.points)

  def __iter__(self):
    return iter(self.points)

  def __repr__(self):
    return f'ProbabilityModel({len(self.points)} assignments over {sorted(self.universe)})'

  def probability(self, formula):
    """Total weight of the assignments satisfying ``formula``."""
    return sum((w for t, w in self.points if formula.evaluate(t)), Fraction(0))

  def to_json(self):
    return {
      'universe': sorted(self.universe),
      'assignments': [{'assignment': t.to_dict(), 'weight': format_rational(w)}
                      for t, w in self.points],
    }

  @classmethod
  def from_json(cls, payload):
    """Inverse of :py:meth:`to_json`; also accepts a wrapper object holding
    the model under ``"model"``."""
    if not isinstance(payload, dict):
      raise ContractError('malformed model description: expected a JSON object')
    if 'model' in payload:
      payload = payload['model']
    try:
      points = [(TruthAssignment(p['assignment']), parse_rational(p['weight']))
                for p in payload['assignments']]
    except (KeyError, TypeError) as e:
      raise ContractError(f'malformed model description: {e}') from None
    return cls(points, universe=payload.get('universe'))

  def dumps(self):
    return json.dumps(self.to_json(), indent=2)

  @classmethod
  def loads(cls, text):
    try:
      payload = json.loads(text)
    except json.JSONDecodeError as e:
      raise ContractError(f'model file is not valid JSON: {e}') from None
    return cls.from_json(payload)

  @classmethod
  def load(cls, path):
    """Read a model file written by :py:meth:`dumps`."""
    with open(path, 'rb') as f:
      data = f.read()
    try:
      text = data.decode('utf-8')
    except UnicodeDecodeError as e:
      raise ContractError(f'{path}: invalid UTF-8 byte at offset {e.start}') from None
    return cls.loads(text)


def format_rational(value):
  return f'{value.numerator}/{value.denominator}'


def conditional_probability(m, x):
  r"""Probability of the conditional ``x`` in model ``m``:

  .. math::

      P(\phi \rightarrow \psi) = \frac{\sum_t P(t)\, t(\phi \wedge \psi)}
                                      {\sum_t P(t)\, t(\phi)}

  Defeasible and strict sentences are measured alike.

  Raises
  ------
  ImproperModelError
    When the antecedent has probability zero.
  UnknownAtomError
    When ``x`` mentions an atom outside the model's universe.
  """
  verified = Fraction(0)
  covered = Fraction(0)
  for t, w in m.points:
    if x.antecedent.evaluate(t):
      covered += w
      if x.consequent.evaluate(t):
        verified += w
  if covered == 0:
    raise ImproperModelError(f'antecedent of "{x}" has probability 0')
  return verified / covered


def probabilities(m, X):
  """Map every sentence of ``X`` to its probability in ``m``."""
  return {x.id: conditional_probability(m, x) for x in X}


def is_proper(m, X):
  """Whether every antecedent in ``X`` has positive probability in ``m``."""
  return all(m.probability(x.antecedent) > 0 for x in X)


def build_witness_model(cert, epsilon):
  r"""Build a distribution that witnesses a consistency certificate.

  The witness assignments :math:`t_1, \dots, t_n` of ``cert`` (removal
  witnesses in order, then strict witnesses by id) receive

  .. math::

      P(t_i) = \varepsilon^{i-1}(1-\varepsilon) \quad (i < n), \qquad
      P(t_n) = \varepsilon^{n-1}

  and repeated assignments are merged. Every defeasible sentence of the
  certified base then has probability at least :math:`1-\varepsilon`, every
  strict sentence probability 1, and the model is proper for the base.

  Parameters
  ----------
  cert : Consistent
    A certificate from :py:func:`~pconsistency.reasoning.check_consistency`.
  epsilon : rational
    Strictly between 0 and 1; strings such as ``"1/10"`` are accepted.

  Raises
  ------
  ContractError
    When ``epsilon`` is out of range or ``cert`` is not a certificate.
  """
  epsilon = parse_rational(epsilon)
  if not 0 < epsilon < 1:
    raise ContractError(f'epsilon must lie strictly between 0 and 1, got {epsilon}')
  if not getattr(cert, 'consistent', False):
    raise ContractError('a witness model needs a Consistent certificate')

  assignments = cert.assignments
  universe = cert.kb.universe
  if not assignments:
    # the empty base: any single assignment will do
    assignments = [TruthAssignment({}, universe=universe)]
  n = len(assignments)
  points = []
  for i, t in enumerate(assignments, start=1):
    weight = epsilon ** (i - 1) * (1 - epsilon) if i < n else epsilon ** (n - 1)
    points.append((t, weight))
  model = ProbabilityModel(points, universe=universe)
  logger.debug('witness model: %d steps, %d distinct assignments', n, len(model))
  return model


def quasi_conjunction(D):
  r"""The quasi-conjunction of a set of defeasible sentences,

  .. math::

      C(D) = [\phi_1 \vee \dots \vee \phi_n] \rightarrow
             [(\phi_1 \supset \psi_1) \wedge \dots \wedge (\phi_n \supset \psi_n)]

  It is verified exactly when some member is verified and none falsified,
  and falsified exactly when some member is falsified.

  Raises
  ------
  ContractError
    On an empty set or when a member is strict.
  """
  D = list(D)
  if not D:
    raise ContractError('the quasi-conjunction of an empty set is undefined')
  if any(not d.is_defeasible for d in D):
    raise ContractError('the quasi-conjunction takes defeasible sentences only')
  return Conditional.defeasible(disjoin(d.antecedent for d in D),
                                conjoin(material_counterpart(d) for d in D))


def uncertainty(m, x):
  """``1 - P(x)``; the uncertainty of a conditional in model ``m``."""
  return 1 - conditional_probability(m, x)

