# -*- coding: utf-8 -*-

import enum
import logging
from dataclasses import dataclass, replace

from pconsistency.errors import ContractError, FormulaParseError, KBFormatError
from pconsistency.logic.clauses import to_clauses
from pconsistency.logic.formula import Formula, MaterialImplies, Not, conjoin
from pconsistency.logic.parser import Parser
from pconsistency.session import Session

__all__ = [
  'Modality',
  'Conditional',
  'parse_conditional',
  'KnowledgeBase',
  'material_counterpart',
  'negate',
  'verifies',
  'falsifies',
  'is_tolerated',
]

logger = logging.getLogger(__name__)


class Modality(enum.Enum):
  DEFEASIBLE = '->'
  STRICT = '=>'

  @property
  def arrow(self):
    return self.value


@dataclass(frozen=True)
class Conditional(object):
  r"""A defeasible (:math:`\phi \rightarrow \psi`, "typically, if
  :math:`\phi` then :math:`\psi`") or strict (:math:`\phi \Rightarrow \psi`,
  "if :math:`\phi` it must be that :math:`\psi`") sentence.

  Conditionals never nest: both arrows only occur as the main connective.

  Parameters
  ----------
  antecedent : Formula
  consequent : Formula
  modality : Modality
  id : int, optional
    Stable identifier inside a :py:class:`KnowledgeBase`; ``None`` for
    sentences not yet added to one.
  """
  antecedent: Formula
  consequent: Formula
  modality: Modality = Modality.DEFEASIBLE
  id: int = None

  @classmethod
  def defeasible(cls, antecedent, consequent, id=None):
    return cls(antecedent, consequent, Modality.DEFEASIBLE, id)

  @classmethod
  def strict(cls, antecedent, consequent, id=None):
    return cls(antecedent, consequent, Modality.STRICT, id)

  @property
  def is_defeasible(self):
    return self.modality is Modality.DEFEASIBLE

  @property
  def is_strict(self):
    return self.modality is Modality.STRICT

  @property
  def atoms(self):
    return self.antecedent.atoms() | self.consequent.atoms()

  def with_id(self, id):
    return replace(self, id=id)

  def material_counterpart(self):
    return material_counterpart(self)

  def negate(self, id=None):
    return negate(self, id=id)

  def verifies(self, t):
    return verifies(t, self)

  def falsifies(self, t):
    return falsifies(t, self)

  def __str__(self):
    return f'{self.antecedent} {self.modality.arrow} {self.consequent}'


def parse_conditional(text, id=None):
  """Parse ``<formula> -> <formula>`` or ``<formula> => <formula>``.

  Raises
  ------
  FormulaParseError
    On malformed formulas or a missing / repeated arrow.
  """
  parser = Parser(text)
  antecedent = parser.formula()
  token = parser.current
  if token.kind not in ('defeasible', 'strict'):
    raise parser.error('expected "->" or "=>"')
  parser.advance()
  consequent = parser.formula()
  parser.expect_end()
  modality = Modality.DEFEASIBLE if token.kind == 'defeasible' else Modality.STRICT
  return Conditional(antecedent, consequent, modality, id)


def material_counterpart(x):
  r"""The formula :math:`\phi \supset \psi` of a conditional."""
  return MaterialImplies(x.antecedent, x.consequent)


def negate(x, id=None):
  r"""The negation :math:`\sim x`: same antecedent and modality, consequent
  :math:`\neg \psi`. The result carries ``id`` (``None`` by default) so
  that adding it to a knowledge base gives it a fresh identifier."""
  return Conditional(x.antecedent, Not(x.consequent), x.modality, id)


def verifies(t, x):
  """Whether ``t`` makes antecedent and consequent of ``x`` true."""
  return x.antecedent.evaluate(t) == 1 and x.consequent.evaluate(t) == 1


def falsifies(t, x):
  """Whether ``t`` makes the antecedent of ``x`` true and the consequent
  false."""
  return x.antecedent.evaluate(t) == 1 and x.consequent.evaluate(t) == 0


class KnowledgeBase(object):
  """An ordered collection of conditionals ``X = D ∪ S``.

  Parameters
  ----------
  conditionals : iterable of Conditional
    Sentences in order. Those without an id are numbered after the highest
    id present (starting at 1).

  Raises
  ------
  ContractError
    When two sentences share an id.
  """

  def __init__(self, conditionals=()):
    conditionals = list(conditionals)
    next_id = max((x.id for x in conditionals if x.id is not None), default=0) + 1
    sentences = []
    for x in conditionals:
      if x.id is None:
        x = x.with_id(next_id)
        next_id += 1
      sentences.append(x)
    self.sentences = tuple(sentences)
    self._by_id = {x.id: x for x in self.sentences}
    if len(self._by_id) != len(self.sentences):
      raise ContractError('sentence ids must be unique within a knowledge base')

  # -- views

  @property
  def defeasible(self):
    """The defeasible part ``D``, in order."""
    return tuple(x for x in self.sentences if x.is_defeasible)

  @property
  def strict(self):
    """The strict part ``S``, in order."""
    return tuple(x for x in self.sentences if x.is_strict)

  @property
  def ids(self):
    return tuple(x.id for x in self.sentences)

  @property
  def universe(self):
    found = set()
    for x in self.sentences:
      found |= x.atoms
    return frozenset(found)

  def __len__(self):
    return len(self.sentences)

  def __iter__(self):
    return iter(self.sentences)

  def __contains__(self, id):
    return id in self._by_id

  def __getitem__(self, id):
    try:
      return self._by_id[id]
    except KeyError:
      raise ContractError(f'no sentence with id {id}') from None

  def __eq__(self, other):
    return isinstance(other, KnowledgeBase) and other.sentences == self.sentences

  def __hash__(self):
    return hash(self.sentences)

  def __repr__(self):
    return f'KnowledgeBase([{", ".join(map(str, self.sentences))}])'

  # -- derived knowledge bases

  def subset(self, ids):
    """The sub-base with the given ids, in original order and ids."""
    ids = set(ids)
    missing = ids - set(self._by_id)
    if missing:
      raise ContractError(f'unknown sentence ids {sorted(missing)}')
    return KnowledgeBase(x for x in self.sentences if x.id in ids)

  def without(self, ids):
    ids = set(ids)
    return KnowledgeBase(x for x in self.sentences if x.id not in ids)

  def add(self, x):
    """A new base with ``x`` appended under a fresh id; returns
    ``(base, added)``."""
    added = x.with_id(max(self.ids, default=0) + 1)
    return KnowledgeBase(self.sentences + (added,)), added

  def permuted(self, order):
    """Reorder the sentences by ``order`` (a permutation of positions) and
    renumber them 1..n in the new order."""
    order = list(order)
    if sorted(order) != list(range(len(self.sentences))):
      raise ContractError('order must be a permutation of the sentence positions')
    return KnowledgeBase(self.sentences[i].with_id(k + 1) for k, i in enumerate(order))

  # -- text format

  @classmethod
  def from_text(cls, text, filename=None):
    """Read the line format: one sentence per line, ``#`` starts a comment,
    blank lines are skipped, ids follow the order of sentence lines."""
    sentences = []
    for lineno, line in enumerate(text.splitlines(), start=1):
      content = line.split('#', 1)[0]
      if not content.strip():
        continue
      try:
        sentences.append(parse_conditional(content, id=len(sentences) + 1))
      except FormulaParseError as e:
        raise KBFormatError(e.message, text=content, position=e.position,
                            lineno=lineno, filename=filename) from None
    logger.debug('read %d sentences from %s', len(sentences), filename or '<text>')
    return cls(sentences)

  @classmethod
  def load(cls, path):
    """Read a UTF-8 knowledge-base file with :py:meth:`from_text`."""
    with open(path, 'rb') as f:
      data = f.read()
    try:
      text = data.decode('utf-8')
    except UnicodeDecodeError as e:
      start = data.rfind(b'\n', 0, e.start) + 1
      end = data.find(b'\n', e.start)
      line = data[start:end if end >= 0 else len(data)]
      raise KBFormatError('invalid UTF-8 byte', text=line.decode('utf-8', 'replace'),
                          position=e.start - start, lineno=data.count(b'\n', 0, e.start) + 1,
                          filename=str(path)) from None
    return cls.from_text(text, filename=str(path))

  def to_text(self):
    return ''.join(f'{x}\n' for x in self.sentences)


def is_tolerated(x, rest, session=None, universe=None):
  r"""Test whether ``x`` is tolerated by the sentences ``rest``.

  ``x`` with antecedent :math:`\phi` and consequent :math:`\psi` is tolerated
  when :math:`\phi \wedge \psi \wedge \bigwedge_{y \in rest} (\phi_y \supset
  \psi_y)` is satisfiable, i.e. some truth assignment verifies ``x`` and
  falsifies nothing in ``rest``. One satisfiability call is charged to
  ``session``.

  Parameters
  ----------
  x : Conditional
  rest : iterable of Conditional
  session : Session, optional
  universe : iterable of str, optional
    Extra variables the witness must cover (set to 0 when unconstrained).

  Returns
  -------
  TruthAssignment or None
    A witness over the atoms of ``x``, ``rest`` and ``universe``, or
    ``None`` when ``x`` is not tolerated.
  """
  session = Session.ensure(session)
  rest = list(rest)
  formula = conjoin([x.antecedent, x.consequent] + [material_counterpart(y) for y in rest])
  result = session.solve(to_clauses(formula))
  if not result.satisfiable:
    return None
  covered = set(x.atoms)
  for y in rest:
    covered |= y.atoms
  if universe is not None:
    covered |= set(universe)
  return result.model.project(covered)

