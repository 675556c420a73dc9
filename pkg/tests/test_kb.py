# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings

from pconsistency.errors import ContractError, FormulaParseError, KBFormatError, UnknownAtomError
from pconsistency.logic import Atom, MaterialImplies, Not, TRUE, TruthAssignment, evaluate
from pconsistency.reasoning import (Conditional, KnowledgeBase, Modality, falsifies,
                                    is_tolerated, material_counterpart, negate,
                                    parse_conditional, verifies)

from . import strategies

b, f, p = Atom('b'), Atom('f'), Atom('p')


def test_parse_conditional():
  x = parse_conditional('p & b -> ~f')
  assert x.is_defeasible and not x.is_strict
  assert str(x) == 'p & b -> ~f'
  s = parse_conditional('q=>p', id=7)
  assert s.modality is Modality.STRICT
  assert s.id == 7
  assert str(s) == 'q => p'


@pytest.mark.parametrize('text', ['a & b', 'a -> b -> c', 'a => b -> c', '-> b', 'a ->'])
def test_parse_conditional_errors(text):
  with pytest.raises(FormulaParseError):
    parse_conditional(text)


def test_material_counterpart():
  assert material_counterpart(parse_conditional('p -> b')) == MaterialImplies(p, b)
  assert parse_conditional('b => f').material_counterpart() == MaterialImplies(b, f)
  g = material_counterpart(Conditional.defeasible(TRUE, Atom('a')))
  for t in strategies.all_assignments('a'):
    assert evaluate(g, t) == t['a']


def test_negate_keeps_modality():
  x = parse_conditional('p -> f', id=3)
  assert negate(x) == Conditional.defeasible(p, Not(f))
  assert negate(x).id is None
  assert negate(parse_conditional('q => p')).is_strict
  twice = negate(negate(x))
  assert twice.consequent == Not(Not(f))
  for t in strategies.all_assignments('pf'):
    assert evaluate(twice.consequent, t) == evaluate(x.consequent, t)


def test_verifies_falsifies():
  x = parse_conditional('b -> f')
  assert verifies(TruthAssignment({'b': 1, 'f': 1}), x)
  assert falsifies(TruthAssignment({'b': 1, 'f': 0}), x)
  neither = TruthAssignment({'b': 0, 'f': 1})
  assert not verifies(neither, x) and not falsifies(neither, x)
  with pytest.raises(UnknownAtomError):
    verifies(TruthAssignment({'b': 1}), x)


def test_knowledge_base_ids():
  kb = KnowledgeBase([parse_conditional('a -> b', id=4), parse_conditional('b => c'),
                      parse_conditional('c -> a')])
  assert kb.ids == (4, 5, 6)
  assert [x.id for x in kb.defeasible] == [4, 6]
  assert [x.id for x in kb.strict] == [5]
  assert kb.universe == frozenset('abc')
  assert 5 in kb and 1 not in kb
  with pytest.raises(ContractError):
    kb[1]
  with pytest.raises(ContractError):
    KnowledgeBase([parse_conditional('a -> b', id=1), parse_conditional('b -> a', id=1)])


def test_derived_knowledge_bases(penguins):
  assert penguins.subset([1, 3]).ids == (1, 3)
  assert penguins.without([2]).ids == (1, 3)
  with pytest.raises(ContractError):
    penguins.subset([9])
  grown, added = penguins.add(parse_conditional('b -> p'))
  assert added.id == 4
  assert grown.ids == (1, 2, 3, 4)
  assert len(penguins) == 3
  shuffled = penguins.permuted([2, 0, 1])
  assert [str(x) for x in shuffled] == ['p -> ~f', 'b -> f', 'p -> b']
  assert shuffled.ids == (1, 2, 3)
  with pytest.raises(ContractError):
    penguins.permuted([0, 0, 1])


def test_text_format(tmp_path):
  text = '# penguins\n\nb -> f   # birds fly\n  p => b\n'
  kb = KnowledgeBase.from_text(text)
  assert kb.ids == (1, 2)
  assert kb[2].is_strict
  assert kb.to_text() == 'b -> f\np => b\n'
  path = tmp_path / 'birds.kb'
  path.write_text(kb.to_text(), encoding='utf-8')
  assert KnowledgeBase.load(path) == kb


def test_text_format_errors():
  with pytest.raises(KBFormatError) as info:
    KnowledgeBase.from_text('a -> b\n\n# fine\nc -> \n', filename='bad.kb')
  assert info.value.lineno == 4
  assert str(info.value).startswith('bad.kb:4:')


def test_load_rejects_invalid_utf8(tmp_path):
  path = tmp_path / 'latin.kb'
  path.write_bytes(b'a -> b\n\xff\xfe -> c\n')
  with pytest.raises(KBFormatError) as info:
    KnowledgeBase.load(path)
  assert info.value.lineno == 2
  assert str(info.value) == f'{path}:2: invalid UTF-8 byte at position 0'


def test_tolerance_examples():
  x = parse_conditional('b -> f')
  rest = [parse_conditional('p -> b'), parse_conditional('p -> ~f')]
  t = is_tolerated(x, rest)
  assert t == TruthAssignment({'b': 1, 'f': 1, 'p': 0})
  assert is_tolerated(parse_conditional('p -> b'),
                      [parse_conditional('b => f'), parse_conditional('p -> ~f')]) is None
  assert is_tolerated(parse_conditional('a -> b'), []) is not None
  assert is_tolerated(parse_conditional('a -> ~a'), []) is None


def test_tolerance_against_many_sentences():
  rest = [parse_conditional(f'a{i} -> b{i}') for i in range(1500)]
  t = is_tolerated(parse_conditional('c -> d'), rest)
  assert (t['c'], t['d'], t['a7']) == (1, 1, 0)
  assert len(t) == 3002
  assert is_tolerated(parse_conditional('a3 -> ~b3'), rest) is None


def test_tolerance_witness_covers_universe():
  t = is_tolerated(parse_conditional('a -> b'), [], universe=['z'])
  assert t.universe == frozenset('abz')
  assert t['z'] == 0


@settings(max_examples=300, deadline=None)
@given(strategies.conditionals(), strategies.knowledge_bases())
def test_tolerance_witness_validity_and_monotonicity(x, rest):
  rest = list(rest)
  t = is_tolerated(x, rest)
  if t is None:
    return
  assert verifies(t, x)
  assert not any(falsifies(t, y) for y in rest)
  for k in range(len(rest)):
    assert is_tolerated(x, rest[:k] + rest[k + 1:]) is not None


@settings(max_examples=200, deadline=None)
@given(strategies.conditionals())
def test_verifies_and_falsifies_exclusive(x):
  for t in strategies.all_assignments(strategies.ATOMS):
    assert not (verifies(t, x) and falsifies(t, x))
