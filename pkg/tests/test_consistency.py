# -*- coding: utf-8 -*-

import time

import pytest
from hypothesis import given, settings

from pconsistency.errors import BoundExceededError, ContractError
from pconsistency.reasoning import (Conditional, Consistent, Inconsistent, KnowledgeBase,
                                    StallPhase, brute_force_consistency, check_consistency,
                                    is_confirmable, minimize_core, parse_conditional,
                                    tolerance_partition, verify_certificate)
from pconsistency.logic import Atom, conjoin
from pconsistency.session import Session

from . import strategies


def kb(*lines):
  return KnowledgeBase.from_text('\n'.join(lines))


def test_confirmability(penguins_strict, penguins):
  assert not is_confirmable(penguins_strict)
  assert is_confirmable(penguins)
  assert is_confirmable(kb('a -> b'))
  assert is_confirmable(kb('a => b', 'b => c'))
  with pytest.raises(ContractError):
    is_confirmable(KnowledgeBase())


def test_penguins(penguins_strict, penguins, session):
  verdict = check_consistency(penguins_strict, session)
  assert isinstance(verdict, Inconsistent)
  assert verdict.core == {1, 2, 3}
  assert verdict.phase is StallPhase.DEFEASIBLE
  assert minimize_core(penguins_strict, verdict.core, session) == {1, 2, 3}

  verdict = check_consistency(penguins, session)
  assert isinstance(verdict, Consistent)
  assert [id for id, _ in verdict.removals] == [1, 2, 3]
  assert dict(verdict.removals[0][1]) == {'b': 1, 'f': 1, 'p': 0}

  grown, _ = penguins.add(parse_conditional('b -> p'))
  assert not check_consistency(grown, session)


def test_nixon_variants(nixon_strict_pacifism, nixon_strict_membership, nixon_mixed):
  start = time.perf_counter()
  verdict = check_consistency(nixon_strict_pacifism)
  assert not verdict.consistent
  assert verdict.core <= {1, 2, 3, 4}
  assert 5 not in verdict.core
  assert minimize_core(nixon_strict_pacifism, nixon_strict_pacifism.ids) == {1, 2, 3, 4}
  assert check_consistency(nixon_strict_membership).consistent
  assert check_consistency(nixon_mixed).consistent
  assert time.perf_counter() - start < 1


def test_strict_stall():
  base = kb('a -> b', 'c => d', 'c => ~d')
  verdict = check_consistency(base)
  assert verdict.phase is StallPhase.STRICT
  assert verdict.core == {2, 3}
  assert verify_certificate(base, verdict)


def test_empty_knowledge_base():
  verdict = check_consistency(KnowledgeBase())
  assert verdict.consistent
  assert verdict.assignments == []
  assert brute_force_consistency(KnowledgeBase())


def test_brute_force_examples(penguins_strict):
  assert not brute_force_consistency(penguins_strict)
  assert brute_force_consistency(kb('a -> b'))
  assert not brute_force_consistency(kb('a -> b', 'a -> ~b'))
  with pytest.raises(BoundExceededError):
    brute_force_consistency(kb('a -> b', 'b -> c'), Session(brute_force_bound=1))


def test_minimize_core():
  base = kb('a -> b', 'a -> ~b', 'c -> c')
  assert minimize_core(base, [1, 2, 3]) == {1, 2}
  assert minimize_core(base, [1, 2]) == {1, 2}
  with pytest.raises(ContractError):
    minimize_core(base, [1, 3])


def test_tolerance_partition(penguins, penguins_strict):
  assert tolerance_partition(penguins) == [(1,), (2, 3)]
  assert tolerance_partition(penguins_strict) is None
  assert tolerance_partition(kb('a -> b', 'c -> d')) == [(1, 2)]


def test_reverse_scan_changes_order_not_verdict(penguins):
  forward = check_consistency(penguins, Session())
  backward = check_consistency(penguins, Session(reverse_scan=True))
  assert backward.consistent and forward.consistent
  assert [id for id, _ in backward.removals] == [1, 3, 2]


def test_to_json(penguins_strict, penguins):
  inconsistent = check_consistency(penguins_strict).to_json()
  assert inconsistent == {'verdict': 'Inconsistent', 'removals': [], 'strict_witnesses': {},
                          'core': [1, 2, 3], 'phase': 'DefeasibleStall'}
  consistent = check_consistency(penguins).to_json()
  assert consistent['verdict'] == 'Consistent'
  assert consistent['removals'][0] == [1, {'b': 1, 'f': 1, 'p': 0}]
  assert consistent['strict_witnesses'] == {}
  assert (consistent['core'], consistent['phase']) == ([], None)
  assert set(consistent) == set(inconsistent)


def test_long_antecedents():
  antecedent = ' & '.join(f'a{i}' for i in range(1500))
  base = kb(f'{antecedent} -> b', f'{antecedent} => c', f'b -> {antecedent}')
  verdict = check_consistency(base)
  assert verdict.consistent
  assert verify_certificate(base, verdict)
  assert tolerance_partition(base) == [(1, 3)]


def test_horn_knowledge_base_takes_the_horn_path():
  # a defeasible cycle over x0..x49 and a strict cycle over y0..y49 guarded by the x's
  x = [Atom(f'x{i}') for i in range(50)]
  y = [Atom(f'y{i}') for i in range(50)]
  sentences = [Conditional.defeasible(x[i], x[(i + 1) % 50]) for i in range(50)]
  sentences += [Conditional.strict(conjoin([y[i - 1], x[i]]) if i else y[0], y[(i + 1) % 50])
                for i in range(50)]
  base = KnowledgeBase(sentences)
  assert len(base.defeasible) == 50 and len(base.strict) == 50
  assert len(base.universe) == 100
  session = Session()
  start = time.perf_counter()
  verdict = check_consistency(base, session)
  elapsed = time.perf_counter() - start
  assert verdict.consistent
  assert session.num_sat_calls == session.num_horn_calls
  assert session.num_sat_calls <= 50 * 51 // 2 + 50
  assert elapsed < 1


@settings(max_examples=500, deadline=None)
@given(strategies.knowledge_bases())
def test_agrees_with_brute_force(base):
  assert check_consistency(base).consistent == brute_force_consistency(base)


@settings(max_examples=200, deadline=None)
@given(strategies.knowledge_bases())
def test_choice_independence(base):
  forward = check_consistency(base, Session())
  backward = check_consistency(base, Session(reverse_scan=True))
  assert forward.consistent == backward.consistent


@settings(max_examples=300, deadline=None)
@given(strategies.knowledge_bases(max_size=6))
def test_certificates_verify(base):
  verdict = check_consistency(base)
  assert verify_certificate(base, verdict)
  if verdict.consistent:
    assert sorted(id for id, _ in verdict.removals) == sorted(x.id for x in base.defeasible)
    assert set(verdict.strict_witnesses) == {x.id for x in base.strict}


@settings(max_examples=300, deadline=None)
@given(strategies.knowledge_bases(max_size=6))
def test_call_budget(base):
  session = Session()
  check_consistency(base, session)
  d, s = len(base.defeasible), len(base.strict)
  assert session.num_sat_calls <= d * (d + 1) // 2 + s


@settings(max_examples=100, deadline=None)
@given(strategies.knowledge_bases(max_size=5))
def test_minimized_cores_are_minimal(base):
  verdict = check_consistency(base)
  if verdict.consistent:
    return
  core = minimize_core(base, verdict.core)
  assert not check_consistency(base.subset(core)).consistent
  for id in core:
    assert check_consistency(base.subset(core - {id})).consistent
