# -*- coding: utf-8 -*-

import itertools

import pytest
import sympy
from sympy.logic.inference import satisfiable
from hypothesis import given, settings

from pconsistency.logic import (Atom, Not, Or, And, MaterialImplies, TRUE, FALSE, conjoin,
                                ClauseSet, Literal, TruthAssignment, evaluate, is_horn,
                                to_clauses, to_nnf, parse_formula)
from pconsistency.sat import solve_dpll

from . import strategies

a, b, c = Atom('a'), Atom('b'), Atom('c')


def clauses_to_sympy(cs):
  def literal(lit):
    symbol = sympy.Symbol(lit.variable)
    return symbol if lit.positive else sympy.Not(symbol)
  return sympy.And(*[sympy.Or(*[literal(lit) for lit in clause]) for clause in cs.clauses])


def extendable(cs, t):
  """Whether ``t`` extends to a model of ``cs`` over its auxiliary variables."""
  extra = sorted(cs.variables - t.universe)
  for bits in itertools.product((0, 1), repeat=len(extra)):
    if cs.satisfied_by(TruthAssignment(dict(t, **dict(zip(extra, bits))))):
      return True
  return False


def test_atom_is_a_unit_clause():
  cs = to_clauses(a)
  assert cs.clauses == ((Literal('a', True),),)
  assert cs.universe == frozenset('a')


def test_false_gives_the_empty_clause():
  assert () in to_clauses(FALSE).clauses
  assert to_clauses(TRUE).clauses == ()


def test_definitional_variables_preserve_models():
  f = Or(And(a, b), c)
  cs = to_clauses(f)
  assert cs.auxiliaries
  assert all(name.startswith('_') for name in cs.auxiliaries)
  for t in strategies.all_assignments('abc'):
    assert extendable(cs, t) == bool(evaluate(f, t))


def test_tautologies_are_dropped():
  assert to_clauses(Or(a, Not(a))).clauses == ()


@pytest.mark.parametrize('clauses, expected', [
  ([[Literal('a', False), Literal('b', True)]], True),
  ([[Literal('a', True), Literal('b', True)]], False),
  ([], True),
  ([[]], True),
])
def test_is_horn(clauses, expected):
  assert is_horn(ClauseSet(clauses)) is expected
  assert is_horn(clauses) is expected


@pytest.mark.parametrize('text', [
  'p & b & (b > f) & (p > b) & (p > ~f)',
  'p & b & ~f & (p & b > ~f) & (q > p)',
  '(a > b) & (b & c > a) & ~c',
])
def test_horn_material_counterparts_stay_horn(text):
  assert to_clauses(parse_formula(text)).is_horn()


def test_nnf_pushes_negations_to_atoms():
  assert to_nnf(Not(And(a, Not(b)))) == Or(Not(a), b)
  assert to_nnf(Not(MaterialImplies(a, b))) == And(a, Not(b))
  assert to_nnf(Not(TRUE)) == FALSE


def test_long_and_deeply_nested_formulas():
  n = 3000
  f = conjoin(Atom(f'x{i}').implies(Atom(f'y{i}')) for i in range(n))
  cs = to_clauses(Not(Not(f)))
  assert len(cs) == n
  assert cs.is_horn()

  nested = c
  for i in range(n):
    nested = Or(Atom(f'x{i}'), And(Atom(f'y{i}'), nested))
  cs = to_clauses(nested)
  assert len(cs.auxiliaries) == n
  # every x true and every auxiliary false satisfies all clauses
  t = TruthAssignment({v: int(v.startswith('x')) for v in cs.variables})
  assert cs.satisfied_by(t)
  assert not cs.satisfied_by(TruthAssignment({v: 0 for v in cs.variables}))


@settings(max_examples=300, deadline=None)
@given(strategies.formulas(strategies.SIX_ATOMS))
def test_equisatisfiable(f):
  cs = to_clauses(f)
  expected = any(evaluate(f, t) for t in strategies.all_assignments(f.atoms()))
  assert (satisfiable(clauses_to_sympy(cs)) is not False) == expected


@settings(max_examples=300, deadline=None)
@given(strategies.formulas(strategies.SIX_ATOMS))
def test_models_project_to_models(f):
  result = solve_dpll(to_clauses(f))
  if result.satisfiable:
    assert evaluate(f, result.model.project(f.atoms())) == 1
