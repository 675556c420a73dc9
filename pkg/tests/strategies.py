# -*- coding: utf-8 -*-

from fractions import Fraction
import itertools

from hypothesis import strategies as st

from pconsistency.logic import (Atom, Not, Or, And, MaterialImplies, TRUE, FALSE,
                                Literal, ClauseSet, TruthAssignment)
from pconsistency.reasoning import Conditional, KnowledgeBase, Modality, ProbabilityModel

ATOMS = ('a', 'b', 'c')
SIX_ATOMS = ('a', 'b', 'c', 'd', 'e', 'g')


def all_assignments(universe):
  universe = sorted(universe)
  for bits in itertools.product((0, 1), repeat=len(universe)):
    yield TruthAssignment(dict(zip(universe, bits)))


def formulas(atoms=ATOMS, max_leaves=8, constants=True):
  leaves = st.sampled_from(atoms).map(Atom)
  if constants:
    leaves = st.one_of(leaves, leaves, leaves, st.sampled_from((TRUE, FALSE)))
  return st.recursive(
    leaves,
    lambda children: st.one_of(
      children.map(Not),
      st.builds(And, children, children),
      st.builds(Or, children, children),
      st.builds(MaterialImplies, children, children),
    ),
    max_leaves=max_leaves)


@st.composite
def clause_sets(draw, max_variables=5, max_clauses=8, horn=False):
  variables = [f'v{i}' for i in range(draw(st.integers(1, max_variables)))]
  clauses = []
  for _ in range(draw(st.integers(0, max_clauses))):
    chosen = draw(st.lists(st.sampled_from(variables), min_size=0, max_size=3, unique=True))
    clause = [Literal(v, draw(st.booleans())) for v in chosen]
    if horn:
      positives = [lit for lit in clause if lit.positive]
      clause = [lit for lit in clause if not lit.positive] + positives[:1]
    clauses.append(clause)
  return ClauseSet(clauses, universe=variables)


@st.composite
def conditionals(draw, atoms=ATOMS, strict=True, max_leaves=3):
  modality = draw(st.sampled_from([Modality.DEFEASIBLE, Modality.STRICT]
                                  if strict else [Modality.DEFEASIBLE]))
  antecedent = draw(formulas(atoms, max_leaves=max_leaves, constants=False))
  consequent = draw(formulas(atoms, max_leaves=max_leaves, constants=False))
  return Conditional(antecedent, consequent, modality)


@st.composite
def knowledge_bases(draw, atoms=ATOMS, max_size=4, strict=True):
  sentences = draw(st.lists(conditionals(atoms, strict=strict), min_size=0, max_size=max_size))
  return KnowledgeBase(sentences)


@st.composite
def probability_models(draw, atoms=ATOMS, full_support=False):
  points = list(all_assignments(atoms))
  low = 1 if full_support else 0
  weights = draw(st.lists(st.integers(low, 20), min_size=len(points), max_size=len(points))
                 .filter(lambda ws: sum(ws) > 0))
  total = sum(weights)
  return ProbabilityModel([(t, Fraction(w, total)) for t, w in zip(points, weights) if w],
                          universe=atoms)
