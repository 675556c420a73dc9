# -*- coding: utf-8 -*-

__all__ = [
  'SatResult',
  'Satisfiable',
  'Unsatisfiable',
  'UNSAT',
]


class SatResult(object):
  """Outcome of a satisfiability test."""
  satisfiable = False
  model = None

  def __bool__(self):
    return self.satisfiable


class Satisfiable(SatResult):
  """The clause set has a model.

  Parameters
  ----------
  model : TruthAssignment
    Satisfies every clause; covers every variable of the clause set,
    auxiliary variables included.
  """
  satisfiable = True

  def __init__(self, model):
    self.model = model

  def __eq__(self, other):
    return isinstance(other, Satisfiable) and other.model == self.model

  def __hash__(self):
    return hash(self.model)

  def __repr__(self):
    return f'Satisfiable({self.model!r})'


class Unsatisfiable(SatResult):
  """The clause set has no model."""

  def __eq__(self, other):
    return isinstance(other, Unsatisfiable)

  def __hash__(self):
    return hash(Unsatisfiable)

  def __repr__(self):
    return 'Unsatisfiable()'


UNSAT = Unsatisfiable()
