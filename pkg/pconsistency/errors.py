# -*- coding: utf-8 -*-

__all__ = [
  'PConsistencyError',
  'FormulaParseError',
  'KBFormatError',
  'UnknownAtomError',
  'ContractError',
  'NotHornError',
  'InconsistentKBError',
  'BoundExceededError',
  'ImproperModelError',
]


class PConsistencyError(Exception):
  """Base class of every error raised by ``pconsistency``."""
  pass


class FormulaParseError(PConsistencyError, ValueError):
  """Malformed formula or conditional text.

  Parameters
  ----------
  message : str
    What went wrong.
  text : str
    The text being parsed.
  position : int
    0-based character offset of the offending token
    (``len(text)`` means "at end of input").
  """

  def __init__(self, message, text='', position=0):
    self.message = message
    self.text = text
    self.position = position
    super(FormulaParseError, self).__init__(self.describe())

  def describe(self):
    where = 'end of input' if self.position >= len(self.text) else f'position {self.position}'
    return f'{self.message} at {where}'


class KBFormatError(FormulaParseError):
  """A knowledge-base file line could not be parsed."""

  def __init__(self, message, text='', position=0, lineno=0, filename=None):
    self.lineno = lineno
    self.filename = filename
    super(KBFormatError, self).__init__(message, text=text, position=position)

  def describe(self):
    where = self.filename or '<text>'
    return f'{where}:{self.lineno}: {super(KBFormatError, self).describe()}'


class UnknownAtomError(PConsistencyError, KeyError):
  """An atom is evaluated outside the universe of a truth assignment."""

  def __init__(self, atom):
    self.atom = atom
    super(UnknownAtomError, self).__init__(atom)

  def __str__(self):
    return f'atom "{self.atom}" is not in the universe of the truth assignment'


class ContractError(PConsistencyError):
  """A precondition of an operation does not hold."""
  pass


class NotHornError(ContractError):
  """The Horn solver received a clause with two or more positive literals."""
  pass


class InconsistentKBError(ContractError):
  """An entailment query was asked against a p-inconsistent knowledge base.

  The offending :py:class:`~pconsistency.reasoning.Inconsistent` verdict is
  kept in ``verdict``.
  """

  def __init__(self, message, verdict=None):
    self.verdict = verdict
    super(InconsistentKBError, self).__init__(message)


class BoundExceededError(ContractError):
  """An exponential search was asked for more sentences than configured."""
  pass


class ImproperModelError(PConsistencyError, ZeroDivisionError):
  """The antecedent of a conditional has probability zero in the model."""
  pass
