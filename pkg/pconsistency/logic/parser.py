# -*- coding: utf-8 -*-

import re

from pconsistency.errors import FormulaParseError
from pconsistency.logic.formula import (Atom, Not, Or, And, MaterialImplies,
                                        TRUE, FALSE)

__all__ = [
  'Token',
  'tokenize',
  'Parser',
  'parse_formula',
]

KEYWORDS = {'true': TRUE, 'false': FALSE}

# parenthesised groups are parsed recursively
MAX_NESTING = 100

_TOKEN_RE = re.compile(r'''
    (?P<space>\s+)
  | (?P<defeasible>->)
  | (?P<strict>=>)
  | (?P<ident>[a-zA-Z][a-zA-Z0-9_]*)
  | (?P<op>[~!&|>()])
''', re.VERBOSE)


class Token(object):
  __slots__ = ('kind', 'value', 'position')

  def __init__(self, kind, value, position):
    self.kind = kind
    self.value = value
    self.position = position

  def __repr__(self):
    return f'Token({self.kind}, {self.value!r}, {self.position})'


def tokenize(text):
  """Split ``text`` into tokens; the last token has kind ``'end'``."""
  tokens = []
  pos = 0
  while pos < len(text):
    m = _TOKEN_RE.match(text, pos)
    if m is None:
      raise FormulaParseError(f'unexpected character {text[pos]!r}', text, pos)
    kind = m.lastgroup
    if kind != 'space':
      tokens.append(Token(kind, m.group(), pos))
    pos = m.end()
  tokens.append(Token('end', '', len(text)))
  return tokens


class Parser(object):
  r"""Recursive-descent parser of the formula grammar.

  .. code-block:: text

      formula := impl
      impl    := or ( ">" impl )?
      or      := and ( "|" and )*
      and     := not ( "&" not )*
      not     := ("~" | "!") not | atom | "(" formula ")" | "true" | "false"

  ``&`` and ``|`` associate to the left, ``>`` to the right. The conditional
  arrows ``->`` and ``=>`` are tokenized but never consumed by
  :py:meth:`formula`; :py:func:`pconsistency.reasoning.parse_conditional`
  builds on this class to read whole sentences.

  Parameters
  ----------
  text : str
    The text to parse.
  """

  def __init__(self, text):
    self.text = text
    self.tokens = tokenize(text)
    self.index = 0
    self.nesting = 0

  @property
  def current(self):
    return self.tokens[self.index]

  def advance(self):
    token = self.tokens[self.index]
    self.index += 1
    return token

  def error(self, message, token=None):
    token = self.current if token is None else token
    # the error itself reports "at end of input"
    if token.kind != 'end':
      message = f'{message}, found {token.value!r}'
    return FormulaParseError(message, self.text, token.position)

  def accept(self, value):
    if self.current.kind == 'op' and self.current.value == value:
      return self.advance()
    return None

  def expect_end(self):
    if self.current.kind != 'end':
      raise self.error('expected end of input')

  def formula(self):
    return self.implication()

  def implication(self):
    operands = [self.disjunction()]
    while self.accept('>'):
      operands.append(self.disjunction())
    result = operands.pop()
    while operands:
      result = MaterialImplies(operands.pop(), result)
    return result

  def disjunction(self):
    left = self.conjunction()
    while self.accept('|'):
      left = Or(left, self.conjunction())
    return left

  def conjunction(self):
    left = self.negation()
    while self.accept('&'):
      left = And(left, self.negation())
    return left

  def negation(self):
    depth = 0
    while self.current.kind == 'op' and self.current.value in ('~', '!'):
      self.advance()
      depth += 1
    result = self.operand()
    for _ in range(depth):
      result = Not(result)
    return result

  def operand(self):
    token = self.current
    if token.kind == 'ident':
      self.advance()
      if token.value in KEYWORDS:
        return KEYWORDS[token.value]
      return Atom(token.value)
    if token.kind == 'op' and token.value == '(':
      if self.nesting == MAX_NESTING:
        raise FormulaParseError(f'parentheses nested deeper than {MAX_NESTING}',
                                self.text, token.position)
      self.advance()
      self.nesting += 1
      inner = self.formula()
      self.nesting -= 1
      if not self.accept(')'):
        raise self.error('expected ")"')
      return inner
    raise self.error('expected a formula')


def parse_formula(text):
  """Parse ``text`` into a :py:class:`~pconsistency.logic.Formula`.

  Raises
  ------
  FormulaParseError
    With the position of the first offending token.
  """
  parser = Parser(text)
  result = parser.formula()
  parser.expect_end()
  return result
