#!/usr/bin/python
#
# Copyright 2026 The gqbraid Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Parses path words given on the command line.

A word is either eps:<vertex>, the empty path on a vertex, or a space
separated list of arrow ids.  In groupoid words an arrow id may be prefixed
with ~ to denote its inverse:

  [1,2] [2,1]
  eps:1
  [1,2] ~[3,2]
"""

import collections

from ply import lex
from ply import yacc

from lib import quiver


class Error(Exception):
  """Base error class."""


class ParseError(Error):
  """The word does not follow the path syntax."""


Word = collections.namedtuple('Word', ['letters', 'base'])

tokens = (
    'EPSILON',
    'ARROW',
    'TILDE',
)

t_ignore = ' \t\n'
t_TILDE = r'~'

# pylint: disable-msg=W0613,C6102,C6104,C6105,C6108,C6409


def t_EPSILON(t):
  r'eps:[^\s~]+'
  t.value = t.value[len(quiver.EPSILON_PREFIX):]
  return t


def t_ARROW(t):
  r'[^\s~]+'
  return t


def t_error(t):
  raise ParseError('illegal character %r at position %d' % (t.value[0],
                                                           t.lexpos))


def p_word(p):
  """ word : letters
           | EPSILON """
  if isinstance(p[1], list):
    p[0] = Word(tuple(p[1]), None)
  else:
    p[0] = Word((), p[1])


def p_letters(p):
  """ letters : letters letter
              | letter """
  if len(p) == 3:
    p[0] = p[1] + [p[2]]
  else:
    p[0] = [p[1]]


def p_letter(p):
  """ letter : ARROW
             | TILDE ARROW """
  if len(p) == 3:
    p[0] = (p[2], True)
  else:
    p[0] = (p[1], False)


def p_error(p):
  """."""
  if p:
    raise ParseError('unexpected %r at position %d' % (p.value, p.lexpos))
  raise ParseError('unexpected end of path, expected an arrow id or eps:<v>')


_LEXER = lex.lex()
_PARSER = yacc.yacc(write_tables=False, debug=0, errorlog=yacc.NullLogger())


def ParseWord(text):
  """Parses a path or groupoid word.

  Args:
    text: the word.

  Returns:
    Word; letters is a tuple of (arrow_id, inverted) pairs and base is the
    vertex of an empty path, None otherwise.

  Raises:
    ParseError: the text is not a word.
  """
  return _PARSER.parse(text, lexer=_LEXER.clone())


def ToPath(q, text):
  """Parses a word without inverses into a validated path of q.

  Raises:
    ParseError: the text is not a word or uses ~.
    quiver.PathError: the arrows do not form a path of q.
  """
  word = ParseWord(text)
  if word.base is not None:
    if not q.HasVertex(word.base):
      raise quiver.UnknownVertexError('unknown vertex %s' % word.base)
    return quiver.EmptyPath(word.base)
  if any(inverted for _, inverted in word.letters):
    raise ParseError('inverted arrows are only allowed in groupoid words')
  return quiver.PathFromEdges(q, [arrow_id for arrow_id, _ in word.letters])
