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

"""The structure groupoid as left fractions over the structure category.

An element u^-1 v is stored as the pair (u, v) with s(u) = s(v); it goes from
t(u) to t(v).  Pairs are not reduced, equality is decided with left-lcms.
"""

from lib import quiver


class Error(Exception):
  """Base error class."""


class EndpointError(Error):
  """The fractions do not compose or are malformed."""


class GroupoidElement(object):
  """A left fraction u^-1 v.

  Args:
    num: CatElement u, the inverted part.
    pos: CatElement v, with the same source as u.
  """

  def __init__(self, num, pos):
    self.num = num
    self.pos = pos

  @property
  def source(self):
    return self.num.target

  @property
  def target(self):
    return self.pos.target

  def __str__(self):
    return '(%s)^-1 (%s)' % (self.num.path, self.pos.path)

  def __repr__(self):
    return 'GroupoidElement(%r, %r)' % (self.num.path, self.pos.path)


class StructureGroupoid(object):
  """The enveloping groupoid of a garside.StructureCategory."""

  def __init__(self, category):
    self.category = category

  def Fraction(self, u, v):
    """Returns u^-1 v for paths or elements u, v with a common source.

    Raises:
      EndpointError: u and v start at different vertices.
    """
    u, v = self.category.Element(_Path(u)), self.category.Element(_Path(v))
    if u.source != v.source:
      raise EndpointError('fraction parts %s and %s do not share a source' % (
          u.path, v.path))
    return GroupoidElement(u, v)

  def Identity(self, vertex):
    unit = self.category.Identity(vertex)
    return GroupoidElement(unit, unit)

  def Iota(self, p):
    """Embeds a path of the category."""
    p = _Path(p)
    return self.Fraction(quiver.EmptyPath(p.base), p)

  def Invert(self, a):
    return GroupoidElement(a.pos, a.num)

  def Equal(self, a, b):
    if a.source != b.source or a.target != b.target:
      return False
    c = self.category
    p = c.LeftComplementPath(a.num, b.num)
    q = c.LeftComplementPath(b.num, a.num)
    return c.Equal(quiver.Concat(p, a.pos.path), quiver.Concat(q, b.pos.path))

  def Multiply(self, a, b):
    """Returns a b.

    For a = u^-1 v and b = w^-1 z, let p|v = q|w be the left-lcm of v and w;
    then a b = (p|u)^-1 (q|z).

    Raises:
      EndpointError: a does not end where b starts.
    """
    if a.target != b.source:
      raise EndpointError('cannot multiply %s (ending at %s) by %s (from %s)'
                          % (a, a.target, b, b.source))
    c = self.category
    p = c.LeftComplementPath(a.pos, b.num)
    q = c.LeftComplementPath(b.num, a.pos)
    return GroupoidElement(c.Element(quiver.Concat(p, a.num.path)),
                           c.Element(quiver.Concat(q, b.pos.path)))

  def Reduce(self, a):
    """Peels common left-divisors of both fraction parts.

    Repeatedly divides u and v by Delta of their common atom divisors.
    """
    c = self.category
    u, v = a.num.path, a.pos.path
    while True:
      common = sorted(set(c.AtomDivisors(u)) & set(c.AtomDivisors(v)))
      if not common:
        break
      head = c.DeltaPath(common)
      u = c.RightComplementPath(head, u)
      v = c.RightComplementPath(head, v)
    return GroupoidElement(c.Element(u), c.Element(v))

  def SymmetricNormal(self, a):
    """Returns the normal form entries of both parts of the reduced fraction."""
    reduced = self.Reduce(a)
    return list(reduced.num.entries), list(reduced.pos.entries)

  def FromWord(self, letters, base=None):
    """Folds a word in arrows and inverted arrows left to right.

    Args:
      letters: sequence of (arrow_id, inverted) pairs.
      base: start vertex; needed for the empty word.

    Raises:
      EndpointError: consecutive letters do not compose or the word is empty
        without a base.
    """
    q = self.category.quiver
    letters = list(letters)
    if base is None:
      if not letters:
        raise EndpointError('the empty word needs a base vertex')
      arrow_id, inverted = letters[0]
      base = q.Target(arrow_id) if inverted else q.Source(arrow_id)
    result = self.Identity(base)
    for arrow_id, inverted in letters:
      step = self.Iota(quiver.ArrowPath(q, arrow_id))
      if inverted:
        step = self.Invert(step)
      result = self.Multiply(result, step)
    return result


def _Path(u):
  return getattr(u, 'path', u)
