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

"""Quiver-theoretic Yang-Baxter maps given by explicit tables.

A braided quiver is a quiver together with a map sigma on composable pairs,
sigma(x|y) = (x->y)|(x<-y).  The left component x->y is called Left() here and
the right component x<-y is called Right().
"""

import logging

from lib import report

YB1 = 'YB1'
YB2 = 'YB2'
YB3 = 'YB3'
I1 = 'I1'
I2 = 'I2'
LND = 'LND'
RND = 'RND'
SHAPE = 'shape'


class Error(Exception):
  """Base error class."""


class ShapeError(Error):
  """The sigma table does not define a morphism of quivers."""


class UnknownArrowError(ShapeError):
  """A table entry mentions an arrow outside the quiver."""


class NotComposableError(ShapeError):
  """A table entry has a non-composable input or output pair."""


class DuplicateEntryError(ShapeError):
  """The same input pair appears twice in the table."""


class MissingPairError(ShapeError):
  """A composable pair has no table entry."""


class EndpointError(ShapeError):
  """A table entry does not preserve sources and targets."""


class BraidedQuiver(object):
  """A quiver with a total sigma table on its composable pairs.

  Use BuildSolution() to create shape-checked instances.

  Args:
    quiver: quiver.Quiver.
    sigma: dict mapping (x, y) to (x->y, x<-y).
  """

  def __init__(self, quiver, sigma):
    self.quiver = quiver
    self._sigma = dict(sigma)

  def __eq__(self, other):
    return (isinstance(other, BraidedQuiver) and self.quiver == other.quiver
            and self._sigma == other._sigma)

  def __ne__(self, other):
    return not self.__eq__(other)

  def __repr__(self):
    return 'BraidedQuiver(%r, %d entries)' % (self.quiver, len(self._sigma))

  def Sigma(self, x, y):
    return self._sigma[(x, y)]

  def Left(self, x, y):
    return self._sigma[(x, y)][0]

  def Right(self, x, y):
    return self._sigma[(x, y)][1]

  def Table(self):
    """Returns the sorted list of ((x, y), (u, v)) entries."""
    return sorted(self._sigma.items())


def BuildSolution(q, table):
  """Builds a braided quiver and checks its shape.

  Only totality and the preservation of sources and targets are checked;
  the Yang-Baxter equation is checked by CheckYbe().

  Args:
    q: quiver.Quiver.
    table: iterable of ((x, y), (u, v)) entries.

  Returns:
    A BraidedQuiver.

  Raises:
    UnknownArrowError: an entry names an arrow outside q.
    NotComposableError: an input pair is not composable.
    DuplicateEntryError: an input pair appears twice.
    EndpointError: an entry breaks one of s(x->y) = s(x), t(x<-y) = t(y),
      t(x->y) = s(x<-y); the message names the equation.
    MissingPairError: a composable pair has no entry.
  """
  sigma = {}
  for (x, y), (u, v) in table:
    for arrow_id in (x, y, u, v):
      if not q.HasArrow(arrow_id):
        raise UnknownArrowError('sigma entry (%s, %s) names unknown arrow %s'
                                % (x, y, arrow_id))
    if q.Target(x) != q.Source(y):
      raise NotComposableError('sigma input (%s, %s) is not composable' %
                               (x, y))
    if (x, y) in sigma:
      raise DuplicateEntryError('duplicate entry for (%s, %s)' % (x, y))
    if q.Source(u) != q.Source(x):
      raise EndpointError('sigma(%s, %s) = (%s, %s) breaks s(x->y) = s(x)'
                          % (x, y, u, v))
    if q.Target(v) != q.Target(y):
      raise EndpointError('sigma(%s, %s) = (%s, %s) breaks t(x<-y) = t(y)'
                          % (x, y, u, v))
    if q.Target(u) != q.Source(v):
      raise EndpointError('sigma(%s, %s) = (%s, %s) breaks t(x->y) = s(x<-y)'
                          % (x, y, u, v))
    sigma[(x, y)] = (u, v)
  for pair in q.ComposablePairs():
    if pair not in sigma:
      raise MissingPairError('missing composable pair (%s, %s)' % pair)
  logging.debug('sigma table with %d entries is shape-valid', len(sigma))
  return BraidedQuiver(q, sigma)


def IdentitySolution(q):
  """Returns the braided quiver with sigma(x, y) = (x, y)."""
  return BuildSolution(q, [(pair, pair) for pair in q.ComposablePairs()])


def CheckYbe(s, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Sweeps all composable triples a|b|c for the braid relation.

  Args:
    s: shape-valid BraidedQuiver.
    max_violations: cap on the number of recorded violations.

  Returns:
    report.ViolationReport, empty iff sigma is a Yang-Baxter map.
  """
  result = report.ViolationReport('yang-baxter', max_violations)
  left, right = s.Left, s.Right
  triples = s.quiver.ComposableTriples()
  logging.debug('checking the braid relation on %d triples', len(triples))
  for a, b, c in triples:
    ab_left, ab_right = s.Sigma(a, b)
    bc_left, bc_right = s.Sigma(b, c)
    moved = left(ab_right, c)
    a_past = right(a, bc_left)
    checks = (
        (YB1, left(ab_left, moved), left(a, bc_left)),
        (YB2, right(ab_left, moved), left(a_past, bc_right)),
        (YB3, right(ab_right, c), right(a_past, bc_right)),
    )
    for kind, lhs, rhs in checks:
      if lhs != rhs:
        result.Add(kind, (a, b, c), '%s fails on %s|%s|%s: %s != %s' % (
            kind, a, b, c, lhs, rhs))
  return result


def CheckInvolutive(s, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks sigma(sigma(x|y)) = x|y in components on all composable pairs."""
  result = report.ViolationReport('involutivity', max_violations)
  for x, y in s.quiver.ComposablePairs():
    u, v = s.Sigma(x, y)
    if s.Left(u, v) != x:
      result.Add(I1, (x, y), '(x->y)->(x<-y) = %s, expected %s' % (
          s.Left(u, v), x))
    if s.Right(u, v) != y:
      result.Add(I2, (x, y), '(x->y)<-(x<-y) = %s, expected %s' % (
          s.Right(u, v), y))
  return result


def _CheckBijection(result, kind, arrow_id, direction, image, codomain):
  image_set = set(image)
  codomain_set = set(codomain)
  if len(image_set) != len(image):
    result.Add(kind, (arrow_id,), '%s is not injective' % direction)
  elif image_set != codomain_set:
    missing = sorted(codomain_set - image_set)
    result.Add(kind, (arrow_id,), '%s is not surjective, misses %s' % (
        direction, ', '.join(missing) or 'nothing'))


def CheckNondegenerate(s, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks that x->- and -<-y are bijections for every arrow.

  For each x, x->- must map A(t(x), -) onto A(s(x), -) bijectively; for each
  y, -<-y must map A(-, s(y)) onto A(-, t(y)) bijectively.  Violations are
  reported with kind LND (left) or RND (right) and the failing arrow.
  """
  result = report.ViolationReport('non-degeneracy', max_violations)
  q = s.quiver
  for x in q.ArrowIds():
    domain = q.OutArrows(q.Target(x))
    image = [s.Left(x, y) for y in domain]
    _CheckBijection(result, LND, x, '%s->-' % x, image,
                    q.OutArrows(q.Source(x)))
  for y in q.ArrowIds():
    domain = q.InArrows(q.Source(y))
    image = [s.Right(z, y) for z in domain]
    _CheckBijection(result, RND, y, '-<-%s' % y, image,
                    q.InArrows(q.Target(y)))
  return result


def Validate(s, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Runs the three sweeps and returns their reports in a fixed order."""
  return [CheckYbe(s, max_violations), CheckInvolutive(s, max_violations),
          CheckNondegenerate(s, max_violations)]
