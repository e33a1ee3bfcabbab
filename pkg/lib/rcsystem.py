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

"""Weak RC-systems, co-RC-systems, completion and the grid calculus.

An involutive non-degenerate braided quiver yields two partial operations on
its arrows:

  x*y  := (x->-)^-1(y)   for s(x) = s(y)   (the star system, RCSystem)
  x.y  := (-<-x)^-1(y)   for t(x) = t(y)   (the bullet system, CoRCSystem)

The completion adds a fresh loop eps:<v> on every vertex v and overrides
x*x with a unit.  The grid calculus extends a completed operation from arrows
to paths cell by cell.
"""

import logging

from lib import quiver
from lib import report
from lib import yangbaxter

STAR = 'star'
BULLET = 'bullet'


class Error(Exception):
  """Base error class."""


class RefusedError(Error):
  """A derivation precondition fails; the message names the failed check."""


class CompletionError(Error):
  """The system cannot be completed."""


class UnitCollisionError(CompletionError):
  """An arrow id already uses the reserved unit namespace."""


class UndefinedError(Error):
  """The operation is not defined on the given pair."""


class GridError(Error):
  """The paths given to a grid do not share the required endpoint."""


def UnitId(vertex):
  return quiver.EPSILON_PREFIX + vertex


def IsUnit(arrow_id):
  return arrow_id.startswith(quiver.EPSILON_PREFIX)


class RCSystem(object):
  """A weak RC-system x*y defined on same-source pairs.

  Args:
    base_quiver: the quiver the system was derived on.
    table: dict (x, y) -> x*y.
    raw_table: the table before completion; defaults to table.
    units: dict vertex -> inserted unit loop id; empty unless completed.
    completed_quiver: base_quiver plus the unit loops, when completed.
  """

  kind = STAR
  symbol = '*'

  def __init__(self, base_quiver, table, raw_table=None, units=None,
               completed_quiver=None):
    self.base_quiver = base_quiver
    self._table = dict(table)
    if raw_table is None:
      raw_table = self._table
    self._raw = dict(raw_table)
    self.units = dict(units or {})
    self.completed = completed_quiver is not None
    self.quiver = completed_quiver or base_quiver

  def __repr__(self):
    return '%s(%s, %d entries%s)' % (
        self.__class__.__name__, self.kind, len(self._table),
        ', completed' if self.completed else '')

  def Compatible(self, x, y):
    """Whether x op y may be defined."""
    return self.quiver.Source(x) == self.quiver.Source(y)

  def Domain(self, x):
    """The hom-set acted on by x op -."""
    return self.quiver.OutArrows(self.quiver.Source(x))

  def Codomain(self, x):
    return self.quiver.OutArrows(self.quiver.Target(x))

  def Op(self, x, y):
    try:
      return self._table[(x, y)]
    except KeyError:
      raise UndefinedError('%s %s %s is not defined' % (x, self.symbol, y))

  def RawOp(self, x, y):
    """The value before completion, also for pairs the completion shadows."""
    try:
      return self._raw[(x, y)]
    except KeyError:
      raise UndefinedError('%s %s %s is not defined' % (x, self.symbol, y))

  def IsDefined(self, x, y):
    return (x, y) in self._table

  def Table(self):
    return sorted(self._table.items())

  def RawTable(self):
    return sorted(self._raw.items())

  def UnitSet(self):
    return frozenset(self.units.values())

  def _CompletionEntries(self, units):
    q = self.base_quiver
    entries = {}
    for x in q.ArrowIds():
      s, t = q.Source(x), q.Target(x)
      entries[(x, x)] = units[t]
      entries[(x, units[s])] = units[t]
      entries[(units[s], x)] = x
    return entries


class CoRCSystem(RCSystem):
  """A weak co-RC-system x.y defined on same-target pairs."""

  kind = BULLET
  symbol = '.'

  def Compatible(self, x, y):
    return self.quiver.Target(x) == self.quiver.Target(y)

  def Domain(self, x):
    return self.quiver.InArrows(self.quiver.Target(x))

  def Codomain(self, x):
    return self.quiver.InArrows(self.quiver.Source(x))

  def TildeOp(self, x, y):
    """x *~ y := y . x."""
    return self.Op(y, x)

  def _CompletionEntries(self, units):
    q = self.base_quiver
    entries = {}
    for x in q.ArrowIds():
      s, t = q.Source(x), q.Target(x)
      entries[(x, x)] = units[s]
      entries[(x, units[t])] = units[s]
      entries[(units[t], x)] = x
    return entries


def _Refuse(what, checks):
  for check in checks:
    if not check.IsEmpty():
      raise RefusedError('refusing to derive the %s system: %s fails (%s)' % (
          what, check.name, check.violations[0]))


def DeriveStar(s):
  """Derives x*y := (x->-)^-1(y) from an involutive braided quiver.

  Args:
    s: yangbaxter.BraidedQuiver, involutive and left-non-degenerate.

  Returns:
    RCSystem on s.quiver, total on same-source pairs.

  Raises:
    RefusedError: involutivity or left-non-degeneracy fails.
  """
  nondegenerate = yangbaxter.CheckNondegenerate(s, None)
  left = report.ViolationReport('left non-degeneracy', 1)
  for violation in nondegenerate.violations:
    if violation.kind == yangbaxter.LND:
      left.Add(violation.kind, violation.witness, violation.detail)
  _Refuse('star', [yangbaxter.CheckInvolutive(s, 1), left])
  q = s.quiver
  table = {}
  for x in q.ArrowIds():
    for y in q.OutArrows(q.Target(x)):
      table[(x, s.Left(x, y))] = y
  logging.info('derived star table with %d entries', len(table))
  return RCSystem(q, table)


def DeriveBullet(s):
  """Derives x.y := (-<-x)^-1(y) from an involutive braided quiver.

  Args:
    s: yangbaxter.BraidedQuiver, involutive and right-non-degenerate.

  Returns:
    CoRCSystem on s.quiver, total on same-target pairs.

  Raises:
    RefusedError: involutivity or right-non-degeneracy fails.
  """
  nondegenerate = yangbaxter.CheckNondegenerate(s, None)
  right = report.ViolationReport('right non-degeneracy', 1)
  for violation in nondegenerate.violations:
    if violation.kind == yangbaxter.RND:
      right.Add(violation.kind, violation.witness, violation.detail)
  _Refuse('bullet', [yangbaxter.CheckInvolutive(s, 1), right])
  q = s.quiver
  table = {}
  for x in q.ArrowIds():
    for z in q.InArrows(q.Source(x)):
      table[(x, s.Right(z, x))] = z
  logging.info('derived bullet table with %d entries', len(table))
  return CoRCSystem(q, table)


def Reconstruct(r, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Rebuilds the braided quiver of a left-non-degenerate RC-system.

  Uses a->b = c iff b = a*c, and a<-b = (a->b)*a.

  Args:
    r: uncompleted RCSystem, total on same-source pairs.
    max_violations: cap for the shape check of the result.

  Returns:
    yangbaxter.BraidedQuiver.

  Raises:
    RefusedError: r is not left-non-degenerate.
  """
  _Refuse('braided', [CheckLeftNondegenerate(r, 1)])
  q = r.base_quiver
  left = {}
  for a in q.ArrowIds():
    for c in q.OutArrows(q.Source(a)):
      left[(a, r.Op(a, c))] = c
  table = []
  for a, b in q.ComposablePairs():
    c = left[(a, b)]
    table.append(((a, b), (c, r.Op(c, a))))
  return yangbaxter.BuildSolution(q, table)


def Complete(r):
  """Returns the completion of an RC- or co-RC-system.

  A fresh loop eps:<v> is inserted on every vertex v.  For the star system
  eps*y = y, x*eps = eps and x*x = eps; for the bullet system x.x = eps,
  x.eps = eps and eps.x = x, with the units on the matching vertices.

  Raises:
    CompletionError: r is already completed or not left-non-degenerate.
    UnitCollisionError: an arrow id starts with the reserved prefix.
  """
  if r.completed:
    raise CompletionError('the %s system is already completed' % r.kind)
  q = r.base_quiver
  collisions = [a for a in q.ArrowIds() if IsUnit(a)]
  if collisions:
    raise UnitCollisionError('arrow %s collides with the reserved %s namespace'
                             % (collisions[0], quiver.EPSILON_PREFIX))
  nondegenerate = CheckLeftNondegenerate(r, 1)
  if not nondegenerate.IsEmpty():
    raise CompletionError('cannot complete: %s' % nondegenerate.violations[0])
  units = dict((v, UnitId(v)) for v in q.vertices)
  completed_quiver = q.WithArrows(
      [quiver.Arrow(units[v], v, v) for v in q.vertices])
  table = dict(r.Table())
  table.update(r._CompletionEntries(units))
  for v in q.vertices:
    table[(units[v], units[v])] = units[v]
  logging.debug('completed %s system with %d units', r.kind, len(units))
  return r.__class__(q, table, raw_table=dict(r.RawTable()), units=units,
                     completed_quiver=completed_quiver)


def StripUnits(p):
  """Removes every inserted unit from a path of a completed quiver.

  Units are loops, so the base and target of the path are preserved.
  """
  return quiver.PathWord(p.base, [e for e in p.edges if not IsUnit(e)],
                         p.target)


def _Path(q, base, edges):
  target = q.Target(edges[-1]) if edges else base
  return quiver.PathWord(base, edges, target)


def GridStar(r, p, q):
  """Completes the grid with top row p and left column q.

  Each cell with top edge a and left edge b gets right edge a*b and bottom
  edge b*a.  Rows are filled top to bottom, cells left to right.

  Args:
    r: completed RCSystem.
    p: PathWord over r.quiver.
    q: PathWord over r.quiver with the same source as p.

  Returns:
    (p*q, q*p): the right column (length len(q), from t(p)) and the bottom row
    (length len(p), from t(q)).

  Raises:
    GridError: p and q have different sources.
  """
  if p.base != q.base:
    raise GridError('grid needs a common source, got %s and %s' % (
        p.base, q.base))
  row = list(p.edges)
  column = []
  for b in q.edges:
    for i, a in enumerate(row):
      row[i], b = r.Op(b, a), r.Op(a, b)
    column.append(b)
  return _Path(r.quiver, p.target, column), _Path(r.quiver, q.target, row)


def GridBullet(c, p, q):
  """Completes the grid with right column p and bottom row q.

  Each cell with right edge x and bottom edge y gets top edge x.y and left
  edge y.x, so that (x.y)|x = (y.x)|y.  Columns are filled right to left,
  cells bottom to top.

  Args:
    c: completed CoRCSystem.
    p: PathWord over c.quiver.
    q: PathWord over c.quiver with the same target as p.

  Returns:
    (p.q, q.p): the top row (length len(q), ending at s(p)) and the left
    column (length len(p), ending at s(q)), with (p.q)|p = (q.p)|q.

  Raises:
    GridError: p and q have different targets.
  """
  if p.target != q.target:
    raise GridError('dual grid needs a common target, got %s and %s' % (
        p.target, q.target))
  column = list(p.edges)
  top = [None] * len(q.edges)
  for k in range(len(q.edges) - 1, -1, -1):
    y = q.edges[k]
    for i in range(len(column) - 1, -1, -1):
      x = column[i]
      column[i], y = c.Op(y, x), c.Op(x, y)
    top[k] = y
  top_base = c.quiver.Source(top[0]) if top else p.base
  left_base = c.quiver.Source(column[0]) if column else q.base
  return (quiver.PathWord(top_base, top, p.base),
          quiver.PathWord(left_base, column, q.base))


def CheckCubeLaw(r, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Sweeps (x op y) op (x op z) = (y op x) op (y op z) over all triples.

  Triples range over arrows sharing a source (star) or a target (bullet);
  a triple counts whenever both sides are defined.
  """
  name = 'RC-law' if r.kind == STAR else 'co-RC-law'
  result = report.ViolationReport(name, max_violations)
  q = r.quiver
  groups = {}
  for x in q.ArrowIds():
    key = q.Source(x) if r.kind == STAR else q.Target(x)
    groups.setdefault(key, []).append(x)
  for key in sorted(groups):
    members = groups[key]
    for x in members:
      for y in members:
        if not (r.IsDefined(x, y) and r.IsDefined(y, x)):
          continue
        for z in members:
          if not (r.IsDefined(x, z) and r.IsDefined(y, z)):
            continue
          xy, xz, yx, yz = r.Op(x, y), r.Op(x, z), r.Op(y, x), r.Op(y, z)
          if not (r.IsDefined(xy, xz) and r.IsDefined(yx, yz)):
            continue
          lhs, rhs = r.Op(xy, xz), r.Op(yx, yz)
          if lhs != rhs:
            result.Add('RC', (x, y, z), '%s != %s' % (lhs, rhs))
  return result


def CheckLeftNondegenerate(r, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks that x op - is a bijection Domain(x) -> Codomain(x) for all x."""
  result = report.ViolationReport('left non-degeneracy', max_violations)
  for x in r.quiver.ArrowIds():
    domain = r.Domain(x)
    missing = [y for y in domain if not r.IsDefined(x, y)]
    if missing:
      result.Add(yangbaxter.LND, (x,), '%s %s %s is undefined' % (
          x, r.symbol, missing[0]))
      continue
    image = [r.Op(x, y) for y in domain]
    if len(set(image)) != len(image) or set(image) != set(r.Codomain(x)):
      result.Add(yangbaxter.LND, (x,), '%s %s - is not a bijection' % (
          x, r.symbol))
  return result


def CheckShape(r, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks the endpoint equations of every defined square."""
  result = report.ViolationReport('%s shape' % r.kind, max_violations)
  q = r.quiver
  for (x, y), z in r.Table():
    if not r.Compatible(x, y):
      result.Add(yangbaxter.SHAPE, (x, y), 'defined on an incompatible pair')
      continue
    if r.kind == STAR:
      if q.Source(z) != q.Target(x):
        result.Add(yangbaxter.SHAPE, (x, y), 's(x*y) != t(x)')
      if r.IsDefined(y, x) and q.Target(z) != q.Target(r.Op(y, x)):
        result.Add(yangbaxter.SHAPE, (x, y), 't(x*y) != t(y*x)')
    else:
      if q.Target(z) != q.Source(x):
        result.Add(yangbaxter.SHAPE, (x, y), 't(x.y) != s(x)')
      if r.IsDefined(y, x) and q.Source(z) != q.Source(r.Op(y, x)):
        result.Add(yangbaxter.SHAPE, (x, y), 's(x.y) != s(y.x)')
  return result


def CheckUnital(r, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks the unit equations and unitality of a completed system.

  Besides the defining unit equations, two forms of unitality are swept:
  x op y = y op x = unit implies x = y, and for non-units x, y, x op y being
  a unit implies x = y.

  Raises:
    CompletionError: r is not completed.
  """
  if not r.completed:
    raise CompletionError('unitality needs a completed system')
  result = report.ViolationReport('unitality', max_violations)
  q = r.quiver
  units = r.UnitSet()
  star = r.kind == STAR
  for x in r.base_quiver.ArrowIds():
    s, t = q.Source(x), q.Target(x)
    own, far = (r.units[s], r.units[t]) if star else (r.units[t], r.units[s])
    expected = (((x, x), far), ((x, own), far), ((own, x), x))
    for (a, b), value in expected:
      if r.Op(a, b) != value:
        result.Add('unit', (a, b), 'expected %s, got %s' % (value,
                                                            r.Op(a, b)))
  for (x, y), z in r.Table():
    if x == y or z not in units:
      continue
    if x not in units and y not in units:
      result.Add('unital', (x, y), 'distinct arrows with a unit value')
    elif r.IsDefined(y, x) and r.Op(y, x) in units:
      result.Add('unital', (x, y), 'x op y = y op x = unit for x != y')
  return result


def CheckCompletedInjectivity(r, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks what survives of left-non-degeneracy after completion.

  x op x and x op eps are both units, so x op - cannot stay bijective; on the
  remaining arrows it must be injective and avoid the units.
  """
  if not r.completed:
    raise CompletionError('needs a completed system')
  result = report.ViolationReport('completed injectivity', max_violations)
  units = r.UnitSet()
  for x in r.base_quiver.ArrowIds():
    domain = [y for y in r.Domain(x) if y != x and y not in units]
    image = [r.Op(x, y) for y in domain]
    if len(set(image)) != len(image):
      result.Add(yangbaxter.LND, (x,), '%s %s - is not injective' % (
          x, r.symbol))
    hits = sorted(set(image) & units)
    if hits:
      result.Add(yangbaxter.LND, (x,), '%s %s - hits the unit %s' % (
          x, r.symbol, hits[0]))
  return result


def CheckStarIdentity(s, star, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks y*x = x<-(x*y) for all same-source x, y of an uncompleted system."""
  result = report.ViolationReport('star identity', max_violations)
  q = s.quiver
  for v in q.vertices:
    for x in q.OutArrows(v):
      for y in q.OutArrows(v):
        expected = s.Right(x, star.RawOp(x, y))
        if star.RawOp(y, x) != expected:
          result.Add('star', (x, y), 'y*x = %s, x<-(x*y) = %s' % (
              star.RawOp(y, x), expected))
  return result


def CheckRlcCompatibility(star, bullet,
                          max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks x = (y*x) *~ (x*y), i.e. x = (x*y).(y*x), on same-source pairs."""
  result = report.ViolationReport('RLC compatibility', max_violations)
  q = star.base_quiver
  for v in q.vertices:
    for x in q.OutArrows(v):
      for y in q.OutArrows(v):
        value = bullet.RawOp(star.RawOp(x, y), star.RawOp(y, x))
        if value != x:
          result.Add('RLC', (x, y), '(y*x) *~ (x*y) = %s' % value)
  return result


def CheckGridCoherence(r, max_len, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Sweeps the two grid identities over all paths up to max_len.

  With g(p, q) the first output of GridStar:
    g(p|q, w) = g(q, g(p, w))
    g(p, q|w) = g(p, q) | g(g(q, p), w)
  """
  result = report.ViolationReport('grid coherence', max_violations)
  q = r.base_quiver
  by_source = dict((v, []) for v in q.vertices)
  for length in range(max_len + 1):
    for path in quiver.EnumeratePaths(q, None, length):
      by_source[path.base].append(path)
  logging.debug('grid coherence over %d paths',
                sum(len(p) for p in by_source.values()))
  for v in q.vertices:
    for p in by_source[v]:
      for w in by_source[v]:
        p_w = GridStar(r, p, w)[0]
        w_p = GridStar(r, w, p)[0]
        for tail in by_source[p.target]:
          lhs = GridStar(r, quiver.Concat(p, tail), w)[0]
          rhs = GridStar(r, tail, p_w)[0]
          if lhs != rhs:
            result.Add('grid-ii', (p, tail, w), '%s != %s' % (lhs, rhs))
        for tail in by_source[w.target]:
          lhs = GridStar(r, p, quiver.Concat(w, tail))[0]
          rhs = quiver.Concat(p_w, GridStar(r, w_p, tail)[0])
          if lhs != rhs:
            result.Add('grid-iii', (p, w, tail), '%s != %s' % (lhs, rhs))
  return result
