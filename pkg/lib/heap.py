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

"""Heaps, groups and the braidings of principal homogeneous type.

On the pair groupoid of a finite set L there is exactly one arrow [a,b] for
every a, b in L, so a map sigma on composable pairs is the same as a ternary
operation:

  sigma([a,b], [b,c]) = ([a,<a,b,c>], [<a,b,c>,c])

The braiding is a pre-braiding exactly when <-,-,-> is a heap, and pointed
heaps are groups through <a,b,c> = a b^-1 c and a b = <a,u,b>.
"""

import collections
import itertools
import logging
import random

from lib import quiver
from lib import report
from lib import yangbaxter

DEFAULT_GROUP_ORDER_BOUND = 64

HEAP_AXIOMS = ('M1', 'M2', 'A')
HEAP_CHECKS = ('M1', 'M2', 'A', 'A1', 'A2', 'involutive', 'abelian', 'YBE1',
               'YBE2', 'solvable')
PREBRAIDING_AXIOMS = ('BG1', 'BG2', 'BG3', 'BG4', 'BG5')
MORPHISM_CONDITIONS = ('homomorphism', 'pointed-heap', 'intertwiner')


class Error(Exception):
  """Base error class."""


class TernaryError(Error):
  """A ternary operation table is not total or names unknown elements."""


class NotAHeapError(Error):
  """A ternary operation fails a heap axiom."""


class TernaryConditionError(Error):
  """A ternary operation does not define a Yang-Baxter map."""


class NotAGroupError(Error):
  """A multiplication table fails a group axiom."""


class GroupTooLargeError(NotAGroupError):
  """A group exceeds the configured order bound."""


class NotPrincipalHomogeneousError(Error):
  """A quiver does not have exactly one arrow between any two vertices."""


def PairArrowId(a, b):
  return '[%s,%s]' % (a, b)


class TernaryOp(object):
  """A total ternary operation on a finite set.

  Args:
    elements: iterable of element ids.
    table: dict (a, b, c) -> <a,b,c>.
  """

  def __init__(self, elements, table):
    self.elements = tuple(sorted(elements))
    self._table = dict(table)

  def __call__(self, a, b, c):
    return self._table[(a, b, c)]

  def __eq__(self, other):
    return (isinstance(other, TernaryOp) and self.elements == other.elements
            and self._table == other._table)

  def __ne__(self, other):
    return not self.__eq__(other)

  def __repr__(self):
    return '%s(%d elements)' % (self.__class__.__name__, len(self.elements))

  def Table(self):
    return sorted(self._table.items())


class Heap(TernaryOp):
  """A ternary operation satisfying M1, M2 and A.

  Attributes:
    abelian: whether <a,b,c> = <c,b,a> for all a, b, c.
  """

  def __init__(self, elements, table):
    TernaryOp.__init__(self, elements, table)
    self.abelian = all(self(a, b, c) == self(c, b, a)
                       for a, b, c in itertools.product(self.elements,
                                                        repeat=3))


def BuildTernaryOp(elements, table):
  """Builds a total ternary operation.

  Args:
    elements: list of element ids.
    table: dict or iterable of ((a, b, c), d) entries.

  Raises:
    TernaryError: an entry is repeated or names an unknown element, or a
      triple has no entry.
  """
  elements = list(elements)
  if len(set(elements)) != len(elements):
    raise TernaryError('duplicate element in %s' % ', '.join(elements))
  known = set(elements)
  entries = table.items() if isinstance(table, dict) else table
  result = {}
  for triple, value in entries:
    triple = tuple(triple)
    for element in triple + (value,):
      if element not in known:
        raise TernaryError('unknown element %s in <%s>' % (element,
                                                          ','.join(triple)))
    if triple in result:
      raise TernaryError('duplicate entry for <%s>' % ','.join(triple))
    result[triple] = value
  for triple in itertools.product(elements, repeat=3):
    if triple not in result:
      raise TernaryError('missing entry for <%s>' % ','.join(triple))
  return TernaryOp(elements, result)


class GroupTable(object):
  """A finite group given by its multiplication table.

  Use BuildGroup() to create validated instances.
  """

  def __init__(self, elements, mul, unit):
    self.elements = tuple(elements)
    self._mul = dict(mul)
    self.unit = unit
    self._inverse = {}
    for a in self.elements:
      for b in self.elements:
        if self._mul[(a, b)] == unit:
          self._inverse[a] = b
          break

  def __repr__(self):
    return 'GroupTable(order %d)' % len(self.elements)

  def __eq__(self, other):
    return (isinstance(other, GroupTable) and
            set(self.elements) == set(other.elements) and
            self.unit == other.unit and self._mul == other._mul)

  def __ne__(self, other):
    return not self.__eq__(other)

  def Mul(self, a, b):
    return self._mul[(a, b)]

  def Inverse(self, a):
    return self._inverse[a]

  def IsAbelian(self):
    return all(self.Mul(a, b) == self.Mul(b, a)
               for a, b in itertools.combinations(self.elements, 2))

  def Matrix(self):
    """Rows of products, in element order."""
    return [[self.Mul(a, b) for b in self.elements] for a in self.elements]


def BuildGroup(elements, mul, unit, order_bound=DEFAULT_GROUP_ORDER_BOUND):
  """Validates a multiplication table exhaustively.

  Args:
    elements: list of element ids.
    mul: dict (a, b) -> a b, or a matrix whose rows follow elements.
    unit: the unit element.
    order_bound: largest accepted order.

  Returns:
    GroupTable.

  Raises:
    GroupTooLargeError: more than order_bound elements.
    NotAGroupError: the table is not total, not closed, or fails the unit,
      inverse or associativity law.
  """
  elements = list(elements)
  if len(elements) > order_bound:
    raise GroupTooLargeError('group of order %d exceeds the bound %d' % (
        len(elements), order_bound))
  if not elements or len(set(elements)) != len(elements):
    raise NotAGroupError('elements must be nonempty and distinct')
  if isinstance(mul, list):
    if len(mul) != len(elements) or any(len(r) != len(elements) for r in mul):
      raise NotAGroupError('the multiplication matrix must be %d x %d' % (
          len(elements), len(elements)))
    mul = dict(((a, b), mul[i][j]) for i, a in enumerate(elements)
               for j, b in enumerate(elements))
  known = set(elements)
  if unit not in known:
    raise NotAGroupError('unit %s is not an element' % unit)
  for a, b in itertools.product(elements, repeat=2):
    if mul.get((a, b)) not in known:
      raise NotAGroupError('product %s*%s is missing or outside the set' % (
          a, b))
  for a in elements:
    if mul[(a, unit)] != a or mul[(unit, a)] != a:
      raise NotAGroupError('%s is not a unit for %s' % (unit, a))
    if not any(mul[(a, b)] == unit and mul[(b, a)] == unit for b in elements):
      raise NotAGroupError('%s has no inverse' % a)
  for a, b, c in itertools.product(elements, repeat=3):
    if mul[(mul[(a, b)], c)] != mul[(a, mul[(b, c)])]:
      raise NotAGroupError('(%s*%s)*%s != %s*(%s*%s)' % (a, b, c, a, b, c))
  return GroupTable(elements, mul, unit)


class AxiomReport(object):
  """One ViolationReport per named axiom, in a fixed order."""

  title = 'axioms'
  names = ()

  def __init__(self, max_violations=report.DEFAULT_MAX_VIOLATIONS):
    self.reports = collections.OrderedDict(
        (name, report.ViolationReport(name, max_violations))
        for name in self.names)

  def __getitem__(self, name):
    return self.reports[name]

  def Holds(self, name):
    return self.reports[name].IsEmpty()

  def Failed(self):
    return [name for name in self.names if not self.Holds(name)]

  def __str__(self):
    return '\n'.join(['%s:' % self.title] +
                     ['  %s' % line for r in self.reports.values()
                      for line in str(r).split('\n')])

  def AsDict(self):
    return {'name': self.title,
            'checks': [r.AsDict() for r in self.reports.values()]}


class HeapReport(AxiomReport):
  """Outcome of CheckHeap(); only M1, M2 and A decide heapness."""

  title = 'heap'
  names = HEAP_CHECKS

  def IsHeap(self):
    return all(self.Holds(name) for name in HEAP_AXIOMS)

  def SatisfiesYbe(self):
    return self.Holds('YBE1') and self.Holds('YBE2')

  def AsDict(self):
    result = AxiomReport.AsDict(self)
    result['heap'] = self.IsHeap()
    return result


class PrebraidingReport(AxiomReport):

  title = 'pre-braiding'
  names = PREBRAIDING_AXIOMS

  def IsPrebraiding(self):
    return not self.Failed()


class MorphismReport(AxiomReport):
  """The three equivalent morphism conditions, checked independently."""

  title = 'morphism'
  names = MORPHISM_CONDITIONS

  def Agree(self):
    return len(set(self.Holds(name) for name in self.names)) == 1


def _Ybe1(t, a, b, c, d):
  m = t(a, b, c)
  return t(a, m, t(m, c, d)), t(a, b, t(b, c, d))


def _Ybe2(t, a, b, c, d):
  n = t(b, c, d)
  return t(t(a, b, n), n, d), t(t(a, b, c), c, d)


def CheckHeap(t, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks the heap axioms and the related ternary conditions.

  Args:
    t: TernaryOp.
    max_violations: cap per check.

  Returns:
    HeapReport covering M1, M2, A, A1, A2, involutivity <a,<a,b,c>,c> = b,
    abelianity, the two conditions making sigma a Yang-Baxter map and unique
    solvability of <a,b,c> = d in a and in c.
  """
  result = HeapReport(max_violations)
  els = t.elements
  for a, b in itertools.product(els, repeat=2):
    if t(a, b, b) != a:
      result['M1'].Add('M1', (a, b), '<a,b,b> = %s' % t(a, b, b))
    if t(a, a, b) != b:
      result['M2'].Add('M2', (a, b), '<a,a,b> = %s' % t(a, a, b))
  for a, b, c in itertools.product(els, repeat=3):
    if t(a, t(a, b, c), c) != b:
      result['involutive'].Add('involutive', (a, b, c),
                               '<a,<a,b,c>,c> = %s' % t(a, t(a, b, c), c))
    if t(a, b, c) != t(c, b, a):
      result['abelian'].Add('abelian', (a, b, c), '<a,b,c> != <c,b,a>')
  for a, b, c, d in itertools.product(els, repeat=4):
    if t(a, b, d) != t(t(a, b, c), c, d):
      result['A1'].Add('A1', (a, b, c, d), '<a,b,d> != <<a,b,c>,c,d>')
    if t(a, c, d) != t(a, b, t(b, c, d)):
      result['A2'].Add('A2', (a, b, c, d), '<a,c,d> != <a,b,<b,c,d>>')
    for name, check in (('YBE1', _Ybe1), ('YBE2', _Ybe2)):
      lhs, rhs = check(t, a, b, c, d)
      if lhs != rhs:
        result[name].Add(name, (a, b, c, d), '%s != %s' % (lhs, rhs))
  for a, b, c, d, e in itertools.product(els, repeat=5):
    if t(a, b, t(c, d, e)) != t(t(a, b, c), d, e):
      result['A'].Add('A', (a, b, c, d, e), '<a,b,<c,d,e>> != <<a,b,c>,d,e>')
  for b, c in itertools.product(els, repeat=2):
    left = sorted(t(a, b, c) for a in els)
    right = sorted(t(c, b, a) for a in els)
    if left != list(els):
      result['solvable'].Add('solvable', ('-', b, c),
                             '<-,%s,%s> is not bijective' % (b, c))
    if right != list(els):
      result['solvable'].Add('solvable', (c, b, '-'),
                             '<%s,%s,-> is not bijective' % (c, b))
  return result


def AsHeap(t):
  """Returns t as a Heap.

  Raises:
    NotAHeapError: a heap axiom fails.
  """
  if isinstance(t, Heap):
    return t
  checks = CheckHeap(t, 1)
  if not checks.IsHeap():
    failed = [name for name in HEAP_AXIOMS if not checks.Holds(name)]
    raise NotAHeapError('not a heap: %s' % checks[failed[0]].violations[0])
  return Heap(t.elements, dict(t.Table()))


def HeapFromGroup(g):
  """Returns the heap <a,b,c> = a b^-1 c of a group."""
  table = {}
  for a, b, c in itertools.product(g.elements, repeat=3):
    table[(a, b, c)] = g.Mul(g.Mul(a, g.Inverse(b)), c)
  return Heap(g.elements, table)


def GroupFromHeap(h, unit):
  """Returns the group a b = <a,unit,b> of a heap.

  Raises:
    NotAHeapError: h fails a heap axiom.
    NotAGroupError: unit is not an element.
  """
  h = AsHeap(h)
  if unit not in h.elements:
    raise NotAGroupError('unit %s is not an element' % unit)
  mul = dict(((a, b), h(a, unit, b))
             for a, b in itertools.product(h.elements, repeat=2))
  return GroupTable(h.elements, mul, unit)


def PairQuiver(elements):
  """Returns the pair groupoid quiver: one arrow [a,b] for all a, b."""
  return quiver.BuildQuiver(
      elements, [quiver.Arrow(PairArrowId(a, b), a, b)
                 for a, b in itertools.product(sorted(elements), repeat=2)])


def BraidingFromTernary(t):
  """Builds sigma([a,b],[b,c]) = ([a,m],[m,c]) with m = <a,b,c>.

  No condition is checked beyond totality, so any ternary operation gives a
  shape-valid braided quiver on the pair groupoid.
  """
  q = PairQuiver(t.elements)
  table = []
  for a, b, c in itertools.product(t.elements, repeat=3):
    m = t(a, b, c)
    table.append(((PairArrowId(a, b), PairArrowId(b, c)),
                  (PairArrowId(a, m), PairArrowId(m, c))))
  return yangbaxter.BuildSolution(q, table)


def SolutionFromTernary(t):
  """Builds the Yang-Baxter map of a ternary operation.

  Raises:
    TernaryConditionError: one of the two ternary Yang-Baxter conditions
      fails; the message carries the witness quadruple.
  """
  for name, check in (('YBE1', _Ybe1), ('YBE2', _Ybe2)):
    for a, b, c, d in itertools.product(t.elements, repeat=4):
      lhs, rhs = check(t, a, b, c, d)
      if lhs != rhs:
        raise TernaryConditionError('%s fails on (%s, %s, %s, %s): %s != %s'
                                    % (name, a, b, c, d, lhs, rhs))
  return BraidingFromTernary(t)


def _PairStructure(q):
  """Maps (source, target) to the unique arrow of a principal quiver."""
  arrows = {}
  for arrow in q.Arrows():
    key = (arrow.source, arrow.target)
    if key in arrows:
      raise NotPrincipalHomogeneousError('arrows %s and %s share endpoints' %
                                         (arrows[key], arrow.id))
    arrows[key] = arrow.id
  for pair in itertools.product(q.vertices, repeat=2):
    if pair not in arrows:
      raise NotPrincipalHomogeneousError('no arrow from %s to %s' % pair)
  return arrows


def CheckPrebraiding(s, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks the pre-braided groupoid axioms on a principal homogeneous quiver.

  The groupoid multiplication is m(x, y) = the arrow from s(x) to t(y), and
  the unit at v is the loop on v.

  Raises:
    NotPrincipalHomogeneousError: the quiver is not a pair groupoid.
  """
  q = s.quiver
  arrows = _PairStructure(q)
  result = PrebraidingReport(max_violations)

  def M(x, y):
    return arrows[(q.Source(x), q.Target(y))]

  def Unit(v):
    return arrows[(v, v)]

  for x in q.ArrowIds():
    src, dst = q.Source(x), q.Target(x)
    if s.Sigma(x, Unit(dst)) != (Unit(src), x):
      result['BG1'].Add('BG1', (x,), 'sigma(x, 1) = %s|%s' % s.Sigma(
          x, Unit(dst)))
    if s.Sigma(Unit(src), x) != (x, Unit(dst)):
      result['BG2'].Add('BG2', (x,), 'sigma(1, x) = %s|%s' % s.Sigma(
          Unit(src), x))
  for x, y in q.ComposablePairs():
    if M(*s.Sigma(x, y)) != M(x, y):
      result['BG5'].Add('BG5', (x, y), 'm(sigma(x, y)) != m(x, y)')
  for x, y, z in q.ComposableTriples():
    xy_left, xy_right = s.Sigma(x, y)
    if s.Left(x, M(y, z)) != M(xy_left, s.Left(xy_right, z)):
      result['BG3'].Add('BG3', (x, y, z), 'x->yz is not (x->y)((x<-y)->z)')
    if s.Right(x, M(y, z)) != s.Right(xy_right, z):
      result['BG3'].Add('BG3', (x, y, z), 'x<-yz is not (x<-y)<-z')
    yz_left, yz_right = s.Sigma(y, z)
    if s.Right(M(x, y), z) != M(s.Right(x, yz_left), yz_right):
      result['BG4'].Add('BG4', (x, y, z), 'xy<-z is not (x<-(y->z))(y<-z)')
    if s.Left(M(x, y), z) != s.Left(x, yz_left):
      result['BG4'].Add('BG4', (x, y, z), 'xy->z is not x->(y->z)')
  return result


def CheckMorphism(f, group_a, group_b,
                  max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks the three equivalent conditions for a map between groups.

  Args:
    f: dict from the elements of group_a to those of group_b.
    group_a: GroupTable.
    group_b: GroupTable.
    max_violations: cap per condition.

  Returns:
    MorphismReport with the group homomorphism, pointed heap morphism and
    unit preserving braiding intertwiner conditions.
  """
  result = MorphismReport(max_violations)
  heap_a, heap_b = HeapFromGroup(group_a), HeapFromGroup(group_b)
  sigma_a, sigma_b = BraidingFromTernary(heap_a), BraidingFromTernary(heap_b)
  if f[group_a.unit] != group_b.unit:
    for name in ('pointed-heap', 'intertwiner'):
      result[name].Add('unit', (group_a.unit,), 'f(u) = %s' % f[group_a.unit])
  els = group_a.elements
  for a, b in itertools.product(els, repeat=2):
    if f[group_a.Mul(a, b)] != group_b.Mul(f[a], f[b]):
      result['homomorphism'].Add('mul', (a, b), 'f(ab) != f(a)f(b)')
  for a, b, c in itertools.product(els, repeat=3):
    if f[heap_a(a, b, c)] != heap_b(f[a], f[b], f[c]):
      result['pointed-heap'].Add('heap', (a, b, c),
                                 'f<a,b,c> != <fa,fb,fc>')
    x, y = sigma_a.Sigma(PairArrowId(a, b), PairArrowId(b, c))
    image = tuple(PairArrowId(f[sigma_a.quiver.Source(e)],
                              f[sigma_a.quiver.Target(e)]) for e in (x, y))
    if image != sigma_b.Sigma(PairArrowId(f[a], f[b]),
                              PairArrowId(f[b], f[c])):
      result['intertwiner'].Add('sigma', (a, b, c),
                                '(f x f) sigma != sigma (f x f)')
  if not result.Agree():
    logging.warning('morphism conditions disagree: %s fail',
                    ', '.join(result.Failed()))
  return result


def CheckTernaryInverses(t, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Checks that <b,a,-> inverts <a,b,-> and <-,c,b> inverts <-,b,c>."""
  result = report.ViolationReport('ternary inverses', max_violations)
  for a, b, c in itertools.product(t.elements, repeat=3):
    if t(b, a, t(a, b, c)) != c:
      result.Add('right', (a, b, c), '<b,a,<a,b,c>> = %s' % t(b, a,
                                                             t(a, b, c)))
    if t(t(a, b, c), c, b) != a:
      result.Add('left', (a, b, c), '<<a,b,c>,c,b> = %s' % t(t(a, b, c), c,
                                                            b))
  return result


def _IsHeap(t):
  els = t.elements
  return (all(t(a, b, b) == a and t(a, a, b) == b
              for a, b in itertools.product(els, repeat=2)) and
          all(t(a, b, t(c, d, e)) == t(t(a, b, c), d, e)
              for a, b, c, d, e in itertools.product(els, repeat=5)))


def _SatisfiesYbe(t):
  for quad in itertools.product(t.elements, repeat=4):
    for check in (_Ybe1, _Ybe2):
      lhs, rhs = check(t, *quad)
      if lhs != rhs:
        return False
  return True


def _TernaryTables(size, samples, seed):
  """Yields ternary operations on '0'..'size-1'.

  All of them when there are at most samples, a seeded sample otherwise.
  """
  els = [str(i) for i in range(size)]
  triples = list(itertools.product(els, repeat=3))
  total = size ** len(triples)
  if total <= samples:
    for values in itertools.product(els, repeat=len(triples)):
      yield TernaryOp(els, zip(triples, values))
    return
  rng = random.Random(seed)
  for _ in range(samples):
    yield TernaryOp(els, [(triple, rng.choice(els)) for triple in triples])


SweepResult = collections.namedtuple(
    'SweepResult', ['size', 'tables', 'exhaustive', 'heaps', 'ybe_non_heaps',
                    'disagreements'])


def HeapSweep(size, samples, seed=0,
              max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Compares heapness with the pre-braiding axioms over many tables.

  Args:
    size: number of elements.
    samples: tables to check when the space is too large to enumerate.
    seed: random seed for sampling.
    max_violations: cap on recorded disagreements.

  Returns:
    SweepResult; disagreements is a ViolationReport that is empty when the
    two notions agree on every table checked.

  Raises:
    TernaryError: size is not positive.
  """
  if size < 1:
    raise TernaryError('size must be positive, got %d' % size)
  exhaustive = size ** (size ** 3) <= samples
  disagreements = report.ViolationReport('heap vs pre-braiding',
                                         max_violations)
  tables = heaps = ybe_non_heaps = 0
  for t in _TernaryTables(size, samples, seed):
    tables += 1
    is_heap = _IsHeap(t)
    prebraiding = CheckPrebraiding(BraidingFromTernary(t), 1).IsPrebraiding()
    heaps += is_heap
    if not is_heap and _SatisfiesYbe(t):
      ybe_non_heaps += 1
    if is_heap != prebraiding:
      disagreements.Add('disagree', (' '.join(v for _, v in t.Table()),),
                        'heap=%s pre-braiding=%s' % (is_heap, prebraiding))
  logging.info('heap sweep on %d elements: %d tables, %d heaps', size, tables,
               heaps)
  return SweepResult(size, tables, exhaustive, heaps, ybe_non_heaps,
                     disagreements)


def SearchYbeNonHeap(size, samples=10000, seed=0):
  """Lists the non-heap ternary operations giving a Yang-Baxter map.

  The search is exhaustive when the space has at most samples tables.

  Returns:
    (list of TernaryOp, exhaustive flag).
  """
  exhaustive = size ** (size ** 3) <= samples
  found = [t for t in _TernaryTables(size, samples, seed)
           if _SatisfiesYbe(t) and not _IsHeap(t)]
  return found, exhaustive
