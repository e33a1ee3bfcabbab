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

"""Built-in example solutions, presentations and small groups."""

import itertools

from lib import converse
from lib import document
from lib import heap
from lib import quiver
from lib import yangbaxter

EXAMPLES = ('pres0', 'pres1', 'pres2', 's3', 'z2n', 'z3', 'zk')


class Error(Exception):
  """Base error class."""


class UnknownExampleError(Error):
  """The example name is not known."""


class ParameterError(Error):
  """An example parameter is out of range."""


# Schurian quivers: the arrow [a,b] goes from a to b.
_PRES0_ARROWS = (
    '[1,2] [2,1] [2,3] [3,2] [3,4] [4,3] [4,1] [1,4] [5,6] [6,5] [6,7] [7,6] '
    '[7,8] [8,7] [8,5] [5,8] [1,5] [5,1] [4,8] [8,4] [2,6] [6,2] [3,7] [7,3]')

_PRES0_RELATIONS = (
    '[1,2][2,3]~[1,4][4,3]', '[1,2][2,6]~[1,5][5,6]', '[1,4][4,8]~[1,5][5,8]',
    '[2,1][1,5]~[2,6][6,5]', '[2,1][1,4]~[2,3][3,4]', '[2,3][3,7]~[2,6][6,7]',
    '[3,2][2,1]~[3,4][4,1]', '[3,2][2,6]~[3,7][7,6]', '[3,4][4,8]~[3,7][7,8]',
    '[4,1][1,2]~[4,3][3,2]', '[4,1][1,5]~[4,8][8,5]', '[4,3][3,7]~[4,8][8,7]',
    '[5,1][1,2]~[5,6][6,2]', '[5,1][1,4]~[5,8][8,4]', '[5,6][6,7]~[5,8][8,7]',
    '[6,2][2,1]~[6,5][5,1]', '[6,2][2,3]~[6,7][7,3]', '[6,5][5,8]~[6,7][7,8]',
    '[7,3][3,2]~[7,6][6,2]', '[7,3][3,4]~[7,8][8,4]', '[7,6][6,5]~[7,8][8,5]',
    '[8,4][4,1]~[8,5][5,1]', '[8,4][4,3]~[8,7][7,3]', '[8,5][5,6]~[8,7][7,6]')

_PRES1_ARROWS = '[1,2] [2,1] [2,3] [3,2] [3,1] [1,3]'

_PRES1_RELATIONS = (
    '[1,2][2,1]~[1,3][3,1]', '[2,3][3,2]~[2,1][1,2]', '[3,1][1,3]~[3,2][2,3]')

_PRES2_ARROWS = '[1,2] [2,1] [2,3] [3,2] [3,4] [4,3] [4,1] [1,4]'

_PRES2_RELATIONS = (
    '[1,2][2,3]~[1,4][4,3]', '[2,3][3,4]~[2,1][1,4]', '[3,4][4,1]~[3,2][2,1]',
    '[4,1][1,2]~[4,3][3,2]')


def _SchurianQuiver(arrows):
  arrows = arrows.split()
  records = []
  vertices = set()
  for arrow_id in arrows:
    source, target = arrow_id.strip('[]').split(',')
    vertices.update((source, target))
    records.append(quiver.Arrow(arrow_id, source, target))
  return quiver.BuildQuiver(sorted(vertices), records)


def _SplitSide(side):
  return tuple('[%s' % part for part in side.strip('[').split('[') if part)


def _SchurianPresentation(arrows, relations):
  q = _SchurianQuiver(arrows)
  pairs = []
  for relation in relations:
    lhs, rhs = relation.split('~')
    pairs.append((_SplitSide(lhs), _SplitSide(rhs)))
  return converse.BuildPresentation(q, pairs)


def Pres0():
  """The 8 vertex, 24 arrow presentation of a cube-like quiver."""
  return _SchurianPresentation(_PRES0_ARROWS, _PRES0_RELATIONS)


def Pres1():
  return _SchurianPresentation(_PRES1_ARROWS, _PRES1_RELATIONS)


def Pres2():
  return _SchurianPresentation(_PRES2_ARROWS, _PRES2_RELATIONS)


def _Z3Middle(a, b, c):
  """The middle vertex of sigma[a,b,c] on Z/3, by cases."""
  if b == c:
    return a
  if a == b:
    return c
  if a == c:
    return (2 * a - b) % 3
  return b


def Z3Solution():
  """The braiding [a,b,b] <-> [a,a,b], [a,b,a] -> [a,2a-b,a] on Z/3."""
  elements = ['0', '1', '2']
  table = []
  for a, b, c in itertools.product(range(3), repeat=3):
    m = _Z3Middle(a, b, c)
    table.append(((heap.PairArrowId(a, b), heap.PairArrowId(b, c)),
                  (heap.PairArrowId(a, m), heap.PairArrowId(m, c))))
  return yangbaxter.BuildSolution(heap.PairQuiver(elements), table)


def Z2nSolution(n):
  """The braiding sigma[a,b,c] = [a, b+1+delta(a,c), c] on (Z/2)^n.

  Elements are bit strings of length n; delta compares bitwise.

  Raises:
    ParameterError: n < 1.
  """
  if n < 1:
    raise ParameterError('z2n needs n >= 1, got %d' % n)
  elements = [''.join(bits) for bits in itertools.product('01', repeat=n)]
  table = []
  for a, b, c in itertools.product(elements, repeat=3):
    m = ''.join('1' if (int(bi) + 1 + (ai == ci)) % 2 else '0'
                for ai, bi, ci in zip(a, b, c))
    table.append(((heap.PairArrowId(a, b), heap.PairArrowId(b, c)),
                  (heap.PairArrowId(a, m), heap.PairArrowId(m, c))))
  return yangbaxter.BuildSolution(heap.PairQuiver(elements), table)


def ZkSolution(k):
  """The braiding of the heap a-b+c on Z/k.

  Raises:
    ParameterError: k < 1.
  """
  if k < 1:
    raise ParameterError('zk needs k >= 1, got %d' % k)
  return heap.SolutionFromTernary(heap.HeapFromGroup(CyclicGroup(k)))


def CyclicGroup(n):
  elements = [str(i) for i in range(n)]
  mul = dict(((str(a), str(b)), str((a + b) % n))
             for a, b in itertools.product(range(n), repeat=2))
  return heap.GroupTable(elements, mul, '0')


def ElementaryAbelianGroup(n):
  """(Z/2)^n on bit strings under bitwise xor."""
  elements = [''.join(bits) for bits in itertools.product('01', repeat=n)]
  mul = {}
  for a, b in itertools.product(elements, repeat=2):
    mul[(a, b)] = ''.join('1' if x != y else '0' for x, y in zip(a, b))
  return heap.GroupTable(elements, mul, '0' * n)


def ProductGroup(g, h):
  def Pair(a, b):
    return '(%s,%s)' % (a, b)

  elements = [Pair(a, b) for a in g.elements for b in h.elements]
  mul = {}
  for a1, b1, a2, b2 in itertools.product(g.elements, h.elements, g.elements,
                                          h.elements):
    mul[(Pair(a1, b1), Pair(a2, b2))] = Pair(g.Mul(a1, a2), h.Mul(b1, b2))
  return heap.GroupTable(elements, mul, Pair(g.unit, h.unit))


def SymmetricGroup3():
  """S3 on the permutations of 012, (p q)(i) = p(q(i))."""
  elements = [''.join(p) for p in itertools.permutations('012')]
  mul = {}
  for p, q in itertools.product(elements, repeat=2):
    mul[(p, q)] = ''.join(p[int(q[i])] for i in range(3))
  return heap.GroupTable(elements, mul, '012')


def GroupsUpToOrder(bound):
  """Lists every group of order <= bound up to isomorphism.

  Returns:
    list of (name, GroupTable).

  Raises:
    ParameterError: bound > 6.
  """
  if bound > 6:
    raise ParameterError('groups are only listed up to order 6')
  groups = [('Z1', CyclicGroup(1)), ('Z2', CyclicGroup(2)),
            ('Z3', CyclicGroup(3)), ('Z4', CyclicGroup(4)),
            ('Z2xZ2', ElementaryAbelianGroup(2)), ('Z5', CyclicGroup(5)),
            ('Z6', CyclicGroup(6)), ('S3', SymmetricGroup3())]
  return [(name, g) for name, g in groups if len(g.elements) <= bound]


def BuiltinExample(name, n=2, k=3):
  """Returns the document of a built-in example.

  Args:
    name: one of EXAMPLES.
    n: exponent for z2n.
    k: order for zk.

  Returns:
    document.Document of kind solution, presentation or group.

  Raises:
    UnknownExampleError: name is not known.
    ParameterError: n or k is out of range.
  """
  if name == 'z3':
    return document.FromSolution(Z3Solution())
  if name == 'z2n':
    return document.FromSolution(Z2nSolution(n))
  if name == 'zk':
    return document.FromSolution(ZkSolution(k))
  if name == 'pres0':
    return document.FromPresentation(Pres0())
  if name == 'pres1':
    return document.FromPresentation(Pres1())
  if name == 'pres2':
    return document.FromPresentation(Pres2())
  if name == 's3':
    return document.FromGroup(SymmetricGroup3())
  raise UnknownExampleError('unknown example %s, expected one of %s' % (
      name, ', '.join(EXAMPLES)))
