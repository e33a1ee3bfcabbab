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

"""Unittest for groupoid.py."""

import collections
import itertools
import unittest

from lib import catalog
from lib import converse
from lib import garside
from lib import groupoid
from lib import pathexpr
from lib import quiver
from lib import yangbaxter


class FreeAbelianGroupoidTest(unittest.TestCase):

  def setUp(self):
    q = quiver.BuildQuiver(['v'], [('x', 'v', 'v'), ('y', 'v', 'v')])
    s = yangbaxter.BuildSolution(
        q, [((a, b), (b, a)) for a, b in q.ComposablePairs()])
    self.c = garside.StructureCategory(s)
    self.g = groupoid.StructureGroupoid(self.c)

  def _Word(self, text):
    word = pathexpr.ParseWord(text)
    return self.g.FromWord(word.letters, word.base)

  def testInverseCancels(self):
    self.assertTrue(self.g.Equal(self._Word('x ~x'), self.g.Identity('v')))
    self.assertTrue(self.g.Equal(self._Word('~x x'), self._Word('eps:v')))

  def testCommutation(self):
    self.assertTrue(self.g.Equal(self._Word('x y ~x'), self._Word('y')))
    self.assertTrue(self.g.Equal(self._Word('~x y'), self._Word('y ~x')))
    self.assertFalse(self.g.Equal(self._Word('x ~y'), self._Word('y ~x')))

  def testInvert(self):
    a = self._Word('x x ~y')
    self.assertTrue(self.g.Equal(self.g.Invert(self.g.Invert(a)), a))
    self.assertTrue(self.g.Equal(self.g.Multiply(a, self.g.Invert(a)),
                                 self.g.Identity('v')))

  def testAssociativity(self):
    a, b, c = self._Word('x ~y'), self._Word('~x ~x'), self._Word('y x')
    self.assertTrue(self.g.Equal(
        self.g.Multiply(self.g.Multiply(a, b), c),
        self.g.Multiply(a, self.g.Multiply(b, c))))

  def testReduce(self):
    a = self.g.Fraction(quiver.PathFromEdges(self.c.quiver, ['x']),
                        quiver.PathFromEdges(self.c.quiver, ['x', 'y']))
    reduced = self.g.Reduce(a)
    self.assertEqual(0, reduced.num.length)
    self.assertEqual(('y',), reduced.pos.path.edges)
    self.assertTrue(self.g.Equal(a, reduced))
    num, pos = self.g.SymmetricNormal(a)
    self.assertEqual([], num)
    self.assertEqual([('y',)], [e.atomset for e in pos])

  def testEmptyWordNeedsBase(self):
    self.assertRaises(groupoid.EndpointError, self.g.FromWord, [])


class TriangleGroupoidTest(unittest.TestCase):

  def setUp(self):
    self.c = garside.StructureCategory(
        converse.ExtractSolution(catalog.Pres1()))
    self.g = groupoid.StructureGroupoid(self.c)
    self.q = self.c.quiver

  def _Iota(self, arrow_id):
    return self.g.Iota(quiver.ArrowPath(self.q, arrow_id))

  def testRelationLifts(self):
    lhs = self.g.Multiply(self._Iota('[1,2]'), self._Iota('[2,1]'))
    rhs = self.g.Multiply(self._Iota('[1,3]'), self._Iota('[3,1]'))
    self.assertTrue(self.g.Equal(lhs, rhs))
    other = self.g.Multiply(self._Iota('[1,2]'), self._Iota('[2,3]'))
    self.assertFalse(self.g.Equal(lhs, other))

  def testEndpoints(self):
    a = self.g.Invert(self._Iota('[1,2]'))
    self.assertEqual('2', a.source)
    self.assertEqual('1', a.target)
    self.assertRaises(groupoid.EndpointError, self.g.Multiply,
                      self._Iota('[1,2]'), self._Iota('[1,2]'))
    self.assertRaises(groupoid.EndpointError, self.g.Fraction,
                      quiver.ArrowPath(self.q, '[1,2]'),
                      quiver.ArrowPath(self.q, '[2,1]'))
    self.assertFalse(self.g.Equal(self._Iota('[1,2]'), self._Iota('[1,3]')))

  def testMixedWord(self):
    # [1,2]^-1 [1,3] [3,1] = [2,1] by the relation
    word = self.g.FromWord([('[1,2]', True), ('[1,3]', False),
                            ('[3,1]', False)])
    self.assertTrue(self.g.Equal(word, self._Iota('[2,1]')))

  def testRoundTripThroughReduce(self):
    for text in ('[1,2] ~[3,2]', '~[2,1] [2,3] [3,1]', '[1,3] ~[1,3]'):
      word = pathexpr.ParseWord(text)
      a = self.g.FromWord(word.letters, word.base)
      self.assertTrue(self.g.Equal(a, self.g.Reduce(a)), text)

  def _Words(self, max_len):
    """All identities and composable words of up to max_len letters."""
    q = self.q
    letters = ([(a, False) for a in q.ArrowIds()] +
               [(a, True) for a in q.ArrowIds()])

    def Start(letter):
      return q.Target(letter[0]) if letter[1] else q.Source(letter[0])

    def End(letter):
      return q.Source(letter[0]) if letter[1] else q.Target(letter[0])

    result = [self.g.Identity(v) for v in sorted(q.vertices)]
    frontier = [()]
    for _ in range(max_len):
      frontier = [w + (l,) for w in frontier for l in letters
                  if not w or End(w[-1]) == Start(l)]
      result.extend(self.g.FromWord(w) for w in frontier)
    return result

  def testIotaIsInjective(self):
    paths = []
    for length in range(5):
      paths.extend(quiver.EnumeratePaths(self.q, None, length))
    for p, r in itertools.combinations(paths, 2):
      if (p.base, p.target) != (r.base, r.target):
        continue
      self.assertEqual(self.c.Equal(p, r),
                       self.g.Equal(self.g.Iota(p), self.g.Iota(r)),
                       (str(p), str(r)))

  def testSigmaRelations(self):
    for (x, y), (u, v) in self.c.solution.Table():
      lhs = self.g.Multiply(self._Iota(x), self._Iota(y))
      rhs = self.g.Multiply(self._Iota(u), self._Iota(v))
      self.assertTrue(self.g.Equal(lhs, rhs), (x, y))
      self.assertTrue(self.g.Equal(self.g.Invert(lhs), self.g.Invert(rhs)))

  def testGroupoidAxioms(self):
    for a in self._Words(2):
      one_s, one_t = self.g.Identity(a.source), self.g.Identity(a.target)
      self.assertTrue(self.g.Equal(self.g.Multiply(one_s, a), a), str(a))
      self.assertTrue(self.g.Equal(self.g.Multiply(a, one_t), a), str(a))
      self.assertTrue(self.g.Equal(self.g.Multiply(a, self.g.Invert(a)),
                                   one_s), str(a))
      self.assertTrue(self.g.Equal(self.g.Multiply(self.g.Invert(a), a),
                                   one_t), str(a))
    short = self._Words(1)
    for a, b, c in itertools.product(short, repeat=3):
      if a.target != b.source or b.target != c.source:
        continue
      self.assertTrue(self.g.Equal(
          self.g.Multiply(self.g.Multiply(a, b), c),
          self.g.Multiply(a, self.g.Multiply(b, c))), (str(a), str(b), str(c)))

  def testEqualIsAnEquivalence(self):
    buckets = collections.defaultdict(list)
    for a in self._Words(2):
      buckets[(a.source, a.target)].append(a)
    for elements in buckets.values():
      n = len(elements)
      equal = [[self.g.Equal(elements[i], elements[j]) for j in range(n)]
               for i in range(n)]
      for i in range(n):
        self.assertTrue(equal[i][i])
        for j in range(n):
          self.assertEqual(equal[i][j], equal[j][i])
          if not equal[i][j]:
            continue
          for k in range(n):
            if equal[j][k]:
              self.assertTrue(equal[i][k], (i, j, k))
    # the bucket at vertex 1 mixes identities with cancelling words
    self.assertTrue(any(
        self.g.Equal(a, self.g.Identity('1')) and a.num.length
        for a in buckets[('1', '1')]))


if __name__ == '__main__':
  unittest.main()
