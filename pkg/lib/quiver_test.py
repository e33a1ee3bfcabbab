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

"""Unittest for quiver.py."""

import unittest

from lib import quiver


class QuiverTest(unittest.TestCase):

  def setUp(self):
    # Two parallel arrows a, b from 1 to 2, c back to 1 and a loop l on 2.
    self.q = quiver.BuildQuiver(
        ['1', '2'],
        [('a', '1', '2'), ('b', '1', '2'),
         {'id': 'c', 'source': '2', 'target': '1'},
         quiver.Arrow('l', '2', '2')])

  def testArrowsAreSortedById(self):
    self.assertEqual(('a', 'b', 'c', 'l'), self.q.ArrowIds())
    self.assertEqual(('a', 'b'), self.q.OutArrows('1'))
    self.assertEqual(('c', 'l'), self.q.OutArrows('2'))
    self.assertEqual(('a', 'b', 'l'), self.q.InArrows('2'))

  def testParallelArrowsStayDistinct(self):
    self.assertEqual(self.q.Source('a'), self.q.Source('b'))
    self.assertEqual(self.q.Target('a'), self.q.Target('b'))
    self.assertNotEqual(self.q.Arrow('a'), self.q.Arrow('b'))

  def testDuplicateIds(self):
    self.assertRaises(quiver.DuplicateIdError, quiver.BuildQuiver,
                      ['1', '1'], [])
    self.assertRaises(quiver.DuplicateIdError, quiver.BuildQuiver,
                      ['1'], [('x', '1', '1'), ('x', '1', '1')])

  def testDanglingEndpoint(self):
    self.assertRaises(quiver.DanglingEndpointError, quiver.BuildQuiver,
                      ['1'], [('x', '1', '2')])

  def testComposablePairsAndTriples(self):
    pairs = self.q.ComposablePairs()
    self.assertIn(('a', 'c'), pairs)
    self.assertIn(('l', 'l'), pairs)
    self.assertNotIn(('a', 'b'), pairs)
    # 2 arrows into 1 times 2 out of 1 plus 3 into 2 times 2 out of 2.
    self.assertEqual(2 * 2 + 3 * 2 - 2, len(pairs))
    for x, y, z in self.q.ComposableTriples():
      self.assertEqual(self.q.Target(x), self.q.Source(y))
      self.assertEqual(self.q.Target(y), self.q.Source(z))

  def testMaxOutDegree(self):
    self.assertEqual(2, self.q.MaxOutDegree())
    self.assertEqual(0, quiver.BuildQuiver([], []).MaxOutDegree())

  def testMakePath(self):
    p = quiver.MakePath(self.q, '1', ['a', 'l', 'c'])
    self.assertEqual('1', p.source)
    self.assertEqual('1', p.target)
    self.assertEqual(3, len(p))
    self.assertEqual('a l c', str(p))

  def testMakePathErrors(self):
    self.assertRaises(quiver.UnknownVertexError, quiver.MakePath, self.q,
                      '9', [])
    self.assertRaises(quiver.UnknownArrowError, quiver.MakePath, self.q,
                      '1', ['z'])
    self.assertRaises(quiver.BaseMismatchError, quiver.MakePath, self.q,
                      '2', ['a'])
    try:
      quiver.MakePath(self.q, '1', ['a', 'l', 'a'])
      self.fail('expected NonComposableError')
    except quiver.NonComposableError as e:
      self.assertEqual(2, e.index)

  def testEmptyPathsOnDifferentVertices(self):
    e1 = quiver.EmptyPath('1')
    e2 = quiver.EmptyPath('2')
    self.assertNotEqual(e1, e2)
    self.assertEqual('eps:1', str(e1))
    self.assertTrue(e1.IsEmpty())

  def testConcat(self):
    p = quiver.ArrowPath(self.q, 'a')
    q = quiver.PathFromEdges(self.q, ['c', 'b'])
    self.assertEqual(('a', 'c', 'b'), quiver.Concat(p, q).edges)
    self.assertEqual(p, quiver.Concat(quiver.EmptyPath('1'), p))
    self.assertEqual(p, quiver.Concat(p, quiver.EmptyPath('2')))
    self.assertRaises(quiver.ConcatError, quiver.Concat, p, p)

  def testPathFromEdgesNeedsEdges(self):
    self.assertRaises(quiver.PathError, quiver.PathFromEdges, self.q, [])

  def testEnumeratePaths(self):
    self.assertEqual([quiver.EmptyPath('1'), quiver.EmptyPath('2')],
                     quiver.EnumeratePaths(self.q))
    from_one = quiver.EnumeratePaths(self.q, '1', 2)
    self.assertEqual([('a', 'c'), ('a', 'l'), ('b', 'c'), ('b', 'l')],
                     [p.edges for p in from_one])
    self.assertRaises(ValueError, quiver.EnumeratePaths, self.q, None, -1)

  def testWithArrows(self):
    bigger = self.q.WithArrows([('eps:1', '1', '1')])
    self.assertTrue(bigger.HasArrow('eps:1'))
    self.assertFalse(self.q.HasArrow('eps:1'))


if __name__ == '__main__':
  unittest.main()
