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

"""Unittest for yangbaxter.py."""

import unittest

from lib import catalog
from lib import quiver
from lib import yangbaxter


def _OneVertexQuiver(*arrow_ids):
  return quiver.BuildQuiver(['v'], [(a, 'v', 'v') for a in arrow_ids])


def _Flip(q):
  return yangbaxter.BuildSolution(
      q, [((x, y), (y, x)) for x, y in q.ComposablePairs()])


class BuildSolutionTest(unittest.TestCase):

  def setUp(self):
    self.q = quiver.BuildQuiver(['1', '2'], [('a', '1', '2'), ('b', '2', '1'),
                                             ('c', '1', '2')])

  def testMissingPair(self):
    self.assertRaises(yangbaxter.MissingPairError, yangbaxter.BuildSolution,
                      self.q, [(('a', 'b'), ('a', 'b'))])

  def testDuplicateEntry(self):
    table = [(p, p) for p in self.q.ComposablePairs()]
    table.append((('a', 'b'), ('c', 'b')))
    self.assertRaises(yangbaxter.DuplicateEntryError,
                      yangbaxter.BuildSolution, self.q, table)

  def testNotComposable(self):
    self.assertRaises(yangbaxter.NotComposableError, yangbaxter.BuildSolution,
                      self.q, [(('a', 'c'), ('a', 'c'))])

  def testUnknownArrow(self):
    self.assertRaises(yangbaxter.UnknownArrowError, yangbaxter.BuildSolution,
                      self.q, [(('a', 'z'), ('a', 'b'))])

  def testEndpointErrorNamesEquation(self):
    table = [(p, p) for p in self.q.ComposablePairs() if p != ('a', 'b')]
    table.append((('a', 'b'), ('b', 'a')))
    try:
      yangbaxter.BuildSolution(self.q, table)
      self.fail('expected EndpointError')
    except yangbaxter.EndpointError as e:
      self.assertIn('s(x->y) = s(x)', str(e))

  def testLeftAndRight(self):
    s = yangbaxter.BuildSolution(
        self.q, [(('a', 'b'), ('c', 'b')), (('c', 'b'), ('a', 'b')),
                 (('b', 'a'), ('b', 'a')), (('b', 'c'), ('b', 'c'))])
    self.assertEqual('c', s.Left('a', 'b'))
    self.assertEqual('b', s.Right('a', 'b'))
    self.assertEqual(('a', 'b'), s.Sigma('c', 'b'))


class PropertyTest(unittest.TestCase):

  def testFlipIsAnInvolutiveNondegenerateSolution(self):
    s = _Flip(_OneVertexQuiver('x', 'y'))
    for r in yangbaxter.Validate(s):
      self.assertTrue(r.IsEmpty(), str(r))

  def testIdentityIsDegenerate(self):
    s = yangbaxter.IdentitySolution(_OneVertexQuiver('x', 'y'))
    self.assertTrue(yangbaxter.CheckYbe(s).IsEmpty())
    self.assertTrue(yangbaxter.CheckInvolutive(s).IsEmpty())
    nd = yangbaxter.CheckNondegenerate(s)
    self.assertEqual([yangbaxter.LND, yangbaxter.RND], nd.Kinds())
    # x->- is constant for both arrows and so is -<-y.
    self.assertEqual(4, len(nd))

  def testNonInvolutive(self):
    # sigma(a, b) = (b', a) squares to (a', b').
    q = _OneVertexQuiver('x', 'y')
    swap = {'x': 'y', 'y': 'x'}
    s = yangbaxter.BuildSolution(
        q, [((a, b), (swap[b], a)) for a, b in q.ComposablePairs()])
    inv = yangbaxter.CheckInvolutive(s)
    self.assertFalse(inv.IsEmpty())
    self.assertEqual([yangbaxter.I1, yangbaxter.I2], inv.Kinds())

  def testBrokenBraidRelation(self):
    q = _OneVertexQuiver('x', 'y')
    table = dict((p, (p[1], p[0])) for p in q.ComposablePairs())
    table[('x', 'x')] = ('y', 'y')
    table[('y', 'y')] = ('x', 'x')
    s = yangbaxter.BuildSolution(q, table.items())
    self.assertFalse(yangbaxter.CheckYbe(s).IsEmpty())

  def testMaxViolationsCapsTheListNotTheVerdict(self):
    s = yangbaxter.IdentitySolution(_OneVertexQuiver('x', 'y', 'z'))
    nd = yangbaxter.CheckNondegenerate(s, max_violations=1)
    self.assertEqual(1, len(nd.violations))
    self.assertEqual(6, len(nd))

  def testBuiltinExamplesAreSolutions(self):
    for s in (catalog.Z3Solution(), catalog.Z2nSolution(1),
              catalog.Z2nSolution(2), catalog.ZkSolution(4)):
      for r in yangbaxter.Validate(s):
        self.assertTrue(r.IsEmpty(), str(r))


if __name__ == '__main__':
  unittest.main()
