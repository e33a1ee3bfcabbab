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

"""Unittest for garside.py."""

import itertools
import unittest

from lib import catalog
from lib import converse
from lib import garside
from lib import quiver
from lib import rcsystem
from lib import yangbaxter


def _Flip(*arrow_ids):
  q = quiver.BuildQuiver(['v'], [(a, 'v', 'v') for a in arrow_ids])
  return yangbaxter.BuildSolution(
      q, [((x, y), (y, x)) for x, y in q.ComposablePairs()])


class FreeAbelianTest(unittest.TestCase):
  """Two commuting loops: the free commutative monoid on x and y."""

  def setUp(self):
    self.c = garside.StructureCategory(_Flip('x', 'y'))
    self.q = self.c.quiver

  def _P(self, text):
    return quiver.PathFromEdges(self.q, text.split())

  def testGarsideFamily(self):
    family = self.c.GarsideFamily()
    self.assertEqual(['1_v', 'Delta{x} = x', 'Delta{y} = y',
                      'Delta{x, y} = x y'], [str(e) for e in family])
    self.assertTrue(self.c.LengthBoundReport().IsEmpty())
    self.assertTrue(self.c.DualDescriptionReport().IsEmpty())

  def testNormalForm(self):
    element = self.c.NormalForm(self._P('x x y'))
    self.assertEqual([('x', 'y'), ('x',)],
                     [e.atomset for e in element.entries])
    self.assertEqual(3, element.length)
    self.assertEqual('[x y] | [x]', str(element))
    self.assertEqual(self._P('x y x'), element.Representative())

  def testEqual(self):
    self.assertTrue(self.c.Equal(self._P('x y'), self._P('y x')))
    self.assertTrue(self.c.Equal(self._P('x y x'), self._P('y x x')))
    self.assertFalse(self.c.Equal(self._P('x x'), self._P('x y')))
    self.assertTrue(self.c.GridEquivalent(self._P('x y'), self._P('y x')))
    self.assertFalse(self.c.GridEquivalent(self._P('x x'), self._P('x y')))

  def testComplementsAndLcms(self):
    self.assertEqual(('y',), self.c.RightComplementPath(self._P('x'),
                                                        self._P('y')).edges)
    self.assertTrue(self.c.RightComplementPath(self._P('x y'),
                                               self._P('x')).IsEmpty())
    self.assertEqual(self.c.NormalForm(self._P('x y')),
                     self.c.RightLcm(self._P('x'), self._P('y')))
    self.assertEqual(self.c.NormalForm(self._P('x y')),
                     self.c.LeftLcmOf(self._P('x'), self._P('y')))
    self.assertEqual(('x',), self.c.LeftComplementPath(self._P('y'),
                                                       self._P('x')).edges)

  def testDivisibility(self):
    self.assertTrue(self.c.LeftDivides(self._P('x'), self._P('y x')))
    self.assertFalse(self.c.LeftDivides(self._P('x x'), self._P('x y')))
    self.assertTrue(self.c.RightDivides(self._P('y'), self._P('y x')))
    self.assertEqual(('x', 'y'), self.c.AtomDivisors(self._P('x x y')))
    self.assertEqual(('x',), self.c.AtomDivisors(self._P('x x')))
    self.assertEqual(('x', 'y'), self.c.RightAtomDivisors(self._P('y x')))

  def testInGarsideFamily(self):
    self.assertTrue(self.c.InGarsideFamily(self._P('y x')))
    self.assertFalse(self.c.InGarsideFamily(self._P('x x')))
    self.assertTrue(self.c.InGarsideFamily(quiver.EmptyPath('v')))

  def testIdentity(self):
    one = self.c.Identity('v')
    self.assertEqual([], list(one.entries))
    self.assertEqual('1_v', str(one))
    self.assertEqual(self.c.NormalForm(self._P('x')),
                     self.c.Compose(one, self._P('x')))

  def testReports(self):
    self.assertTrue(self.c.OracleReport(3).IsEmpty())
    self.assertTrue(self.c.SharpCubeReport().IsEmpty())

  def testSingleLoop(self):
    q = quiver.BuildQuiver(['v'], [('l', 'v', 'v')])
    c = garside.StructureCategory(yangbaxter.IdentitySolution(q))
    self.assertEqual(2, len(c.GarsideFamily()))


class TriangleTest(unittest.TestCase):
  """The category presented by the three vertex triangle quiver."""

  def setUp(self):
    self.c = garside.StructureCategory(
        converse.ExtractSolution(catalog.Pres1()))
    self.q = self.c.quiver

  def _P(self, text):
    return quiver.PathFromEdges(self.q, text.split())

  def testBfsClass(self):
    members = self.c.BfsClass(self._P('[1,2] [2,1]'))
    self.assertEqual(set([self._P('[1,2] [2,1]'), self._P('[1,3] [3,1]')]),
                     set(members))
    self.assertEqual(1, len(self.c.BfsClass(self._P('[1,2] [2,3]'))))
    self.assertRaises(garside.ClassTooLargeError, self.c.BfsClass,
                      self._P('[1,2] [2,1]'), 1)

  def testEqual(self):
    self.assertTrue(self.c.Equal(self._P('[1,2] [2,1]'),
                                 self._P('[1,3] [3,1]')))
    self.assertFalse(self.c.Equal(self._P('[1,2] [2,3]'),
                                  self._P('[1,3] [3,2]')))

  def testRightComplement(self):
    self.assertEqual(('[2,1]',), self.c.RightComplementPath(
        self._P('[1,2]'), self._P('[1,3]')).edges)
    self.assertRaises(garside.SourceMismatchError,
                      self.c.RightComplementPath, self._P('[1,2]'),
                      self._P('[2,1]'))
    self.assertRaises(garside.TargetMismatchError,
                      self.c.LeftComplementPath, self._P('[1,2]'),
                      self._P('[1,3]'))

  def testDelta(self):
    path = self.c.DeltaPath(['[1,3]', '[1,2]'])
    self.assertEqual(('[1,2]', '[2,1]'), path.edges)
    self.assertTrue(self.c.Equal(path, self._P('[1,3] [3,1]')))
    ordered = self.c.DeltaPath(['[1,3]', '[1,2]'], ordered=True)
    self.assertEqual(('[1,3]', '[3,1]'), ordered.edges)

  def testLeftLcm(self):
    lcm = self.c.LeftLcm(['[2,1]', '[3,1]'])
    self.assertEqual(self.c.NormalForm(self._P('[1,2] [2,1]')), lcm)
    self.assertEqual(('[3,1]', '[2,1]'),
                     self.c.TildeAtoms(['[1,2]', '[1,3]']))
    self.assertEqual(self.c.Delta(['[1,2]', '[1,3]']),
                     self.c.LeftLcm(self.c.TildeAtoms(['[1,2]', '[1,3]'])))

  def testAtomSetErrors(self):
    self.assertRaises(garside.AtomSetError, self.c.DeltaPath, [])
    self.assertRaises(garside.AtomSetError, self.c.DeltaPath,
                      ['[1,2]', '[2,1]'])
    self.assertRaises(garside.AtomSetError, self.c.DeltaPath,
                      ['[1,2]', '[1,2]'])
    self.assertRaises(garside.AtomSetError, self.c.DeltaPath, ['[9,9]'])
    self.assertRaises(garside.AtomSetError, self.c.DeltaTildePath,
                      ['[1,2]', '[1,3]'])

  def testDivides(self):
    self.assertTrue(self.c.LeftDivides(self._P('[1,2]'),
                                       self._P('[1,3] [3,1]')))
    self.assertTrue(self.c.RightDivides(self._P('[2,1]'),
                                        self._P('[1,3] [3,1]')))
    self.assertEqual(self.c.NormalForm(self._P('[1,2]')),
                     self.c.LeftComplement(self._P('[2,1]'),
                                           self._P('[3,1]')))

  def testNormalFormsAreGreedy(self):
    for length in range(4):
      for p in quiver.EnumeratePaths(self.q, None, length):
        element = self.c.NormalForm(p)
        self.assertIn(element.Representative(), self.c.BfsClass(p))
        self.assertEqual(length, sum(e.length for e in element.entries))
        entries = element.entries
        for first, second in zip(entries, entries[1:]):
          self.assertEqual(first.atomset, self.c.AtomDivisors(
              quiver.Concat(first.path, second.path)))

  def testGarsideFamily(self):
    family = self.c.GarsideFamily()
    for entry in family:
      self.assertTrue(entry.length <= 2, str(entry))
    # one identity and three atom sets per vertex
    self.assertEqual(12, len(family))
    self.assertTrue(self.c.LengthBoundReport().IsEmpty())
    self.assertTrue(self.c.DualDescriptionReport().IsEmpty())

  def testLcmWitness(self):
    witness = self.c.LcmWitness(self._P('[2,1]'), self._P('[3,1]'))
    self.assertIsInstance(witness, garside.GarsideEntry)
    self.assertEqual(1, witness.length)
    self.assertEqual(self.c.NormalForm(self._P('[1,2] [2,1]')),
                     self.c.Compose(witness, self._P('[3,1]')))
    same = self.c.LcmWitness(self._P('[2,1]'), self._P('[2,1]'))
    self.assertEqual((), same.atomset)
    self.assertRaises(garside.TargetMismatchError, self.c.LcmWitness,
                      self._P('[1,2]'), self._P('[1,3]'))

  def testOracle(self):
    result = self.c.OracleReport(5)
    self.assertTrue(result.IsEmpty(), str(result))
    self.assertTrue(self.c.SharpCubeReport().IsEmpty())


class HeapCategoryTest(unittest.TestCase):

  def setUp(self):
    self.c = garside.StructureCategory(catalog.Z3Solution())
    self.q = self.c.quiver

  def _P(self, text):
    return quiver.PathFromEdges(self.q, text.split())

  def testDeltaOfAllAtomsIsALoop(self):
    for v in self.q.vertices:
      path = self.c.DeltaPath(self.q.OutArrows(v))
      self.assertEqual(v, path.target)
      self.assertTrue(len(path) <= 3)
    self.assertTrue(self.c.Equal(self.c.DeltaPath(self.q.OutArrows('0')),
                                 self._P('[0,0] [0,1] [1,0]')))
    self.assertTrue(self.c.Equal(self.c.DeltaPath(self.q.OutArrows('0')),
                                 self._P('[0,0] [0,2] [2,0]')))

  def testGarsideFamilySize(self):
    self.assertEqual(24, len(self.c.GarsideFamily()))
    self.assertTrue(self.c.LengthBoundReport().IsEmpty())

  def testOracle(self):
    result = self.c.OracleReport(4)
    self.assertTrue(result.IsEmpty(), str(result))

  def testFamilyIsPerfect(self):
    family = self.c.GarsideFamily()
    for f, g in itertools.product(family, repeat=2):
      if f.target != g.target:
        continue
      witness = self.c.LcmWitness(f, g)
      self.assertIn(witness, family)
      self.assertTrue(self.c.InGarsideFamily(witness.path), (f, g))
      self.assertTrue(self.c.InGarsideFamily(self.c.Compose(witness, g)),
                      (str(f), str(g)))

  def testEntryOf(self):
    self.assertEqual((('0', ('[0,0]',))),
                     self.c.EntryOf(self._P('[0,0]')).Key())
    self.assertRaises(garside.NotInFamilyError, self.c.EntryOf,
                      self._P('[0,1] [1,2] [2,0] [0,1]'))


class DeltaPermutationTest(unittest.TestCase):
  """Delta does not depend on the order its atoms are taken in."""

  def _CheckAllOrders(self, c):
    for v in c.quiver.vertices:
      atoms = c.quiver.OutArrows(v)
      for size in range(1, min(3, len(atoms)) + 1):
        for subset in itertools.combinations(atoms, size):
          first = c.DeltaPath(subset, ordered=True)
          for order in itertools.permutations(subset):
            self.assertTrue(c.Equal(first, c.DeltaPath(order, ordered=True)),
                            order)

  def testHeapCategory(self):
    self._CheckAllOrders(garside.StructureCategory(catalog.Z3Solution()))

  def testCube(self):
    self._CheckAllOrders(garside.StructureCategory(
        converse.ExtractSolution(catalog.Pres0())))


class RefusalTest(unittest.TestCase):

  def testDegenerateSolution(self):
    q = quiver.BuildQuiver(['v'], [('x', 'v', 'v'), ('y', 'v', 'v')])
    self.assertRaises(rcsystem.RefusedError, garside.StructureCategory,
                      yangbaxter.IdentitySolution(q))


if __name__ == '__main__':
  unittest.main()
