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

"""Unittest for catalog.py."""

import unittest

from lib import catalog
from lib import document
from lib import heap


class CatalogTest(unittest.TestCase):

  def testEveryExampleBuilds(self):
    kinds = {'pres0': document.PRESENTATION, 'pres1': document.PRESENTATION,
             'pres2': document.PRESENTATION, 's3': document.GROUP,
             'z2n': document.SOLUTION, 'z3': document.SOLUTION,
             'zk': document.SOLUTION}
    for name in catalog.EXAMPLES:
      self.assertEqual(kinds[name], catalog.BuiltinExample(name).kind, name)

  def testUnknownExample(self):
    self.assertRaises(catalog.UnknownExampleError, catalog.BuiltinExample,
                      'q8')

  def testParameters(self):
    self.assertRaises(catalog.ParameterError, catalog.Z2nSolution, 0)
    self.assertRaises(catalog.ParameterError, catalog.ZkSolution, 0)
    self.assertRaises(catalog.ParameterError, catalog.BuiltinExample, 'zk',
                      k=0)
    doc = catalog.BuiltinExample('zk', k=4)
    self.assertEqual(4, len(doc.payload['vertices']))

  def testZ3Braiding(self):
    s = catalog.Z3Solution()
    self.assertEqual(('[0,0]', '[0,1]'), s.Sigma('[0,1]', '[1,1]'))
    self.assertEqual(('[0,1]', '[1,1]'), s.Sigma('[0,0]', '[0,1]'))
    self.assertEqual(('[0,2]', '[2,0]'), s.Sigma('[0,1]', '[1,0]'))
    self.assertEqual(('[0,1]', '[1,2]'), s.Sigma('[0,1]', '[1,2]'))

  def testZ2nVertices(self):
    s = catalog.Z2nSolution(2)
    self.assertEqual(('00', '01', '10', '11'), s.quiver.vertices)
    self.assertEqual(16, len(s.quiver.ArrowIds()))

  def testPresentations(self):
    p1 = catalog.Pres1()
    self.assertEqual(('1', '2', '3'), p1.quiver.vertices)
    self.assertEqual(6, len(p1.quiver.ArrowIds()))
    self.assertEqual(3, len(p1.Quadratic()))
    self.assertIn((('[1,2]', '[2,1]'), ('[1,3]', '[3,1]')), p1.relations)
    p0 = catalog.Pres0()
    self.assertEqual(8, len(p0.quiver.vertices))
    self.assertEqual(24, len(p0.relations))
    self.assertEqual(4, len(catalog.Pres2().relations))

  def testGroups(self):
    names = [name for name, _ in catalog.GroupsUpToOrder(4)]
    self.assertEqual(['Z1', 'Z2', 'Z3', 'Z4', 'Z2xZ2'], names)
    self.assertEqual(8, len(catalog.GroupsUpToOrder(6)))
    self.assertRaises(catalog.ParameterError, catalog.GroupsUpToOrder, 7)
    for name, g in catalog.GroupsUpToOrder(6):
      # every listed table passes the exhaustive group check
      heap.BuildGroup(g.elements, g.Matrix(), g.unit)
      self.assertEqual(name != 'S3', g.IsAbelian(), name)

  def testProductGroup(self):
    z2 = catalog.CyclicGroup(2)
    g = catalog.ProductGroup(z2, z2)
    self.assertEqual('(0,0)', g.unit)
    self.assertEqual('(1,0)', g.Mul('(1,1)', '(0,1)'))
    self.assertEqual('11', catalog.ElementaryAbelianGroup(2).Mul('01', '10'))

  def testSymmetricGroup(self):
    s3 = catalog.SymmetricGroup3()
    self.assertEqual(6, len(s3.elements))
    self.assertEqual('120', s3.Mul('102', '021'))
    self.assertEqual('012', s3.Mul('120', s3.Inverse('120')))


if __name__ == '__main__':
  unittest.main()
