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

"""Unittest for report.py."""

import unittest

from lib import report


class ViolationReportTest(unittest.TestCase):

  def testEmptyReport(self):
    r = report.ViolationReport('yang-baxter')
    self.assertTrue(r.IsEmpty())
    self.assertEqual(0, len(r))
    self.assertEqual('yang-baxter: ok', str(r))
    self.assertEqual({'name': 'yang-baxter', 'ok': True, 'total': 0,
                      'violations': []}, r.AsDict())

  def testTruncatedReportStillCounts(self):
    r = report.ViolationReport('check', max_violations=2)
    for i in range(5):
      r.Add('YB1', ('a', str(i)), 'broken')
    self.assertFalse(r.IsEmpty())
    self.assertEqual(5, len(r))
    self.assertEqual(2, len(r.violations))
    self.assertTrue(r.truncated)
    self.assertIn('3 more not shown', str(r))

  def testZeroCapKeepsVerdict(self):
    r = report.ViolationReport('check', max_violations=0)
    r.Add('LND', ('x',), 'not injective')
    self.assertFalse(r.IsEmpty())
    self.assertEqual([], r.violations)

  def testExtendCountsDroppedViolations(self):
    small = report.ViolationReport('small', max_violations=1)
    small.Add('I1', ('x', 'y'), 'one')
    small.Add('I2', ('x', 'y'), 'two')
    total = report.ViolationReport('total')
    total.Extend(small)
    self.assertEqual(2, len(total))
    self.assertEqual(['I1'], total.Kinds())

  def testViolationWitnessIsStringified(self):
    v = report.Violation('YB2', (1, 'b'), 'detail')
    self.assertEqual(('1', 'b'), v.witness)
    self.assertEqual('YB2 (1 | b): detail', str(v))
    self.assertEqual(v, report.Violation('YB2', ('1', 'b'), 'detail'))


if __name__ == '__main__':
  unittest.main()
