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

"""Violation reports shared by the exhaustive property sweeps."""

import logging

DEFAULT_MAX_VIOLATIONS = 100


class Violation(object):
  """A single failed instance of a property.

  Args:
    kind: string, short name of the failed property (e.g. 'YB1', 'LND').
    witness: tuple of strings, the offending arrows or paths.
    detail: string, human readable description.
  """

  def __init__(self, kind, witness, detail):
    self.kind = kind
    self.witness = tuple(str(w) for w in witness)
    self.detail = detail

  def __eq__(self, other):
    return (isinstance(other, Violation) and self.kind == other.kind and
            self.witness == other.witness and self.detail == other.detail)

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash((self.kind, self.witness, self.detail))

  def __str__(self):
    return '%s (%s): %s' % (self.kind, ' | '.join(self.witness), self.detail)

  def __repr__(self):
    return 'Violation(%r, %r, %r)' % (self.kind, self.witness, self.detail)

  def AsDict(self):
    return {'kind': self.kind, 'witness': list(self.witness),
            'detail': self.detail}


class ViolationReport(object):
  """Collects violations of one named check.

  Violations are recorded in the order they are added; only the first
  max_violations are kept but all of them are counted, so IsEmpty() is exact
  even for a truncated report.
  """

  def __init__(self, name, max_violations=DEFAULT_MAX_VIOLATIONS):
    self.name = name
    self.max_violations = max_violations
    self.violations = []
    self.total = 0

  def Add(self, kind, witness, detail):
    self.total += 1
    if self.max_violations is None or len(self.violations) < self.max_violations:
      self.violations.append(Violation(kind, witness, detail))
    elif self.total == self.max_violations + 1:
      logging.warning('%s: more than %d violations, report truncated',
                      self.name, self.max_violations)

  def Extend(self, other):
    """Adds every violation recorded by another report."""
    for violation in other.violations:
      self.Add(violation.kind, violation.witness, violation.detail)
    # violations the other report dropped still count
    self.total += other.total - len(other.violations)

  def IsEmpty(self):
    return self.total == 0

  @property
  def truncated(self):
    return self.total > len(self.violations)

  def Kinds(self):
    return sorted(set(v.kind for v in self.violations))

  def __len__(self):
    return self.total

  def __str__(self):
    if self.IsEmpty():
      return '%s: ok' % self.name
    lines = ['%s: %d violation(s)' % (self.name, self.total)]
    for violation in self.violations:
      lines.append('  %s' % violation)
    if self.truncated:
      lines.append('  ... %d more not shown' % (
          self.total - len(self.violations)))
    return '\n'.join(lines)

  def AsDict(self):
    return {'name': self.name, 'ok': self.IsEmpty(), 'total': self.total,
            'violations': [v.AsDict() for v in self.violations]}
