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

"""Braided quivers recovered from quadratic category presentations.

A presentation whose relations a|v ~ b|w pair up every two distinct arrows
with a common source (and dually with a common target) defines partial
operations a*b = v, b*a = w and a.b, b.a on the last letters.  When the
conditions below hold, a*- extends to a bijection *' by a*'a := z_a, and
  a->b = c  iff  b = a*'c,     a<-b := (a->b)*'a
is an involutive non-degenerate braided quiver presenting the same category.

Conditions:
  i     relations are quadratic, a length 2 path is in at most one relation
  ii    one relation a|v ~ b|w for every a != b with a common source
  ii'   one relation v|a ~ w|b for every a != b with a common target
  iii   a unique z_a outside the image of a*-, only in trivial relations
  iii'  a unique z^a outside the image of a.-, only in trivial relations
  iv    a|v ~ a|w implies v = w = z_a (derived)
  iv'   v|a ~ w|a implies v = w = z^a (derived)
  v     the RC-law on pairwise distinct a, b, c with a common source
"""

import collections
import itertools
import logging

from lib import rcsystem
from lib import report

CONDITIONS = ('i', 'ii', "ii'", 'iii', "iii'", 'iv', "iv'", 'v')


class Error(Exception):
  """Base error class."""


class MalformedRelationError(Error):
  """A relation side is not a path or the sides have different endpoints."""


class ConditionsFailedError(Error):
  """A condition needed to recover a braided quiver fails."""


class Presentation(object):
  """A quiver with relations between paths.

  Use BuildPresentation() to create validated instances.

  Args:
    quiver: quiver.Quiver.
    relations: iterable of (side, side) pairs, each side a tuple of arrow
      ids; every pair is stored with its sides in sorted order.
  """

  def __init__(self, quiver, relations):
    self.quiver = quiver
    self.relations = tuple(sorted(_Canonical(r) for r in relations))

  def __eq__(self, other):
    return (isinstance(other, Presentation) and self.quiver == other.quiver and
            self.relations == other.relations)

  def __ne__(self, other):
    return not self.__eq__(other)

  def __repr__(self):
    return 'Presentation(%r, %d relations)' % (self.quiver,
                                               len(self.relations))

  def Quadratic(self):
    return [r for r in self.relations if len(r[0]) == 2 and len(r[1]) == 2]


def _Canonical(relation):
  lhs, rhs = tuple(relation[0]), tuple(relation[1])
  return (lhs, rhs) if lhs <= rhs else (rhs, lhs)


def _SideEnds(q, side):
  for prev, arrow_id in zip(side, side[1:]):
    if q.Target(prev) != q.Source(arrow_id):
      raise MalformedRelationError('%s is not a path' % ' '.join(side))
  return q.Source(side[0]), q.Target(side[-1])


def BuildPresentation(q, relations):
  """Builds a presentation, collapsing duplicate relations.

  Args:
    q: quiver.Quiver.
    relations: iterable of pairs of arrow id sequences.

  Returns:
    A Presentation.

  Raises:
    MalformedRelationError: a side is empty, names an unknown arrow or is not
      composable, or the sides have different endpoints.
  """
  seen = set()
  kept = []
  for relation in relations:
    lhs, rhs = _Canonical(relation)
    for side in (lhs, rhs):
      if not side:
        raise MalformedRelationError('relation sides must not be empty')
      for arrow_id in side:
        if not q.HasArrow(arrow_id):
          raise MalformedRelationError('relation %s ~ %s names unknown arrow '
                                       '%s' % (' '.join(lhs), ' '.join(rhs),
                                               arrow_id))
    if _SideEnds(q, lhs) != _SideEnds(q, rhs):
      raise MalformedRelationError('sides of %s ~ %s have different endpoints'
                                   % (' '.join(lhs), ' '.join(rhs)))
    if (lhs, rhs) in seen:
      logging.warning('collapsing duplicate relation %s ~ %s', ' '.join(lhs),
                      ' '.join(rhs))
      continue
    seen.add((lhs, rhs))
    kept.append((lhs, rhs))
  return Presentation(q, kept)


def PresentationFromSolution(s):
  """Returns the relations x|y ~ sigma(x|y) of a braided quiver."""
  relations = set(_Canonical(((x, y), s.Sigma(x, y)))
                  for x, y in s.quiver.ComposablePairs())
  return Presentation(s.quiver, relations)


class ConditionReport(object):
  """Per-condition outcome of CheckConditions().

  Attributes:
    reports: dict condition name -> report.ViolationReport.
    star: dict (a, b) -> a*b for distinct a, b read off the relations.
    bullet: dict (a, b) -> a.b for distinct a, b read off the relations.
    z: dict arrow -> z_a, for every arrow where it was found.
    z_dual: dict arrow -> z^a, for every arrow where it was found.
  """

  def __init__(self, max_violations=report.DEFAULT_MAX_VIOLATIONS):
    self.reports = collections.OrderedDict(
        (name, report.ViolationReport('condition %s' % name, max_violations))
        for name in CONDITIONS)
    self.star = {}
    self.bullet = {}
    self.z = {}
    self.z_dual = {}

  def __getitem__(self, name):
    return self.reports[name]

  def Passed(self):
    return all(r.IsEmpty() for r in self.reports.values())

  def Failed(self):
    return [name for name, r in self.reports.items() if not r.IsEmpty()]

  def StarPrime(self, a, b):
    return self.z[a] if a == b else self.star[(a, b)]

  def BulletPrime(self, a, b):
    return self.z_dual[a] if a == b else self.bullet[(a, b)]

  def __str__(self):
    return '\n'.join(str(r) for r in self.reports.values())

  def AsDict(self):
    return {'passed': self.Passed(),
            'conditions': [r.AsDict() for r in self.reports.values()],
            'z': dict(self.z), 'z_dual': dict(self.z_dual)}


def _CheckShape(p, result):
  occurrences = collections.defaultdict(list)
  for relation in p.relations:
    if len(relation[0]) != 2 or len(relation[1]) != 2:
      result['i'].Add('quadratic', (' '.join(relation[0]),
                                    ' '.join(relation[1])),
                      'relation is not quadratic')
      continue
    for side in set(relation):
      occurrences[side].append(relation)
  for side in sorted(occurrences):
    if len(occurrences[side]) > 1:
      result['i'].Add('unique', (' '.join(side),),
                      'path appears in %d relations' % len(occurrences[side]))


def _CrossRelations(p, result, name, letter, table, group):
  """Reads a*b (or a.b) off the relations and checks ii (or ii')."""
  q = p.quiver
  found = collections.defaultdict(list)
  for lhs, rhs in p.Quadratic():
    a, b = lhs[letter], rhs[letter]
    if a != b:
      found[tuple(sorted((a, b)))].append((lhs, rhs))
      other = 1 - letter
      if (a, b) not in table:
        table[(a, b)] = lhs[other]
        table[(b, a)] = rhs[other]
  for v in q.vertices:
    for a, b in itertools.combinations(group(v), 2):
      count = len(found.get((a, b), ()))
      if count == 0:
        result[name].Add('missing', (a, b), 'no relation pairs %s with %s' % (
            a, b))
      elif count > 1:
        result[name].Add('ambiguous', (a, b), '%d relations pair %s with %s' %
                         (count, a, b))


def _FindZ(p, result, name, zs, table, domain, codomain, side_of):
  q = p.quiver
  involved = collections.defaultdict(list)
  for relation in p.Quadratic():
    for side in relation:
      involved[side].append(relation)
  for a in q.ArrowIds():
    image = set(table[(a, b)] for b in domain(a) if b != a and
                (a, b) in table)
    candidates = [v for v in codomain(a) if v not in image]
    if len(candidates) != 1:
      result[name].Add('z', (a,), '%d candidates for the fixed arrow' %
                       len(candidates))
      continue
    zs[a] = candidates[0]
    fixed = side_of(a, zs[a])
    for lhs, rhs in involved.get(fixed, ()):
      if lhs != rhs:
        result[name].Add('z-trivial', (a, zs[a]),
                         'fixed path is in the relation %s ~ %s' % (
                             ' '.join(lhs), ' '.join(rhs)))


def CheckConditions(p, max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Evaluates every condition on a presentation.

  All conditions are evaluated even after a failure.

  Args:
    p: Presentation.
    max_violations: cap per condition report.

  Returns:
    ConditionReport.
  """
  q = p.quiver
  result = ConditionReport(max_violations)
  _CheckShape(p, result)
  _CrossRelations(p, result, 'ii', 0, result.star, q.OutArrows)
  _CrossRelations(p, result, "ii'", 1, result.bullet, q.InArrows)
  _FindZ(p, result, 'iii', result.z, result.star,
         lambda a: q.OutArrows(q.Source(a)),
         lambda a: q.OutArrows(q.Target(a)),
         lambda a, z: (a, z))
  _FindZ(p, result, "iii'", result.z_dual, result.bullet,
         lambda a: q.InArrows(q.Target(a)),
         lambda a: q.InArrows(q.Source(a)),
         lambda a, z: (z, a))
  for lhs, rhs in p.Quadratic():
    if lhs[0] == rhs[0] and lhs != rhs or (
        lhs == rhs and lhs[0] in result.z and lhs[1] != result.z[lhs[0]]):
      result['iv'].Add('iv', (' '.join(lhs), ' '.join(rhs)),
                       'relation with a common first letter off z')
    if lhs[1] == rhs[1] and lhs != rhs or (
        lhs == rhs and lhs[1] in result.z_dual and
        lhs[0] != result.z_dual[lhs[1]]):
      result["iv'"].Add("iv'", (' '.join(lhs), ' '.join(rhs)),
                        'relation with a common last letter off z')
  star = result.star
  for v in q.vertices:
    for a, b, c in itertools.permutations(q.OutArrows(v), 3):
      try:
        lhs = result.StarPrime(star[(a, b)], star[(a, c)])
        rhs = result.StarPrime(star[(b, a)], star[(b, c)])
      except KeyError:
        # already reported under ii or iii
        continue
      if lhs != rhs:
        result['v'].Add('RC', (a, b, c), '%s != %s' % (lhs, rhs))
  logging.info('conditions failing: %s', ', '.join(result.Failed()) or 'none')
  return result


def _Require(p, conditions):
  if conditions is None:
    conditions = CheckConditions(p)
  if not conditions.Passed():
    raise ConditionsFailedError('conditions %s fail: %s' % (
        ', '.join(conditions.Failed()),
        conditions[conditions.Failed()[0]].violations[0]))
  return conditions


def StarSystem(p, conditions=None):
  """Returns the extended operation *' as an rcsystem.RCSystem."""
  conditions = _Require(p, conditions)
  q = p.quiver
  table = {}
  for a in q.ArrowIds():
    for b in q.OutArrows(q.Source(a)):
      table[(a, b)] = conditions.StarPrime(a, b)
  return rcsystem.RCSystem(q, table)


def BulletSystem(p, conditions=None):
  """Returns the extended operation .' as an rcsystem.CoRCSystem."""
  conditions = _Require(p, conditions)
  q = p.quiver
  table = {}
  for a in q.ArrowIds():
    for b in q.InArrows(q.Target(a)):
      table[(a, b)] = conditions.BulletPrime(a, b)
  return rcsystem.CoRCSystem(q, table)


def ExtractSolution(p, conditions=None):
  """Recovers the braided quiver of a presentation.

  Args:
    p: Presentation.
    conditions: optional ConditionReport of p, computed when omitted.

  Returns:
    yangbaxter.BraidedQuiver.

  Raises:
    ConditionsFailedError: a condition fails.
  """
  solution = rcsystem.Reconstruct(StarSystem(p, conditions))
  logging.info('extracted solution with %d entries', len(solution.Table()))
  return solution


def RoundtripCheck(p, solution=None):
  """Whether p and the relations of its solution generate the same congruence.

  Compares the nontrivial relations of both sides as unordered pairs.
  """
  if solution is None:
    solution = ExtractSolution(p)
  ours = set(r for r in p.relations if r[0] != r[1])
  theirs = set(r for r in PresentationFromSolution(solution).relations
               if r[0] != r[1])
  if ours - theirs:
    logging.info('relation %s ~ %s is not produced by the solution',
                 *sorted(ours - theirs)[0])
  if theirs - ours:
    logging.info('relation %s ~ %s is missing from the presentation',
                 *sorted(theirs - ours)[0])
  return ours == theirs


def LemmaReport(p, conditions=None,
                max_violations=report.DEFAULT_MAX_VIOLATIONS):
  """Sweeps the identities tying *', .' and the recovered solution together.

  Raises:
    ConditionsFailedError: a condition fails.
  """
  conditions = _Require(p, conditions)
  q = p.quiver
  star, bullet = conditions.StarPrime, conditions.BulletPrime
  z = conditions.z
  solution = ExtractSolution(p, conditions)
  result = report.ViolationReport('lemmas', max_violations)
  for v in q.vertices:
    for a, b in itertools.product(q.OutArrows(v), repeat=2):
      value = bullet(star(a, b), star(b, a))
      if value != a:
        result.Add('star-bullet', (a, b), '(a*b).(b*a) = %s' % value)
      if a == b:
        continue
      ab, ba = star(a, b), star(b, a)
      if z[ab] == z[ba] and ab != ba:
        result.Add('z-symmetry', (a, b), 'z agrees but a*b != b*a')
      if star(ab, z[a]) != z[ba]:
        result.Add('z-shift', (a, b), '(a*b)*z_a = %s, z_(b*a) = %s' % (
            star(ab, z[a]), z[ba]))
    for a, b in itertools.product(q.InArrows(v), repeat=2):
      value = star(bullet(a, b), bullet(b, a))
      if value != a:
        result.Add('bullet-star', (a, b), '(a.b)*(b.a) = %s' % value)
  for a, b in q.ComposablePairs():
    value = bullet(b, solution.Right(a, b))
    if value != a:
      result.Add('right-inverse', (a, b), 'b.(a<-b) = %s' % value)
  return result
