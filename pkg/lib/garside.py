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

"""The structure category of an involutive non-degenerate braided quiver.

The category is presented by the arrows of the quiver subject to the
relations x|y ~ sigma(x|y).  Elements are decided by their strict greedy
normal form over the Garside family of right-lcms of atoms; a breadth first
search over single relation rewrites serves as an independent oracle.

Complements and lcms are computed with the grid calculus of the completed
star and bullet systems.
"""

import collections
import itertools
import logging

from lib import quiver
from lib import rcsystem
from lib import report

DEFAULT_BFS_CAP = 10000


class Error(Exception):
  """Base error class."""


class ClassTooLargeError(Error):
  """A relation class exceeds the configured search cap."""


class SourceMismatchError(Error):
  """The elements do not share a source."""


class TargetMismatchError(Error):
  """The elements do not share a target."""


class AtomSetError(Error):
  """An atom set is empty, repeats an atom or mixes endpoints."""


class NotInFamilyError(Error):
  """An element is not in the Garside family."""


class GarsideEntry(object):
  """An element Delta_I of the Garside family, labelled by its atom set.

  Args:
    atomset: sorted tuple of atom ids; empty for an identity.
    path: PathWord representing the right-lcm of the atoms.
  """

  def __init__(self, atomset, path):
    self.atomset = tuple(atomset)
    self.path = path

  @property
  def length(self):
    return len(self.path)

  @property
  def source(self):
    return self.path.base

  @property
  def target(self):
    return self.path.target

  def Key(self):
    return (self.source, self.atomset)

  def __eq__(self, other):
    return isinstance(other, GarsideEntry) and self.Key() == other.Key()

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash(self.Key())

  def __str__(self):
    if not self.atomset:
      return '1_%s' % self.source
    return 'Delta{%s} = %s' % (', '.join(self.atomset), self.path)

  def __repr__(self):
    return 'GarsideEntry(%r, %r)' % (self.atomset, self.path)


class CatElement(object):
  """An element of the structure category with its normal decomposition.

  Args:
    path: the PathWord the element was computed from.
    entries: tuple of GarsideEntry, the strict greedy normal decomposition.
  """

  def __init__(self, path, entries):
    self.path = path
    self.entries = tuple(entries)

  @property
  def length(self):
    return len(self.path)

  @property
  def source(self):
    return self.path.base

  @property
  def target(self):
    return self.path.target

  def Key(self):
    return (self.source, self.target,
            tuple(entry.Key() for entry in self.entries))

  def Representative(self):
    """Concatenates the representatives of the normal form entries."""
    result = quiver.EmptyPath(self.source)
    for entry in self.entries:
      result = quiver.Concat(result, entry.path)
    return result

  def __eq__(self, other):
    return isinstance(other, CatElement) and self.Key() == other.Key()

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash(self.Key())

  def __str__(self):
    if not self.entries:
      return '1_%s' % self.source
    return ' | '.join('[%s]' % entry.path for entry in self.entries)

  def __repr__(self):
    return 'CatElement(%r, %d entries)' % (self.path, len(self.entries))


def _PathOf(u):
  if isinstance(u, (CatElement, GarsideEntry)):
    return u.path
  return u


class StructureCategory(object):
  """The structure category C(sigma) with its RC-calculus.

  Args:
    solution: yangbaxter.BraidedQuiver, involutive and non-degenerate.
    bfs_cap: maximal size of a relation class explored by BfsClass().

  Raises:
    rcsystem.RefusedError: the solution is degenerate or not involutive.
  """

  def __init__(self, solution, bfs_cap=DEFAULT_BFS_CAP):
    self.solution = solution
    self.quiver = solution.quiver
    self.bfs_cap = bfs_cap
    self.star = rcsystem.DeriveStar(solution)
    self.bullet = rcsystem.DeriveBullet(solution)
    self.star_hat = rcsystem.Complete(self.star)
    self.bullet_hat = rcsystem.Complete(self.bullet)
    self._preimages = collections.defaultdict(list)
    for pair, image in solution.Table():
      self._preimages[image].append(pair)
    self._omega = {}
    self._omega_tilde = {}
    self._normal_forms = {}
    self._family = None
    self._family_index = {}

  def __repr__(self):
    return 'StructureCategory(%r)' % self.solution

  # Word problem

  def BfsClass(self, p, cap=None):
    """Returns the relation class of p as a frozenset of PathWord.

    Raises:
      ClassTooLargeError: the class has more than cap members.
    """
    cap = cap or self.bfs_cap
    p = _PathOf(p)
    seen = set([p])
    queue = collections.deque([p])
    while queue:
      path = queue.popleft()
      edges = path.edges
      for i in range(len(edges) - 1):
        pair = (edges[i], edges[i + 1])
        rewrites = [self.solution.Sigma(*pair)] + self._preimages.get(pair, [])
        for rewrite in rewrites:
          other = quiver.PathWord(path.base,
                                  edges[:i] + tuple(rewrite) + edges[i + 2:],
                                  path.target)
          if other in seen:
            continue
          seen.add(other)
          if len(seen) > cap:
            raise ClassTooLargeError('class of %s exceeds %d paths' % (p, cap))
          queue.append(other)
    return frozenset(seen)

  def Element(self, p):
    """Returns the CatElement of a path (alias of NormalForm)."""
    return self.NormalForm(p)

  def Identity(self, vertex):
    return self.NormalForm(quiver.EmptyPath(vertex))

  def Equal(self, p, q):
    return self.NormalForm(p) == self.NormalForm(q)

  def GridEquivalent(self, p, q):
    """Decides p == q by the grid: both complements consist of units only."""
    p, q = _PathOf(p), _PathOf(q)
    if p.base != q.base or p.target != q.target:
      return False
    p_q, q_p = rcsystem.GridStar(self.star_hat, p, q)
    return (rcsystem.StripUnits(p_q).IsEmpty() and
            rcsystem.StripUnits(q_p).IsEmpty())

  def Compose(self, u, v):
    return self.NormalForm(quiver.Concat(_PathOf(u), _PathOf(v)))

  # Complements and divisibility

  def RightComplementPath(self, u, v):
    """Returns the path u\\v: u|(u\\v) and v|(v\\u) both represent the lcm.

    Raises:
      SourceMismatchError: u and v do not share a source.
    """
    u, v = _PathOf(u), _PathOf(v)
    if u.base != v.base:
      raise SourceMismatchError('%s and %s do not share a source' % (u, v))
    return rcsystem.StripUnits(rcsystem.GridStar(self.star_hat, u, v)[0])

  def RightComplement(self, u, v):
    return self.NormalForm(self.RightComplementPath(u, v))

  def LeftComplementPath(self, u, v):
    """Returns the path v/u with (v/u)|u and (u/v)|v representing the left-lcm.

    Raises:
      TargetMismatchError: u and v do not share a target.
    """
    u, v = _PathOf(u), _PathOf(v)
    if u.target != v.target:
      raise TargetMismatchError('%s and %s do not share a target' % (u, v))
    return rcsystem.StripUnits(rcsystem.GridBullet(self.bullet_hat, u, v)[0])

  def LeftComplement(self, u, v):
    return self.NormalForm(self.LeftComplementPath(u, v))

  def LeftDivides(self, e, u):
    """Whether e|w = u for some w."""
    return self.RightComplementPath(u, e).IsEmpty()

  def RightDivides(self, e, u):
    """Whether w|e = u for some w."""
    return self.LeftComplementPath(u, e).IsEmpty()

  def AtomDivisors(self, u):
    """The sorted atoms at s(u) that left-divide u."""
    u = _PathOf(u)
    return tuple(a for a in self.quiver.OutArrows(u.base)
                 if self.LeftDivides(quiver.ArrowPath(self.quiver, a), u))

  def RightAtomDivisors(self, u):
    """The sorted atoms at t(u) that right-divide u."""
    u = _PathOf(u)
    return tuple(a for a in self.quiver.InArrows(u.target)
                 if self.RightDivides(quiver.ArrowPath(self.quiver, a), u))

  def RightLcm(self, u, v):
    u = _PathOf(u)
    return self.NormalForm(quiver.Concat(u, self.RightComplementPath(u, v)))

  def LeftLcmOf(self, u, v):
    v = _PathOf(v)
    return self.NormalForm(quiver.Concat(self.LeftComplementPath(v, _PathOf(u)),
                                         v))

  # RC-calculus

  def _CheckAtoms(self, atoms, endpoint, what):
    if not atoms:
      raise AtomSetError('an atom set must not be empty')
    if len(set(atoms)) != len(atoms):
      raise AtomSetError('atom set %s repeats an atom' % ', '.join(atoms))
    for atom in atoms:
      if not self.quiver.HasArrow(atom):
        raise AtomSetError('unknown atom %s' % atom)
    ends = set(endpoint(a) for a in atoms)
    if len(ends) > 1:
      raise AtomSetError('atoms %s do not share a %s' % (', '.join(atoms),
                                                          what))

  def _Omega(self, atoms):
    if atoms not in self._omega:
      if len(atoms) == 1:
        value = atoms[0]
      else:
        value = self.star_hat.Op(self._Omega(atoms[:-1]),
                                 self._Omega(atoms[:-2] + atoms[-1:]))
      self._omega[atoms] = value
    return self._omega[atoms]

  def _OmegaTilde(self, atoms):
    if atoms not in self._omega_tilde:
      if len(atoms) == 1:
        value = atoms[0]
      else:
        value = self.bullet_hat.Op(self._OmegaTilde(atoms[1:]),
                                   self._OmegaTilde(atoms[:1] + atoms[2:]))
      self._omega_tilde[atoms] = value
    return self._omega_tilde[atoms]

  def DeltaPath(self, atoms, ordered=False):
    """Returns the RC-calculus path of the right-lcm of a set of atoms.

    Args:
      atoms: iterable of atom ids sharing a source.
      ordered: use the given order instead of the sorted one.

    Returns:
      PathWord whose i-th edge is Omega of the first i atoms.

    Raises:
      AtomSetError: the atom set is empty, repeats an atom or mixes sources.
    """
    atoms = tuple(atoms)
    self._CheckAtoms(atoms, self.quiver.Source, 'source')
    if not ordered:
      atoms = tuple(sorted(atoms))
    edges = [self._Omega(atoms[:i]) for i in range(1, len(atoms) + 1)]
    path = quiver.PathWord(self.quiver.Source(atoms[0]), edges,
                           self.star_hat.quiver.Target(edges[-1]))
    return rcsystem.StripUnits(path)

  def Delta(self, atoms):
    return self.NormalForm(self.DeltaPath(atoms))

  def DeltaTildePath(self, atoms, ordered=False):
    """Returns the dual RC-calculus path of the left-lcm of atoms.

    Raises:
      AtomSetError: the atom set is empty, repeats an atom or mixes targets.
    """
    atoms = tuple(atoms)
    self._CheckAtoms(atoms, self.quiver.Target, 'target')
    if not ordered:
      atoms = tuple(sorted(atoms))
    edges = [self._OmegaTilde(atoms[i:]) for i in range(len(atoms))]
    path = quiver.PathWord(self.bullet_hat.quiver.Source(edges[0]), edges,
                           self.quiver.Target(atoms[0]))
    return rcsystem.StripUnits(path)

  def DeltaTilde(self, atoms):
    return self.NormalForm(self.DeltaTildePath(atoms))

  def LeftLcm(self, atoms):
    """The left-lcm of a set of atoms sharing a target."""
    return self.DeltaTilde(atoms)

  def TildeAtoms(self, atoms):
    """The last edges of Delta_I under each choice of final atom.

    With I sorted as x_1..x_n, the i-th result is Omega(x_1..x_n without x_i,
    x_i); Delta_I is the left-lcm of these.
    """
    atoms = tuple(sorted(atoms))
    self._CheckAtoms(atoms, self.quiver.Source, 'source')
    return tuple(self._Omega(atoms[:i] + atoms[i + 1:] + atoms[i:i + 1])
                 for i in range(len(atoms)))

  # Normal forms

  def NormalForm(self, p):
    """Returns the strict greedy normal decomposition of a path.

    The head of a nonempty element u is Delta of all atoms left-dividing u;
    the decomposition continues with head\\u.
    """
    p = _PathOf(p)
    if p in self._normal_forms:
      return self._normal_forms[p]
    entries = []
    rest = p
    while not rest.IsEmpty():
      atoms = self.AtomDivisors(rest)
      head = self.DeltaPath(atoms)
      entries.append(GarsideEntry(atoms, head))
      rest = self.RightComplementPath(head, rest)
    element = CatElement(p, entries)
    self._normal_forms[p] = element
    return element

  def InGarsideFamily(self, u):
    return len(self.NormalForm(u).entries) <= 1

  def GarsideFamily(self):
    """Lists the distinct Delta_I per vertex, identities first.

    Entries are deduplicated by element; the lexicographically least atom
    set is kept as the label.
    """
    if self._family is not None:
      return list(self._family)
    family = []
    seen = set()
    for v in self.quiver.vertices:
      identity = GarsideEntry((), quiver.EmptyPath(v))
      family.append(identity)
      self._family_index[self.NormalForm(identity.path).Key()] = identity
      atoms = self.quiver.OutArrows(v)
      for size in range(1, len(atoms) + 1):
        for subset in itertools.combinations(atoms, size):
          path = self.DeltaPath(subset)
          key = self.NormalForm(path).Key()
          if key in seen:
            continue
          seen.add(key)
          family.append(GarsideEntry(subset, path))
          self._family_index[key] = family[-1]
    logging.info('Garside family has %d entries (%d identities)', len(family),
                 len(self.quiver.vertices))
    self._family = family
    return list(family)

  def EntryOf(self, u):
    """Returns the Garside family entry equal to u.

    Raises:
      NotInFamilyError: u is not in the family.
    """
    self.GarsideFamily()
    key = self.NormalForm(u).Key()
    if key not in self._family_index:
      raise NotInFamilyError('%s is not in the Garside family' % _PathOf(u))
    return self._family_index[key]

  def LcmWitness(self, f, g):
    """Returns the short left-lcm witness of two elements sharing a target.

    With I and J the right atom divisors of f and g, the witness is
    w = Delta~_J / Delta~_{I+J}, so that w|g is the left-lcm Delta~_{I+J}.
    Compose(w, g) gives the lcm itself.

    Returns:
      GarsideEntry of w.

    Raises:
      TargetMismatchError: f and g do not share a target.
      NotInFamilyError: w is not in the family; the family is not perfect.
    """
    f, g = _PathOf(f), _PathOf(g)
    if f.target != g.target:
      raise TargetMismatchError('%s and %s do not share a target' % (f, g))
    atoms = sorted(set(self.RightAtomDivisors(f)) |
                   set(self.RightAtomDivisors(g)))
    if atoms:
      lcm = self.DeltaTildePath(atoms)
    else:
      lcm = quiver.EmptyPath(g.target)
    return self.EntryOf(self.LeftComplementPath(g, lcm))

  # Reports

  def OracleReport(self, max_len, max_violations=report.DEFAULT_MAX_VIOLATIONS):
    """Compares the normal form against the relation classes.

    Every path up to max_len is placed in its relation class; a class whose
    members get different normal forms is reported as oracle-split, two
    classes sharing a normal form as oracle-merge.
    """
    result = report.ViolationReport('oracle', max_violations)
    for length in range(max_len + 1):
      paths = quiver.EnumeratePaths(self.quiver, None, length)
      assigned = set()
      owner = {}
      for p in paths:
        if p in assigned:
          continue
        members = sorted(self.BfsClass(p))
        assigned.update(members)
        keys = set(self.NormalForm(m).Key() for m in members)
        if len(keys) > 1:
          result.Add('oracle-split', (members[0],),
                     'class of %d paths has %d normal forms' % (
                         len(members), len(keys)))
        for key in keys:
          if key in owner:
            result.Add('oracle-merge', (owner[key], members[0]),
                       'distinct classes share a normal form')
          else:
            owner[key] = members[0]
      logging.debug('oracle: length %d done, %d paths', length, len(paths))
    return result

  def SharpCubeReport(self, max_violations=report.DEFAULT_MAX_VIOLATIONS):
    """Checks the unstripped triple complement on all atom triples.

    (x*y)*(x*z) must equal (y*x)*(y*z) as paths of the completed quiver.
    """
    result = report.ViolationReport('sharp cube', max_violations)
    q = self.quiver

    def Triple(p, r, s):
      return rcsystem.GridStar(self.star_hat,
                               rcsystem.GridStar(self.star_hat, p, r)[0],
                               rcsystem.GridStar(self.star_hat, p, s)[0])[0]

    for v in q.vertices:
      atoms = [quiver.ArrowPath(q, a) for a in q.OutArrows(v)]
      for x, y, z in itertools.product(atoms, repeat=3):
        lhs, rhs = Triple(x, y, z), Triple(y, x, z)
        if lhs.edges != rhs.edges:
          result.Add('cube', (x, y, z), '%s != %s' % (lhs, rhs))
    return result

  def DualDescriptionReport(self, max_violations=report.DEFAULT_MAX_VIOLATIONS):
    """Checks that each Garside entry is the left-lcm of its right atoms."""
    result = report.ViolationReport('dual description', max_violations)
    for entry in self.GarsideFamily():
      if not entry.atomset:
        continue
      atoms = self.RightAtomDivisors(entry.path)
      if not atoms or not self.Equal(self.DeltaTildePath(atoms), entry.path):
        result.Add('dual', (entry.path,), 'not the left-lcm of %s' % (
            ', '.join(atoms) or 'no atoms'))
    return result

  def LengthBoundReport(self, max_violations=report.DEFAULT_MAX_VIOLATIONS):
    """Checks that no Garside entry is longer than the maximal out-degree."""
    result = report.ViolationReport('length bound', max_violations)
    bound = self.quiver.MaxOutDegree()
    for entry in self.GarsideFamily():
      if entry.length > bound:
        result.Add('bound', (entry.path,), 'length %d exceeds %d' % (
            entry.length, bound))
    return result
