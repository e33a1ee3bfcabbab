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

"""Finite quivers, arrows and composable path words.

Vertices and arrows are identified by opaque strings.  Several arrows may join
the same ordered pair of vertices and loops are allowed, so an arrow is never
identified with its (source, target) pair.  Wherever a set of vertices, arrows
or paths is listed, it is listed in the byte order of the ids.
"""

import collections
import functools
import logging

# Reserved prefix for inserted unit loops and for empty paths in path syntax.
EPSILON_PREFIX = 'eps:'


class Error(Exception):
  """Base error class."""


class QuiverError(Error):
  """The quiver definition is not sane."""


class DuplicateIdError(QuiverError):
  """A vertex or arrow id is used twice."""


class DanglingEndpointError(QuiverError):
  """An arrow starts or ends outside of the vertex set."""


class PathError(Error):
  """Generic path error."""


class UnknownVertexError(PathError):
  """A vertex id is not part of the quiver."""


class UnknownArrowError(PathError):
  """An arrow id is not part of the quiver."""


class BaseMismatchError(PathError):
  """The base vertex of a path is not the source of its first arrow."""


class NonComposableError(PathError):
  """Two consecutive arrows of a path do not compose."""

  def __init__(self, message, index):
    PathError.__init__(self, message)
    self.index = index


class ConcatError(PathError):
  """The target of a path is not the source of the path appended to it."""


Arrow = collections.namedtuple('Arrow', ['id', 'source', 'target'])


class Quiver(object):
  """A finite quiver.

  Use BuildQuiver() to create validated instances.

  Args:
    vertices: iterable of vertex ids.
    arrows: iterable of Arrow tuples.
  """

  def __init__(self, vertices, arrows):
    self.vertices = tuple(sorted(vertices))
    self._arrows = dict((a.id, a) for a in arrows)
    self._ids = tuple(sorted(self._arrows))
    out_arrows = dict((v, []) for v in self.vertices)
    in_arrows = dict((v, []) for v in self.vertices)
    for arrow_id in self._ids:
      arrow = self._arrows[arrow_id]
      out_arrows[arrow.source].append(arrow_id)
      in_arrows[arrow.target].append(arrow_id)
    self._out = dict((v, tuple(ids)) for v, ids in out_arrows.items())
    self._in = dict((v, tuple(ids)) for v, ids in in_arrows.items())

  def __eq__(self, other):
    return (isinstance(other, Quiver) and self.vertices == other.vertices and
            self._arrows == other._arrows)

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash((self.vertices, self._ids))

  def __repr__(self):
    return 'Quiver(%d vertices, %d arrows)' % (len(self.vertices),
                                               len(self._ids))

  def HasVertex(self, vertex):
    return vertex in self._out

  def HasArrow(self, arrow_id):
    return arrow_id in self._arrows

  def Arrow(self, arrow_id):
    try:
      return self._arrows[arrow_id]
    except KeyError:
      raise UnknownArrowError('unknown arrow %s' % arrow_id)

  def Source(self, arrow_id):
    return self.Arrow(arrow_id).source

  def Target(self, arrow_id):
    return self.Arrow(arrow_id).target

  def ArrowIds(self):
    return self._ids

  def Arrows(self):
    return [self._arrows[i] for i in self._ids]

  def OutArrows(self, vertex):
    """Returns the sorted ids of A(vertex, -)."""
    try:
      return self._out[vertex]
    except KeyError:
      raise UnknownVertexError('unknown vertex %s' % vertex)

  def InArrows(self, vertex):
    """Returns the sorted ids of A(-, vertex)."""
    try:
      return self._in[vertex]
    except KeyError:
      raise UnknownVertexError('unknown vertex %s' % vertex)

  def ComposablePairs(self):
    return [(x, y) for x in self._ids
            for y in self._out[self._arrows[x].target]]

  def ComposableTriples(self):
    return [(x, y, z) for (x, y) in self.ComposablePairs()
            for z in self._out[self._arrows[y].target]]

  def MaxOutDegree(self):
    if not self.vertices:
      return 0
    return max(len(ids) for ids in self._out.values())

  def WithArrows(self, arrows):
    """Returns a new quiver with the given extra arrows."""
    return BuildQuiver(self.vertices, self.Arrows() + list(arrows))


def _AsArrow(record):
  if isinstance(record, Arrow):
    return record
  if isinstance(record, dict):
    return Arrow(record['id'], record['source'], record['target'])
  arrow_id, source, target = record
  return Arrow(arrow_id, source, target)


def BuildQuiver(vertices, arrows):
  """Builds a validated quiver.

  Args:
    vertices: list of vertex ids.
    arrows: list of arrow records; Arrow tuples, (id, source, target) triples
      or dictionaries with the keys id, source and target.

  Returns:
    A Quiver.

  Raises:
    DuplicateIdError: a vertex or arrow id is repeated.
    DanglingEndpointError: an arrow endpoint is not a vertex.
  """
  vertices = list(vertices)
  seen = set()
  for vertex in vertices:
    if vertex in seen:
      raise DuplicateIdError('duplicate vertex id %s' % vertex)
    seen.add(vertex)
  records = []
  arrow_ids = set()
  for record in arrows:
    arrow = _AsArrow(record)
    if arrow.id in arrow_ids:
      raise DuplicateIdError('duplicate arrow id %s' % arrow.id)
    arrow_ids.add(arrow.id)
    for end, name in ((arrow.source, 'source'), (arrow.target, 'target')):
      if end not in seen:
        raise DanglingEndpointError(
            'dangling endpoint: arrow %s has %s %s outside the vertex set'
            % (arrow.id, name, end))
    records.append(arrow)
  logging.debug('built quiver with %d vertices and %d arrows', len(vertices),
                len(records))
  return Quiver(vertices, records)


@functools.total_ordering
class PathWord(object):
  """A composable sequence of arrows with an explicit base vertex.

  PathWord objects are not validated; build them with MakePath(), Concat()
  or EnumeratePaths().  The empty path on a vertex v has no edges and base v.

  Args:
    base: vertex id, source of the path.
    edges: sequence of arrow ids.
    target: vertex id, target of the path; defaults to base.
  """

  __slots__ = ('base', 'edges', 'target')

  def __init__(self, base, edges=(), target=None):
    self.base = base
    self.edges = tuple(edges)
    if target is None:
      target = base
    self.target = target

  @property
  def source(self):
    return self.base

  def IsEmpty(self):
    return not self.edges

  def SortKey(self):
    return (self.edges, self.base)

  def __len__(self):
    return len(self.edges)

  def __iter__(self):
    return iter(self.edges)

  def __eq__(self, other):
    return (isinstance(other, PathWord) and self.base == other.base and
            self.edges == other.edges)

  def __ne__(self, other):
    return not self.__eq__(other)

  def __lt__(self, other):
    return self.SortKey() < other.SortKey()

  def __hash__(self):
    return hash((self.base, self.edges))

  def __str__(self):
    if not self.edges:
      return EPSILON_PREFIX + self.base
    return ' '.join(self.edges)

  def __repr__(self):
    return 'PathWord(%r, %r, %r)' % (self.base, self.edges, self.target)


def EmptyPath(vertex):
  return PathWord(vertex)


def ArrowPath(q, arrow_id):
  """Returns the length 1 path of an arrow of q."""
  arrow = q.Arrow(arrow_id)
  return PathWord(arrow.source, (arrow.id,), arrow.target)


def MakePath(q, base, edges):
  """Builds a validated path of q.

  Args:
    q: Quiver.
    base: vertex id; must be the source of the first edge if there is one.
    edges: list of arrow ids.

  Returns:
    A PathWord.

  Raises:
    UnknownVertexError: base is not a vertex of q.
    UnknownArrowError: an edge is not an arrow of q.
    BaseMismatchError: base is not the source of the first edge.
    NonComposableError: edges[i-1] does not end where edges[i] starts; the
      exception carries i.
  """
  if not q.HasVertex(base):
    raise UnknownVertexError('unknown vertex %s' % base)
  edges = tuple(edges)
  target = base
  for index, arrow_id in enumerate(edges):
    arrow = q.Arrow(arrow_id)
    if arrow.source != target:
      if index == 0:
        raise BaseMismatchError('base %s is not the source %s of %s' % (
            base, arrow.source, arrow_id))
      raise NonComposableError(
          'non-composable at index %d: %s ends at %s but %s starts at %s' % (
              index, edges[index - 1], target, arrow_id, arrow.source), index)
    target = arrow.target
  return PathWord(base, edges, target)


def PathFromEdges(q, edges):
  """Builds a validated nonempty path, taking its base from the first edge."""
  edges = tuple(edges)
  if not edges:
    raise PathError('an empty path needs an explicit base vertex')
  return MakePath(q, q.Source(edges[0]), edges)


def Concat(p, q):
  """Concatenates two paths; empty paths act as identities.

  Raises:
    ConcatError: the target of p is not the base of q.
  """
  if p.target != q.base:
    raise ConcatError('cannot append %s (from %s) to %s (ending at %s)' % (
        q, q.base, p, p.target))
  return PathWord(p.base, p.edges + q.edges, q.target)


def EnumeratePaths(q, source=None, length=0):
  """Lists all paths of q of a given length.

  Args:
    q: Quiver.
    source: optional vertex id; only paths starting there are listed.
    length: nonnegative integer.

  Returns:
    A sorted list of PathWord.

  Raises:
    ValueError: length is negative.
  """
  if length < 0:
    raise ValueError('path length must be nonnegative, got %d' % length)
  if source is None:
    bases = q.vertices
  else:
    if not q.HasVertex(source):
      raise UnknownVertexError('unknown vertex %s' % source)
    bases = (source,)
  paths = [PathWord(v) for v in bases]
  for _ in range(length):
    longer = []
    for path in paths:
      for arrow_id in q.OutArrows(path.target):
        longer.append(PathWord(path.base, path.edges + (arrow_id,),
                               q.Target(arrow_id)))
    paths = longer
  return sorted(paths)
