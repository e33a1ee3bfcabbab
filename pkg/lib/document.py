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

"""JSON documents for quivers, solutions, presentations, heaps and groups.

Every document is an object with a "kind", a "format_version" and the fields
of its kind:

  quiver        vertices, arrows [{id, source, target}]
  solution      quiver fields plus sigma [{in: [x, y], out: [u, v]}]
  presentation  quiver fields plus relations [[[a, v], [b, w]]]
  heap          elements, op [[[a, b, c], d]]
  group         elements, mul (rows in element order), unit

Serialize() writes the canonical form: sorted keys, two space indent and
every list sorted by id, so that equal values serialize to equal bytes.
"""

import json

from lib import converse
from lib import heap
from lib import quiver
from lib import validator
from lib import yangbaxter

FORMAT_VERSION = 1

QUIVER = 'quiver'
SOLUTION = 'solution'
PRESENTATION = 'presentation'
HEAP = 'heap'
GROUP = 'group'
KINDS = (QUIVER, SOLUTION, PRESENTATION, HEAP, GROUP)

_QUIVER_SCHEMA = {
    'vertices': [''],
    'arrows': [{'id': '', 'source': '', 'target': ''}],
}

SCHEMAS = {
    QUIVER: _QUIVER_SCHEMA,
    SOLUTION: dict(_QUIVER_SCHEMA, sigma=[{'in': [''], 'out': ['']}]),
    PRESENTATION: dict(_QUIVER_SCHEMA, relations=[[['']]]),
    HEAP: {'elements': [''], 'op': [[]]},
    GROUP: {'elements': [''], 'mul': [['']], 'unit': ''},
}


class Error(Exception):
  """Base error class."""


class DocumentSyntaxError(Error):
  """The text is not JSON."""

  def __init__(self, message, line=0, column=0):
    Error.__init__(self, message)
    self.line = line
    self.column = column


class UnknownKindError(Error):
  """The document kind or format version is not supported."""


class SchemaError(Error):
  """The document does not follow the schema of its kind."""

  def __init__(self, message, path=''):
    Error.__init__(self, message)
    self.path = path


class KindMismatchError(Error):
  """The document has the wrong kind for the requested conversion."""


class Document(object):
  """A parsed document.

  Args:
    kind: one of KINDS.
    payload: dict with the fields of the kind.
    format_version: integer.
  """

  def __init__(self, kind, payload, format_version=FORMAT_VERSION):
    self.kind = kind
    self.payload = payload
    self.format_version = format_version

  def __eq__(self, other):
    return (isinstance(other, Document) and self.kind == other.kind and
            self.format_version == other.format_version and
            _Canonical(self.kind, self.payload) ==
            _Canonical(other.kind, other.payload))

  def __ne__(self, other):
    return not self.__eq__(other)

  def __repr__(self):
    return 'Document(%r)' % self.kind


def _CheckLength(items, length, path):
  for i, item in enumerate(items):
    if len(item) != length:
      raise SchemaError('"%s[%d]" must have %d entries, got %d' % (
          path, i, length, len(item)), '%s[%d]' % (path, i))


def _CheckPayload(kind, payload):
  try:
    validator.StructureValidator().CheckStructure(payload, SCHEMAS[kind])
  except validator.StructureError as e:
    raise SchemaError(str(e), e.path)
  if kind == SOLUTION:
    for i, entry in enumerate(payload['sigma']):
      _CheckLength([entry['in'], entry['out']], 2, 'sigma[%d].in/out' % i)
  elif kind == PRESENTATION:
    _CheckLength(payload['relations'], 2, 'relations')
  elif kind == HEAP:
    for i, entry in enumerate(payload['op']):
      path = 'op[%d]' % i
      if (len(entry) != 2 or not isinstance(entry[0], list) or
          len(entry[0]) != 3 or
          not all(isinstance(x, str) for x in entry[0] + [entry[1]])):
        raise SchemaError('"%s" must be [[a, b, c], d] with string entries' %
                          path, path)
  elif kind == GROUP:
    size = len(payload['elements'])
    if len(payload['mul']) != size:
      raise SchemaError('"mul" must have %d rows' % size, 'mul')
    _CheckLength(payload['mul'], size, 'mul')


def Parse(text):
  """Parses and validates a document.

  Args:
    text: the document as a string.

  Returns:
    Document.

  Raises:
    DocumentSyntaxError: the text is not JSON; carries line and column.
    UnknownKindError: the kind or format version is not supported.
    SchemaError: a field is missing or has the wrong type; carries the path.
  """
  try:
    data = json.loads(text)
  except ValueError as e:
    raise DocumentSyntaxError('invalid JSON: %s' % e, getattr(e, 'lineno', 0),
                              getattr(e, 'colno', 0))
  if not isinstance(data, dict):
    raise SchemaError('a document must be a JSON object', '')
  kind = data.pop('kind', None)
  if kind not in KINDS:
    raise UnknownKindError('unknown document kind %r, expected one of %s' % (
        kind, ', '.join(KINDS)))
  version = data.pop('format_version', None)
  if version != FORMAT_VERSION:
    raise UnknownKindError('unsupported format_version %r' % version)
  _CheckPayload(kind, data)
  return Document(kind, data, version)


def _Canonical(kind, payload):
  result = dict(payload)
  if 'vertices' in result:
    result['vertices'] = sorted(result['vertices'])
    result['arrows'] = sorted(result['arrows'], key=lambda a: a['id'])
  if 'sigma' in result:
    result['sigma'] = sorted(result['sigma'], key=lambda e: e['in'])
  if 'relations' in result:
    result['relations'] = sorted(sorted(r) for r in result['relations'])
  if kind == HEAP:
    result['elements'] = sorted(result['elements'])
    result['op'] = sorted(result['op'])
  if kind == GROUP:
    order = sorted(range(len(result['elements'])),
                   key=lambda i: result['elements'][i])
    result['elements'] = [result['elements'][i] for i in order]
    result['mul'] = [[result['mul'][i][j] for j in order] for i in order]
  return result


def Serialize(doc):
  """Returns the canonical JSON text of a document."""
  data = _Canonical(doc.kind, doc.payload)
  data['kind'] = doc.kind
  data['format_version'] = doc.format_version
  return json.dumps(data, sort_keys=True, indent=2) + '\n'


def _Expect(doc, *kinds):
  if doc.kind not in kinds:
    raise KindMismatchError('expected a %s document, got %s' % (
        ' or '.join(kinds), doc.kind))


def ToQuiver(doc):
  """Builds the quiver of a quiver, solution or presentation document."""
  _Expect(doc, QUIVER, SOLUTION, PRESENTATION)
  return quiver.BuildQuiver(doc.payload['vertices'], doc.payload['arrows'])


def ToSolution(doc):
  _Expect(doc, SOLUTION)
  table = [(tuple(e['in']), tuple(e['out'])) for e in doc.payload['sigma']]
  return yangbaxter.BuildSolution(ToQuiver(doc), table)


def ToPresentation(doc):
  _Expect(doc, PRESENTATION)
  return converse.BuildPresentation(ToQuiver(doc), doc.payload['relations'])


def ToTernaryOp(doc):
  _Expect(doc, HEAP)
  return heap.BuildTernaryOp(doc.payload['elements'],
                             [(tuple(t), v) for t, v in doc.payload['op']])


def ToGroup(doc, order_bound=heap.DEFAULT_GROUP_ORDER_BOUND):
  _Expect(doc, GROUP)
  return heap.BuildGroup(doc.payload['elements'], doc.payload['mul'],
                         doc.payload['unit'], order_bound)


def _QuiverPayload(q):
  return {'vertices': list(q.vertices),
          'arrows': [{'id': a.id, 'source': a.source, 'target': a.target}
                     for a in q.Arrows()]}


def FromQuiver(q):
  return Document(QUIVER, _QuiverPayload(q))


def FromSolution(s):
  payload = _QuiverPayload(s.quiver)
  payload['sigma'] = [{'in': list(pair), 'out': list(image)}
                      for pair, image in s.Table()]
  return Document(SOLUTION, payload)


def FromPresentation(p):
  payload = _QuiverPayload(p.quiver)
  payload['relations'] = [[list(lhs), list(rhs)] for lhs, rhs in p.relations]
  return Document(PRESENTATION, payload)


def FromTernaryOp(t):
  return Document(HEAP, {'elements': list(t.elements),
                         'op': [[list(triple), value]
                                for triple, value in t.Table()]})


def FromGroup(g):
  return Document(GROUP, {'elements': list(g.elements), 'mul': g.Matrix(),
                          'unit': g.unit})
