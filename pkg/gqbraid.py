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

"""Command line front end for braided quivers and their structure categories.

  gqbraid.py example z3 | gqbraid.py validate -
  gqbraid.py example pres1 > pres1.json
  gqbraid.py equal pres1.json '[1,2] [2,1]' '[1,3] [3,1]'

Exit codes: 0 on success, 1 when a checked property fails, 2 on usage or
input errors.
"""

import argparse
import json
import logging
import sys

from lib import catalog
from lib import converse
from lib import document
from lib import garside
from lib import groupoid
from lib import heap
from lib import pathexpr
from lib import quiver
from lib import rcsystem
from lib import settings
from lib import validator
from lib import yangbaxter

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Raised when the input is well formed but lacks a property a command needs.
_PROPERTY_ERRORS = (
    converse.ConditionsFailedError,
    heap.NotAHeapError,
    heap.TernaryConditionError,
    rcsystem.RefusedError,
    rcsystem.CompletionError,
)

_LIBRARY_ERRORS = (
    catalog.Error,
    converse.Error,
    document.Error,
    garside.Error,
    groupoid.Error,
    heap.Error,
    pathexpr.Error,
    quiver.Error,
    rcsystem.Error,
    settings.Error,
    validator.Error,
    yangbaxter.Error,
)


class Error(Exception):
  """Base error class."""


class InputError(Error):
  """A document argument cannot be read."""


class _Context(object):
  """Streams and settings shared by the command handlers."""

  def __init__(self, args, config, stdin, stdout, stderr):
    self.args = args
    self.settings = config
    self.stdin = stdin
    self.stdout = stdout
    self.stderr = stderr

  def Emit(self, text, data):
    """Writes the human readable text, or data as JSON with --json."""
    if self.args.json:
      self.stdout.write(json.dumps(data, sort_keys=True, indent=2) + '\n')
    else:
      self.stdout.write(text + '\n')

  def ReadDocument(self, path):
    try:
      if path == '-':
        text = self.stdin.read()
      else:
        with open(path, encoding='utf-8') as doc_file:
          text = doc_file.read()
    except IOError as e:
      raise InputError('Unable to open %s: %s' % (path, e))
    except UnicodeDecodeError as e:
      raise InputError('%s is not UTF-8: %s' % (
          'stdin' if path == '-' else path, e))
    return document.Parse(text)

  def WriteDocument(self, doc, path):
    text = document.Serialize(doc)
    if path in (None, '-'):
      self.stdout.write(text)
      return
    try:
      with open(path, 'w', encoding='utf-8') as doc_file:
        doc_file.write(text)
    except IOError as e:
      raise InputError('Unable to write %s: %s' % (path, e))
    logging.info('wrote %s document to %s', doc.kind, path)

  def Solution(self, path):
    """Reads any document that determines a braided quiver."""
    doc = self.ReadDocument(path)
    if doc.kind == document.SOLUTION:
      return document.ToSolution(doc)
    if doc.kind == document.PRESENTATION:
      return converse.ExtractSolution(document.ToPresentation(doc))
    if doc.kind == document.HEAP:
      return heap.SolutionFromTernary(document.ToTernaryOp(doc))
    if doc.kind == document.GROUP:
      group = document.ToGroup(doc, self.settings.group_order_bound)
      return heap.SolutionFromTernary(heap.HeapFromGroup(group))
    raise document.KindMismatchError('a %s document does not determine a '
                                     'solution' % doc.kind)

  def Category(self, path):
    return garside.StructureCategory(self.Solution(path),
                                     self.settings.bfs_cap)


def _ReportsExit(reports):
  return EXIT_OK if all(r.IsEmpty() for r in reports) else EXIT_FAILED


def _EmitReports(ctx, reports):
  ctx.Emit('\n'.join(str(r) for r in reports),
           {'reports': [r.AsDict() for r in reports]})
  return _ReportsExit(reports)


def DoValidate(ctx):
  s = ctx.Solution(ctx.args.document)
  return _EmitReports(ctx, yangbaxter.Validate(s, ctx.settings.max_violations))


def _TableText(system):
  lines = ['%s system, %d entries%s' % (system.kind, len(system.Table()),
                                        ', completed' if system.completed
                                        else '')]
  for (x, y), z in system.Table():
    lines.append('  %s %s %s = %s' % (x, system.symbol, y, z))
  return '\n'.join(lines)


def _TableData(system):
  return {'kind': system.kind, 'completed': system.completed,
          'table': [{'in': [x, y], 'out': z} for (x, y), z in system.Table()]}


def DoDeriveRc(ctx):
  s = ctx.Solution(ctx.args.document)
  if ctx.args.co:
    system = rcsystem.DeriveBullet(s)
  else:
    system = rcsystem.DeriveStar(s)
  if ctx.args.complete:
    system = rcsystem.Complete(system)
  ctx.Emit(_TableText(system), _TableData(system))
  return EXIT_OK


def DoGrid(ctx):
  c = ctx.Category(ctx.args.document)
  p = pathexpr.ToPath(c.quiver, ctx.args.p)
  q = pathexpr.ToPath(c.quiver, ctx.args.q)
  if ctx.args.bullet:
    first, second = rcsystem.GridBullet(c.bullet_hat, p, q)
    names = ('p.q', 'q.p')
  else:
    first, second = rcsystem.GridStar(c.star_hat, p, q)
    names = ('p*q', 'q*p')
  lines = []
  data = {}
  for name, path in zip(names, (first, second)):
    stripped = rcsystem.StripUnits(path)
    lines.append('%s = %s  (without units: %s)' % (name, path, stripped))
    data[name] = {'path': list(path.edges), 'stripped': list(stripped.edges),
                  'base': path.base}
  ctx.Emit('\n'.join(lines), data)
  return EXIT_OK


def _EntryData(entry):
  return {'atomset': list(entry.atomset), 'path': list(entry.path.edges),
          'source': entry.source, 'target': entry.target,
          'length': entry.length}


def DoGarsideFamily(ctx):
  c = ctx.Category(ctx.args.document)
  family = c.GarsideFamily()
  lines = []
  for entry in family:
    lines.append('%-24s %-32s %d' % ('{%s}' % ', '.join(entry.atomset),
                                     entry.path, entry.length))
  identities = len([e for e in family if not e.atomset])
  longest = max(e.length for e in family) if family else 0
  lines.append('%d entries (%d identities), longest %d, out-degree bound %d' %
               (len(family), identities, longest, c.quiver.MaxOutDegree()))
  ctx.Emit('\n'.join(lines), {'entries': [_EntryData(e) for e in family],
                              'count': len(family)})
  return EXIT_OK


def _ElementText(element):
  if not element.entries:
    return '1_%s (length 0)' % element.source
  lines = ['length %d, %d normal form entries' % (element.length,
                                                   len(element.entries))]
  for entry in element.entries:
    lines.append('  [%s]  {%s}' % (entry.path, ', '.join(entry.atomset)))
  return '\n'.join(lines)


def _ElementData(element):
  return {'source': element.source, 'target': element.target,
          'length': element.length,
          'normal_form': [_EntryData(e) for e in element.entries]}


def DoNormalForm(ctx):
  c = ctx.Category(ctx.args.document)
  element = c.NormalForm(pathexpr.ToPath(c.quiver, ctx.args.path))
  ctx.Emit(_ElementText(element), _ElementData(element))
  return EXIT_OK


def DoEqual(ctx):
  c = ctx.Category(ctx.args.document)
  if ctx.args.groupoid:
    g = groupoid.StructureGroupoid(c)
    words = [pathexpr.ParseWord(w) for w in (ctx.args.p, ctx.args.q)]
    a, b = [g.FromWord(w.letters, w.base) for w in words]
    equal = g.Equal(a, b)
  else:
    p = pathexpr.ToPath(c.quiver, ctx.args.p)
    q = pathexpr.ToPath(c.quiver, ctx.args.q)
    equal = c.Equal(p, q)
  ctx.Emit('equal' if equal else 'not equal', {'equal': equal})
  return EXIT_OK if equal else EXIT_FAILED


def DoLcm(ctx):
  c = ctx.Category(ctx.args.document)
  p = pathexpr.ToPath(c.quiver, ctx.args.p)
  q = pathexpr.ToPath(c.quiver, ctx.args.q)
  if ctx.args.left:
    lcm = c.LeftLcmOf(p, q)
    complements = (c.LeftComplementPath(p, q), c.LeftComplementPath(q, p))
  else:
    lcm = c.RightLcm(p, q)
    complements = (c.RightComplementPath(p, q), c.RightComplementPath(q, p))
  side = 'left' if ctx.args.left else 'right'
  text = '%s-lcm: %s\n  complement of p: %s\n  complement of q: %s\n%s' % (
      side, lcm.Representative(), complements[0], complements[1],
      _ElementText(lcm))
  ctx.Emit(text, {'side': side, 'lcm': _ElementData(lcm),
                  'complements': [list(x.edges) for x in complements]})
  return EXIT_OK


def DoFromPresentation(ctx):
  p = document.ToPresentation(ctx.ReadDocument(ctx.args.document))
  conditions = converse.CheckConditions(p, ctx.settings.max_violations)
  report_out = ctx.stdout if ctx.args.output else ctx.stderr
  if ctx.args.json:
    report_out.write(json.dumps(conditions.AsDict(), sort_keys=True,
                                indent=2) + '\n')
  else:
    report_out.write(str(conditions) + '\n')
  if not conditions.Passed():
    return EXIT_FAILED
  solution = converse.ExtractSolution(p, conditions)
  roundtrip = converse.RoundtripCheck(p, solution)
  report_out.write('round trip: %s\n' % ('ok' if roundtrip else 'FAILED'))
  ctx.WriteDocument(document.FromSolution(solution), ctx.args.output)
  return EXIT_OK if roundtrip else EXIT_FAILED


def DoFromHeap(ctx):
  t = document.ToTernaryOp(ctx.ReadDocument(ctx.args.document))
  ctx.WriteDocument(document.FromSolution(heap.SolutionFromTernary(t)),
                    ctx.args.output)
  return EXIT_OK


def DoFromGroup(ctx):
  group = document.ToGroup(ctx.ReadDocument(ctx.args.document),
                           ctx.settings.group_order_bound)
  solution = heap.SolutionFromTernary(heap.HeapFromGroup(group))
  ctx.WriteDocument(document.FromSolution(solution), ctx.args.output)
  return EXIT_OK


def DoCheckHeap(ctx):
  t = document.ToTernaryOp(ctx.ReadDocument(ctx.args.document))
  result = heap.CheckHeap(t, ctx.settings.max_violations)
  verdict = 'heap' if result.IsHeap() else 'not a heap'
  ctx.Emit('%s\n%s' % (verdict, result), result.AsDict())
  return EXIT_OK if result.IsHeap() else EXIT_FAILED


def DoExample(ctx):
  doc = catalog.BuiltinExample(ctx.args.name, n=ctx.args.n, k=ctx.args.k)
  ctx.WriteDocument(doc, ctx.args.output)
  return EXIT_OK


def DoOracleCheck(ctx):
  c = ctx.Category(ctx.args.document)
  max_len = ctx.args.max_len
  if max_len is None:
    max_len = ctx.settings.oracle_max_len
  return _EmitReports(ctx, [c.OracleReport(max_len,
                                           ctx.settings.max_violations)])


def DoCheckRc(ctx):
  c = ctx.Category(ctx.args.document)
  cap = ctx.settings.max_violations
  reports = [
      rcsystem.CheckCubeLaw(c.star, cap),
      rcsystem.CheckCubeLaw(c.bullet, cap),
      rcsystem.CheckUnital(c.star_hat, cap),
      rcsystem.CheckUnital(c.bullet_hat, cap),
      rcsystem.CheckCompletedInjectivity(c.star_hat, cap),
      rcsystem.CheckStarIdentity(c.solution, c.star, cap),
      rcsystem.CheckRlcCompatibility(c.star, c.bullet, cap),
      rcsystem.CheckGridCoherence(c.star_hat, ctx.settings.grid_max_len, cap),
      c.SharpCubeReport(cap),
  ]
  return _EmitReports(ctx, reports)


def DoHeapSweep(ctx):
  samples = ctx.args.samples
  if samples is None:
    samples = ctx.settings.sweep_samples
  seed = ctx.args.seed
  if seed is None:
    seed = ctx.settings.sweep_seed
  result = heap.HeapSweep(ctx.args.size, samples, seed,
                          ctx.settings.max_violations)
  text = ('%d tables on %d elements (%s): %d heaps, %d non-heaps giving a '
          'Yang-Baxter map\n%s' % (
              result.tables, result.size,
              'exhaustive' if result.exhaustive else 'sampled, seed %d' % seed,
              result.heaps, result.ybe_non_heaps, result.disagreements))
  ctx.Emit(text, {'size': result.size, 'tables': result.tables,
                  'exhaustive': result.exhaustive, 'heaps': result.heaps,
                  'ybe_non_heaps': result.ybe_non_heaps,
                  'disagreements': result.disagreements.AsDict()})
  return _ReportsExit([result.disagreements])


def _ReportFlags(parser, suppress=False):
  json_default, cap_default = False, None
  if suppress:
    json_default = cap_default = argparse.SUPPRESS
  parser.add_argument('--json', action='store_true', default=json_default,
                      help='machine readable reports')
  parser.add_argument('--max-violations', type=int, dest='max_violations',
                      default=cap_default, help='violations listed per report')


def BuildParser():
  """Returns the argparse parser with one sub-parser per command."""
  parser = argparse.ArgumentParser(
      prog='gqbraid',
      description='Quiver-theoretic Yang-Baxter maps and their Garside '
      'structure.')
  parser.add_argument('--config', help='YAML configuration file (default '
                      './%s if present)' % settings.DEFAULT_CONFIG)
  parser.add_argument('--debug', action='store_true',
                      help='enable debug-level logging')
  _ReportFlags(parser)
  # Accepted after the command too; unset flags keep the global value.
  report_flags = argparse.ArgumentParser(add_help=False)
  _ReportFlags(report_flags, suppress=True)
  commands = parser.add_subparsers(dest='command', metavar='command')
  commands.required = True

  def Command(name, handler, help_text, document_arg=True):
    sub = commands.add_parser(name, help=help_text, parents=[report_flags])
    sub.set_defaults(handler=handler)
    if document_arg:
      sub.add_argument('document', help='input document, - for stdin')
    return sub

  Command('validate', DoValidate, 'check the braid relation, involutivity '
          'and non-degeneracy')
  sub = Command('derive-rc', DoDeriveRc, 'print the star or bullet system')
  sub.add_argument('--complete', action='store_true',
                   help='insert the unit loops')
  sub.add_argument('--co', action='store_true',
                   help='print the bullet system instead of the star system')
  sub = Command('grid', DoGrid, 'complete the grid of two paths')
  side = sub.add_mutually_exclusive_group(required=True)
  side.add_argument('--star', action='store_true',
                    help='star grid on paths with a common source')
  side.add_argument('--bullet', action='store_true',
                    help='bullet grid on paths with a common target')
  sub.add_argument('p')
  sub.add_argument('q')
  Command('garside-family', DoGarsideFamily, 'list the Garside family')
  sub = Command('normal-form', DoNormalForm, 'print the greedy normal form')
  sub.add_argument('path')
  sub = Command('equal', DoEqual, 'decide equality of two paths')
  sub.add_argument('p')
  sub.add_argument('q')
  sub.add_argument('--groupoid', action='store_true',
                   help='compare groupoid words, ~x inverts x')
  sub = Command('lcm', DoLcm, 'compute a right or left lcm')
  side = sub.add_mutually_exclusive_group(required=True)
  side.add_argument('--right', action='store_true')
  side.add_argument('--left', action='store_true')
  sub.add_argument('p')
  sub.add_argument('q')
  for name, handler, help_text in (
      ('from-presentation', DoFromPresentation,
       'check the conditions and extract the solution'),
      ('from-heap', DoFromHeap, 'build the solution of a ternary operation'),
      ('from-group', DoFromGroup, 'build the solution of a group')):
    sub = Command(name, handler, help_text)
    sub.add_argument('-o', '--output', help='solution document to write')
  Command('check-heap', DoCheckHeap, 'check the heap axioms')
  sub = Command('example', DoExample, 'print a built-in example document',
                document_arg=False)
  sub.add_argument('name', choices=catalog.EXAMPLES)
  sub.add_argument('--n', type=int, default=2, help='exponent for z2n')
  sub.add_argument('--k', type=int, default=3, help='order for zk')
  sub.add_argument('-o', '--output', help='document to write')
  sub = Command('oracle-check', DoOracleCheck,
                'compare normal forms with relation classes')
  sub.add_argument('--max-len', type=int, dest='max_len')
  Command('check-rc', DoCheckRc, 'check the RC-calculus identities')
  sub = Command('heap-sweep', DoHeapSweep,
                'compare heaps and pre-braidings over many tables',
                document_arg=False)
  sub.add_argument('--size', type=int, default=2)
  sub.add_argument('--samples', type=int)
  sub.add_argument('--seed', type=int)
  return parser


def Dispatch(argv, stdin=None, stdout=None, stderr=None, environ=None):
  """Runs one command and returns its exit code."""
  stdin = stdin or sys.stdin
  stdout = stdout or sys.stdout
  stderr = stderr or sys.stderr
  parser = BuildParser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as e:
    return e.code
  logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING)
  try:
    config = settings.ReadSettings(args.config, environ, args.max_violations)
    ctx = _Context(args, config, stdin, stdout, stderr)
    return args.handler(ctx)
  except _PROPERTY_ERRORS as e:
    stderr.write('%s: %s\n' % (args.command, e))
    return EXIT_FAILED
  except _LIBRARY_ERRORS + (Error,) as e:
    stderr.write('%s: %s\n' % (args.command, e))
    return EXIT_USAGE


def main():
  sys.exit(Dispatch(sys.argv[1:]))


if __name__ == '__main__':
  main()
