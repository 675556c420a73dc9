# -*- coding: utf-8 -*-

"""Command line interface: ``pconsistency`` / ``python -m pconsistency``.

Exit codes are 0 for a consistent base, an entailed query or a successful
evaluation; 1 for an inconsistent base or a query that is not entailed;
2 for malformed input and contract violations.
"""

import argparse
import json
import logging
import sys

from pconsistency import __version__
from pconsistency.errors import PConsistencyError
from pconsistency.reasoning.consistency import check_consistency, minimize_core
from pconsistency.reasoning.entailment import entail
from pconsistency.reasoning.kb import KnowledgeBase, parse_conditional
from pconsistency.reasoning.semantics import (ProbabilityModel, build_witness_model,
                                              conditional_probability, format_rational,
                                              probabilities)
from pconsistency.session import PROBES, Session

__all__ = [
  'build_parser',
  'main',
]

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def build_parser():
  parser = argparse.ArgumentParser(
    prog='pconsistency',
    description='Decide p-consistency and p-entailment of conditional knowledge bases.')
  parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
  parser.add_argument('-v', '--verbose', action='count', default=0,
                      help='log verdicts (-v) or every reasoning step (-vv) to stderr')
  parser.add_argument('--reverse-scan', action='store_true',
                      help='scan defeasible candidates in descending id order')
  parser.add_argument('--probe', choices=PROBES, default='antecedent',
                      help='auxiliary sentence of the substantive-inconsistency test')
  commands = parser.add_subparsers(dest='command', metavar='COMMAND')
  commands.required = True

  check = commands.add_parser('check', help='decide p-consistency of a knowledge base')
  check.add_argument('kbfile')
  check.add_argument('--minimize', action='store_true',
                     help='shrink the reported core to an inconsistency-minimal set')
  check.add_argument('--json', action='store_true', help='JSON output')
  check.set_defaults(run=_run_check)

  query = commands.add_parser('entail', help='decide (strict) p-entailment of a conditional')
  query.add_argument('kbfile')
  query.add_argument('query', help='"phi -> psi" (defeasible) or "phi => psi" (strict)')
  query.add_argument('--json', action='store_true', help='JSON output')
  query.set_defaults(run=_run_entail)

  witness = commands.add_parser('witness', help='build a probability model for a consistent base')
  witness.add_argument('kbfile')
  witness.add_argument('--epsilon', required=True, help='rational in (0, 1), e.g. 1/10')
  witness.add_argument('--json', action='store_true', help='JSON output')
  witness.add_argument('-o', '--output', metavar='MODELFILE', help='write the model as JSON')
  witness.set_defaults(run=_run_witness)

  evaluate = commands.add_parser('eval', help='probability of a conditional in a model file')
  evaluate.add_argument('modelfile')
  evaluate.add_argument('query')
  evaluate.add_argument('--json', action='store_true', help='JSON output')
  evaluate.set_defaults(run=_run_eval)
  return parser


def _configure_logging(verbosity):
  level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
  logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
  logging.getLogger('pconsistency').setLevel(level)


def _emit(out, payload):
  out.write(json.dumps(payload, indent=2) + '\n')


def _describe_core(out, kb, core):
  for id in sorted(core):
    out.write(f'  ({id}) {kb[id]}\n')


def _run_check(args, session, out):
  kb = KnowledgeBase.load(args.kbfile)
  verdict = check_consistency(kb, session)
  payload = verdict.to_json()
  if not verdict.consistent and args.minimize:
    payload['core'] = sorted(minimize_core(kb, verdict.core, session))
  if args.json:
    _emit(out, payload)
  elif verdict.consistent:
    order = ' '.join(str(id) for id, _ in verdict.removals)
    out.write('Consistent\n')
    out.write(f'removal order: {order or "-"}\n')
  else:
    out.write(f'Inconsistent ({verdict.phase.value})\n')
    out.write('minimal core:\n' if args.minimize else 'core:\n')
    _describe_core(out, kb, payload['core'])
  return 0 if verdict.consistent else 1


def _run_entail(args, session, out):
  kb = KnowledgeBase.load(args.kbfile)
  query = parse_conditional(args.query)
  verdict = entail(kb, query, session)
  if args.json:
    _emit(out, verdict.to_json())
  else:
    out.write(f'{verdict.status.value}: {query}\n')
  return 0 if verdict.entailed else 1


def _witness_payload(verdict, model=None, values=None):
  payload = verdict.to_json()
  payload['model'] = None if model is None else model.to_json()
  payload['probabilities'] = {}
  # the id prefix keeps sentences with equal text apart
  for x in verdict.kb if values is not None else ():
    payload['probabilities'][f'({x.id}) {x}'] = format_rational(values[x.id])
  return payload


def _run_witness(args, session, out):
  kb = KnowledgeBase.load(args.kbfile)
  verdict = check_consistency(kb, session)
  if not verdict.consistent:
    if args.json:
      _emit(out, _witness_payload(verdict))
    else:
      out.write(f'Inconsistent ({verdict.phase.value}); no witness model\ncore:\n')
      _describe_core(out, kb, verdict.core)
    return 1

  model = build_witness_model(verdict, args.epsilon)
  values = probabilities(model, kb)
  if args.output:
    with open(args.output, 'w', encoding='utf-8') as f:
      f.write(model.dumps() + '\n')
    logger.info('model written to %s', args.output)
  if args.json:
    _emit(out, _witness_payload(verdict, model, values))
  else:
    out.write('Consistent\nmodel:\n')
    for t, w in model:
      bits = ' '.join(f'{v}={t[v]}' for v in sorted(model.universe))
      out.write(f'  {format_rational(w):>12}  {bits}\n')
    out.write('probabilities:\n')
    for x in kb:
      out.write(f'  ({x.id}) {x}  {format_rational(values[x.id])}\n')
  return 0


def _run_eval(args, session, out):
  model = ProbabilityModel.load(args.modelfile)
  query = parse_conditional(args.query)
  value = conditional_probability(model, query)
  if args.json:
    _emit(out, {'query': str(query), 'probability': format_rational(value)})
  else:
    out.write(f'{format_rational(value)}\n')
  return 0


def main(argv=None, out=None):
  """Run the command line and return its exit code."""
  out = sys.stdout if out is None else out
  args = build_parser().parse_args(argv)
  _configure_logging(args.verbose)
  try:
    session = Session(reverse_scan=args.reverse_scan, probe=args.probe)
    return args.run(args, session, out)
  except (PConsistencyError, OSError) as e:
    sys.stderr.write(f'pconsistency: error: {e}\n')
    return 2
