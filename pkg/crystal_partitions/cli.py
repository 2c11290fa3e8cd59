'''
Command line front end.

Payloads (JSON, DOT or text) go to stdout, logs to stderr. Exit status is 0
on success, 1 on a verified mismatch, 2 on a usage error and 3 when a
computation fails.
'''
import argparse
import json
import logging
import os
import sys
import traceback

from crystal_partitions.algebra import ColouredInt
from crystal_partitions.algebra import secondary
from crystal_partitions.verifyservice import BIJECTIONS
from crystal_partitions.verifyservice import MODELS
from crystal_partitions.verifyservice import VerifyService


EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_FAILURE = 3


def parse_k_vector(value):
    try:
        return [int(v) for v in value.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated integers, got %s' % (value))


def parse_part(value):
    '''
    size:x,y with letter ranks x and y
    '''
    try:
        size, letters = value.split(':')
        x, y = letters.split(',')
        return ColouredInt(int(size), secondary(int(x), int(y)))
    except ValueError:
        raise argparse.ArgumentTypeError('expected size:x,y, got %s' % (value))


def build_parser():
    parser = argparse.ArgumentParser(prog='crystal_partitions',
                                     description='Level 1 characters of C_n^(1) as partition generating functions')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    energy = commands.add_parser('verify-energy', help='compare both energy formulas')
    energy.add_argument('--n', type=int, required=True)

    char = commands.add_parser('char', help='truncated character from one partition model')
    char.add_argument('--n', type=int, required=True)
    char.add_argument('--i', type=int, required=True)
    char.add_argument('--model', choices=MODELS, default='rho')
    char.add_argument('--N', type=int, default=None)
    char.add_argument('--format', choices=['json', 'text'], default='json')

    models = commands.add_parser('verify-models', help='equality of all partition models')
    models.add_argument('--n', type=int, required=True)
    models.add_argument('--N', type=int, default=None)

    specialize = commands.add_parser('specialize', help='dilated path model against the product')
    specialize.add_argument('--n', type=int, required=True)
    specialize.add_argument('--i', type=int, required=True)
    specialize.add_argument('--N', type=int, default=None)

    cmpp = commands.add_parser('cmpp-check', help='admissible partitions against the product side')
    cmpp.add_argument('--n', type=int, required=True)
    cmpp.add_argument('--k', type=parse_k_vector, required=True)
    cmpp.add_argument('--N', type=int, default=None)
    cmpp.add_argument('--odd', action='store_true')

    conjecture = commands.add_parser('conjecture-check',
                                     help='frequency condition on Omega against CMPP and the product side')
    conjecture.add_argument('--n', type=int, required=True)
    conjecture.add_argument('--k', type=parse_k_vector, required=True)
    conjecture.add_argument('--N', type=int, default=None)
    conjecture.add_argument('--odd', action='store_true')

    dot = commands.add_parser('crystal-dot', help='crystal graph in DOT format')
    dot.add_argument('--n', type=int, required=True)

    roundtrip = commands.add_parser('roundtrip', help='forward then inverse on all small inputs')
    roundtrip.add_argument('--n', type=int, required=True)
    roundtrip.add_argument('--N', type=int, default=None)
    roundtrip.add_argument('--bijection', choices=BIJECTIONS, required=True)

    paths = commands.add_parser('paths', help='list every path through a part')
    paths.add_argument('--m', type=int, required=True)
    paths.add_argument('--part', type=parse_part, required=True)
    return parser


def dump(payload):
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + '\n')


def series_text(series):
    lines = []
    for (degree, colour), coeff in series.sorted_terms():
        lines.append('%d %s %d' % (degree, ' '.join(str(v) for v in colour), coeff))
    return '\n'.join(lines) + '\n'


def dispatch(service, args):
    if args.command == 'verify-energy':
        report = service.verify_energy(args.n)
        dump(report)
        return EXIT_OK if report['mismatches'] == 0 and report['class_mismatches'] == 0 else EXIT_MISMATCH
    if args.command == 'char':
        series = service.character(args.model, args.n, args.i, args.N if args.N is not None else service.truncation)
        if args.format == 'json':
            dump(series.to_json())
        else:
            sys.stdout.write(series_text(series))
        return EXIT_OK
    if args.command == 'verify-models':
        report = service.verify_models(args.n, args.N if args.N is not None else service.truncation)
        dump(report)
        return EXIT_OK if report['status'] == 'ok' else EXIT_MISMATCH
    if args.command == 'specialize':
        truncation = args.N if args.N is not None else service.specialisation_truncation
        report = service.specialize(args.n, args.i, truncation)
        dump(report)
        return EXIT_OK if report['status'] == 'success' else EXIT_MISMATCH
    if args.command == 'cmpp-check':
        report = service.cmpp_check(args.n, args.k, args.N if args.N is not None else service.truncation, args.odd)
        dump(report)
        return EXIT_MISMATCH if report['status'] == 'mismatch' else EXIT_OK
    if args.command == 'conjecture-check':
        truncation = args.N if args.N is not None else service.truncation
        report = service.conjecture_check(args.n, args.k, truncation, args.odd)
        dump(report)
        return EXIT_MISMATCH if report['status'] == 'mismatch' else EXIT_OK
    if args.command == 'crystal-dot':
        sys.stdout.write(service.crystal_dot(args.n))
        return EXIT_OK
    if args.command == 'roundtrip':
        report = service.roundtrip(args.n, args.N if args.N is not None else service.truncation, args.bijection)
        dump(report)
        return EXIT_OK if report['failures'] == 0 else EXIT_MISMATCH
    if args.command == 'paths':
        dump(service.paths(args.m, args.part))
        return EXIT_OK
    raise ValueError('Cli:Command:%s:unknown command' % (args.command))


def main(argv=None, config_file=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    if config_file is None:
        config_file = os.environ.get('CRYSTAL_PARTITIONS_CONFIG', 'config.yml')
    try:
        service = VerifyService(config_file)
        return dispatch(service, args)
    except ValueError as e:
        sys.stderr.write('Error: %s\n' % (str(e)))
        return EXIT_USAGE
    except RuntimeError as e:
        logging.error('Computation failed: %s' % (str(e)))
        traceback.print_exc()
        return EXIT_FAILURE
