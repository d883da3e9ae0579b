"""
matreg: matroids, arboricity and the regularity of symbolic powers of
matroid ideals from the command line.

    python3 main.py analyze square.mat
    python3 main.py verify --suite regsym --exhaustive-n 4 --t 1..3
    python3 main.py reg square.mat --t 11 --method takayama
"""
from __future__ import print_function

import argparse
import itertools
import sys

import utils
from utils import MatregError
import matroid_core
import arboricity
import simplicial
import ideal_kernel
import regularity
import families_enum
import formats
import verify

DEFAULT_T_MAX = 3
DEFAULT_PRIME = 2

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2

FAMILY_KINDS = {
    'uniform': families_enum.UNIFORM,
    'graphic': families_enum.GRAPHIC,
    'cographic': families_enum.COGRAPHIC,
    'directsum': families_enum.DIRECT_SUM,
}


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('expected a positive integer, got %s' % text)
    return value


def parse_args(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    # Reporting
    common.add_argument('--log', type=str, default=None,
                        help='also write the report to this file')
    common.add_argument('--tsv', action='store_true', default=False,
                        help='tab-separated report rows')
    common.add_argument('--quiet', action='store_true', default=False,
                        help='no progress bar')
    # Search limits
    common.add_argument('--p', type=str, default=str(DEFAULT_PRIME),
                        help='prime(s) for homology, e.g. <2> or <2,3>')
    common.add_argument('--budget', type=int, default=None,
                        help='homology evaluations per search (default $%s or %d)'
                             % (utils.BUDGET_ENV, utils.DEFAULT_BUDGET))
    common.add_argument('--slack', type=int, default=None,
                        help='degrees searched above c(M)(t-1), default c(M)')

    parser = argparse.ArgumentParser(prog='matreg')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('analyze', parents=[common], help='summary of one matroid')
    p.add_argument('path', type=str)
    p.add_argument('--t_max', type=positive_int, default=DEFAULT_T_MAX,
                   help='regularity rows for t = 1..t_max')

    p = sub.add_parser('verify', parents=[common], help='run a verification suite')
    p.add_argument('--suite', type=str, required=True, help='one of %s' % ', '.join(verify.SUITES))
    # Instances
    p.add_argument('--exhaustive-n', dest='exhaustive_n', type=int, default=None,
                   help='all labeled matroids on n <= N elements')
    p.add_argument('--family', type=str, default='uniform',
                   help='comma separated: uniform, graphic, cographic, directsum')
    p.add_argument('--catalog', type=str, default=None,
                   help='HDF5 catalog, .mat file or folder of .mat files')
    p.add_argument('--k', type=str, default='1..3', help='uniform ranks')
    p.add_argument('--n', type=str, default='2..5', help='uniform ground set sizes')
    p.add_argument('--max_vertices', type=int, default=5)
    p.add_argument('--max_edges', type=int, default=8)
    p.add_argument('--simple', action='store_true', default=False,
                   help='leave out the parallel-edge graphs')
    # Claims
    p.add_argument('--t', type=str, default='1..%d' % DEFAULT_T_MAX)
    p.add_argument('--samples', type=int, default=500,
                   help='random trials for degree_lemmas')
    p.add_argument('--seed', type=int, default=1234,
                   help='random seed')
    p.add_argument('--workers', type=int, default=1,
                   help='worker processes, 1 runs inline')

    p = sub.add_parser('reg', parents=[common], help='regularity of I^(t)')
    p.add_argument('path', type=str)
    p.add_argument('--t', type=positive_int, default=1)
    p.add_argument('--method', type=str, default='all',
                   choices=list(regularity.METHODS) + ['all'])

    p = sub.add_parser('homology', parents=[common], help='reduced homology of a complex')
    p.add_argument('path', type=str)

    p = sub.add_parser('ideal', parents=[common], help='symbolic powers and degree complexes')
    p.add_argument('path', type=str)
    p.add_argument('--t', type=positive_int, default=1)
    p.add_argument('--emit', type=str, default='generators',
                   choices=['generators', 'stanley-reisner', 'degree-complex', 'betti'])
    p.add_argument('--a', type=str, default=None,
                   help='degree vector for degree-complex, e.g. <1,8,3,2>')

    p = sub.add_parser('arbor', parents=[common], help='arboricity of a matroid or graph')
    p.add_argument('path', type=str)

    p = sub.add_parser('enumerate', parents=[common], help='all labeled matroids on [n]')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--emit', type=str, default='count', choices=['count', 'files', 'catalog'])
    p.add_argument('--out', type=str, default=None)

    # Return args
    args = parser.parse_args(argv)
    args.primes = tuple(utils.parse_range(args.p))
    return args


def _table(logger, rows, tsv):
    for row in rows:
        if tsv:
            logger.write('\t'.join(str(v) for v in row))
        else:
            logger.write(' '.join(str(v) for v in row))


def _undefined(fn, *args):
    try:
        return fn(*args)
    except MatregError as e:
        return 'undefined (%s)' % type(e).__name__


# --------------------commands---------------------------
def cmd_analyze(args, logger):
    m = formats.load_matroid(args.path)
    circuits = matroid_core.circuits(m)
    c = matroid_core.circumference(m)
    core = matroid_core.core(m)
    a = _undefined(lambda: arboricity.arboricity_exact(m)[0])
    edmonds = _undefined(lambda: arboricity.arboricity_edmonds(m)[0])
    gamma = _undefined(lambda: arboricity.gamma(m)[0])
    rows = [('id', m.canonical_id()),
            ('n', m.n),
            ('rank', m.rank),
            ('bases', len(m.bases)),
            ('circuits', utils.format_family(circuits)),
            ('circumference', c if c is not None else 'none'),
            ('star_centers', utils.format_subset(matroid_core.star_centers(m))),
            ('loops', utils.format_subset(m.loops())),
            ('core_size', core.n),
            ('dual_rank', m.n - m.rank),
            ('arboricity', a),
            ('arboricity_edmonds', edmonds),
            ('gamma', gamma)]
    if c is not None:
        for t in range(1, args.t_max + 1):
            rows.append(('reg_t%d' % t, regularity.reg_formula(m, t)))
    _table(logger, rows, args.tsv)
    return EXIT_OK


def _family_spec(args):
    if args.catalog:
        return [families_enum.FamilySpec(families_enum.FROM_FILE, path=args.catalog)]
    if args.exhaustive_n is not None:
        return [families_enum.FamilySpec(families_enum.EXHAUSTIVE,
                                         n_range=tuple(range(1, args.exhaustive_n + 1)))]
    specs = []
    for name in args.family.split(','):
        name = name.strip().lower()
        if name not in FAMILY_KINDS:
            raise families_enum.InvalidFamilySpec('unknown family %r' % name)
        specs.append(families_enum.FamilySpec(FAMILY_KINDS[name],
                                              k_range=tuple(utils.parse_range(args.k)),
                                              n_range=tuple(utils.parse_range(args.n)),
                                              max_vertices=args.max_vertices,
                                              max_edges=args.max_edges,
                                              simple_only=args.simple))
    return specs


def cmd_verify(args, logger):
    verify.suite_function(args.suite)
    options = verify.SuiteOptions(t_range=tuple(utils.parse_range(args.t)), primes=args.primes,
                                  samples=args.samples, seed=args.seed, budget=args.budget,
                                  slack=args.slack)
    specs = _family_spec(args)
    if args.suite in verify.TRIAL_SUITES:
        matroids = list(itertools.chain.from_iterable(families_enum.generate(s) for s in specs))
        instances = verify.make_trials(matroids, options)
    else:
        instances = list(itertools.chain.from_iterable(
            verify.instances_for(args.suite, s, options) for s in specs))
    logger.write('suite %s: %d instances' % (args.suite, len(instances)))
    result = verify.run_suite(args.suite, instances, options, logger, args.workers, args.quiet)
    if args.tsv:
        for r in result.records:
            if r.claim == 'arbor':
                logger.write(arboricity.tsv_row(r))
            else:
                logger.write('\t'.join(str(v) for v in (r.instance, r.claim, int(r.passed),
                                                        r.expected(), r.observed())))
    for finding in result.findings:
        logger.write('FINDING\t' + '\t'.join(str(v) for v in finding))
    for claim, (total, equal) in sorted(result.claim_counts().items()):
        logger.write('claim %s: %d records, %d at equality' % (claim, total, equal))
    logger.write('%s: %d/%d passed, %d findings, %d at equality' % (
        args.suite, result.passed, result.instances, len(result.findings), result.equalities))
    return EXIT_OK if result.ok else EXIT_FINDINGS


def cmd_reg(args, logger):
    m = formats.load_matroid(args.path)
    if args.method == 'all':
        methods = regularity.METHODS
    else:
        methods = tuple(sorted(set([regularity.FORMULA, args.method]), key=regularity.METHODS.index))
    p = args.primes[0]
    report = regularity.regularity_report(m, args.t, p, methods, args.slack, args.budget)
    rows = [row for row in report.rows() if args.method == 'all' or row[0] == args.method]
    if not args.tsv:
        logger.write('method value witness agree')
    _table(logger, rows, args.tsv)
    resolved = all(row[1] not in ('Unresolved',) for row in rows)
    return EXIT_OK if report.agree and resolved else EXIT_FINDINGS


def cmd_homology(args, logger):
    obj = formats.load(args.path)
    if isinstance(obj, matroid_core.Matroid):
        obj = simplicial.independence_complex(obj)
    if not isinstance(obj, simplicial.SimplicialComplex):
        raise formats.ParseError(1, 1, 'homology needs a complex or a matroid')
    for p in args.primes:
        report = simplicial.reduced_homology(obj, p)
        if len(args.primes) > 1:
            logger.write('p = %d' % p)
        for line in report.lines():
            logger.write(line)
    return EXIT_OK


def _degree_vector(text, n):
    try:
        a = [int(v) for v in text.split(',')]
    except ValueError:
        raise formats.ParseError(1, 1, 'bad degree vector %r' % text)
    if len(a) != n:
        raise formats.ParseError(1, 1, 'degree vector needs %d entries' % n)
    return ideal_kernel.ExponentVector(a)


def cmd_ideal(args, logger):
    obj = formats.load(args.path)
    if args.emit == 'stanley-reisner':
        if isinstance(obj, matroid_core.Matroid):
            obj = simplicial.independence_complex(obj)
        for line in ideal_kernel.stanley_reisner(obj).lines():
            logger.write(line)
        return EXIT_OK
    m = obj
    if not isinstance(m, matroid_core.Matroid):
        raise formats.ParseError(1, 1, '%s needs a matroid file' % args.emit)
    if args.emit == 'generators':
        for line in ideal_kernel.symbolic_generators(m, args.t).lines():
            logger.write(line)
    elif args.emit == 'betti':
        table = regularity.betti_oracle(ideal_kernel.symbolic_generators(m, args.t), args.primes[0])
        _table(logger, [(i, ' '.join(str(e) for e in a), beta) for i, a, beta in table], args.tsv)
    else:
        if args.a is None:
            raise formats.ParseError(1, 1, 'degree-complex needs --a')
        a = _degree_vector(args.a, m.n)
        logger.write(ideal_kernel.degree_complex_matroid(m, args.t, a).text().rstrip('\n'))
    return EXIT_OK


def cmd_arbor(args, logger):
    obj = formats.load(args.path)
    g = None
    if isinstance(obj, matroid_core.Graph):
        g = obj
        obj = matroid_core.graphic(g)
    if not isinstance(obj, matroid_core.Matroid):
        raise formats.ParseError(1, 1, 'arbor needs a matroid or a graph')
    m = obj
    record = arboricity.check_arbor(m)
    a, cert = arboricity.arboricity_exact(matroid_core.core(m) if matroid_core.is_star(m) else m)
    edmonds, maximizer = arboricity.arboricity_edmonds(m)
    if args.tsv:
        logger.write('id\tn\tr\ta\tgamma_dual\tc_dual\tpass')
        logger.write(arboricity.tsv_row(record))
    else:
        rows = [('a', a), ('cover', utils.format_family(cert.witness)),
                ('edmonds', edmonds, utils.format_subset(maximizer)),
                ('gamma_dual', record.values['gamma_dual']),
                ('c_dual', record.values['c_dual']),
                ('pass', int(record.passed))]
        if record.note:
            rows.append(('note', record.note))
        if g is not None:
            nw, nodes = arboricity.nash_williams(g)
            rows.append(('nash_williams', nw, utils.format_subset(nodes)))
            rows.append(('largest_bond', arboricity.largest_bond(g)))
            rows.append(('bonds', utils.format_family(arboricity.bonds(g))))
        _table(logger, rows, False)
    return EXIT_OK if record.passed else EXIT_FINDINGS


def cmd_enumerate(args, logger):
    stream = families_enum.enumerate_all_matroids(args.n)
    if args.emit == 'count':
        logger.write('n = %d: %d labeled matroids' % (args.n, sum(1 for _ in stream)))
    elif args.emit == 'files':
        if not args.out:
            raise families_enum.InvalidFamilySpec('--emit files needs --out')
        paths = families_enum.write_matroid_files(stream, args.out)
        logger.write('wrote %d files to %s' % (len(paths), args.out))
    else:
        if not args.out:
            raise families_enum.InvalidFamilySpec('--emit catalog needs --out')
        count = families_enum.save_catalog(args.out, stream)
        logger.write('wrote %d matroids to %s' % (count, args.out))
    return EXIT_OK


COMMANDS = {
    'analyze': cmd_analyze,
    'verify': cmd_verify,
    'reg': cmd_reg,
    'homology': cmd_homology,
    'ideal': cmd_ideal,
    'arbor': cmd_arbor,
    'enumerate': cmd_enumerate,
}


def main(argv=None):
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except ValueError as e:
        print('error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    logger = utils.Logger(args.log)
    try:
        return COMMANDS[args.command](args, logger)
    except (MatregError, ValueError, IOError) as e:
        print('error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    finally:
        logger.close()


if __name__ == '__main__':
    sys.exit(main())
