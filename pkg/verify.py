"""
Verification suites: each one checks a family of claims over a stream of
instances and collects VerificationRecords. An instance passes when every
record it produced passes; failing records become findings.
"""
from __future__ import print_function

import random
from dataclasses import dataclass, field
from multiprocessing import Pool

import progressbar

import utils
from utils import MatregError, VerificationRecord
import matroid_core
import arboricity
import simplicial
import ideal_kernel
import regularity
import families_enum
from meters import SuiteMeter


class UnknownSuite(MatregError):
    pass


@dataclass
class SuiteOptions:
    t_range: tuple = (1, 2, 3)
    primes: tuple = (2,)
    samples: int = 500
    seed: int = 1234
    budget: int = None
    slack: int = None
    betti_cap: int = regularity.DEFAULT_BETTI_CAP

    def __post_init__(self):
        for t in self.t_range:
            ideal_kernel.check_power(t)


@dataclass
class SuiteResult:
    suite: str
    instances: int = 0
    passed: int = 0
    findings: list = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.findings

    @property
    def equalities(self):
        """Passed records whose bound is attained."""
        return sum(1 for r in self.records if r.passed and r.equality)

    def claim_counts(self):
        """claim -> (records, records at equality)"""
        counts = {}
        for r in self.records:
            total, equal = counts.get(r.claim, (0, 0))
            counts[r.claim] = (total + 1, equal + int(r.passed and r.equality))
        return counts


def _loopless(m):
    return not m.loops()


def _has_circuit(m):
    return matroid_core.circumference(m) is not None


# --------------------suites over matroids---------------------------
def suite_arbor(m, options):
    if not _loopless(m):
        return None
    try:
        return [arboricity.check_arbor(m)]
    except arboricity.Inapplicable:
        return None


def suite_gamma(m, options):
    if not _loopless(m) or matroid_core.is_star(m):
        return None
    return [arboricity.check_gamma(m), arboricity.check_h0(m)]


def suite_mb(m, options):
    if not _loopless(m) or matroid_core.is_star(m):
        return None
    return [arboricity.check_mb(m)]


def suite_edmonds(m, options):
    if not _loopless(m) or m.rank == 0:
        return None
    return [arboricity.check_edmonds(m)]


def suite_cone_acyclic(m, options):
    """Cone iff acyclic for the matroid complex at every prime; the link of
    every face is the complex of the contraction, and for a non-star it is
    never a cone."""
    c = simplicial.independence_complex(m)
    cone, center = simplicial.is_cone(c)
    reports = [simplicial.reduced_homology(c, p) for p in options.primes]
    records = []
    for report in reports:
        acyclic = report.is_zero()
        values = {'p': report.prime, 'expected': 'cone == acyclic',
                  'observed': 'cone=%s acyclic=%s' % (cone, acyclic), 'witness': center}
        records.append(VerificationRecord('cone_acyclic', m.canonical_id(), cone == acyclic, values, True))
    same = all(r.dims == reports[0].dims for r in reports)
    records.append(VerificationRecord('prime_independent', m.canonical_id(), same,
                                      {'expected': 'same homology', 'observed': [r.dims for r in reports]}))
    mismatch = None
    coned = None
    for k in range(1, m.rank):
        for face in c.faces(k):
            lk = simplicial.link(c, face)
            contracted, labels = matroid_core.link_matroid(m, face)
            if mismatch is None and lk != simplicial.relabel(simplicial.independence_complex(contracted),
                                                             labels, m.n):
                mismatch = face
            if coned is None and simplicial.is_cone(lk)[0]:
                coned = face
    records.append(VerificationRecord('link_contraction', m.canonical_id(), mismatch is None,
                                      {'expected': 'lk f == complex of M/f', 'observed': mismatch or 'none',
                                       'witness': mismatch}, True))
    if not matroid_core.is_star(m):
        records.append(VerificationRecord('link_not_cone', m.canonical_id(), coned is None,
                                          {'expected': 'no cone link', 'observed': coned or 'none',
                                           'witness': coned}))
    return records


def suite_upper(m, options):
    if not _loopless(m) or not _has_circuit(m):
        return None
    mc = matroid_core.core(m)
    return [regularity.check_upper(mc, t, p, options.budget)
            for t in options.t_range for p in options.primes]


def suite_regsym(m, options):
    if not _loopless(m) or not _has_circuit(m):
        return None
    records = []
    for t in options.t_range:
        for p in options.primes:
            records.append(regularity.check_regsym(m, t, p, options.slack, options.budget,
                                                   options.betti_cap))
    records.append(regularity.check_circ_link(m))
    return records


def suite_linear_uniform(m, options):
    if not _loopless(m) or not _has_circuit(m):
        return None
    records = []
    for t in options.t_range:
        if not regularity.betti_feasible(m, t):
            continue
        for p in options.primes:
            records.append(regularity.check_uniform_characterization(m, t, p, options.betti_cap))
    return records or None


def suite_cm_guard(m, options):
    if not _loopless(m) or not _has_circuit(m):
        return None
    return [regularity.check_cm_guard(m, t, p, options.slack, options.budget)
            for t in options.t_range for p in options.primes]


# --------------------suites over graphs---------------------------
def suite_nashwilliams(g, options):
    records = [arboricity.check_nash_williams(g), arboricity.check_bonds(g)]
    if not matroid_core.is_star(matroid_core.graphic(g)):
        records.append(arboricity.check_forest_partition(g))
    return records


# --------------------degree complex trials---------------------------
@dataclass
class Trial:
    m: object
    t: int
    a: tuple
    signed: tuple = ()
    shift_t: int = 0
    shift_a: tuple = ()


def _face_vector(rng, m, t, c):
    """a in [0, t c(M)]^n with degree at most t - 1 off a random basis B, so B
    is a face of D_a(I^(t))."""
    basis = rng.choice(m.bases)
    a = [rng.randint(0, t * c) if i in basis else 0 for i in m.ground]
    outside = [i for i in m.ground if i not in basis]
    for _ in range(rng.randint(0, t - 1)):
        a[rng.choice(outside) - 1] += 1
    return tuple(a), basis


def _draw_trial(rng, m, top_t):
    c = matroid_core.circumference(m)
    t = rng.randint(1, top_t)
    a, basis = _face_vector(rng, m, t, c)
    face = [i for i in basis if rng.random() < 0.5]
    signed = tuple(-1 if i in face else a[i - 1] for i in m.ground)
    # D_{b+1}(I^(s + n - r)) = D_b(I^(s)), so b + 1 is non-void at s + n - r
    s = rng.randint(1, top_t)
    b, _ = _face_vector(rng, m, s, c)
    return Trial(m, t, a, signed, s + m.n - m.rank, tuple(e + 1 for e in b))


def make_trials(matroids, options):
    """Random trials over the non-star matroids, with a non-void degree
    complex in every trial. Rank one matroids have no link to compare, so
    trials on rank >= 2 matroids are topped up until each identity gets
    `samples` of them."""
    pool = [m for m in matroids if _loopless(m) and _has_circuit(m) and not matroid_core.is_star(m)]
    if not pool:
        return []
    rng = random.Random(options.seed)
    top_t = max(options.t_range)
    trials = [_draw_trial(rng, rng.choice(pool), top_t) for _ in range(options.samples)]
    linkable = [m for m in pool if m.rank >= 2]
    missing = options.samples - sum(1 for trial in trials if trial.m.rank >= 2)
    if linkable:
        trials.extend(_draw_trial(rng, rng.choice(linkable), top_t) for _ in range(missing))
    return trials


def _same(claim, instance, sides, witness):
    if sides is None:
        return None
    lhs, rhs = sides
    values = {'expected': utils.format_family(rhs.facets), 'observed': utils.format_family(lhs.facets),
              'witness': witness}
    return VerificationRecord(claim, instance, lhs == rhs, values, True)


def suite_degree_lemmas(trial, options):
    m, t, a = trial.m, trial.t, ideal_kernel.ExponentVector(trial.a)
    instance = '%s/t=%d/a=%s' % (m.canonical_id(), t, a)
    records = []
    generators = ideal_kernel.symbolic_generators(m, t)
    general = ideal_kernel.degree_complex_general(generators, a)
    special = ideal_kernel.degree_complex_matroid(m, t, a)
    records.append(VerificationRecord('degree_complex', instance, general == special,
                                      {'expected': utils.format_family(special.facets),
                                       'observed': utils.format_family(general.facets)}, True))
    if trial.signed:
        signed = ideal_kernel.ExponentVector(trial.signed)
        lhs = ideal_kernel.degree_complex_general(generators, signed)
        rhs = ideal_kernel.degree_complex_matroid(m, t, signed)
        records.append(VerificationRecord('degree_complex_signed', instance, lhs == rhs,
                                          {'expected': utils.format_family(rhs.facets),
                                           'observed': utils.format_family(lhs.facets),
                                           'witness': signed}, True))
    if not general.is_void:
        vertices = general.vertices()
        if vertices:
            v = vertices[sum(a) % len(vertices)]
            record = _same('link_lemma', instance, ideal_kernel.link_lemma_sides(m, t, a, v), v)
            if record is not None:
                records.append(record)
        v = min(m.ground, key=lambda i: (a[i - 1], -i))
        record = _same('restriction_lemma', instance, ideal_kernel.restriction_lemma_sides(m, t, a, v), v)
        if record is not None:
            records.append(record)
    shift_t, shift_a = (trial.shift_t, trial.shift_a) if trial.shift_a else (t, a)
    record = _same('shift_lemma', instance, ideal_kernel.shift_lemma_sides(m, shift_t, shift_a), shift_a)
    if record is not None:
        records.append(record)
    radical = ideal_kernel.radical_complex(generators)
    records.append(VerificationRecord('radical', instance,
                                      radical == simplicial.independence_complex(m),
                                      {'expected': utils.format_family(m.bases),
                                       'observed': utils.format_family(radical.facets)}, True))
    return records


# --------------------runner---------------------------
MATROID_SUITES = {
    'arbor': suite_arbor,
    'gamma': suite_gamma,
    'mb': suite_mb,
    'edmonds': suite_edmonds,
    'cone_acyclic': suite_cone_acyclic,
    'upper': suite_upper,
    'regsym': suite_regsym,
    'linear_uniform': suite_linear_uniform,
    'cm_guard': suite_cm_guard,
}
GRAPH_SUITES = {'nashwilliams': suite_nashwilliams}
TRIAL_SUITES = {'degree_lemmas': suite_degree_lemmas}
SUITES = sorted(list(MATROID_SUITES) + list(GRAPH_SUITES) + list(TRIAL_SUITES))


def suite_function(name):
    for table in (MATROID_SUITES, GRAPH_SUITES, TRIAL_SUITES):
        if name in table:
            return table[name]
    raise UnknownSuite('unknown suite %r, choose from %s' % (name, ', '.join(SUITES)))


def instances_for(name, spec, options):
    """The instance list a suite runs over."""
    suite_function(name)
    if name in GRAPH_SUITES:
        return list(families_enum.generate_graphs(spec))
    matroids = list(families_enum.generate(spec))
    if name in TRIAL_SUITES:
        return make_trials(matroids, options)
    return matroids


def _run_one(job):
    name, instance, options = job
    try:
        return suite_function(name)(instance, options)
    except regularity.BudgetExceeded as e:
        label = instance.canonical_id() if hasattr(instance, 'canonical_id') else str(instance)
        return [VerificationRecord(name, label, False, {'expected': 'within budget', 'observed': str(e)},
                                   note='budget exceeded')]


def run_suite(name, instances, options, logger=None, workers=1, quiet=False):
    """Run a suite over `instances`; results are merged in input order."""
    suite_function(name)
    meter = SuiteMeter(name)
    result = SuiteResult(name)
    jobs = [(name, instance, options) for instance in instances]
    bar = None
    if not quiet and jobs:
        bar = progressbar.ProgressBar(maxval=len(jobs))
        bar.start()
    pool = Pool(workers) if workers > 1 else None
    try:
        outputs = pool.imap(_run_one, jobs) if pool is not None else map(_run_one, jobs)
        for idx, records in enumerate(outputs):
            meter.update(records)
            if bar is not None:
                bar.update(idx + 1)
            if records is None:
                continue
            result.instances += 1
            result.records.extend(records)
            if all(r.passed for r in records):
                result.passed += 1
            for r in records:
                if not r.passed:
                    result.findings.append((r.instance, r.claim, r.expected(), r.observed(),
                                            r.values.get('witness', '')))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if bar is not None:
            bar.finish()
    utils.assert_eq(meter.passed, result.passed)
    if logger is not None:
        logger.append('records_per_instance', meter.records.avg)
        logger.log(meter.summary())
    return result
