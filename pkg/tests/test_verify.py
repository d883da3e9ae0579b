import pytest

import matroid_core
import families_enum
import ideal_kernel
import verify
from verify import SuiteOptions, Trial


@pytest.fixture
def options():
    return SuiteOptions(t_range=(1, 2), primes=(2, 3), samples=20, seed=7)


def test_suite_names():
    assert verify.SUITES == sorted(['arbor', 'gamma', 'mb', 'edmonds', 'nashwilliams', 'cone_acyclic',
                                    'degree_lemmas', 'upper', 'regsym', 'linear_uniform', 'cm_guard'])
    with pytest.raises(verify.UnknownSuite):
        verify.suite_function('nope')


def test_loopy_matroids_are_skipped(options):
    m = matroid_core.from_bases(3, [(1, 2)], allow_loops=True)
    assert verify.suite_arbor(m, options) is None
    assert verify.suite_regsym(m, options) is None


def test_cone_acyclic_records(square, star, options):
    records = verify.suite_cone_acyclic(square, options)
    claims = [r.claim for r in records]
    assert claims == ['cone_acyclic', 'cone_acyclic', 'prime_independent', 'link_contraction', 'link_not_cone']
    assert all(r.passed for r in records)
    records = verify.suite_cone_acyclic(star, options)
    claims = [r.claim for r in records]
    assert 'link_contraction' in claims
    assert 'link_not_cone' not in claims
    assert all(r.passed for r in records)


def test_links_of_every_face(u24, options):
    loopy = matroid_core.from_bases(4, [(1, 2), (1, 3), (2, 3)], allow_loops=True)
    for m in (u24, matroid_core.uniform(3, 5), loopy):
        records = dict((r.claim, r) for r in verify.suite_cone_acyclic(m, options))
        assert records['link_contraction'].passed
        assert records['link_not_cone'].passed


def test_degree_lemmas_on_worked_example(square, options):
    records = verify.suite_degree_lemmas(Trial(square, 11, (1, 8, 3, 2), (-1, 8, 3, 2)), options)
    claims = [r.claim for r in records]
    for claim in ('degree_complex', 'degree_complex_signed', 'link_lemma', 'restriction_lemma',
                  'shift_lemma', 'radical'):
        assert claim in claims
    assert all(r.passed for r in records)


def test_make_trials_is_reproducible(options):
    matroids = list(families_enum.generate(families_enum.FamilySpec(families_enum.UNIFORM,
                                                                    k_range=(1, 2), n_range=(3, 4))))
    first = verify.make_trials(matroids, options)
    second = verify.make_trials(matroids, options)
    assert [(t.m, t.t, t.a, t.signed, t.shift_t, t.shift_a) for t in first] == \
        [(t.m, t.t, t.a, t.signed, t.shift_t, t.shift_a) for t in second]
    assert len(first) >= options.samples
    assert sum(1 for trial in first if trial.m.rank >= 2) >= options.samples


def test_trials_have_faces(options):
    matroids = list(families_enum.generate(families_enum.FamilySpec(families_enum.UNIFORM,
                                                                    k_range=(1, 2), n_range=(3, 4))))
    for trial in verify.make_trials(matroids, options):
        assert not matroid_core.is_star(trial.m)
        c = matroid_core.circumference(trial.m)
        assert all(0 <= e <= trial.t * c for e in trial.a)
        assert not ideal_kernel.degree_complex_matroid(trial.m, trial.t, trial.a).is_void
        assert trial.m.independent([i for i, e in enumerate(trial.signed, 1) if e < 0])
        assert min(trial.shift_a) >= 1
        assert trial.shift_t > trial.m.n - trial.m.rank
        assert not ideal_kernel.degree_complex_matroid(trial.m, trial.shift_t, trial.shift_a).is_void


def test_run_suite_exhaustive(options):
    spec = families_enum.FamilySpec(families_enum.EXHAUSTIVE, n_range=(1, 2, 3))
    instances = verify.instances_for('mb', spec, options)
    result = verify.run_suite('mb', instances, options, quiet=True)
    assert result.ok
    assert result.instances == result.passed
    assert result.instances > 0


def test_run_suite_graphs(options):
    spec = families_enum.FamilySpec(families_enum.GRAPHIC, max_vertices=4, max_edges=6)
    instances = verify.instances_for('nashwilliams', spec, options)
    result = verify.run_suite('nashwilliams', instances, options, quiet=True)
    assert result.ok
    assert result.instances == len(instances)


def test_run_suite_degree_lemmas(options):
    spec = families_enum.FamilySpec(families_enum.UNIFORM, k_range=(1, 2), n_range=(3, 4))
    instances = verify.instances_for('degree_lemmas', spec, options)
    result = verify.run_suite('degree_lemmas', instances, options, quiet=True)
    assert result.ok
    assert result.instances == len(instances)
    counts = result.claim_counts()
    for claim in ('link_lemma', 'restriction_lemma', 'shift_lemma'):
        assert counts[claim][0] >= options.samples


def test_equality_counts(square, options):
    result = verify.run_suite('arbor', [square], options, quiet=True)
    assert result.claim_counts() == {'arbor': (1, 1)}
    assert result.equalities == 1


def test_options_reject_nonpositive_t():
    with pytest.raises(ideal_kernel.InvalidPower):
        SuiteOptions(t_range=(0, 1))


def test_linear_uniform_finding_is_reported(options):
    result = verify.run_suite('linear_uniform', [matroid_core.uniform(1, 3)], options, quiet=True)
    assert not result.ok
    instance, claim, expected, observed, witness = result.findings[0]
    assert claim == 'linear_uniform'
    assert observed == 'linear=False uniform=True'


def test_budget_exhaustion_becomes_a_failed_record(u24):
    options = SuiteOptions(t_range=(3,), budget=2)
    result = verify.run_suite('upper', [u24], options, quiet=True)
    assert not result.ok
    assert result.records[0].note == 'budget exceeded'


def test_parallel_run_keeps_order(options):
    spec = families_enum.FamilySpec(families_enum.EXHAUSTIVE, n_range=(1, 2, 3))
    instances = verify.instances_for('gamma', spec, options)
    inline = verify.run_suite('gamma', instances, options, quiet=True)
    pooled = verify.run_suite('gamma', instances, options, workers=2, quiet=True)
    assert [r.instance for r in inline.records] == [r.instance for r in pooled.records]
    assert pooled.passed == inline.passed
