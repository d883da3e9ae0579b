"""
Castelnuovo-Mumford regularity of symbolic powers of matroid ideals.

Three independent routes are computed:
  formula   c(M)(t-1) + r(core M) + 1
  takayama  top local cohomology degree read off degree complexes, plus d + 1
  betti     multigraded Betti numbers from upper Koszul complexes
"""
import itertools
from dataclasses import dataclass, field

import numpy as np

import utils
from utils import MatregError, VerificationRecord
import matroid_core
import simplicial
import ideal_kernel
from ideal_kernel import ExponentVector

DEFAULT_BETTI_CAP = 300000
BETTI_MAX_N = 5
BETTI_MAX_T = 2

FORMULA = 'formula'
TAKAYAMA = 'takayama'
BETTI = 'betti'
METHODS = (FORMULA, TAKAYAMA, BETTI)


class RegularityError(MatregError):
    pass


class NoCircuit(RegularityError):
    pass


class BudgetExceeded(RegularityError):
    pass


class BoxTooLarge(RegularityError):
    pass


class NotCore(RegularityError):
    pass


class EvaluationBudget(object):
    """Counts homology evaluations and raises BudgetExceeded past the limit."""

    def __init__(self, limit=None):
        self.limit = utils.default_budget() if limit is None else limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded('more than %d homology evaluations' % self.limit)


def _circumference(m):
    c = matroid_core.circumference(m)
    if c is None:
        raise NoCircuit('%s has no circuit' % m.canonical_id())
    return c


def reg_formula(m, t):
    ideal_kernel.check_power(t)
    c = _circumference(m)
    return c * (t - 1) + matroid_core.core(m).rank + 1


def local_cohomology_dim(m, t, a, i, p=2):
    """dim H^i_m(S/I^(t))_a; zero unless G_a is independent."""
    a = ExponentVector(a)
    if not m.independent(a.negative_support):
        return 0
    gamma = ideal_kernel.degree_complex_matroid(m, t, a)
    return simplicial.homology_in_degree(gamma, i - len(a.negative_support) - 1, p)


def _faces(m):
    """Nonempty independent sets in canonical order."""
    found = set()
    for b in m.bases:
        for size in range(1, len(b) + 1):
            found.update(itertools.combinations(b, size))
    return sorted(found)


def _vectors_of_degree(m, s, faces):
    """Candidate degree vectors with |a| = s: nonnegative ones first, then -1
    on each nonempty face with the rest nonnegative, each in decreasing
    lexicographic order."""
    n = m.n
    if s >= 0:
        for a in utils.bounded_vectors(n, s):
            yield ExponentVector(a)
    for face in faces:
        rest_total = s + len(face)
        if rest_total < 0:
            continue
        rest = [i for i in m.ground if i not in face]
        for values in utils.bounded_vectors(len(rest), rest_total):
            a = [-1] * n
            for i, v in zip(rest, values):
                a[i - 1] = v
            yield ExponentVector(a)


def a_top_search(m, t, p=2, slack=None, budget=None):
    """Largest |a| with H^d_m(S/I^(t))_a != 0 and a witness; (None, None)
    when nothing nonzero is found in the window."""
    ideal_kernel.check_power(t)
    if matroid_core.is_star(m):
        raise NotCore('%s has coloops %s' % (m.canonical_id(),
                                            utils.format_subset(matroid_core.star_centers(m))))
    c = _circumference(m)
    if slack is None:
        slack = c
    if not isinstance(budget, EvaluationBudget):
        budget = EvaluationBudget(budget)
    d = m.rank
    faces = _faces(m)
    for s in range(c * (t - 1) + slack, -d - 1, -1):
        for a in _vectors_of_degree(m, s, faces):
            budget.spend()
            if local_cohomology_dim(m, t, a, d, p):
                return s, a
    return None, None


def lower_bound_witness(m, t):
    """(t-1) on the first largest circuit, 0 elsewhere; its degree complex
    has nonzero top homology when m has no coloops."""
    c = _circumference(m)
    circuit = [s for s in matroid_core.circuits(m) if len(s) == c][0]
    return ExponentVector((t - 1) if i in circuit else 0 for i in m.ground)


def reg_takayama(m, t, p=2, slack=None, budget=None):
    """a_top + r + 1 on the core, or None when the search found nothing."""
    _circumference(m)
    value, _ = a_top_search(matroid_core.core(m), t, p, slack, budget)
    if value is None:
        return None
    return value + matroid_core.core(m).rank + 1


# --------------------Betti numbers---------------------------
def upper_koszul_complex(ideal, a):
    """K^a = {F in supp(a) : x^(a - e_F) in the ideal}."""
    support = ExponentVector(a).support
    faces = []
    for size in range(len(support) + 1):
        for combo in itertools.combinations(support, size):
            shifted = list(a)
            for i in combo:
                shifted[i - 1] -= 1
            if ideal.contains(shifted):
                faces.append(combo)
    return simplicial.SimplicialComplex(ideal.n, faces)


def betti_oracle(ideal, p=2, cap=DEFAULT_BETTI_CAP):
    """Nonzero multigraded Betti numbers as (i, a, beta) sorted by i, then
    graded-lex on a."""
    if ideal.is_zero:
        raise ideal_kernel.ZeroIdeal('Betti numbers of the zero ideal')
    top = ideal.lcm()
    size = int(np.prod([e + 1 for e in top], dtype=np.int64))
    if size > cap:
        raise BoxTooLarge('Betti box has %d points, cap is %d' % (size, cap))
    table = []
    for a in itertools.product(*[range(e + 1) for e in top]):
        if not ideal.contains(a):
            continue
        a = ExponentVector(a)
        report = simplicial.reduced_homology(upper_koszul_complex(ideal, a), p)
        for k, beta in enumerate(report.dims):
            if beta:
                table.append((k, a, beta))
    table.sort(key=lambda row: (row[0], ideal_kernel.graded_lex_key(row[1])))
    zeroth = [row[1] for row in table if row[0] == 0]
    utils.assert_eq(tuple(zeroth), ideal.generators)
    return tuple(table)


def graded_betti(table):
    """Collapse (i, a, beta) rows to {(i, |a|): beta}."""
    out = {}
    for i, a, beta in table:
        key = (i, a.degree)
        out[key] = out.get(key, 0) + beta
    return out


def reg_from_betti(ideal, p=2, cap=DEFAULT_BETTI_CAP):
    return max(a.degree - i for i, a, _ in betti_oracle(ideal, p, cap))


def has_linear_resolution(ideal, p=2, cap=DEFAULT_BETTI_CAP):
    degrees = ideal.degrees()
    if len(degrees) != 1:
        return False
    delta = degrees[0]
    return all(a.degree == delta + i for i, a, _ in betti_oracle(ideal, p, cap))


def betti_feasible(m, t):
    return m.n <= BETTI_MAX_N and t <= BETTI_MAX_T


# --------------------reports---------------------------
@dataclass
class RegularityReport:
    matroid_id: str
    t: int
    d: int
    c: int
    core_rank: int
    formula_value: int
    takayama_value: object = None
    betti_value: object = None
    witness_a: object = None
    a_top: object = None
    agree: bool = True
    methods: tuple = field(default_factory=tuple)

    def consistent(self):
        """Recompute the stored invariants."""
        if self.formula_value != self.c * (self.t - 1) + self.core_rank + 1:
            return False
        if self.takayama_value is not None:
            if self.witness_a is None or self.witness_a.degree != self.a_top:
                return False
            if self.takayama_value != self.a_top + self.core_rank + 1:
                return False
        return True

    def rows(self):
        """(method, value, witness, agree) per method that ran."""
        out = []
        for method in self.methods:
            if method == FORMULA:
                out.append((FORMULA, self.formula_value, '', self.agree))
            elif method == TAKAYAMA:
                value = 'Unresolved' if self.takayama_value is None else self.takayama_value
                out.append((TAKAYAMA, value, self.witness_a or '', self.agree))
            elif method == BETTI:
                value = 'Skipped' if self.betti_value is None else self.betti_value
                out.append((BETTI, value, '', self.agree))
        return out


def regularity_report(m, t, p=2, methods=METHODS, slack=None, budget=None,
                      betti_cap=DEFAULT_BETTI_CAP):
    c = _circumference(m)
    mc = matroid_core.core(m)
    report = RegularityReport(m.canonical_id(), t, m.rank, c, mc.rank, reg_formula(m, t),
                              methods=tuple(methods))
    values = [report.formula_value]
    if TAKAYAMA in methods:
        value, witness = a_top_search(mc, t, p, slack, budget)
        report.a_top = value
        report.witness_a = witness
        if value is not None:
            report.takayama_value = value + mc.rank + 1
        values.append(report.takayama_value)
    if BETTI in methods and betti_feasible(m, t):
        report.betti_value = reg_from_betti(ideal_kernel.symbolic_generators(m, t), p, betti_cap)
        values.append(report.betti_value)
    report.agree = len(set(values)) == 1
    return report


def recheck_top_witness(m, t, witness, p=2):
    """Degree and top homology of a witness, rebuilt from the minimal
    generators of I^(t) rather than from the matroid description. m must be
    a core. Returns (degree matches c(t-1), top homology nonzero)."""
    c = _circumference(m)
    witness = ExponentVector(witness)
    gamma = ideal_kernel.degree_complex_general(ideal_kernel.symbolic_generators(m, t), witness)
    top = simplicial.homology_in_degree(gamma, m.rank - len(witness.negative_support) - 1, p)
    return witness.degree == c * (t - 1), top != 0


def check_regsym(m, t, p=2, slack=None, budget=None, betti_cap=DEFAULT_BETTI_CAP):
    """Formula, Takayama and, inside the Betti limits, the Betti oracle agree;
    the top witness sits at degree c(M)(t-1) with nonzero top homology."""
    report = regularity_report(m, t, p, METHODS, slack, budget, betti_cap)
    passed = report.agree and report.consistent()
    note = ''
    if report.witness_a is not None and not report.witness_a.is_nonnegative():
        passed = False
        note = 'top degree reached only with negative entries'
    recheck = None
    if report.witness_a is not None:
        recheck = recheck_top_witness(matroid_core.core(m), t, report.witness_a, p)
        if not all(recheck):
            passed = False
            note = note or 'witness fails the recheck'
    values = {'t': t, 'p': p, 'formula': report.formula_value,
              'takayama': report.takayama_value, 'betti': report.betti_value,
              'expected': report.formula_value,
              'observed': '%s/%s' % (report.takayama_value, report.betti_value),
              'witness': report.witness_a, 'recheck': recheck}
    return VerificationRecord('regsym', m.canonical_id(), passed, values, True, note)


def check_upper(m, t, p=2, budget=None):
    """No non-acyclic degree complex for |a| in (c(t-1), c(t-1) + c] and the
    value c(t-1) itself is attained."""
    if matroid_core.is_star(m):
        raise NotCore('%s has coloops' % m.canonical_id())
    c = _circumference(m)
    if not isinstance(budget, EvaluationBudget):
        budget = EvaluationBudget(budget)
    bound = c * (t - 1)
    best = None
    for s in range(bound + c, -1, -1):
        for a in utils.bounded_vectors(m.n, s):
            budget.spend()
            if not simplicial.is_acyclic(ideal_kernel.degree_complex_matroid(m, t, a), p):
                best = (s, ExponentVector(a))
                break
        if best is not None:
            break
    achieved = best[0] if best else None
    values = {'t': t, 'bound': bound, 'max': achieved, 'expected': bound,
              'observed': achieved, 'witness': best[1] if best else None}
    return VerificationRecord('upper', m.canonical_id(), achieved == bound, values, True)


def check_uniform_characterization(m, t, p=2, cap=DEFAULT_BETTI_CAP):
    """Linear resolution of I^(t) iff the core is U_{k,n'} with 0 < k < n'."""
    _circumference(m)
    mc = matroid_core.core(m)
    linear = has_linear_resolution(ideal_kernel.symbolic_generators(m, t), p, cap)
    uniform = matroid_core.is_uniform(mc) and 0 < mc.rank < mc.n
    values = {'t': t, 'linear': linear, 'uniform': uniform,
              'expected': 'linear == uniform core', 'observed': 'linear=%s uniform=%s' % (linear, uniform)}
    return VerificationRecord('linear_uniform', m.canonical_id(), linear == uniform, values, True)


def check_cm_guard(m, t, p=2, slack=None, budget=None):
    """Local cohomology below the top degree vanishes on the search window.
    Bounded evidence for the Cohen-Macaulay property, not a proof."""
    mc = matroid_core.core(m)
    c = _circumference(m)
    if slack is None:
        slack = c
    if not isinstance(budget, EvaluationBudget):
        budget = EvaluationBudget(budget)
    d = mc.rank
    faces = _faces(mc)
    offender = None
    for s in range(c * (t - 1) + slack, -d - 1, -1):
        for a in _vectors_of_degree(mc, s, faces):
            budget.spend()
            gamma = ideal_kernel.degree_complex_matroid(mc, t, a)
            shift = len(a.negative_support) + 1
            dims = simplicial.reduced_homology(gamma, p)
            if any(dims.degree(i - shift) for i in range(d)):
                offender = a
                break
        if offender is not None:
            break
    values = {'t': t, 'd': d, 'expected': 'H^i = 0 for i < d', 'observed': offender or 'none',
              'witness': offender}
    return VerificationRecord('cm_guard', m.canonical_id(), offender is None, values, False,
                              'bounded evidence, not proof')


def check_circ_link(m):
    """c(M') <= c(M) for the link matroid M' of every element of m."""
    c = _circumference(m)
    worst = None
    for x in m.ground:
        if not m.independent((x,)):
            continue
        contracted, labels = matroid_core.link_matroid(m, (x,))
        if contracted.is_empty:
            continue
        value = matroid_core.circumference(contracted) or 0
        if worst is None or value > worst[0]:
            worst = (value, x)
    observed = worst[0] if worst else 0
    values = {'c': c, 'expected': '<= %d' % c, 'observed': observed,
              'witness': worst[1] if worst else None}
    return VerificationRecord('circ_link', m.canonical_id(), observed <= c, values, observed == c)


if __name__ == '__main__':
    square = matroid_core.from_bases(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    for t in (1, 2, 3):
        print('t=%d formula=%d takayama=%s' % (t, reg_formula(square, t), reg_takayama(square, t)))
