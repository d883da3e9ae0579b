"""
Monomial ideals in K[x_1, ..., x_n]: Stanley-Reisner ideals, symbolic powers
of matroid ideals and degree complexes.

Monomials are exponent vectors. A symbolic power of a matroid ideal is the
intersection of the t-th powers of the primes P_B = (x_i | i not in B) over the
bases B, so x^a lies in it exactly when every basis complement carries at
least t of the degree of a.
"""
import itertools
from functools import lru_cache

import utils
from utils import MatregError, to_mask, from_mask
import matroid_core
import simplicial
from simplicial import SimplicialComplex


class IdealError(MatregError):
    pass


class ZeroIdeal(IdealError):
    pass


class FreeMatroid(IdealError):
    pass


class NegativeSupportNotFace(IdealError):
    pass


class InvalidPower(IdealError):
    pass


def check_power(t):
    if t < 1:
        raise InvalidPower('t must be a positive integer, got %s' % t)
    return t


class ExponentVector(tuple):
    """Integer exponent vector; negative entries are allowed for degrees."""

    def __new__(cls, entries):
        return super(ExponentVector, cls).__new__(cls, (int(e) for e in entries))

    @property
    def degree(self):
        return sum(self)

    @property
    def negative_support(self):
        """G_a as 1-based labels."""
        return tuple(i for i, e in enumerate(self, 1) if e < 0)

    @property
    def support(self):
        return tuple(i for i, e in enumerate(self, 1) if e > 0)

    def is_nonnegative(self):
        return all(e >= 0 for e in self)

    def __repr__(self):
        return '(' + ','.join(str(e) for e in self) + ')'


def graded_lex_key(a):
    return (sum(a), tuple(-e for e in a))


def _divides(b, a):
    return all(x <= y for x, y in zip(b, a))


class MonomialIdeal(object):
    """Monomial ideal given by exponent vectors; the minimal generating set is
    kept in graded-lex order (degree, then larger leading exponents first)."""

    def __init__(self, n, generators):
        self.n = n
        gens = sorted(set(ExponentVector(g) for g in generators), key=graded_lex_key)
        for g in gens:
            utils.assert_eq(len(g), n)
        minimal = []
        for g in gens:
            if not any(_divides(h, g) for h in minimal):
                minimal.append(g)
        self.generators = tuple(minimal)

    @property
    def is_zero(self):
        return len(self.generators) == 0

    def contains(self, a):
        return any(_divides(g, a) for g in self.generators)

    def lcm(self):
        if self.is_zero:
            return ExponentVector([0] * self.n)
        return ExponentVector(max(g[i] for g in self.generators) for i in range(self.n))

    def degrees(self):
        return sorted(set(g.degree for g in self.generators))

    def supports(self):
        return utils.minimal_members(g.support for g in self.generators)

    def lines(self):
        return [' '.join(str(e) for e in g) for g in self.generators]

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n \
            and self.generators == other.generators

    def __hash__(self):
        return hash((self.n, self.generators))

    def __repr__(self):
        return 'MonomialIdeal(%d, %s)' % (self.n, list(self.generators))


def indicator(n, subset):
    members = set(subset)
    return ExponentVector(1 if i in members else 0 for i in range(1, n + 1))


def minimal_nonfaces(c):
    """Minimal non-faces of c; they have at most dim(c) + 2 elements."""
    found = []
    top = (c.dim if c.dim is not None else -1) + 2
    for size in range(0, min(top, c.vertex_count) + 1):
        for combo in itertools.combinations(range(1, c.vertex_count + 1), size):
            mask = to_mask(combo)
            if c.contains(combo) or any(f & mask == f for f in found):
                continue
            found.append(mask)
    return utils.canonical_family(from_mask(f) for f in found)


def stanley_reisner(c):
    if c.is_void:
        raise simplicial.VoidComplex('the void complex has no Stanley-Reisner ideal')
    return MonomialIdeal(c.vertex_count, [indicator(c.vertex_count, f) for f in minimal_nonfaces(c)])


def symbolic_membership(m, a, t):
    """x^a in I^(t): every basis complement carries degree >= t."""
    total = sum(a)
    return all(total - sum(a[i - 1] for i in b) >= t for b in m.bases)


@lru_cache(maxsize=1024)
def symbolic_generators(m, t):
    """Minimal generators of the t-th symbolic power of the matroid ideal."""
    check_power(t)
    if not matroid_core.circuits(m):
        raise FreeMatroid('the free matroid has the zero ideal')
    n = m.n
    complements = [tuple(i - 1 for i in m.ground if not b >> (i - 1) & 1) for b in m.base_masks]
    # positions still open after fixing coordinate k, per basis complement
    open_after = [[sum(1 for i in comp if i > k) for comp in complements] for k in range(n)]
    members = []
    a = [0] * n
    sums = [0] * len(complements)

    def walk(k):
        if k == n:
            if all(s >= t for s in sums):
                members.append(tuple(a))
            return
        for value in range(t + 1):
            a[k] = value
            touched = [j for j, comp in enumerate(complements) if k in comp]
            for j in touched:
                sums[j] += value
            feasible = all(sums[j] + t * open_after[k][j] >= t for j in range(len(complements)))
            if feasible:
                walk(k + 1)
            for j in touched:
                sums[j] -= value
        a[k] = 0

    walk(0)
    member_set = set(members)
    minimal = []
    for v in members:
        lower = False
        for i in range(n):
            if v[i] > 0:
                w = v[:i] + (v[i] - 1,) + v[i + 1:]
                if w in member_set:
                    lower = True
                    break
        if not lower:
            minimal.append(v)
    return MonomialIdeal(n, minimal)


def degree_complex_general(ideal, a):
    """Faces F of [n] minus G_a with x^a outside I localized at F and G_a."""
    if ideal.is_zero:
        raise ZeroIdeal('degree complex of the zero ideal')
    a = ExponentVector(a)
    n = ideal.n
    negative = to_mask(a.negative_support)
    free_positions = [i for i in range(1, n + 1) if not negative >> (i - 1) & 1]
    faces = []
    for size in range(len(free_positions) + 1):
        for combo in itertools.combinations(free_positions, size):
            inverted = to_mask(combo) | negative
            outside = [i for i in range(n) if not inverted >> i & 1]
            if not any(all(g[i] <= a[i] for i in outside) for g in ideal.generators):
                faces.append(combo)
    return SimplicialComplex(n, faces)


def degree_complex_matroid(m, t, a):
    """Facets: facets F of the link of G_a with sum_{i not in F, G_a} a_i <= t - 1."""
    a = ExponentVector(a)
    utils.assert_eq(len(a), m.n)
    g = to_mask(a.negative_support)
    if not any(g & b == g for b in m.base_masks):
        raise NegativeSupportNotFace('%s is not independent' % utils.format_subset(a.negative_support))
    total = sum(e for e in a if e > 0)
    facets = []
    for b in m.base_masks:
        if b & g != g:
            continue
        inside = sum(a[i - 1] for i in from_mask(b & ~g))
        if total - inside <= t - 1:
            facets.append(from_mask(b & ~g))
    return SimplicialComplex(m.n, facets)


def radical_complex(ideal):
    if ideal.is_zero:
        raise ZeroIdeal('radical complex of the zero ideal')
    return simplicial.complex_from_nonfaces(ideal.n, ideal.supports())


# --------------------degree complex identities---------------------------
def link_lemma_sides(m, t, a, v):
    """Both sides of lk_G(v) = D_b(I_{lk v}^(t - r)) for G = D_a(I^(t)).

    b is a on the vertices of the link of v in the matroid complex and r the
    degree of a on the remaining elements other than v. Returns None when v is
    not a vertex of G or its link in the matroid complex has no vertices.
    """
    a = ExponentVector(a)
    gamma = degree_complex_general(symbolic_generators(m, t), a)
    if gamma.is_void or not gamma.contains((v,)):
        return None
    contracted, labels = matroid_core.link_matroid(m, (v,))
    if not labels:
        return None
    b = ExponentVector(a[i - 1] for i in labels)
    r = sum(a[i - 1] for i in m.ground if i != v and i not in labels)
    lhs = simplicial.link(gamma, (v,))
    rhs = simplicial.relabel(degree_complex_matroid(contracted, t - r, b), labels, m.n)
    return lhs, rhs


def restriction_lemma_sides(m, t, a, v):
    """Both sides of G_{-v} = D_b(I_{D_{-v}}^(t - a_v)) where b drops entry v.

    The identity needs a_v to be a minimum of a; callers that pass another v
    get the two sides anyway, which is how the non-pure counterexample is
    reproduced. Returns None when G is void.
    """
    a = ExponentVector(a)
    gamma = degree_complex_general(symbolic_generators(m, t), a)
    if gamma.is_void:
        return None
    deleted, labels = matroid_core.deletion(m, v)
    b = ExponentVector(a[i - 1] for i in labels)
    lhs = simplicial.delete_vertex(gamma, v)
    rhs = simplicial.relabel(degree_complex_matroid(deleted, t - a[v - 1], b), labels, m.n)
    return lhs, rhs


def shift_lemma_sides(m, t, a):
    """Both sides of D_a(I^(t)) = D_{a-1}(I^(t - (n - r))) for a with all
    entries >= 1 and a non-void left side; None otherwise."""
    a = ExponentVector(a)
    if not all(e >= 1 for e in a):
        return None
    lhs = degree_complex_matroid(m, t, a)
    if lhs.is_void:
        return None
    b = ExponentVector(e - 1 for e in a)
    rhs = degree_complex_matroid(m, t - (m.n - m.rank), b)
    return lhs, rhs


if __name__ == '__main__':
    square = matroid_core.from_bases(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    for t in (1, 2):
        print('t=%d' % t, symbolic_generators(square, t).lines())
    print(degree_complex_matroid(square, 11, (1, 8, 3, 2)))
