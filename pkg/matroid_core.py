"""
Explicit matroids on the ground set [n] = {1, ..., n}, stored by their bases.

Subsets are sorted integer tuples outside this module and bitmasks inside it
(see utils.to_mask). Every set-valued result is emitted in canonical order:
lexicographic on sorted tuples.
"""
import itertools
import math
from functools import lru_cache

import networkx as nx

import utils
from utils import MatregError, to_mask, from_mask, popcount, full_mask


class MatroidError(MatregError):
    pass


class EmptyFamily(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeViolation(MatroidError):
    def __init__(self, b1, b2, x):
        self.triple = (b1, b2, x)
        super(ExchangeViolation, self).__init__(
            'basis exchange fails for B1=%s, B2=%s, x=%d'
            % (utils.format_subset(b1), utils.format_subset(b2), x))


class OutOfRange(MatroidError):
    pass


class NotAntichain(MatroidError):
    pass


class InvalidRank(MatroidError):
    pass


class EmptySubset(MatroidError):
    pass


class DependentFace(MatroidError):
    pass


class LoopElement(MatroidError):
    pass


class SubsetFamily(tuple):
    """Canonically ordered family of element subsets without duplicates."""

    def __new__(cls, members=()):
        return super(SubsetFamily, cls).__new__(cls, utils.canonical_family(members))

    def sizes(self):
        return [len(s) for s in self]


class Matroid(object):
    """Matroid given by its bases. Use `from_bases` to build a validated one;
    the constructor trusts its input apart from canonical ordering."""

    def __init__(self, n, bases):
        self.n = n
        self.bases = SubsetFamily(bases)
        self.base_masks = tuple(to_mask(b) for b in self.bases)

    @property
    def rank(self):
        return len(self.bases[0])

    @property
    def ground(self):
        return tuple(range(1, self.n + 1))

    @property
    def ground_mask(self):
        return full_mask(self.n)

    @property
    def is_empty(self):
        """The sentinel produced by `core` when every element is a coloop."""
        return self.n == 0

    def independent(self, subset):
        mask = to_mask(subset)
        return any(mask & b == mask for b in self.base_masks)

    def loops(self):
        covered = 0
        for b in self.base_masks:
            covered |= b
        return from_mask(self.ground_mask & ~covered)

    def text(self):
        return 'matroid v1\nn = %d\nbases = %s\n' % (self.n, utils.format_family(self.bases))

    def canonical_id(self):
        return utils.canonical_hash(self.text())

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return 'Matroid(n=%d, bases=%s)' % (self.n, utils.format_family(self.bases))


class Graph(object):
    """Multigraph on vertices 1..vertex_count; edge i of `edges` is element i."""

    def __init__(self, vertex_count, edges):
        if vertex_count < 1:
            raise MatroidError('a graph needs at least one vertex')
        self.vertex_count = vertex_count
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        for idx, (u, v) in enumerate(self.edges, 1):
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise OutOfRange('edge %d (%d-%d) leaves vertices 1..%d' % (idx, u, v, vertex_count))
            if u == v:
                raise MatroidError('edge %d is a loop at vertex %d' % (idx, u))

    @property
    def edge_count(self):
        return len(self.edges)

    def to_networkx(self):
        g = nx.MultiGraph()
        g.add_nodes_from(range(1, self.vertex_count + 1))
        for label, (u, v) in enumerate(self.edges, 1):
            g.add_edge(u, v, key=label)
        return g

    def is_simple(self):
        seen = set()
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def text(self):
        return 'graph v1\nvertices = %d\nedges = %s\n' % (
            self.vertex_count, ' '.join('%d-%d' % e for e in self.edges))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.vertex_count == other.vertex_count \
            and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return 'Graph(%d, %s)' % (self.vertex_count, list(self.edges))


def _check_elements(n, family):
    for s in family:
        for i in s:
            if not 1 <= i <= n:
                raise OutOfRange('element %d out of range 1..%d' % (i, n))


def _exchange_violation(base_masks):
    """First (B1, B2, x) breaking basis exchange, or None."""
    present = set(base_masks)
    for b1 in base_masks:
        for b2 in base_masks:
            diff = b1 & ~b2
            if not diff:
                continue
            options = b2 & ~b1
            for x in from_mask(diff):
                rest = b1 & ~(1 << (x - 1))
                if not any((rest | (1 << (y - 1))) in present for y in from_mask(options)):
                    return b1, b2, x
    return None


def from_bases(n, bases, allow_loops=False):
    """Validated matroid on [n] with the given bases."""
    if n < 1:
        raise MatroidError('ground set must have n >= 1, got %d' % n)
    family = utils.canonical_family(bases)
    if not family:
        raise EmptyFamily('a matroid needs at least one basis')
    _check_elements(n, family)
    sizes = set(len(b) for b in family)
    if len(sizes) > 1:
        raise UnequalCardinality('bases have sizes %s' % sorted(sizes))
    violation = _exchange_violation([to_mask(b) for b in family])
    if violation is not None:
        b1, b2, x = violation
        raise ExchangeViolation(from_mask(b1), from_mask(b2), x)
    m = Matroid(n, family)
    if not allow_loops and m.loops():
        raise LoopElement('elements %s lie in no basis' % utils.format_subset(m.loops()))
    return m


def from_circuits(n, circuits, allow_loops=False):
    """Matroid whose circuits are exactly `circuits`."""
    if n < 1:
        raise MatroidError('ground set must have n >= 1, got %d' % n)
    family = utils.canonical_family(circuits)
    _check_elements(n, family)
    masks = [to_mask(c) for c in family]
    for a in masks:
        for b in masks:
            if a != b and a & b == a:
                raise NotAntichain('%s is contained in %s'
                                   % (utils.format_subset(from_mask(a)), utils.format_subset(from_mask(b))))
    independent = [s for s in range(1 << n) if not any(c & s == c for c in masks)]
    indep_set = set(independent)
    maximal = [s for s in independent
               if not any((s | (1 << i)) in indep_set for i in range(n) if not s >> i & 1)]
    if len(set(popcount(s) for s in maximal)) > 1:
        # maximal circuit-free sets of different sizes: not a matroid
        violation = _exchange_violation(maximal)
        if violation is None:
            b1 = min(maximal, key=popcount)
            b2 = max(maximal, key=popcount)
            violation = (b1, b2, from_mask(b1 & ~b2)[0])
        b1, b2, x = violation
        raise ExchangeViolation(from_mask(b1), from_mask(b2), x)
    m = from_bases(n, [from_mask(s) for s in maximal], allow_loops=allow_loops)
    if circuits_of(m) != SubsetFamily(family):
        raise MatroidError('circuit elimination fails: the matroid spanned has circuits %s'
                           % utils.format_family(circuits_of(m)))
    return m


def uniform(k, n):
    if n < 1 or k < 0 or k > n:
        raise InvalidRank('U_{%d,%d} needs 0 <= k <= n and n >= 1' % (k, n))
    return Matroid(n, itertools.combinations(range(1, n + 1), k))


def free_matroid(n):
    return uniform(n, n)


def graphic(g):
    """Cycle matroid of g: bases are the maximal spanning forests."""
    if g.edge_count == 0:
        raise MatroidError('graph has no edges')
    multigraph = g.to_networkx()
    rank = g.vertex_count - nx.number_connected_components(multigraph)
    keyed = [(u, v, label) for label, (u, v) in enumerate(g.edges, 1)]
    bases = []
    for combo in itertools.combinations(range(1, g.edge_count + 1), rank):
        if nx.is_forest(multigraph.edge_subgraph([keyed[i - 1] for i in combo])):
            bases.append(combo)
    return Matroid(g.edge_count, bases)


def dual(m):
    full = m.ground_mask
    return Matroid(m.n, [from_mask(full & ~b) for b in m.base_masks])


def rank_subset(m, a):
    _check_elements(m.n, [a])
    mask = to_mask(a)
    return max(popcount(mask & b) for b in m.base_masks)


@lru_cache(maxsize=65536)
def circuits_of(m):
    bases = m.base_masks
    found = []
    for size in range(1, m.n + 1):
        for combo in itertools.combinations(range(1, m.n + 1), size):
            mask = to_mask(combo)
            if any(mask & b == mask for b in bases):
                continue
            if any(c & mask == c for c in found):
                continue
            found.append(mask)
    return SubsetFamily(from_mask(c) for c in found)


def circuits(m):
    return circuits_of(m)


def circumference(m):
    """Size of the largest circuit, or None when the matroid has no circuit."""
    family = circuits_of(m)
    if not family:
        return None
    return max(len(c) for c in family)


def restriction(m, a):
    """M|A relabeled to 1..|A|; returns (matroid, labels) with labels[j-1]
    the original element carried by new element j."""
    labels = utils.canonical_subset(a)
    if not labels:
        raise EmptySubset('restriction to the empty set')
    _check_elements(m.n, [labels])
    mask = to_mask(labels)
    cut = set(b & mask for b in m.base_masks)
    r = max(popcount(c) for c in cut)
    position = dict((old, new) for new, old in enumerate(labels, 1))
    bases = [tuple(position[i] for i in from_mask(c)) for c in cut if popcount(c) == r]
    return Matroid(len(labels), bases), labels


def deletion(m, x):
    return restriction(m, [i for i in m.ground if i != x])


def link_matroid(m, f):
    """Contraction of the independent set f with the loops it creates dropped;
    returns (matroid, labels) like `restriction`."""
    face = utils.canonical_subset(f)
    _check_elements(m.n, [face])
    fmask = to_mask(face)
    if not any(fmask & b == fmask for b in m.base_masks):
        raise DependentFace('%s is dependent' % utils.format_subset(face))
    rest = [b & ~fmask for b in m.base_masks if b & fmask == fmask]
    covered = 0
    for b in rest:
        covered |= b
    labels = from_mask(covered)
    if not labels:
        return Matroid(0, [()]), ()
    position = dict((old, new) for new, old in enumerate(labels, 1))
    bases = [tuple(position[i] for i in from_mask(b)) for b in rest]
    return Matroid(len(labels), bases), labels


def star_centers(m):
    common = m.ground_mask
    for b in m.base_masks:
        common &= b
    return from_mask(common)


def is_star(m):
    return len(star_centers(m)) > 0


def core(m):
    """m with its coloops removed; Matroid(0, [()]) when nothing is left."""
    centers = set(star_centers(m))
    keep = [i for i in m.ground if i not in centers]
    if not keep:
        return Matroid(0, [()])
    return restriction(m, keep)[0]


def direct_sum(m1, m2):
    shift = m1.n
    bases = [b1 + tuple(i + shift for i in b2) for b1 in m1.bases for b2 in m2.bases]
    return Matroid(m1.n + m2.n, bases)


def is_uniform(m):
    return len(m.bases) == math.comb(m.n, m.rank)


if __name__ == '__main__':
    square = from_bases(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    print(square)
    print('circuits', utils.format_family(circuits(square)))
    print('c(M) = %s, c(M*) = %s' % (circumference(square), circumference(dual(square))))
