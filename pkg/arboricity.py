"""
Arboricity a(M), the intersection number gamma(M) = a(M*), the Edmonds and
Nash-Williams formulas, graph bonds and forest covers, plus the records the
verification suites collect about them.
"""
import itertools
from dataclasses import dataclass

import networkx as nx

import utils
from utils import MatregError, VerificationRecord, to_mask, from_mask, popcount
import matroid_core


class ArboricityError(MatregError):
    pass


class StarMatroid(ArboricityError):
    pass


class ZeroRank(ArboricityError):
    pass


class NoEdges(ArboricityError):
    pass


class Inapplicable(ArboricityError):
    pass


BASE_COVER = 'BaseCover'
EMPTY_INTERSECTION = 'EmptyIntersection'
FOREST_COVER = 'ForestCover'


@dataclass(frozen=True)
class CoverCertificate:
    kind: str
    witness: tuple
    size: int

    def validate(self, m, disjoint=False):
        """Re-check the certificate against m without reusing the search."""
        masks = [to_mask(w) for w in self.witness]
        if len(masks) != self.size:
            return False
        if self.kind == FOREST_COVER:
            if not all(m.independent(w) for w in self.witness):
                return False
        elif not all(w in m.base_masks for w in masks):
            return False
        if self.kind == EMPTY_INTERSECTION:
            common = m.ground_mask
            for w in masks:
                common &= w
            return common == 0
        union = 0
        for w in masks:
            if disjoint and union & w:
                return False
            union |= w
        return union == m.ground_mask


def _min_cover(full, masks):
    """Fewest masks whose union is `full`, as a list of masks, or None.

    Iterative deepening on the cover size; each level branches on the members
    covering the lowest uncovered element.
    """
    masks = sorted(set(masks))
    union = 0
    for w in masks:
        union |= w
    if union & full != full:
        return None
    if full == 0:
        return [masks[0]] if masks else None
    widest = max(popcount(w) for w in masks)
    by_element = {}
    for i in from_mask(full):
        bit = 1 << (i - 1)
        by_element[i] = [w for w in masks if w & bit]

    def search(covered, chosen, left):
        missing = full & ~covered
        if not missing:
            return list(chosen)
        if left == 0 or popcount(missing) > left * widest:
            return None
        for w in by_element[utils.lowest_element(missing)]:
            chosen.append(w)
            found = search(covered | w, chosen, left - 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    for k in range(1, len(from_mask(full)) + 1):
        found = search(0, [], k)
        if found is not None:
            return found
    return None


def gamma(m):
    """Fewest bases with empty intersection, with a witness."""
    if matroid_core.is_star(m):
        raise StarMatroid('%s is a star, gamma is undefined' % m.canonical_id())
    full = m.ground_mask
    chosen = _min_cover(full, [full & ~b for b in m.base_masks])
    witness = matroid_core.SubsetFamily(from_mask(full & ~w) for w in chosen)
    return len(witness), CoverCertificate(EMPTY_INTERSECTION, witness, len(witness))


def arboricity_exact(m):
    """Fewest bases covering the ground set, with a witness."""
    chosen = _min_cover(m.ground_mask, m.base_masks)
    if chosen is None:
        raise Inapplicable('elements %s lie in no basis' % utils.format_subset(m.loops()))
    witness = matroid_core.SubsetFamily(from_mask(w) for w in chosen)
    return len(witness), CoverCertificate(BASE_COVER, witness, len(witness))


def arboricity_edmonds(m):
    """max ceil(|A| / r(A)) over subsets A of positive rank, with the largest
    maximizer (first in canonical order among equal sizes)."""
    if m.rank == 0:
        raise ZeroRank('Edmonds formula needs r(M) >= 1')
    best = None
    for size in range(m.n, 0, -1):
        for combo in itertools.combinations(m.ground, size):
            mask = to_mask(combo)
            r = max(popcount(mask & b) for b in m.base_masks)
            if r == 0:
                continue
            value = utils.ceil_div(size, r)
            if best is None or value > best[0]:
                best = (value, combo)
    return best


def nash_williams(g):
    """max ceil(e_H / (n_H - 1)) over induced subgraphs on at least two
    vertices, with the largest maximizing vertex set."""
    if g.edge_count == 0:
        raise NoEdges('graph has no edges')
    G = g.to_networkx()
    best = None
    for size in range(g.vertex_count, 1, -1):
        for nodes in itertools.combinations(range(1, g.vertex_count + 1), size):
            value = utils.ceil_div(G.subgraph(nodes).number_of_edges(), size - 1)
            if best is None or value > best[0]:
                best = (value, nodes)
    return best


def bonds(g):
    """Minimal edge cuts, found per connected component: a cut of a component
    is minimal exactly when both of its sides stay connected."""
    G = g.to_networkx()
    found = []
    for component in nx.connected_components(G):
        vertices = sorted(component)
        if len(vertices) < 2:
            continue
        anchor, others = vertices[0], vertices[1:]
        for size in range(0, len(others)):
            for extra in itertools.combinations(others, size):
                side = set((anchor,) + extra)
                rest = set(vertices) - side
                if not nx.is_connected(G.subgraph(side)) or not nx.is_connected(G.subgraph(rest)):
                    continue
                cut = [key for u, v, key in G.edges(vertices, keys=True)
                       if (u in side) != (v in side)]
                found.append(cut)
    return matroid_core.SubsetFamily(found)


def largest_bond(g):
    family = bonds(g)
    if not family:
        return 0
    return max(len(b) for b in family)


def min_forest_cover(g, disjoint=False):
    """Fewest forests covering every edge. With `disjoint` the forests are
    made edge-disjoint; dropping repeated edges keeps each one a forest, so
    the count does not change."""
    if g.edge_count == 0:
        raise NoEdges('graph has no edges')
    m = matroid_core.graphic(g)
    k, cert = arboricity_exact(m)
    witness = cert.witness
    if disjoint:
        used = 0
        parts = []
        for w in cert.witness:
            part = to_mask(w) & ~used
            used |= part
            parts.append(from_mask(part))
        witness = matroid_core.SubsetFamily(parts)
    return k, CoverCertificate(FOREST_COVER, witness, k)


# --------------------verification records---------------------------
def check_arbor(m):
    """a(M) <= c(M*), after stripping coloops as needed for stars."""
    note = ''
    target = m
    if matroid_core.is_star(m):
        target = matroid_core.core(m)
        note = 'coloops %s stripped' % utils.format_subset(matroid_core.star_centers(m))
    if target.is_empty or target.rank == 0:
        raise Inapplicable('%s has no non-coloop elements of positive rank' % m.canonical_id())
    a, cert = arboricity_exact(target)
    co = matroid_core.dual(target)
    gamma_dual = gamma(co)[0]
    c_dual = matroid_core.circumference(co)
    utils.assert_eq(cert.validate(target), True)
    passed = a <= c_dual and a == gamma_dual
    values = {'n': m.n, 'r': m.rank, 'a': a, 'gamma_dual': gamma_dual, 'c_dual': c_dual,
              'expected': 'a <= c(M*) and a == gamma(M*)',
              'observed': 'a=%d c(M*)=%d gamma(M*)=%d' % (a, c_dual, gamma_dual),
              'witness': utils.format_family(cert.witness)}
    return VerificationRecord('arbor', m.canonical_id(), passed, values, a == c_dual, note)


def check_gamma(m):
    """gamma(M) <= c(M) for non-stars."""
    value, cert = gamma(m)
    c = matroid_core.circumference(m)
    passed = value <= c and cert.validate(m)
    values = {'gamma': value, 'c': c, 'expected': 'gamma <= c',
              'observed': 'gamma=%d c=%d' % (value, c),
              'witness': utils.format_family(cert.witness)}
    return VerificationRecord('gamma', m.canonical_id(), passed, values, value == c)


def check_mb(m):
    if matroid_core.is_star(m):
        raise StarMatroid('%s is a star' % m.canonical_id())
    c = matroid_core.circumference(m)
    lhs = c * (m.n - m.rank)
    values = {'lhs': lhs, 'n': m.n, 'expected': 'c(M)(n - r) >= n',
              'observed': '%d*(%d-%d)=%d vs %d' % (c, m.n, m.rank, lhs, m.n)}
    return VerificationRecord('mb', m.canonical_id(), lhs >= m.n, values, lhs == m.n)


def check_h0(m):
    """For non-stars of rank n-1 the bases are all (n-1)-subsets and
    gamma = c = n."""
    if matroid_core.is_star(m):
        raise StarMatroid('%s is a star' % m.canonical_id())
    hyperplane = m.rank == m.n - 1
    all_subsets = m.bases == matroid_core.SubsetFamily(itertools.combinations(m.ground, m.n - 1))
    passed = hyperplane == all_subsets
    values = {'r': m.rank, 'n': m.n, 'expected': 'r = n-1 iff bases are all (n-1)-subsets'}
    if hyperplane:
        value = gamma(m)[0]
        c = matroid_core.circumference(m)
        passed = passed and value == c == m.n
        values['observed'] = 'gamma=%d c=%d n=%d' % (value, c, m.n)
    else:
        values['observed'] = 'r=%d, all (n-1)-subsets: %s' % (m.rank, all_subsets)
    return VerificationRecord('h0', m.canonical_id(), passed, values, hyperplane)


def check_edmonds(m):
    a = arboricity_exact(m)[0]
    formula, maximizer = arboricity_edmonds(m)
    passed = a == formula
    if not matroid_core.is_star(matroid_core.dual(m)):
        passed = passed and a == gamma(matroid_core.dual(m))[0]
    values = {'a': a, 'edmonds': formula, 'expected': 'a(M) == max ceil(|A|/r(A))',
              'observed': 'a=%d formula=%d' % (a, formula),
              'witness': utils.format_subset(maximizer)}
    return VerificationRecord('edmonds', m.canonical_id(), passed, values, True)


def check_nash_williams(g):
    """Nash-Williams == forest cover == a(M(G)) and a(G) <= c*(G)."""
    formula, nodes = nash_williams(g)
    cover, cert = min_forest_cover(g)
    m = matroid_core.graphic(g)
    exact = arboricity_exact(m)[0]
    c_star = largest_bond(g)
    passed = formula == cover == exact and exact <= c_star and cert.validate(m)
    values = {'nash_williams': formula, 'cover': cover, 'a': exact, 'c_star': c_star,
              'expected': 'NW == cover == a(G) <= c*(G)',
              'observed': 'NW=%d cover=%d a=%d c*=%d' % (formula, cover, exact, c_star),
              'witness': utils.format_subset(nodes)}
    gid = utils.canonical_hash(g.text())
    return VerificationRecord('nashwilliams', gid, passed, values, exact == c_star)


def check_bonds(g):
    """Bonds of g are the circuits of its cographic matroid."""
    family = bonds(g)
    expected = matroid_core.circuits(matroid_core.dual(matroid_core.graphic(g)))
    values = {'expected': utils.format_family(expected), 'observed': utils.format_family(family),
              'c_star': largest_bond(g)}
    gid = utils.canonical_hash(g.text())
    return VerificationRecord('bonds', gid, family == expected, values, True)


def check_forest_partition(g):
    """For bridgeless graphs, the fewest spanning forests with no edge common
    to all of them, gamma(M(G)) = a(M*(G)), is at most c(G); for simple graphs
    the partition into forests is reported against c(G) as well."""
    m = matroid_core.graphic(g)
    if matroid_core.is_star(m):
        raise Inapplicable('graph has a bridge')
    value = gamma(m)[0]
    c = matroid_core.circumference(m)
    passed = value <= c
    values = {'gamma': value, 'c': c, 'expected': 'gamma(M(G)) <= c(G)'}
    observed = 'gamma=%d c=%d' % (value, c)
    if g.is_simple():
        parts, cert = min_forest_cover(g, disjoint=True)
        passed = passed and parts <= c and cert.validate(m, disjoint=True)
        values['partition'] = parts
        observed += ' partition=%d' % parts
    values['observed'] = observed
    gid = utils.canonical_hash(g.text())
    return VerificationRecord('forest_partition', gid, passed, values, value == c)


def tsv_row(record):
    """id, n, r, a, gamma_dual, c_dual, pass"""
    v = record.values
    return '\t'.join(str(x) for x in (record.instance, v['n'], v['r'], v['a'],
                                      v['gamma_dual'], v['c_dual'], int(record.passed)))


if __name__ == '__main__':
    k4 = matroid_core.Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    print('a(K4) =', arboricity_exact(matroid_core.graphic(k4))[0])
    print('NW(K4) =', nash_williams(k4))
    print('c*(K4) =', largest_bond(k4))
