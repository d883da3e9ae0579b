"""
Facet-represented simplicial complexes on vertices 1..vertex_count and their
reduced homology over the prime field GF(p).

Two degenerate states are kept apart: the void complex (no faces, facets == ())
and the empty complex {∅} (facets == ((),)).
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

import utils
from utils import MatregError, to_mask, from_mask

MAX_HOMOLOGY_VERTICES = 22


class ComplexError(MatregError):
    pass


class FaceNotInComplex(ComplexError):
    pass


class VoidComplex(ComplexError):
    pass


class NotPrime(ComplexError):
    pass


class TooLarge(ComplexError):
    pass


class SimplicialComplex(object):
    def __init__(self, vertex_count, facets):
        self.vertex_count = vertex_count
        self.facets = utils.maximal_members(facets)
        self.facet_masks = tuple(to_mask(f) for f in self.facets)

    @property
    def is_void(self):
        return len(self.facets) == 0

    @property
    def is_empty(self):
        return self.facets == ((),)

    @property
    def dim(self):
        """Dimension; -1 for {∅} and None for the void complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def vertices(self):
        covered = 0
        for f in self.facet_masks:
            covered |= f
        return from_mask(covered)

    def contains(self, face):
        mask = to_mask(face)
        return any(mask & f == mask for f in self.facet_masks)

    def faces(self, size):
        """Faces with `size` vertices in canonical order."""
        found = set()
        for f in self.facets:
            if len(f) >= size:
                found.update(itertools.combinations(f, size))
        return tuple(sorted(found))

    def is_pure(self):
        return len(set(len(f) for f in self.facets)) <= 1

    def f_vector(self):
        """Face counts f_{-1}, f_0, ..., f_dim."""
        if self.is_void:
            return ()
        return tuple(len(self.faces(k)) for k in range(self.dim + 2))

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets \
            and self.vertex_count == other.vertex_count

    def __hash__(self):
        return hash((self.vertex_count, self.facets))

    def __repr__(self):
        return 'SimplicialComplex(%d, %s)' % (self.vertex_count, utils.format_family(self.facets))

    def text(self):
        return 'complex v1\nvertices = %d\nfacets = %s\n' % (
            self.vertex_count, utils.format_family(self.facets))


@dataclass(frozen=True)
class HomologyReport:
    prime: int
    dims: tuple  # dims[k] is dim H~_{k-1}

    def degree(self, i):
        k = i + 1
        if 0 <= k < len(self.dims):
            return self.dims[k]
        return 0

    def is_zero(self):
        return not any(self.dims)

    def lines(self):
        return ['H~%d = %d' % (k - 1, d) for k, d in enumerate(self.dims)]


def independence_complex(m):
    return SimplicialComplex(m.n, m.bases)


def link(c, f):
    face = utils.canonical_subset(f)
    if not c.contains(face):
        raise FaceNotInComplex('%s is not a face' % utils.format_subset(face))
    mask = to_mask(face)
    return SimplicialComplex(c.vertex_count,
                             [from_mask(g & ~mask) for g in c.facet_masks if g & mask == mask])


def relabel(c, labels, vertex_count):
    """Carry the facets of a complex on 1..len(labels) to the given labels."""
    return SimplicialComplex(vertex_count, [tuple(labels[i - 1] for i in f) for f in c.facets])


def restrict(c, vertices):
    mask = to_mask(vertices)
    if c.is_void:
        return c
    return SimplicialComplex(c.vertex_count, [from_mask(g & mask) for g in c.facet_masks])


def delete_vertex(c, u):
    return restrict(c, [v for v in range(1, c.vertex_count + 1) if v != u])


def is_cone(c):
    """(True, least center) if some vertex lies in every facet, else (False, None)."""
    if c.is_void:
        raise VoidComplex('cone test on the void complex')
    common = utils.full_mask(c.vertex_count)
    for f in c.facet_masks:
        common &= f
    if common:
        return True, utils.lowest_element(common)
    return False, None


def complex_from_nonfaces(vertex_count, nonfaces):
    """Complex whose faces are the subsets of [vertex_count] containing no member
    of `nonfaces`."""
    blocked = [to_mask(s) for s in nonfaces]
    if any(b == 0 for b in blocked):
        return SimplicialComplex(vertex_count, [])
    faces = [s for s in range(1 << vertex_count) if not any(b & s == b for b in blocked)]
    return SimplicialComplex(vertex_count, [from_mask(s) for s in faces])


def reduced_euler_characteristic(c):
    return sum((-1) ** (k - 1) * f for k, f in enumerate(c.f_vector()))


# --------------------linear algebra over GF(p)---------------------------
def rank_mod_p(matrix, p):
    """Rank of an integer matrix over GF(p) by dense Gaussian elimination."""
    R = np.array(matrix, dtype=np.int64) % p
    if R.size == 0:
        return 0
    rows, cols = R.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.nonzero(R[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + nonzero[0]
        if pivot != rank:
            R[[rank, pivot]] = R[[pivot, rank]]
        inv = pow(int(R[rank, col]), p - 2, p)
        R[rank] = (R[rank] * inv) % p
        below = R[rank + 1:, col].copy()
        if below.any():
            R[rank + 1:] = (R[rank + 1:] - np.outer(below, R[rank])) % p
        rank += 1
    return rank


def boundary_matrix(c, i, p):
    """Matrix of d_i from i-dimensional faces to (i-1)-dimensional ones; rows
    and columns follow the canonical face order."""
    rows = c.faces(i)
    cols = c.faces(i + 1)
    index = dict((f, k) for k, f in enumerate(rows))
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            M[index[sub], j] = (-1) ** pos % p
    return M


def _check_homology_input(c, p):
    if not utils.is_prime(p):
        raise NotPrime('%d is not prime' % p)
    if len(c.vertices()) > MAX_HOMOLOGY_VERTICES:
        raise TooLarge('%d vertices exceed the face enumeration limit %d'
                       % (len(c.vertices()), MAX_HOMOLOGY_VERTICES))


def _boundary_rank(c, i, p):
    """Rank of d_i for the complex; d_i maps faces of dimension i to dimension i-1."""
    if i < 0:
        return 0
    return rank_mod_p(boundary_matrix(c, i, p), p)


def reduced_homology(c, p=2):
    _check_homology_input(c, p)
    if c.is_void:
        return HomologyReport(p, (0,))
    top = c.dim
    ranks = [_boundary_rank(c, i, p) for i in range(top + 2)]
    dims = []
    for i in range(-1, top + 1):
        count = len(c.faces(i + 1))
        nullity = count - (ranks[i] if i >= 0 else 0)
        dims.append(nullity - ranks[i + 1])
    return HomologyReport(p, tuple(dims))


@lru_cache(maxsize=200000)
def _homology_in_degree(vertex_count, facets, i, p):
    c = SimplicialComplex(vertex_count, facets)
    if c.is_void or i < -1 or i > c.dim:
        return 0
    count = len(c.faces(i + 1))
    if count == 0:
        return 0
    return count - _boundary_rank(c, i, p) - _boundary_rank(c, i + 1, p)


def homology_in_degree(c, i, p=2):
    """dim H~_i(c; GF(p)) without computing the other degrees."""
    _check_homology_input(c, p)
    return _homology_in_degree(c.vertex_count, c.facets, i, p)


def is_acyclic(c, p=2):
    return reduced_homology(c, p).is_zero()


if __name__ == '__main__':
    triangle = SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])
    print(triangle)
    print('\n'.join(reduced_homology(triangle, 2).lines()))
