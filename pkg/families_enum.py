"""
Test matroids and graphs for the verification suites: exhaustive labeled
enumeration, parametric families, and catalogs on disk.

Hierarchy of an HDF5 catalog:

{ 'masks':   all base bitmasks, concatenated
  'offsets': num_matroids + 1 start positions into masks
  'ground':  num_matroids ground set sizes }
"""
from __future__ import print_function

import itertools
import os
from dataclasses import dataclass, field

import h5py
import networkx as nx
import numpy as np

import utils
from utils import MatregError, to_mask, from_mask, popcount
import formats
import matroid_core
from matroid_core import Graph, Matroid

MAX_EXHAUSTIVE_N = 6
MAX_ORACLE_N = 5

UNIFORM = 'Uniform'
GRAPHIC = 'Graphic'
COGRAPHIC = 'Cographic'
DIRECT_SUM = 'DirectSum'
EXHAUSTIVE = 'Exhaustive'
FROM_FILE = 'FromFile'
KINDS = (UNIFORM, GRAPHIC, COGRAPHIC, DIRECT_SUM, EXHAUSTIVE, FROM_FILE)


class FamilyError(MatregError):
    pass


class TooLarge(FamilyError):
    pass


class InvalidFamilySpec(FamilyError):
    pass


@dataclass
class FamilySpec:
    kind: str
    k_range: tuple = (1, 2, 3)
    n_range: tuple = (2, 3, 4, 5)
    max_vertices: int = 5
    max_edges: int = 8
    path: str = None
    simple_only: bool = False
    seeds: list = field(default_factory=list)

    def validate(self):
        if self.kind not in KINDS:
            raise InvalidFamilySpec('unknown family kind %s' % self.kind)
        if self.kind == UNIFORM and not (self.k_range and self.n_range):
            raise InvalidFamilySpec('uniform family needs k and n ranges')
        if self.kind == EXHAUSTIVE:
            if not self.n_range:
                raise InvalidFamilySpec('exhaustive family needs an n range')
            if max(self.n_range) > MAX_EXHAUSTIVE_N:
                raise TooLarge('exhaustive enumeration stops at n = %d' % MAX_EXHAUSTIVE_N)
        if self.kind in (GRAPHIC, COGRAPHIC) and (self.max_vertices < 1 or self.max_edges < 1):
            raise InvalidFamilySpec('graph caps must be positive')
        if self.kind == FROM_FILE and not self.path:
            raise InvalidFamilySpec('FromFile needs a path')
        return self


# --------------------exhaustive enumeration---------------------------
def _exchange_constraints(candidates):
    """Basis exchange as clauses over candidate indices, grouped by the last
    index they mention: if i and j are chosen, one of `options` is chosen."""
    index = dict((c, k) for k, c in enumerate(candidates))
    by_last = [[] for _ in candidates]
    for i, b1 in enumerate(candidates):
        for j, b2 in enumerate(candidates):
            if i == j:
                continue
            options = b2 & ~b1
            for x in from_mask(b1 & ~b2):
                rest = b1 & ~(1 << (x - 1))
                witnesses = [index[rest | (1 << (y - 1))] for y in from_mask(options)]
                option_mask = 0
                for w in witnesses:
                    option_mask |= 1 << w
                last = max([i, j] + witnesses)
                by_last[last].append(((1 << i) | (1 << j), option_mask))
    return by_last


def _families_of_rank(n, r):
    candidates = [to_mask(c) for c in itertools.combinations(range(1, n + 1), r)]
    if len(candidates) == 1:
        return [(candidates[0],)]
    by_last = _exchange_constraints(candidates)
    found = []

    def walk(k, chosen):
        if k == len(candidates):
            if chosen:
                found.append(tuple(candidates[i] for i in range(k) if chosen >> i & 1))
            return
        for take in (True, False):
            state = chosen | (1 << k) if take else chosen
            ok = True
            for pair, options in by_last[k]:
                if state & pair == pair and not state & options:
                    ok = False
                    break
            if ok:
                walk(k + 1, state)

    walk(0, 0)
    return found


def enumerate_all_matroids(n):
    """Every labeled matroid on [n], loops included, rank by rank in
    canonical order."""
    if n < 1:
        raise FamilyError('n must be at least 1')
    if n > MAX_EXHAUSTIVE_N:
        raise TooLarge('n = %d exceeds the exhaustive limit %d' % (n, MAX_EXHAUSTIVE_N))
    for r in range(n + 1):
        families = sorted(tuple(from_mask(b) for b in fam) for fam in _families_of_rank(n, r))
        for bases in families:
            yield Matroid(n, bases)


def _augmentation_holds(faces):
    for small in faces:
        for big in faces:
            if popcount(small) >= popcount(big):
                continue
            if not any((small | (1 << (x - 1))) in faces for x in from_mask(big & ~small)):
                return False
    return True


def oracle_matroids(n):
    """Matroids on [n] found the slow way: every antichain of subsets is taken
    as the facet list of an independence system, which is kept when the
    augmentation axiom holds."""
    if n > MAX_ORACLE_N:
        raise TooLarge('the independence-system oracle stops at n = %d' % MAX_ORACLE_N)
    subsets = list(range(1 << n))
    found = []

    def walk(k, chosen):
        if k == len(subsets):
            if chosen:
                faces = set()
                for f in chosen:
                    sub = f
                    while True:
                        faces.add(sub)
                        if sub == 0:
                            break
                        sub = (sub - 1) & f
                if _augmentation_holds(faces):
                    found.append(tuple(from_mask(f) for f in chosen))
            return
        s = subsets[k]
        if not any(s & c == s or s & c == c for c in chosen):
            walk(k + 1, chosen + [s])
        walk(k + 1, chosen)

    walk(0, [])
    out = [Matroid(n, bases) for bases in found]
    return sorted(out, key=lambda m: (m.rank, m.bases))


# --------------------parametric families---------------------------
def generate_graphs(spec):
    """Graphs of the networkx atlas within the vertex and edge caps, then a
    series of parallel edges on two vertices."""
    for G in nx.graph_atlas_g():
        nodes = G.number_of_nodes()
        edges = G.number_of_edges()
        if nodes < 1 or nodes > spec.max_vertices or edges < 1 or edges > spec.max_edges:
            continue
        yield Graph(nodes, sorted((min(u, v) + 1, max(u, v) + 1) for u, v in G.edges()))
    if spec.simple_only:
        return
    for m in range(2, min(spec.max_edges, 4) + 1):
        yield Graph(2, [(1, 2)] * m)


def _loopless(stream):
    seen = set()
    for m in stream:
        if m.loops() or m in seen:
            continue
        seen.add(m)
        yield m


def default_seeds():
    return [matroid_core.uniform(1, 2), matroid_core.uniform(1, 3),
            matroid_core.uniform(2, 3), matroid_core.uniform(1, 1)]


def load_catalog(path):
    with h5py.File(path, 'r') as hf:
        masks = np.array(hf.get('masks'))
        offsets = np.array(hf.get('offsets'))
        ground = np.array(hf.get('ground'))
    out = []
    for k, n in enumerate(ground):
        bases = [from_mask(int(b)) for b in masks[offsets[k]:offsets[k + 1]]]
        out.append(Matroid(int(n), bases))
    return out


def save_catalog(path, matroids):
    matroids = list(matroids)
    offsets = [0]
    masks = []
    for m in matroids:
        masks.extend(m.base_masks)
        offsets.append(len(masks))
    dirname = os.path.dirname(path)
    if dirname:
        utils.create_dir(dirname)
    with h5py.File(path, 'w') as hf:
        hf.create_dataset('masks', data=np.array(masks, dtype=np.int64))
        hf.create_dataset('offsets', data=np.array(offsets, dtype=np.int64))
        hf.create_dataset('ground', data=np.array([m.n for m in matroids], dtype=np.int64))
    return len(matroids)


def _from_path(path):
    if os.path.isdir(path):
        for f in utils.load_folder(path, '.mat'):
            yield formats.load_matroid(f)
    elif path.endswith('.hdf5') or path.endswith('.h5'):
        for m in load_catalog(path):
            yield m
    else:
        yield formats.load_matroid(path)


def generate(spec):
    """Deterministic stream of matroids for a FamilySpec."""
    spec.validate()
    if spec.kind == UNIFORM:
        for n in spec.n_range:
            for k in spec.k_range:
                if 1 <= k < n:
                    yield matroid_core.uniform(k, n)
    elif spec.kind == GRAPHIC:
        for m in _loopless(matroid_core.graphic(g) for g in generate_graphs(spec)):
            yield m
    elif spec.kind == COGRAPHIC:
        stream = (matroid_core.dual(matroid_core.graphic(g)) for g in generate_graphs(spec))
        for m in _loopless(stream):
            yield m
    elif spec.kind == DIRECT_SUM:
        seeds = spec.seeds or default_seeds()
        pairs = ((a, b) for i, a in enumerate(seeds) for b in seeds[i:])
        for m in _loopless(matroid_core.direct_sum(a, b) for a, b in pairs):
            yield m
    elif spec.kind == EXHAUSTIVE:
        for n in spec.n_range:
            for m in enumerate_all_matroids(n):
                yield m
    else:
        for m in _from_path(spec.path):
            yield m


def write_matroid_files(stream, out_dir):
    """One `<canonical id>.mat` file per matroid; returns the paths written."""
    utils.create_dir(out_dir)
    paths = []
    for m in stream:
        path = os.path.join(out_dir, '%s.mat' % m.canonical_id())
        formats.dump_matroid(m, path)
        paths.append(path)
    return paths


if __name__ == '__main__':
    for n in range(1, 5):
        print(n, sum(1 for _ in enumerate_all_matroids(n)))
