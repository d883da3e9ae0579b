import os

import pytest

import matroid_core
import formats
import families_enum
from families_enum import FamilySpec


@pytest.mark.parametrize('n, count', [(1, 2), (2, 5), (3, 16), (4, 68)])
def test_labeled_matroid_counts(n, count):
    assert sum(1 for _ in families_enum.enumerate_all_matroids(n)) == count


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_enumeration_matches_oracle(n):
    fast = list(families_enum.enumerate_all_matroids(n))
    slow = families_enum.oracle_matroids(n)
    assert set(fast) == set(slow)
    assert len(fast) == len(set(fast))


def test_enumeration_yields_valid_matroids():
    for m in families_enum.enumerate_all_matroids(4):
        assert matroid_core.from_bases(4, m.bases, allow_loops=True) == m


def test_enumeration_order():
    ranks = [m.rank for m in families_enum.enumerate_all_matroids(3)]
    assert ranks == sorted(ranks)
    first = next(families_enum.enumerate_all_matroids(3))
    assert first == matroid_core.Matroid(3, [()])


def test_enumeration_limits():
    with pytest.raises(families_enum.TooLarge):
        list(families_enum.enumerate_all_matroids(families_enum.MAX_EXHAUSTIVE_N + 1))
    with pytest.raises(families_enum.TooLarge):
        families_enum.oracle_matroids(families_enum.MAX_ORACLE_N + 1)


def test_uniform_family():
    spec = FamilySpec(families_enum.UNIFORM, k_range=(1, 2), n_range=(2, 3))
    assert list(families_enum.generate(spec)) == [
        matroid_core.uniform(1, 2), matroid_core.uniform(1, 3), matroid_core.uniform(2, 3)]


def test_graphs_within_caps():
    spec = FamilySpec(families_enum.GRAPHIC, max_vertices=3, max_edges=3, simple_only=True)
    graphs = list(families_enum.generate_graphs(spec))
    assert all(g.vertex_count <= 3 and 1 <= g.edge_count <= 3 for g in graphs)
    assert all(g.is_simple() for g in graphs)
    assert matroid_core.Graph(3, [(1, 2), (1, 3), (2, 3)]) in graphs


def test_parallel_edges_unless_simple():
    spec = FamilySpec(families_enum.GRAPHIC, max_vertices=2, max_edges=3)
    graphs = list(families_enum.generate_graphs(spec))
    assert matroid_core.Graph(2, [(1, 2)] * 3) in graphs


def test_graphic_and_cographic_are_loopless():
    for kind in (families_enum.GRAPHIC, families_enum.COGRAPHIC):
        spec = FamilySpec(kind, max_vertices=4, max_edges=5)
        stream = list(families_enum.generate(spec))
        assert stream
        assert all(not m.loops() for m in stream)
        assert len(stream) == len(set(stream))


def test_direct_sums():
    spec = FamilySpec(families_enum.DIRECT_SUM)
    stream = list(families_enum.generate(spec))
    u12 = matroid_core.uniform(1, 2)
    assert stream[0] == matroid_core.direct_sum(u12, u12)
    assert all(not m.loops() for m in stream)


def test_invalid_specs():
    with pytest.raises(families_enum.InvalidFamilySpec):
        FamilySpec('Bogus').validate()
    with pytest.raises(families_enum.TooLarge):
        FamilySpec(families_enum.EXHAUSTIVE, n_range=(7,)).validate()
    with pytest.raises(families_enum.InvalidFamilySpec):
        FamilySpec(families_enum.FROM_FILE).validate()


def test_catalog_on_disk(tmp_path):
    path = str(tmp_path / 'catalogs' / 'matroids_n3.hdf5')
    matroids = list(families_enum.enumerate_all_matroids(3))
    assert families_enum.save_catalog(path, matroids) == 16
    assert families_enum.load_catalog(path) == matroids
    spec = FamilySpec(families_enum.FROM_FILE, path=path)
    assert list(families_enum.generate(spec)) == matroids


def test_matroid_files(tmp_path, square):
    out = str(tmp_path / 'mats')
    paths = families_enum.write_matroid_files([square], out)
    assert paths == [os.path.join(out, '%s.mat' % square.canonical_id())]
    assert formats.load_matroid(paths[0]) == square
    spec = FamilySpec(families_enum.FROM_FILE, path=out)
    assert list(families_enum.generate(spec)) == [square]
