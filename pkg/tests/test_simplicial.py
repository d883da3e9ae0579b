import numpy as np
import pytest

import matroid_core
import families_enum
import simplicial
from simplicial import SimplicialComplex


@pytest.fixture
def triangle():
    return SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])


@pytest.mark.parametrize('p', [2, 3, 5])
def test_circle_homology(triangle, p):
    assert simplicial.reduced_homology(triangle, p).dims == (0, 0, 1)


def test_void_and_empty_complex_differ():
    void = SimplicialComplex(3, [])
    empty = SimplicialComplex(3, [()])
    assert void.is_void and not void.is_empty
    assert empty.is_empty and not empty.is_void
    assert void.dim is None
    assert empty.dim == -1
    assert simplicial.reduced_homology(void).dims == (0,)
    assert simplicial.reduced_homology(empty).dims == (1,)


def test_two_points():
    c = SimplicialComplex(2, [(1,), (2,)])
    report = simplicial.reduced_homology(c, 2)
    assert report.dims == (0, 1)
    assert report.degree(0) == 1
    assert report.lines() == ['H~-1 = 0', 'H~0 = 1']


def test_facets_drop_non_maximal_members():
    c = SimplicialComplex(3, [(1,), (1, 2), (2, 3), (3,)])
    assert c.facets == ((1, 2), (2, 3))


def test_link(square):
    c = simplicial.independence_complex(square)
    assert simplicial.link(c, (1,)).facets == ((2,), (4,))
    with pytest.raises(simplicial.FaceNotInComplex):
        simplicial.link(c, (1, 3))


def test_is_cone():
    assert simplicial.is_cone(SimplicialComplex(3, [(1, 2, 3)])) == (True, 1)
    assert simplicial.is_cone(SimplicialComplex(3, [(1, 3), (2, 3)])) == (True, 3)
    assert simplicial.is_cone(SimplicialComplex(3, [(1, 2), (2, 3), (1, 3)])) == (False, None)
    with pytest.raises(simplicial.VoidComplex):
        simplicial.is_cone(SimplicialComplex(3, []))


def test_cone_is_acyclic():
    c = SimplicialComplex(4, [(1, 2, 4), (2, 3, 4)])
    assert simplicial.is_cone(c)[0]
    assert simplicial.is_acyclic(c, 2)
    assert simplicial.is_acyclic(c, 3)


def test_not_prime(triangle):
    with pytest.raises(simplicial.NotPrime):
        simplicial.reduced_homology(triangle, 4)


def test_rank_mod_p():
    assert simplicial.rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert simplicial.rank_mod_p([[1, 2], [3, 4]], 2) == 1
    assert simplicial.rank_mod_p([[1, 2], [3, 4]], 3) == 2
    assert simplicial.rank_mod_p([], 2) == 0


def test_f_vector_and_euler_characteristic(triangle):
    assert triangle.f_vector() == (1, 3, 3)
    assert simplicial.reduced_euler_characteristic(triangle) == -1


def test_homology_in_degree(triangle):
    assert simplicial.homology_in_degree(triangle, 1) == 1
    assert simplicial.homology_in_degree(triangle, 0) == 0
    assert simplicial.homology_in_degree(triangle, 5) == 0


def test_complex_from_nonfaces(square):
    c = simplicial.complex_from_nonfaces(4, [(1, 3), (2, 4)])
    assert c == simplicial.independence_complex(square)
    assert simplicial.complex_from_nonfaces(2, [()]).is_void


def test_delete_vertex(square):
    c = simplicial.delete_vertex(simplicial.independence_complex(square), 3)
    assert c.facets == ((1, 2), (1, 4))


def test_matroid_complexes():
    c = simplicial.independence_complex(matroid_core.uniform(2, 4))
    assert c.is_pure()
    assert simplicial.reduced_homology(c, 2).dims == (0, 0, 3)


def test_square_complex_is_a_circle(square):
    c = simplicial.independence_complex(square)
    assert simplicial.reduced_homology(c, 3).dims == (0, 0, 1)


COMPLEXES_ON_FOUR = [simplicial.independence_complex(m) for m in families_enum.enumerate_all_matroids(4)] + [
    SimplicialComplex(4, []),
    SimplicialComplex(4, [()]),
    SimplicialComplex(4, [(1, 2), (2, 3), (3, 4)]),
    SimplicialComplex(4, [(1, 2, 3), (4,)]),
]


@pytest.mark.parametrize('c', COMPLEXES_ON_FOUR)
@pytest.mark.parametrize('p', [2, 3])
def test_euler_characteristic_from_homology(c, p):
    dims = simplicial.reduced_homology(c, p).dims
    alternating = sum((-1) ** (k - 1) * d for k, d in enumerate(dims))
    assert alternating == simplicial.reduced_euler_characteristic(c)


@pytest.mark.parametrize('c', COMPLEXES_ON_FOUR)
@pytest.mark.parametrize('p', [2, 3])
def test_boundary_squares_to_zero(c, p):
    if c.is_void:
        return
    for i in range(c.dim + 1):
        product = np.dot(simplicial.boundary_matrix(c, i, p), simplicial.boundary_matrix(c, i + 1, p)) % p
        assert not product.any()


def test_relabel():
    c = SimplicialComplex(2, [(1, 2)])
    assert simplicial.relabel(c, (2, 4), 4) == SimplicialComplex(4, [(2, 4)])
