import os

import pytest

import matroid_core
import formats
from simplicial import SimplicialComplex


def test_parse_matroid(square):
    text = 'matroid v1\nn = 4\nbases = {1 2} {2 3} {3 4} {1 4}\n'
    assert formats.parse(text) == square


def test_parse_matroid_from_circuits(square):
    text = '# square\nmatroid v1\n\nn = 4\ncircuits = {1 3} {2 4}  # two parallel classes\n'
    assert formats.parse(text) == square


def test_parse_keeps_loops():
    m = formats.parse('matroid v1\nn = 3\nbases = {1 2}\n')
    assert m.loops() == (3,)


def test_parse_graph(k4, data_dir):
    assert formats.load_graph(os.path.join(data_dir, 'k4.graph')) == k4


def test_parse_complexes():
    void = formats.parse('complex v1\nvertices = 3\nfacets =\n')
    assert void.is_void
    empty = formats.parse('complex v1\nvertices = 3\nfacets = {}\n')
    assert empty.is_empty


def test_text_is_parsed_back(square, k4):
    triangle = SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])
    for obj in (square, k4, triangle):
        assert formats.parse(obj.text()) == obj


def test_dump_and_load(tmp_path, square):
    path = str(tmp_path / 'square.mat')
    formats.dump_matroid(square, path)
    assert formats.load_matroid(path) == square


def test_unclosed_brace_position():
    with pytest.raises(formats.ParseError) as info:
        formats.parse('matroid v1\nn = 4\nbases = {1 2} {2 3\n')
    assert info.value.line == 3
    assert info.value.column == 15
    assert str(info.value).startswith('line 3, column 15')


def test_bad_element_position():
    with pytest.raises(formats.ParseError) as info:
        formats.parse('matroid v1\nn = 4\nbases = {1 x}\n')
    assert (info.value.line, info.value.column) == (3, 12)


def test_unknown_header():
    with pytest.raises(formats.ParseError) as info:
        formats.parse('polytope v1\n')
    assert info.value.line == 1


def test_missing_key():
    with pytest.raises(formats.ParseError):
        formats.parse('matroid v1\nbases = {1}\n')


def test_duplicate_key():
    with pytest.raises(formats.ParseError) as info:
        formats.parse('matroid v1\nn = 2\nn = 2\nbases = {1}\n')
    assert info.value.line == 3


def test_bad_edge_token():
    with pytest.raises(formats.ParseError):
        formats.parse('graph v1\nvertices = 3\nedges = 1-2 2:3\n')


def test_invalid_matroid_is_not_a_parse_error():
    with pytest.raises(matroid_core.ExchangeViolation):
        formats.parse('matroid v1\nn = 4\nbases = {1 2} {3 4}\n')


def test_wrong_kind(tmp_path, square):
    path = str(tmp_path / 'square.mat')
    formats.dump(square, path)
    with pytest.raises(formats.ParseError):
        formats.load_graph(path)


def test_empty_input():
    with pytest.raises(formats.ParseError):
        formats.parse('# nothing here\n\n')
