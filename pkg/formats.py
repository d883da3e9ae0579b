"""
Plain-text formats for matroids, graphs and complexes.

    matroid v1            graph v1              complex v1
    n = 4                 vertices = 4          vertices = 3
    bases = {1 2} {2 3}   edges = 1-2 2-3 3-4   facets = {1 2} {1 3} {2 3}

A matroid may give `circuits = ...` instead of `bases`. `facets =` with
nothing after it is the void complex and `facets = {}` is {∅}. `#` starts a
comment; blank lines are skipped.
"""
import re

from utils import MatregError
import matroid_core
from simplicial import SimplicialComplex

MATROID_HEADER = 'matroid v1'
GRAPH_HEADER = 'graph v1'
COMPLEX_HEADER = 'complex v1'

_KEYS = {
    MATROID_HEADER: ('n', 'bases', 'circuits'),
    GRAPH_HEADER: ('vertices', 'edges'),
    COMPLEX_HEADER: ('vertices', 'facets'),
}


class ParseError(MatregError):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super(ParseError, self).__init__('line %d, column %d: %s' % (line, column, message))


def _lines(text):
    """(line number, raw line) for every line that is not blank or a comment."""
    for number, raw in enumerate(text.splitlines(), 1):
        body = raw.split('#', 1)[0]
        if body.strip():
            yield number, body.rstrip()


def _read_fields(text):
    entries = list(_lines(text))
    if not entries:
        raise ParseError(1, 1, 'empty input')
    number, header = entries[0]
    header = ' '.join(header.split())
    if header not in _KEYS:
        raise ParseError(number, 1, 'unknown header %r' % header)
    fields = {}
    for number, body in entries[1:]:
        if '=' not in body:
            raise ParseError(number, 1, 'expected key = value')
        key, value = body.split('=', 1)
        key = key.strip()
        if key not in _KEYS[header]:
            raise ParseError(number, 1, 'unknown key %r for %s' % (key, header))
        if key in fields:
            raise ParseError(number, 1, 'duplicate key %r' % key)
        fields[key] = (value, number, len(body) - len(value) + 1)
    return header, fields


def _require(fields, key, header):
    if key not in fields:
        raise ParseError(max([v[1] for v in fields.values()] or [1]), 1,
                         '%s needs a %r line' % (header, key))
    return fields[key]


def _integer(field):
    value, number, column = field
    text = value.strip()
    if not re.match(r'^\d+$', text):
        raise ParseError(number, column + len(value) - len(value.lstrip()),
                         'expected a nonnegative integer, got %r' % text)
    return int(text)


def _family(field):
    """Parse `{1 2} {3}`; columns in errors are 1-based in the physical line."""
    value, number, column = field
    family = []
    pos = 0
    while pos < len(value):
        ch = value[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != '{':
            raise ParseError(number, column + pos, "expected '{', got %r" % ch)
        close = value.find('}', pos)
        if close < 0:
            raise ParseError(number, column + pos, "unclosed '{'")
        members = []
        for token in re.finditer(r'\S+', value[pos + 1:close]):
            if not token.group().isdigit():
                raise ParseError(number, column + pos + 1 + token.start(),
                                 'expected an element, got %r' % token.group())
            members.append(int(token.group()))
        family.append(tuple(members))
        pos = close + 1
    return family


def _edges(field):
    value, number, column = field
    edges = []
    for token in re.finditer(r'\S+', value):
        m = re.match(r'^(\d+)-(\d+)$', token.group())
        if not m:
            raise ParseError(number, column + token.start(), 'expected u-v, got %r' % token.group())
        edges.append((int(m.group(1)), int(m.group(2))))
    return edges


def parse(text):
    """Matroid, Graph or SimplicialComplex, depending on the header."""
    header, fields = _read_fields(text)
    if header == MATROID_HEADER:
        n = _integer(_require(fields, 'n', header))
        if 'bases' in fields and 'circuits' in fields:
            raise ParseError(fields['circuits'][1], 1, 'give bases or circuits, not both')
        if 'circuits' in fields:
            return matroid_core.from_circuits(n, _family(fields['circuits']), allow_loops=True)
        return matroid_core.from_bases(n, _family(_require(fields, 'bases', header)), allow_loops=True)
    if header == GRAPH_HEADER:
        vertices = _integer(_require(fields, 'vertices', header))
        return matroid_core.Graph(vertices, _edges(_require(fields, 'edges', header)))
    vertices = _integer(_require(fields, 'vertices', header))
    facets = _family(_require(fields, 'facets', header))
    for f in facets:
        for v in f:
            if not 1 <= v <= vertices:
                raise ParseError(fields['facets'][1], 1, 'vertex %d out of range 1..%d' % (v, vertices))
    return SimplicialComplex(vertices, facets)


def _expect(obj, kind, path):
    if not isinstance(obj, kind):
        raise ParseError(1, 1, '%s does not hold a %s' % (path, kind.__name__))
    return obj


def load(path):
    with open(path, 'r') as f:
        return parse(f.read())


def load_matroid(path):
    return _expect(load(path), matroid_core.Matroid, path)


def load_graph(path):
    return _expect(load(path), matroid_core.Graph, path)


def load_complex(path):
    return _expect(load(path), SimplicialComplex, path)


def dump(obj, path):
    with open(path, 'w') as f:
        f.write(obj.text())


dump_matroid = dump
dump_graph = dump
dump_complex = dump
