"""Text interchange format and Graphviz output.

    semigroup v1 3
    labels e a b
    0 1 2
    1 2 0
    2 0 1

Row i lists the products i*j.  The labels line is optional; blank lines
and lines starting with '#' are ignored.
"""
import io

from . import core
from .core import Semigroup, members_of
from .errors import ParseError

HEADER = "semigroup"
VERSION = "v1"


def _content_lines(text):
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield no, line


def parse_table(text):
    """Parse to (table, labels) without semantic checks."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1, 1)
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != HEADER:
        raise ParseError(f"expected '{HEADER} {VERSION} <order>'", no, 1)
    if parts[1] != VERSION:
        raise ParseError(f"unsupported version {parts[1]!r}", no, head.index(parts[1]) + 1)
    try:
        n = int(parts[2])
    except ValueError:
        raise ParseError(f"bad order {parts[2]!r}", no, head.index(parts[2]) + 1) from None
    if n < 1:
        raise ParseError("order must be positive", no, head.index(parts[2]) + 1)
    rest = lines[1:]
    labels = None
    if rest and rest[0][1].split()[0] == "labels":
        no, line = rest[0]
        labels = line.split()[1:]
        if len(labels) != n:
            raise ParseError(f"expected {n} labels, got {len(labels)}", no, 1)
        rest = rest[1:]
    if len(rest) != n:
        where = rest[n][0] if len(rest) > n else (rest[-1][0] + 1 if rest else no + 1)
        raise ParseError(f"expected {n} rows, got {len(rest)}", where, 1)
    table = []
    for no, line in rest:
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, got {len(toks)}", no, 1)
        row = []
        col = 0
        for tok in toks:
            col = line.index(tok, col)
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", no, col + 1) from None
            col += len(tok)
        table.append(row)
    return table, labels


def parse_semigroup(source):
    """Read a Semigroup from text, a path, or an open file."""
    if hasattr(source, "read"):
        text = source.read()
    elif "\n" in str(source) or str(source).lstrip().startswith(HEADER):
        text = str(source)
    else:
        with open(source) as fh:
            text = fh.read()
    table, labels = parse_table(text)
    return Semigroup(table, labels)


def emit_semigroup(S, out=None, labels=True):
    if labels and S.labels is not None:
        bad = [x for x in S.labels if not x or len(x.split()) != 1 or x.startswith("#")]
        if bad:
            raise ValueError(f"labels cannot be written: {bad!r}")
    buf = io.StringIO()
    buf.write(f"{HEADER} {VERSION} {S.order}\n")
    if labels and S.labels is not None:
        buf.write("labels " + " ".join(S.labels) + "\n")
    for row in S.table:
        buf.write(" ".join(map(str, row)) + "\n")
    text = buf.getvalue()
    if out is None:
        return text
    if hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
    return text


def _quote(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def dot_graph(nodes, edges, name="G"):
    """nodes: list of (id, label); edges: (lower, upper) pairs drawn upward."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, label in nodes:
        lines.append(f"  n{i} [label={_quote(label)}];")
    for a, b in sorted(edges):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def natural_order_dot(S):
    no = core.natural_order(S)
    return dot_graph([(x, S.label(x)) for x in range(S.order)], no.covers(), "natural_order")


def lattice_dot(L):
    S = L.universe
    nodes = [(i, "{" + ",".join(S.label(x) for x in members_of(m)) + "}")
             for i, m in enumerate(L.members)]
    return dot_graph(nodes, L.covers(), "sub_lattice")


def j_order_dot(S):
    g = core.green(S)
    k = len(g.j_classes)
    rel = set(g.j_order)
    covers = [(a, b) for (a, b) in rel if a != b and
              not any(c not in (a, b) and (a, c) in rel and (c, b) in rel for c in range(k))]
    nodes = [(i, "{" + ",".join(S.label(x) for x in sorted(c)) + "}") for i, c in enumerate(g.j_classes)]
    return dot_graph(nodes, covers, "j_order")


def emit_dot(structure, out=None, kind=None):
    """DOT for a SubLattice, or for a Semigroup (natural order, or J-order with kind='j')."""
    from .sublat import SubLattice
    if isinstance(structure, SubLattice):
        text = lattice_dot(structure)
    elif kind == "j" or (kind is None and not core.is_inverse_semigroup(structure)):
        text = j_order_dot(structure)
    else:
        text = natural_order_dot(structure)
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w") as fh:
                fh.write(text)
    return text
