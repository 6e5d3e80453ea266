"""Line-oriented text formats for digraphs, colourings, decompositions and certificates.

Digraph::

    # optional comment lines
    digraph <n>
    <u> <v>          one arc per line, a digon is two lines

Colouring: ``<vertex> <colour>`` per line sorted by vertex.  Tree
decomposition: ``td <nodes> <width>``, then ``bag <node> v...`` and
``tedge <a> <b>`` lines.  Certificate: ``key=value`` lines; a leading ``#``
is ignored so a certificate can ride along as comments of a digraph file.
"""

from __future__ import annotations

from pathlib import Path

from .chordal import TreeDecomposition
from .constructions import FamilyCertificate
from .exceptions import ParseError
from .graphs import Colouring, Digraph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def format_digraph(D: Digraph, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"digraph {D.n}")
    lines.extend(f"{u} {v}" for u, v in D.arcs)
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty digraph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "digraph":
        raise ParseError(f"line {lineno}: expected 'digraph <n>'")
    (n,) = _ints(parts[1:], lineno)
    arcs = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>'")
        arcs.append(tuple(_ints(parts, lineno)))
    try:
        return Digraph(n, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_colouring(c: Colouring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colours))


def parse_colouring(text: str) -> Colouring:
    pairs = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<vertex> <colour>'")
        v, col = _ints(parts, lineno)
        if v in pairs:
            raise ParseError(f"line {lineno}: vertex {v} coloured twice")
        pairs[v] = col
    if sorted(pairs) != list(range(len(pairs))):
        raise ParseError("colouring must list every vertex 0..n-1 exactly once")
    if any(col < 1 for col in pairs.values()):
        raise ParseError("colours are 1-based")
    return Colouring.from_labels([pairs[v] for v in range(len(pairs))])


def format_tree_decomposition(td: TreeDecomposition) -> str:
    lines = [f"td {td.num_nodes} {td.width}"]
    for t, bag in enumerate(td.bags):
        lines.append(" ".join(["bag", str(t)] + [str(v) for v in sorted(bag)]))
    lines.extend(f"tedge {a} {b}" for a, b in td.edges)
    return "\n".join(lines) + "\n"


def parse_tree_decomposition(text: str) -> TreeDecomposition:
    lines = list(_content_lines(text))
    if not lines or not lines[0][1].startswith("td "):
        raise ParseError("expected 'td <num_nodes> <width>' header")
    lineno, header = lines[0]
    num_nodes, width = _ints(header.split()[1:], lineno)
    bags: dict = {}
    edges = []
    for lineno, line in lines[1:]:
        kind, *rest = line.split()
        if kind == "bag":
            node, *vs = _ints(rest, lineno)
            bags[node] = frozenset(vs)
        elif kind == "tedge":
            a, b = _ints(rest, lineno)
            edges.append((a, b))
        else:
            raise ParseError(f"line {lineno}: unknown record {kind!r}")
    if sorted(bags) != list(range(num_nodes)):
        raise ParseError("bags must be given for nodes 0..num_nodes-1")
    td = TreeDecomposition(tuple(bags[t] for t in range(num_nodes)), tuple(edges))
    if td.width != width:
        raise ParseError(f"declared width {width} but bags give {td.width}")
    return td


_CERT_INT_KEYS = ("vertices", "omega", "delta_b", "chi", "chi_lower", "chi_upper")


def format_certificate(cert: FamilyCertificate) -> str:
    lines = [f"family={cert.family}"]
    lines.extend(f"{k}={v}" for k, v in cert.params.items())
    lines.append(f"vertices={cert.vertices}")
    lines.append(f"omega={cert.omega}")
    lines.append(f"delta_b={cert.delta_b}")
    for key in ("chi", "chi_lower", "chi_upper"):
        value = getattr(cert, key)
        if value is not None:
            lines.append(f"{key}={value}")
    lines.append(f"structure={','.join(cert.structure)}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> FamilyCertificate:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().lstrip("#").strip()
        if "=" not in line:
            continue
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    if "family" not in values:
        raise ParseError("certificate has no 'family=' line")
    fields = {"family": values.pop("family")}
    for key in _CERT_INT_KEYS:
        if key in values:
            fields[key] = _ints([values.pop(key)], key)[0]
    for key in ("vertices", "omega", "delta_b"):
        if key not in fields:
            raise ParseError(f"certificate has no '{key}=' line")
    structure = values.pop("structure", "")
    fields["structure"] = tuple(s for s in structure.split(",") if s)
    params = {}
    for key, value in values.items():
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return FamilyCertificate(params=params, **fields)


def read_digraph(path) -> Digraph:
    return parse_digraph(Path(path).read_text(encoding="ascii"))


def write_digraph(path, D: Digraph, comments=()) -> None:
    Path(path).write_text(format_digraph(D, comments), encoding="ascii", newline="\n")


def read_colouring(path) -> Colouring:
    return parse_colouring(Path(path).read_text(encoding="ascii"))


def write_colouring(path, c: Colouring) -> None:
    Path(path).write_text(format_colouring(c), encoding="ascii", newline="\n")
