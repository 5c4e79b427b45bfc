"""Plain-text formats for complexes and matchings.

A complex file lists one maximal simplex per line as whitespace-separated
vertex ids; `#` starts a comment line and blank lines are skipped.  The
parser rebuilds the downward closure, so parse(serialize(K)) == K.

A matching file has one pair per line, face and coface separated by a
semicolon: "0 1 ; 0 1 2".
"""
from __future__ import annotations

from .complexes import SimplicialComplex, Simplex, canonical_key, from_maximal_simplices


class ParseError(ValueError):
    """Malformed input text; the message carries the line number."""


def _parse_vertices(token_text: str, lineno: int) -> Simplex:
    verts = []
    for tok in token_text.split():
        try:
            verts.append(int(tok))
        except ValueError:
            raise ParseError(f"line {lineno}: bad vertex id {tok!r}") from None
    if not verts:
        raise ParseError(f"line {lineno}: no vertices")
    if len(set(verts)) != len(verts):
        raise ParseError(f"line {lineno}: repeated vertex in {token_text.strip()!r}")
    return tuple(sorted(verts))


def parse_complex(text: str) -> SimplicialComplex:
    maximal = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        maximal.append(_parse_vertices(line, lineno))
    if not maximal:
        raise ParseError("no simplices in input")
    return from_maximal_simplices(maximal)


def serialize_complex(K: SimplicialComplex) -> str:
    return "".join(" ".join(str(v) for v in s) + "\n" for s in K.facets())


def parse_matching(text: str) -> list[tuple[Simplex, Simplex]]:
    """Pairs as written; validation against a complex happens elsewhere."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        halves = line.split(";")
        if len(halves) != 2:
            raise ParseError(f"line {lineno}: expected 'face ; coface'")
        sigma = _parse_vertices(halves[0], lineno)
        tau = _parse_vertices(halves[1], lineno)
        pairs.append((sigma, tau))
    return pairs


def serialize_matching(pairs) -> str:
    ordered = sorted(pairs, key=lambda p: canonical_key(p[0]))
    return "".join(
        " ".join(str(v) for v in s) + " ; " + " ".join(str(v) for v in t) + "\n"
        for s, t in ordered
    )


def read_complex(path: str) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def write_complex(K: SimplicialComplex, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_complex(K))
