"""Reader and writer for the plain-text ``cx2`` complex format.

::

    cx2 <n>
    e <u> <v>
    t <u> <v> <w>
    c <v1> <v2> <v3> [<v4>]

Indices are 1-based.  ``c`` lines (polygonal 2-cells) are an extension used
for K4-model complexes; a file with any ``c`` line reads as a cell complex and
may not also contain ``t`` lines.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .complex import CellComplex2, Complex2, ComplexError, build_complex


class Cx2FormatError(ValueError):
    pass


def dumps(X: Complex2 | CellComplex2) -> str:
    lines = [f"cx2 {X.n}"]
    lines += [f"e {u} {v}" for u, v in X.edges]
    if isinstance(X, CellComplex2):
        lines += ["c " + " ".join(map(str, walk)) for walk in X.cells]
    else:
        lines += [f"t {a} {b} {c}" for a, b, c in X.triangles]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Complex2 | CellComplex2:
    n = None
    edges, tris, cells = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            nums = [int(x) for x in tok[1:]]
        except ValueError:
            raise Cx2FormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if n is None:
            if tok[0] != "cx2" or len(nums) != 1 or nums[0] < 0:
                raise Cx2FormatError(f"line {lineno}: expected header 'cx2 <n>'")
            n = nums[0]
        elif tok[0] == "e" and len(nums) == 2:
            edges.append(nums)
        elif tok[0] == "t" and len(nums) == 3:
            tris.append(nums)
        elif tok[0] == "c" and len(nums) in (3, 4):
            cells.append(tuple(nums))
        else:
            raise Cx2FormatError(f"line {lineno}: cannot parse {raw!r}")
    if n is None:
        raise Cx2FormatError("missing 'cx2 <n>' header")
    if cells and tris:
        raise Cx2FormatError("file mixes 't' and 'c' lines")
    try:
        X = build_complex(n, edges, tris)
        if cells:
            return CellComplex2(n, X.edges, tuple(cells))
    except ComplexError as exc:
        raise Cx2FormatError(str(exc)) from None
    return X


def read_cx2(path) -> Complex2 | CellComplex2:
    return loads(Path(path).read_text())


def write_cx2(X: Complex2 | CellComplex2, path) -> None:
    Path(path).write_text(dumps(X))
