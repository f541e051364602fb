"""Line-oriented structure-constant files.

    # comment
    dim 5
    1 2 3 1
    1 3 4 2
    2 3 5 -1/2

Each data line ``i j k p/q`` sets c_{ij}^k = p/q with i < j.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import NilcohomError, ParseError
from .lie import GradedLieAlgebra, LieAlgebra, from_structure_constants


def parse_lie_text(text: str, label: str = "") -> LieAlgebra:
    dim = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if dim is None:
            if len(fields) != 2 or fields[0] != "dim":
                raise ParseError(f"expected 'dim N', got {line!r}", lineno)
            try:
                dim = int(fields[1])
            except ValueError:
                raise ParseError(f"dimension {fields[1]!r} is not an integer", lineno) from None
            if dim < 1:
                raise ParseError(f"dimension must be positive, got {dim}", lineno)
            continue
        if len(fields) != 4:
            raise ParseError(f"expected 'i j k p/q', got {line!r}", lineno)
        try:
            i, j, k = (int(x) for x in fields[:3])
            c = Fraction(fields[3])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed entry {line!r}", lineno) from None
        entries.append((lineno, (i, j, k, c)))
    if dim is None:
        raise ParseError("missing 'dim N' line")
    # validate entry-by-entry first so index errors carry their line number
    seen = {}
    for lineno, (i, j, k, c) in entries:
        if not (1 <= i < j <= dim) or not (1 <= k <= dim):
            raise ParseError(f"indices ({i}, {j}, {k}) out of range for dim {dim} (need i < j)", lineno)
        if (i, j, k) in seen:
            raise ParseError(f"duplicate entry ({i}, {j}, {k}), first on line {seen[(i, j, k)]}", lineno)
        seen[(i, j, k)] = lineno
    return from_structure_constants(dim, [e for _, e in entries], label=label)


def read_lie_file(path) -> LieAlgebra:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise NilcohomError(f"cannot read {path}: {exc.strerror}") from None
    return parse_lie_text(text, label=path.stem)


def dump_lie_text(g) -> str:
    layers = None
    if isinstance(g, GradedLieAlgebra):
        layers = g.layer_dims
        g = g.algebra
    lines = []
    if g.label:
        lines.append(f"# {g.label}")
    if layers is not None:
        lines.append("# layers " + " ".join(str(d) for d in layers))
    lines.append(f"dim {g.dim}")
    for i, j, k, c in g.structure_constants():
        lines.append(f"{i} {j} {k} {c}")
    return "\n".join(lines) + "\n"
