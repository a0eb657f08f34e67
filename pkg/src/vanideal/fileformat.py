"""Reading and writing ideal files.

A file is UTF-8 text::

    # comment
    field 4
    vars x1 x2 x3
    ideal I
    x1^2*x2+x1*x2^2
    end
    points X
    1:0:g
    end

``field`` and ``vars`` come first.  Each ``ideal`` block holds one
generator per line; each ``points`` block one projective point per line,
coordinates in the element grammar separated by ``:`` (surrounding
brackets optional).  ``#`` starts a comment.  :func:`format_file` writes
the canonical form, which :func:`parse_file` reads back unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf
from .errors import ParseError, VanidealError
from .ideal import Ideal
from .poly import Ring, format_polynomial, polynomial_ring
from .projective import PointSet, ProjectivePoint


class UnknownName(VanidealError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


@dataclass
class IdealFile:
    ring: Ring
    ideals: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)

    def ideal(self, name) -> Ideal:
        if name not in self.ideals:
            raise UnknownName(f"no ideal named {name!r}; have {sorted(self.ideals) or 'none'}")
        return Ideal(self.ring, self.ideals[name])

    def pointset(self, name) -> PointSet:
        if name not in self.points:
            raise UnknownName(f"no point set named {name!r}; have {sorted(self.points) or 'none'}")
        return PointSet(self.ring.field, self.ring.nvars, self.points[name])

    def names(self):
        return list(self.ideals) + list(self.points)


def _strip(line):
    return line.split("#", 1)[0].strip()


def _parse_point(text, spec, m, lineno):
    body = text
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(":")]
    if len(parts) != m:
        raise ParseError(f"point has {len(parts)} coordinates, expected {m}", line=lineno)
    try:
        codes = [gf.parse_element(p, spec).value for p in parts]
    except ParseError as exc:
        raise ParseError(str(exc), line=lineno) from None
    if not any(codes):
        raise ParseError("the zero vector is not a projective point", line=lineno)
    return ProjectivePoint.normalize(spec, codes)


def parse_file(text: str) -> IdealFile:
    ring = None
    q = None
    result = None
    block = None  # (kind, name, items, start line)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        words = line.split()
        head = words[0]
        if block is not None:
            kind, name, items, _ = block
            if line == "end":
                target = result.ideals if kind == "ideal" else result.points
                target[name] = items
                block = None
            elif kind == "ideal":
                try:
                    items.append(ring.parse(line))
                except ParseError as exc:
                    raise ParseError(str(exc), line=lineno) from None
            else:
                items.append(_parse_point(line, ring.field, ring.nvars, lineno))
            continue
        if head == "field":
            if q is not None or len(words) != 2:
                raise ParseError("expected a single 'field <q>' line", line=lineno)
            try:
                q = int(words[1])
            except ValueError:
                raise ParseError(f"field size {words[1]!r} is not an integer", line=lineno) from None
            gf.make_field(q)
        elif head == "vars":
            if q is None:
                raise ParseError("'vars' before 'field'", line=lineno)
            if ring is not None or len(words) < 2:
                raise ParseError("expected a single 'vars <name>+' line", line=lineno)
            try:
                ring = polynomial_ring(q, words[1:])
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            result = IdealFile(ring)
        elif head in ("ideal", "points"):
            if ring is None:
                raise ParseError(f"'{head}' block before 'field' and 'vars'", line=lineno)
            if len(words) != 2:
                raise ParseError(f"expected '{head} <name>'", line=lineno)
            name = words[1]
            if name in result.ideals or name in result.points:
                raise ParseError(f"duplicate block name {name!r}", line=lineno)
            block = (head, name, [], lineno)
        else:
            raise ParseError(f"unexpected line {line!r}", line=lineno)
    if block is not None:
        raise ParseError(f"block {block[1]!r} is missing 'end'", line=block[3])
    if result is None:
        raise ParseError("missing 'field' or 'vars' line", line=1)
    return result


def read_file(path) -> IdealFile:
    with open(path, encoding="utf-8") as fh:
        return parse_file(fh.read())


def format_point(P):
    return ":".join(gf.format_code(P.field, c) for c in P.coords)


def format_file(doc: IdealFile) -> str:
    lines = [f"field {doc.ring.field.q}", "vars " + " ".join(doc.ring.names)]
    for name, gens in doc.ideals.items():
        lines.append(f"ideal {name}")
        lines.extend(format_polynomial(f) for f in gens)
        lines.append("end")
    for name, pts in doc.points.items():
        lines.append(f"points {name}")
        lines.extend(format_point(P) for P in pts)
        lines.append("end")
    return "\n".join(lines) + "\n"
