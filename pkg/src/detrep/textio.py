"""Line-oriented instance files.

A file starts with a four-line header and continues with named sections::

    detrep-instance 1
    r 1
    g 4
    field q
    linmat A
    1 0 0 0
    0 1 0 0
    0 0 1 0
    0 0 0 1
    end

Section kinds and their bodies:

``linmat NAME`` / ``tensor NAME``
    (r+1)^2 lines in row-major order, each with g scalars.
``smat NAME ROWS COLS``
    ROWS lines of COLS scalars.
``poly NAME``
    one line ``coeff e1 ... eg`` per term, descending degree-lex order.
``curve NAME``
    g lines, one univariate polynomial each.
``points NAME``
    one line of g scalars per point.
``upmat NAME ROWS COLS``
    ROWS*COLS univariate polynomials, row-major.
``scalar NAME`` / ``flag NAME``
    a single scalar, or ``true`` / ``false``.

Scalars are written ``p/q`` (``p`` when q = 1); univariate polynomials as
their coefficients from low to high degree, ``0`` for the zero polynomial.
Blank lines and ``#`` comments are ignored when reading; the writer never
emits them, so reading then writing a canonical file is the identity.
"""
from dataclasses import dataclass, field as dc_field

from .algebra.field import QQ, Field, format_scalar
from .algebra.multipoly import MultiPoly
from .algebra.unipoly import UniPoly
from .curves import ParamCurve, PointCloudCurve
from .errors import FormatError
from .forms import LinFormMatrix, PetriTensor

MAGIC = "detrep-instance"
VERSION = 1


@dataclass(frozen=True)
class Section:
    kind: str
    name: str
    value: object


@dataclass
class InstanceFile:
    r: int
    g: int
    field: Field = QQ
    sections: list = dc_field(default_factory=list)
    version: int = VERSION

    def add(self, kind, name, value):
        self.sections.append(Section(kind, name, value))
        return self

    def get(self, kind, name=None):
        """The section value of this kind with this name, else the first of this kind."""
        matches = [s for s in self.sections if s.kind == kind]
        for s in matches:
            if s.name == name:
                return s.value
        if matches:
            return matches[0].value
        raise FormatError(f"no {kind} section" + (f" named {name}" if name else ""))

    def has(self, kind):
        return any(s.kind == kind for s in self.sections)


def _fmt_row(xs):
    return " ".join(format_scalar(x) for x in xs)


def _fmt_unipoly(p):
    return _fmt_row(p.coeffs) if p else "0"


def _body(kind, value):
    if kind in ("linmat", "tensor"):
        entries = value.entries if kind == "linmat" else value.values
        return [], [_fmt_row(e) for row in entries for e in row]
    if kind == "smat":
        rows = len(value)
        cols = len(value[0]) if value else 0
        return [rows, cols], [_fmt_row(row) for row in value]
    if kind == "poly":
        return [], [" ".join([format_scalar(c)] + [str(k) for k in e]) for e, c in value.sorted_terms()]
    if kind == "curve":
        return [], [_fmt_unipoly(c) for c in value.coords]
    if kind == "points":
        return [], [_fmt_row(p) for p in value.points]
    if kind == "upmat":
        rows = len(value)
        cols = len(value[0]) if value else 0
        return [rows, cols], [_fmt_unipoly(e) for row in value for e in row]
    if kind == "scalar":
        return [], [format_scalar(value)]
    if kind == "flag":
        return [], ["true" if value else "false"]
    raise FormatError(f"unknown section kind {kind!r}")


def dumps(inst):
    lines = [f"{MAGIC} {inst.version}", f"r {inst.r}", f"g {inst.g}", f"field {inst.field.tag}"]
    for s in inst.sections:
        extra, body = _body(s.kind, s.value)
        lines.append(" ".join([s.kind, s.name] + [str(x) for x in extra]))
        lines.extend(body)
        lines.append("end")
    return "\n".join(lines) + "\n"


def _scalars(line, f, expect=None):
    try:
        xs = [f(tok) for tok in line.split()]
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar in line {line!r}: {exc}") from None
    if expect is not None and len(xs) != expect:
        raise FormatError(f"expected {expect} values, got {len(xs)} in line {line!r}")
    return xs


def _unipoly(line, f):
    return UniPoly(_scalars(line, f))


def _parse_section(kind, name, extra, body, r, g, f):
    n = r + 1
    if kind in ("linmat", "tensor"):
        if len(body) != n * n:
            raise FormatError(f"{kind} {name}: expected {n * n} rows, got {len(body)}")
        vecs = [_scalars(line, f, g) for line in body]
        grid = [[vecs[i * n + j] for j in range(n)] for i in range(n)]
        return LinFormMatrix(grid) if kind == "linmat" else PetriTensor(r, g, grid)
    if kind in ("smat", "upmat"):
        if len(extra) != 2:
            raise FormatError(f"{kind} {name}: header needs ROWS COLS")
        rows, cols = extra
        if kind == "smat":
            if len(body) != rows:
                raise FormatError(f"smat {name}: expected {rows} rows")
            return tuple(tuple(_scalars(line, f, cols)) for line in body)
        if len(body) != rows * cols:
            raise FormatError(f"upmat {name}: expected {rows * cols} entries")
        polys = [_unipoly(line, f) for line in body]
        return tuple(tuple(polys[i * cols:(i + 1) * cols]) for i in range(rows))
    if kind == "poly":
        terms = {}
        for line in body:
            toks = line.split()
            if len(toks) != g + 1:
                raise FormatError(f"poly {name}: term line {line!r} needs 1 + {g} fields")
            try:
                exps = tuple(int(k) for k in toks[1:])
            except ValueError:
                raise FormatError(f"poly {name}: bad exponent in {line!r}") from None
            if exps in terms:
                raise FormatError(f"poly {name}: repeated monomial {exps}")
            terms[exps] = _scalars(toks[0], f, 1)[0]
        try:
            return MultiPoly(g, terms)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    if kind == "curve":
        if len(body) != g:
            raise FormatError(f"curve {name}: expected {g} coordinate lines")
        try:
            return ParamCurve([_unipoly(line, f) for line in body])
        except ValueError as exc:
            raise FormatError(f"curve {name}: {exc}") from None
    if kind == "points":
        try:
            return PointCloudCurve([_scalars(line, f, g) for line in body])
        except ValueError as exc:
            raise FormatError(f"points {name}: {exc}") from None
    if kind == "scalar":
        if len(body) != 1:
            raise FormatError(f"scalar {name}: expected one line")
        return _scalars(body[0], f, 1)[0]
    if kind == "flag":
        if body not in (["true"], ["false"]):
            raise FormatError(f"flag {name}: expected true or false")
        return body == ["true"]
    raise FormatError(f"unknown section kind {kind!r}")


def loads(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 4:
        raise FormatError("truncated header")
    head = lines[0].split()
    if len(head) != 2 or head[0] != MAGIC:
        raise FormatError(f"not a {MAGIC} file")
    try:
        version = int(head[1])
        keys = [ln.split() for ln in lines[1:4]]
        if [k[0] for k in keys] != ["r", "g", "field"] or any(len(k) != 2 for k in keys):
            raise FormatError("header must list r, g and field")
        r, g = int(keys[0][1]), int(keys[1][1])
        f = Field.from_tag(keys[2][1])
    except ValueError as exc:
        raise FormatError(f"bad header: {exc}") from None
    if version != VERSION:
        raise FormatError(f"unsupported format version {version}")
    if r < 0 or g < 0:
        raise FormatError("r and g must be non-negative")
    inst = InstanceFile(r, g, f, version=version)
    i = 4
    while i < len(lines):
        toks = lines[i].split()
        if len(toks) < 2:
            raise FormatError(f"bad section header {lines[i]!r}")
        kind, name = toks[0], toks[1]
        try:
            extra = [int(x) for x in toks[2:]]
        except ValueError:
            raise FormatError(f"bad section header {lines[i]!r}") from None
        try:
            j = lines.index("end", i + 1)
        except ValueError:
            raise FormatError(f"section {name} is not terminated") from None
        inst.add(kind, name, _parse_section(kind, name, extra, lines[i + 1:j], r, g, f))
        i = j + 1
    return inst


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(inst, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(inst))
