"""Matrices of linear forms and their determinantal hypersurfaces."""
import random
from dataclasses import dataclass
from itertools import combinations

from .algebra.field import scalar
from .algebra.linalg import bareiss_det, det_multipoly_matrix, mat_rank, shape
from .algebra.multipoly import MultiPoly
from .errors import DimensionMismatch, ZeroPolynomial


@dataclass(frozen=True)
class LinearForm:
    """A homogeneous degree-one polynomial given by its coefficient vector."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(scalar(c) for c in self.coeffs))

    @property
    def ambient(self):
        return len(self.coeffs)

    def __call__(self, point):
        if len(point) != len(self.coeffs):
            raise DimensionMismatch(f"point of length {len(point)} for forms in {len(self.coeffs)} variables")
        return sum((c * x for c, x in zip(self.coeffs, point)), self.coeffs[0] * 0 if self.coeffs else scalar(0))

    def to_multipoly(self):
        return MultiPoly.linear(self.coeffs)


def _combine(vectors, weights):
    # sum_k weights[k] * vectors[k], skipping zero weights
    out = None
    for w, v in zip(weights, vectors):
        if not w:
            continue
        term = [w * c for c in v]
        out = term if out is None else [a + b for a, b in zip(out, term)]
    if out is None:
        return tuple(c * 0 for c in vectors[0])
    return tuple(out)


class LinFormMatrix:
    """A square matrix whose entries are linear forms in ``ambient`` variables.

    ``entries[i][j]`` is the coefficient tuple of the (i, j) entry.
    """

    __slots__ = ("entries", "size", "ambient")

    def __init__(self, entries):
        rows = [[tuple(scalar(c) for c in (e.coeffs if isinstance(e, LinearForm) else e))
                 for e in row] for row in entries]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatch("a linear-form matrix must be square and nonempty")
        dims = {len(e) for row in rows for e in row}
        if len(dims) != 1:
            raise DimensionMismatch("entries live in different ambient spaces")
        self.entries = tuple(tuple(row) for row in rows)
        self.size = n
        self.ambient = dims.pop()

    @classmethod
    def coordinate(cls, n, g=None):
        """The matrix whose (i, j) entry is the coordinate x_{i*n+j+1}."""
        g = g or n * n
        if g < n * n:
            raise DimensionMismatch(f"need at least {n * n} variables")
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                v = [0] * g
                v[i * n + j] = 1
                row.append(v)
            rows.append(row)
        return cls(rows)

    @property
    def r(self):
        return self.size - 1

    def entry(self, i, j):
        return LinearForm(self.entries[i][j])

    def entry_vectors(self):
        """Coefficient vectors of all entries, row-major."""
        return [e for row in self.entries for e in row]

    def transpose(self):
        n = self.size
        return LinFormMatrix([[self.entries[j][i] for j in range(n)] for i in range(n)])

    def transform(self, s, t):
        """The product ``S * self * T`` for scalar matrices S and T."""
        n = self.size
        if shape(s) != (n, n) or shape(t) != (n, n):
            raise DimensionMismatch("transform matrices must match the matrix size")
        # (S M)_{il} = sum_k S_ik M_kl, then (S M T)_{ij} = sum_l (S M)_{il} T_lj
        sm = [[_combine([self.entries[k][l] for k in range(n)], [s[i][k] for k in range(n)])
               for l in range(n)] for i in range(n)]
        return LinFormMatrix([[_combine([sm[i][l] for l in range(n)], [t[l][j] for l in range(n)])
                               for j in range(n)] for i in range(n)])

    def to_multipoly(self):
        return [[MultiPoly.linear(e) for e in row] for row in self.entries]

    def __eq__(self, other):
        return isinstance(other, LinFormMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"LinFormMatrix(size={self.size}, ambient={self.ambient})"

    def __str__(self):
        polys = self.to_multipoly()
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]" for row in polys)


@dataclass(frozen=True)
class PetriTensor:
    """Coordinates ``values[i][j][k]`` of the pairing of the i-th and j-th basis sections."""

    r: int
    g: int
    values: tuple

    def __post_init__(self):
        vals = tuple(tuple(tuple(scalar(x) for x in fiber) for fiber in row) for row in self.values)
        n = self.r + 1
        if len(vals) != n or any(len(row) != n for row in vals) or \
                any(len(f) != self.g for row in vals for f in row):
            raise DimensionMismatch(f"tensor does not have shape ({n}, {n}, {self.g})")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class LeadingForm:
    multiplicity: int
    form: MultiPoly


def build_from_petri_tensor(tensor):
    """Entry (i, j) is the linear form with coefficients ``tensor.values[i][j]``."""
    return LinFormMatrix(tensor.values)


def petri_tensor_of(m):
    return PetriTensor(m.r, m.ambient, m.entries)


def entry_independence_check(m):
    """True iff the (r+1)^2 entries are linearly independent linear forms.

    >>> entry_independence_check(LinFormMatrix.coordinate(2))
    True
    """
    n2 = m.size * m.size
    if m.ambient < n2:
        return False
    return mat_rank(m.entry_vectors()) == n2


def evaluate_at_point(m, point):
    """Entrywise evaluation of the linear forms at ``point``."""
    if len(point) != m.ambient:
        raise DimensionMismatch(f"point has length {len(point)}, matrix lives in {m.ambient} variables")
    point = [scalar(x) for x in point]
    return tuple(tuple(sum((c * x for c, x in zip(e, point)), point[0] * 0) for e in row)
                 for row in m.entries)


def genericity_probe(m, trials=3, seed=0, bound=1000):
    """Randomized search for vanishing minors.

    Every k x k minor, 1 <= k <= r+1, is evaluated at ``trials`` random
    integer points with coordinates in ``[-bound, bound]``.  A minor that
    vanishes at every sample is reported as a relation (returns False).  By
    Schwartz-Zippel a nonzero minor of degree k is missed with probability
    at most ``(k / (2*bound + 1)) ** trials``.
    """
    rng = random.Random(seed)
    n = m.size
    samples = []
    for _ in range(max(trials, 1)):
        p = [rng.randint(-bound, bound) for _ in range(m.ambient)]
        samples.append(evaluate_at_point(m, p))
    for k in range(1, n + 1):
        for ri in combinations(range(n), k):
            for ci in combinations(range(n), k):
                if not any(bareiss_det([[a[i][j] for j in ci] for i in ri]) for a in samples):
                    return False
    return True


def tangent_cone_leading_form(f, point):
    """Lowest nonzero homogeneous component of ``f`` recentred at ``point``.

    Multiplicity 0 means ``f(point) != 0``: the point is off the hypersurface.

    >>> x, y = MultiPoly.variables(2)
    >>> lf = tangent_cone_leading_form(x * x + y ** 3, [0, 0])
    >>> lf.multiplicity, str(lf.form)
    (2, 'x1^2')
    """
    if not f:
        raise ZeroPolynomial("the zero polynomial has no tangent cone")
    if len(point) != f.nvars:
        raise DimensionMismatch("point dimension does not match the polynomial ring")
    g = f.shift(point)
    n = min(sum(e) for e in g.terms)
    return LeadingForm(n, g.homogeneous_component(n))


def determinant_hypersurface(m):
    """det of the matrix, a form of degree r+1 (or zero)."""
    return det_multipoly_matrix(m.to_multipoly())
