"""Restriction of linear-form matrices to curves and the sheaves they cut out.

Matrices over the parameter ring Q[t] are tuples of rows of
:class:`~detrep.algebra.unipoly.UniPoly`.  The image and kernel sheaves are
computed as *saturated* column modules: polynomial bases whose columns stay
independent at every parameter value.
"""
from collections import namedtuple
from dataclasses import dataclass
from enum import Enum

from .algebra.field import scalar
from .algebra.linalg import (bareiss_det, fraction_free_rank, independent_columns, mat_rank, minors,
                             rref)
from .algebra.unipoly import (UniPoly, column_primitive_part, gcd_many, integer_normalize,
                              squarefree_part, unipoly_gcdex)
from .errors import (DimensionMismatch, InvariantViolation, NotContained, NotIndependent, RankTooLow,
                     RankUnexpected, TrivialKernel, ZeroMatrix)
from .forms import entry_independence_check, evaluate_at_point
from .frobenius import frobenius_decompose


class ParamCurve:
    """Affine parametrization ``t -> (f_1(t), ..., f_g(t))`` of a rational curve."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(c if isinstance(c, UniPoly) else UniPoly(c) if isinstance(c, (list, tuple))
                       else UniPoly.const(c) for c in coords)
        if not any(coords):
            raise ValueError("all coordinates vanish identically")
        if gcd_many(coords).degree > 0:
            raise ValueError("coordinates share a nonconstant factor")
        self.coords = coords

    @classmethod
    def rational_normal(cls, d):
        """The curve ``(1, t, ..., t^d)``."""
        return cls([UniPoly.monomial(i) for i in range(d + 1)])

    @property
    def ambient(self):
        return len(self.coords)

    @property
    def degree(self):
        return max(c.degree for c in self.coords)

    def __call__(self, t0):
        return tuple(c(scalar(t0)) for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, ParamCurve) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "ParamCurve(" + ", ".join(str(c) for c in self.coords) + ")"


class PointCloudCurve:
    """Finitely many exact points standing in for a curve, in a fixed affine chart."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple(tuple(scalar(x) for x in p) for p in points)
        if len({len(p) for p in pts}) > 1:
            raise DimensionMismatch("points of different dimensions")
        for p in pts:
            if not any(p):
                raise ValueError("the zero vector is not a projective point")
        for i in range(len(pts)):
            for j in range(i):
                if mat_rank((pts[i], pts[j])) < 2:
                    raise ValueError(f"points {j} and {i} coincide projectively")
        self.points = pts

    @property
    def ambient(self):
        return len(self.points[0]) if self.points else 0


RankProfile = namedtuple("RankProfile", "generic_rank drop_locus")
RankProfile.__doc__ = """Generic rank over Q(t), and ``(factor, rank)`` pairs: at every root of
``factor`` the rank is exactly ``rank``."""

FiberData = namedtuple("FiberData", "point image_basis kernel_dim")


@dataclass(frozen=True)
class SheafBasis:
    basis: tuple  # rows of UniPoly, n x k
    saturated: bool
    degree_invariant: int

    @property
    def rank(self):
        return len(self.basis[0]) if self.basis else 0

    def columns(self):
        return [tuple(row[j] for row in self.basis) for j in range(self.rank)]

    def at(self, t0):
        t0 = scalar(t0)
        return tuple(tuple(e(t0) for e in row) for row in self.basis)


class Disambiguation(Enum):
    PLAIN = "Plain"
    TRANSPOSE = "Transpose"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class ReconstructionReport:
    candidate_plain: SheafBasis
    candidate_transpose: SheafBasis
    rank_profile: RankProfile
    kernel_line: SheafBasis
    containment_ok: bool
    disambiguation: Disambiguation
    certificate: object = None

    @property
    def selected(self):
        """The candidate carrying the bundle of the reference orientation, if decided.

        For ``alpha ~ Lambda`` this is the image of ``alpha``; for
        ``alpha ~ Lambda^t`` it is the image of ``alpha^t``.
        """
        if self.disambiguation is Disambiguation.PLAIN:
            return self.candidate_plain
        if self.disambiguation is Disambiguation.TRANSPOSE:
            return self.candidate_transpose
        return None


# -- polynomial matrix helpers ---------------------------------------------

def upmat(rows):
    """Coerce nested sequences into a tuple-of-rows polynomial matrix."""
    return tuple(tuple(e if isinstance(e, UniPoly) else UniPoly.const(e) for e in row) for row in rows)


def upmat_transpose(m):
    return tuple(zip(*m)) if m and m[0] else ()


def upmat_eval(m, t0):
    t0 = scalar(t0)
    return tuple(tuple(e(t0) for e in row) for row in m)


def upmat_from_columns(cols):
    return tuple(zip(*cols)) if cols else ()


def determinantal_divisor(m, k):
    """Monic gcd of all k x k minors (zero if they all vanish)."""
    if k == 0:
        return UniPoly.const(1)
    return gcd_many(d for _, _, d in minors(m, k))


# -- restriction and ranks --------------------------------------------------

def restrict_to_param_curve(m, curve):
    """Compose every entry of a LinFormMatrix with the parametrization."""
    if m.ambient != curve.ambient:
        raise DimensionMismatch(f"matrix lives in {m.ambient} variables, curve in {curve.ambient}")
    out = []
    for row in m.entries:
        new = []
        for e in row:
            acc = UniPoly()
            for c, f in zip(e, curve.coords):
                if c:
                    acc = acc + f * c
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def rank_profile(m):
    """Generic rank and the exact drop locus, certified by determinantal divisors.

    With ``D_j`` the gcd of the j x j minors, the rank at a root of ``D_k``
    is the largest j with ``D_j`` nonzero there; the returned factors are
    the squarefree pieces ``sqf(D_{j+1}) / sqf(D_j)``.
    """
    k = fraction_free_rank(m)
    if k == 0:
        return RankProfile(0, ())
    sqf = [UniPoly.const(1)]
    for j in range(1, k + 1):
        sqf.append(squarefree_part(determinantal_divisor(m, j)))
    locus = []
    for j in range(k - 1, -1, -1):
        factor = sqf[j + 1].exact_div(sqf[j]).monic()
        if factor.degree > 0:
            locus.append((factor, j))
    return RankProfile(k, tuple(locus))


# -- saturation -------------------------------------------------------------

def _kernel_mod(cols, h):
    """A relation among the columns modulo a squarefree ``h``.

    Returns ``(free_index, u)`` with ``sum u_j cols_j == 0 (mod h)`` and
    ``u[free_index] == 1``, or a proper factor of ``h`` when a pivot turns
    out to be a zero divisor modulo h.
    """
    k = len(cols)
    n = len(cols[0])
    a = [[cols[j][i] % h for j in range(k)] for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        i = next((i for i in range(r, n) if a[i][c]), None)
        if i is None:
            continue
        s, _, g = unipoly_gcdex(a[i][c], h)
        if g.degree > 0:
            return g
        a[r], a[i] = a[i], a[r]
        a[r] = [(x * s) % h for x in a[r]]
        for i2 in range(n):
            if i2 != r and a[i2][c]:
                f = a[i2][c]
                a[i2] = [(x - f * y) % h for x, y in zip(a[i2], a[r])]
        pivots.append(c)
        r += 1
    free = next((c for c in range(k) if c not in pivots), None)
    if free is None:
        raise InvariantViolation("columns have full rank at the roots of a minor gcd factor")
    u = [UniPoly() for _ in range(k)]
    u[free] = UniPoly.const(1)
    for row, pc in enumerate(pivots):
        u[pc] = -a[row][free]
    return free, u


def saturate(cols):
    """Saturate a module given by generically independent polynomial columns.

    Column contents are divided out; then, while the maximal minors share a
    factor h, a combination of columns vanishing modulo h replaces one of the
    columns and is divided by h.  Returns ``(columns, removed_degree)``.
    """
    cols = [tuple(c) for c in cols]
    k = len(cols)
    removed = 0
    while True:
        for idx, col in enumerate(cols):
            cols[idx], content = column_primitive_part(col)
            removed += content.degree
        d = determinantal_divisor(upmat_from_columns(cols), k)
        if not d:
            raise ValueError("columns are dependent over the function field")
        if d.degree == 0:
            return cols, removed
        h = squarefree_part(d)
        while True:
            found = _kernel_mod(cols, h)
            if isinstance(found, UniPoly):
                h = found.monic()
                continue
            free, u = found
            break
        w = [UniPoly() for _ in range(len(cols[0]))]
        for uj, col in zip(u, cols):
            if uj:
                w = [acc + uj * e for acc, e in zip(w, col)]
        cols[free] = tuple(e.exact_div(h) for e in w)
        removed += h.degree


def _canonical(cols):
    cols = [integer_normalize(c) for c in cols]

    def key(col):
        first = next(i for i, e in enumerate(col) if e)
        return (first, col[first].degree, repr(col))

    return sorted(cols, key=key)


def image_sheaf_basis(m):
    """Saturated basis of the column span of a polynomial matrix.

    ``degree_invariant`` is the degree of the gcd of the maximal nonvanishing
    minors of ``m``: the total degree divided out to reach the saturation.

    >>> t = UniPoly((0, 1))
    >>> sb = image_sheaf_basis(upmat([[1, t], [t, t * t]]))
    >>> [[str(e) for e in row] for row in sb.basis], sb.degree_invariant
    ([['1'], ['t']], 0)
    """
    k = fraction_free_rank(m)
    if k == 0:
        raise ZeroMatrix("the zero matrix has no image")
    chosen = independent_columns(m)
    cols, _ = saturate([tuple(row[j] for row in m) for j in chosen])
    invariant = determinantal_divisor(m, k).degree
    return SheafBasis(upmat_from_columns(_canonical(cols)), True, invariant)


def kernel_sheaf_basis(m):
    """Saturated basis of the right kernel over the parameter ring."""
    ncols = len(m[0])
    k = fraction_free_rank(m)
    if k == ncols:
        raise TrivialKernel("the matrix has full column rank")
    if k == 0:
        ident = [tuple(UniPoly.const(1 if i == j else 0) for i in range(ncols)) for j in range(ncols)]
        return SheafBasis(upmat_from_columns(ident), True, 0)
    rows = independent_columns(upmat_transpose(m))
    sub = [m[i] for i in rows]
    piv = independent_columns(sub)
    square = [[row[j] for j in piv] for row in sub]
    delta = bareiss_det(square)
    vectors = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [UniPoly() for _ in range(ncols)]
        v[f] = delta
        for jj, pc in enumerate(piv):
            replaced = [[(row[f] if c == jj else x) for c, x in enumerate(srow)]
                        for row, srow in zip(sub, square)]
            v[pc] = -bareiss_det(replaced)
        vectors.append(tuple(v))
    cols, removed = saturate(vectors)
    return SheafBasis(upmat_from_columns(_canonical(cols)), True, removed)


def cokernel_degree(m):
    """Total vanishing degree of ``m`` onto its saturated image."""
    n = len(m)
    k = fraction_free_rank(m)
    if k < n - 1:
        raise RankTooLow(f"generic rank {k} is more than one below the row count {n}")
    return determinantal_divisor(m, k).degree


def minor_gcd(basis):
    """Monic gcd of the maximal minors of a basis matrix (one when saturated)."""
    k = len(basis[0]) if basis else 0
    return determinantal_divisor(basis, k)


def full_rank_at(basis, t0):
    k = len(basis[0]) if basis else 0
    return mat_rank(upmat_eval(basis, t0)) == k


def same_span_at(b1, b2, t0):
    """Do two bases span the same subspace after evaluation at ``t0``?"""
    e1, e2 = upmat_eval(b1, t0), upmat_eval(b2, t0)
    r1, r2 = mat_rank(e1), mat_rank(e2)
    joined = tuple(x + y for x, y in zip(e1, e2))
    return r1 == r2 == mat_rank(joined)


# -- fibers and containment ------------------------------------------------

def fiber_image_at_points(m, cloud):
    """Per point: the evaluated matrix's column-space basis and kernel dimension."""
    if cloud.points and cloud.ambient != m.ambient:
        raise DimensionMismatch(f"points live in {cloud.ambient} variables, matrix in {m.ambient}")
    out = []
    for p in cloud.points:
        a = evaluate_at_point(m, p)
        _, piv = rref(a)
        image = tuple(tuple(row[j] for j in piv) for row in a)
        out.append(FiberData(p, image, m.size - len(piv)))
    return out


def containment_check(m, curve):
    """Does the determinant hypersurface of ``m`` contain the curve?"""
    return not bareiss_det(restrict_to_param_curve(m, curve))


def reconstruct_bundle_pair(alpha, curve, reference=None, seed=0):
    """Both candidate bundles cut out by ``alpha`` along the curve.

    With a reference representation the orientation is decided by the
    equivalence certificate (which needs independent entries); without one
    the report stays undecided.
    """
    if not containment_check(alpha, curve):
        raise NotContained("the curve does not lie on det(alpha) = 0")
    if reference is not None and not entry_independence_check(alpha):
        raise NotIndependent("entries of alpha are linearly dependent")
    m = restrict_to_param_curve(alpha, curve)
    profile = rank_profile(m)
    if profile.generic_rank != alpha.r:
        raise RankUnexpected(alpha.r, profile.generic_rank)
    plain = image_sheaf_basis(m)
    transposed = image_sheaf_basis(upmat_transpose(m))
    kernel = kernel_sheaf_basis(m)
    cert = None
    verdict = Disambiguation.UNDECIDED
    if reference is not None:
        cert = frobenius_decompose(alpha, reference, seed=seed)
        verdict = Disambiguation.TRANSPOSE if cert.transposed else Disambiguation.PLAIN
    return ReconstructionReport(plain, transposed, profile, kernel, True, verdict, cert)
