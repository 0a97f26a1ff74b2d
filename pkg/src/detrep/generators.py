"""Seeded instance generators.

Every generator takes an explicit seed and draws all randomness from one
``random.Random`` built from it, so outputs are reproducible.  Integer
entries are drawn from ``[-bound, bound]`` (default 5).
"""
import random
from dataclasses import dataclass

from .algebra.field import QQ
from .algebra.linalg import mat_det, transpose
from .algebra.unipoly import UniPoly
from .curves import ParamCurve, determinantal_divisor
from .errors import BadDimensions, LiftFailed
from .forms import LinFormMatrix, entry_independence_check

MAX_ATTEMPTS = 200


def random_invertible(n, rng, field=QQ, bound=5):
    while True:
        m = tuple(tuple(field(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(n))
        if mat_det(m):
            return m


def random_independent_matrix(r, g, rng, field=QQ, bound=5):
    """Coordinate forms mixed by a random invertible change of coordinates."""
    n = r + 1
    mix = random_invertible(g, rng, field, bound)
    cols = transpose(mix)
    return LinFormMatrix([[cols[i * n + j] for j in range(n)] for i in range(n)])


def gen_frobenius_instance(r, g, transposed=False, seed=0, field=QQ, bound=5):
    """``(A, B, S0, T0)`` with ``A = S0 B T0`` (or ``S0 B^t T0``)."""
    if r < 0 or g < (r + 1) ** 2:
        raise BadDimensions(f"need g >= (r+1)^2 = {(r + 1) ** 2}, got g={g}")
    rng = random.Random(seed)
    b = random_independent_matrix(r, g, rng, field, bound)
    s0 = random_invertible(r + 1, rng, field, bound)
    t0 = random_invertible(r + 1, rng, field, bound)
    a = (b.transpose() if transposed else b).transform(s0, t0)
    return a, b, s0, t0


def gen_random_pair(r, g, seed=0, field=QQ, bound=5):
    """Two independently drawn independent-entry matrices (generically inequivalent)."""
    if g < (r + 1) ** 2:
        raise BadDimensions(f"need g >= (r+1)^2 = {(r + 1) ** 2}, got g={g}")
    rng = random.Random(seed)
    return (random_independent_matrix(r, g, rng, field, bound),
            random_independent_matrix(r, g, rng, field, bound))


@dataclass(frozen=True)
class CurveInstance:
    """A planted instance: ``lam`` restricted to ``curve`` equals ``image_frame * kernel_frame^t``."""

    lam: LinFormMatrix
    curve: ParamCurve
    image_frame: tuple  # (r+1) x r polynomial matrix, maximal minors coprime
    dual_frame: tuple  # (r+1) x r polynomial matrix, maximal minors coprime


def _random_poly(rng, degree, bound):
    return UniPoly([rng.randint(-bound, bound) for _ in range(degree + 1)])


def _random_frame(rng, r, degree, bound):
    # (r+1) x r with coprime maximal minors: full rank at every t
    for _ in range(MAX_ATTEMPTS):
        frame = tuple(tuple(_random_poly(rng, degree, bound) for _ in range(r)) for _ in range(r + 1))
        d = determinantal_divisor(frame, r)
        if d and d.degree == 0:
            return frame
    raise LiftFailed("could not draw a frame of constant rank")


def _lift(poly_matrix, g):
    # a polynomial of degree <= g-1 is a linear form on (1, t, ..., t^{g-1})
    rows = []
    for row in poly_matrix:
        out = []
        for e in row:
            v = [0] * g
            for i, c in enumerate(e.coeffs):
                v[i] = c
            out.append(v)
        rows.append(out)
    return LinFormMatrix(rows)


def plant_curve_instance(r, g, curve_degree, seed=0, bound=5):
    """Build ``Lambda`` and a curve with ``Lambda|_C = M(t) N(t)^t`` of rank r everywhere.

    The curve is the rational normal curve ``(1, t, ..., t^d)``, padded
    with random degree-d coordinates when ``g > d + 1``.  The one case with
    ``g < (r+1)^2`` accepted is the conic (r=1, g=3, d=2), which yields the
    Hankel matrix ``[[x1, x2], [x2, x3]]``.
    """
    d = curve_degree
    if (r, g, d) == (1, 3, 2):
        frame = ((UniPoly.const(1),), (UniPoly((0, 1)),))
        curve = ParamCurve.rational_normal(2)
        lam = _lift(_outer(frame, frame), 3)
        return CurveInstance(lam, curve, frame, frame)
    if r < 1 or g < (r + 1) ** 2:
        raise BadDimensions(f"need r >= 1 and g >= (r+1)^2 = {(r + 1) ** 2}, got r={r}, g={g}")
    if d > g - 1:
        raise LiftFailed(f"a degree-{d} curve needs at least {d + 1} coordinates, got {g}")
    if d + 1 < (r + 1) ** 2:
        raise LiftFailed(f"entries of degree <= {d} cannot be {(r + 1) ** 2} independent forms")
    rng = random.Random(seed)
    deg_m = d // 2
    deg_n = d - deg_m
    for _ in range(MAX_ATTEMPTS):
        m = _random_frame(rng, r, deg_m, bound)
        n = _random_frame(rng, r, deg_n, bound)
        lam = _lift(_outer(m, n), g)
        if entry_independence_check(lam):
            break
    else:
        raise LiftFailed("no draw produced independent entries")
    coords = [UniPoly.monomial(i) for i in range(d + 1)]
    coords += [_random_poly(rng, d, bound) for _ in range(g - d - 1)]
    curve = ParamCurve(coords)
    return CurveInstance(lam, curve, m, n)


def _outer(m, n):
    # M * N^t for polynomial matrices of shape (r+1) x r
    size = len(m)
    k = len(m[0])
    return tuple(tuple(sum((m[i][l] * n[j][l] for l in range(k)), UniPoly()) for j in range(size))
                 for i in range(size))


def gen_curve_instance(r, g, curve_degree, seed=0, bound=5):
    """``(Lambda, curve)`` with the curve on det(Lambda) = 0 and rank exactly r along it."""
    inst = plant_curve_instance(r, g, curve_degree, seed, bound)
    return inst.lam, inst.curve
