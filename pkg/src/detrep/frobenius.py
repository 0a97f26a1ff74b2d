"""Constructive equivalence of determinantal representations.

Given square matrices A and B of linearly independent linear forms whose
determinants agree up to a constant, find invertible scalar matrices S, T
with ``A = S B T`` or ``A = S B^t T``.  The construction:

1. write every entry of A in the basis formed by the entries of B;
2. for each l, the coefficients of ``b_ll`` across A form a rank-one matrix
   ``p^l q^l``; collect the columns ``p^l`` into P and rows ``q^l`` into Q;
3. ``P^-1 A Q^-1`` agrees with B on the diagonal and equals ``K B K^-1`` or
   ``K B^t K^-1`` for a diagonal K, recovered from the first row;
4. ``S = P K`` and ``T = K^-1 Q``, normalized so the first nonzero entry of
   S is one.

Any failing step yields :class:`NotEquivalent` with a concrete witness.
"""
import random
from dataclasses import dataclass

from .algebra.field import format_scalar
from .algebra.linalg import bareiss_det, mat_det, mat_inverse, mat_mul, mat_rank, solve, transpose
from .errors import (BothBranchesSucceed, DimensionMismatch, InvariantViolation, NotEquivalent,
                     NotIndependent, NotInSpan, RankNotOne)
from .forms import entry_independence_check, evaluate_at_point


@dataclass(frozen=True)
class EquivalenceCertificate:
    S: tuple
    T: tuple
    transposed: bool
    c: object

    def __str__(self):
        rows = lambda m: "; ".join(" ".join(format_scalar(x) for x in row) for row in m)
        return f"S=[{rows(self.S)}] T=[{rows(self.T)}] transposed={self.transposed} c={format_scalar(self.c)}"


@dataclass(frozen=True)
class CoefficientSlice:
    l: int
    matrix: tuple


@dataclass(frozen=True)
class DiagonalConjugator:
    k: tuple

    def __post_init__(self):
        if any(not x for x in self.k):
            raise ValueError("conjugator entries must be nonzero")

    def matrix(self):
        z = self.k[0] * 0
        return tuple(tuple(self.k[i] if i == j else z for j in range(len(self.k))) for i in range(len(self.k)))

    def inverse_matrix(self):
        z = self.k[0] * 0
        return tuple(tuple(1 / self.k[i] if i == j else z for j in range(len(self.k))) for i in range(len(self.k)))


def _check_pair(a, b):
    if a.size != b.size or a.ambient != b.ambient:
        raise DimensionMismatch(f"cannot compare {a.size}x{a.size} forms in {a.ambient} variables "
                                f"with {b.size}x{b.size} forms in {b.ambient} variables")


def express_in_entry_basis(a, b):
    """Coordinates ``coords[i][j][k][l]`` of ``a_ij`` in the basis ``{b_kl}``."""
    _check_pair(a, b)
    if not entry_independence_check(b):
        raise NotIndependent("entries of the reference matrix are linearly dependent")
    n = b.size
    basis = b.entry_vectors()
    system = transpose(basis)  # g x n^2, columns are the b_kl
    targets = a.entry_vectors()
    sols = solve(system, targets)
    coords = []
    for i in range(n):
        row = []
        for j in range(n):
            x = sols[i * n + j]
            if x is None:
                raise NotInSpan((i, j))
            row.append(tuple(tuple(x[k * n:(k + 1) * n]) for k in range(n)))
        coords.append(tuple(row))
    return tuple(coords)


def coefficient_slices(coords):
    """Slice l holds the coefficient of ``b_ll`` in every ``a_ij``."""
    n = len(coords)
    return [CoefficientSlice(l, tuple(tuple(coords[i][j][l][l] for j in range(n)) for i in range(n)))
            for l in range(n)]


def rank1_factor(m):
    """Factor a rank-one matrix as ``p q`` with the first nonzero entry of p equal to one.

    >>> from detrep.algebra import matrix
    >>> p, q = rank1_factor(matrix([[1, 2], [2, 4]]))
    >>> [str(x) for x in p], [str(x) for x in q]
    (['1', '2'], ['1', '2'])
    """
    rank = mat_rank(m)
    if rank != 1:
        raise RankNotOne(rank)
    i0, j0 = next((i, j) for i, row in enumerate(m) for j, x in enumerate(row) if x)
    pivot = m[i0][j0]
    p = tuple(m[i][j0] / pivot for i in range(len(m)))
    q = tuple(m[i0])
    return p, q


def _det_probe(a, b, rng, points, bound=1000):
    """Sample determinants; return det(A)/det(B) or raise with a non-proportionality witness."""
    ratio = None
    first = None
    seen = 0
    for _ in range(20 * points):
        x = [rng.randint(-bound, bound) for _ in range(a.ambient)]
        da = bareiss_det(evaluate_at_point(a, x))
        db = bareiss_det(evaluate_at_point(b, x))
        if not db:
            if da:
                raise NotEquivalent("det-not-proportional", {"point": x, "det_a": da, "det_b": db},
                                    "det(B) vanishes where det(A) does not")
            continue
        r = da / db
        if ratio is None:
            ratio, first = r, x
            if not r:
                raise NotEquivalent("det-not-proportional", {"point": x, "det_a": da, "det_b": db},
                                    "det(A) vanishes where det(B) does not")
        elif r != ratio:
            raise NotEquivalent("det-not-proportional",
                                {"points": [first, x], "ratios": [ratio, r]},
                                "det(A)/det(B) differs between two sample points")
        seen += 1
        if seen >= points:
            break
    return ratio


def _try_branch(btilde, n, transposed):
    """Find K with ``btilde = K B K^-1`` (or ``K B^t K^-1``); return (K, None) or (None, witness)."""
    unit = lambda i, j: (j, i) if transposed else (i, j)

    def scalar_multiple(vec, idx):
        # vec is an n x n coordinate block; is it c * e_idx?  returns c or None
        c = vec[idx[0]][idx[1]]
        for k in range(n):
            for l in range(n):
                if (k, l) != idx and vec[k][l]:
                    return None
        return c

    for i in range(n):
        c = scalar_multiple(btilde[i][i], (i, i))
        if c is None or c != 1:
            return None, {"entry": (i, i), "reason": "diagonal entry differs from b_ii"}
    one = btilde[0][0][0][0] * 0 + 1
    k = [one]
    for i in range(1, n):
        ratio = scalar_multiple(btilde[0][i], unit(0, i))
        if not ratio:
            return None, {"entry": (0, i), "reason": "first-row entry is not a nonzero multiple"}
        k.append(k[0] / ratio)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            c = scalar_multiple(btilde[i][j], unit(i, j))
            if c is None or c != k[i] / k[j]:
                return None, {"entry": (i, j), "reason": "ratio k_i/k_j inconsistent"}
    return DiagonalConjugator(tuple(k)), None


def _conjugate_coords(coords, pinv, qinv):
    # coordinates of P^-1 A Q^-1 in the basis {b_kl}
    n = len(coords)
    zero = coords[0][0][0][0] * 0

    def block_combo(weights_blocks):
        acc = [[zero] * n for _ in range(n)]
        for w, blk in weights_blocks:
            if not w:
                continue
            for k in range(n):
                for l in range(n):
                    if blk[k][l]:
                        acc[k][l] = acc[k][l] + w * blk[k][l]
        return tuple(tuple(r) for r in acc)

    aq = [[block_combo([(qinv[b][j], coords[a][b]) for b in range(n)]) for j in range(n)] for a in range(n)]
    return [[block_combo([(pinv[i][a], aq[a][j]) for a in range(n)]) for j in range(n)] for i in range(n)]


def _normalize(s, t):
    lead = next(x for row in s for x in row if x)
    inv = 1 / lead
    s = tuple(tuple(x * inv for x in row) for row in s)
    t = tuple(tuple(x * lead for x in row) for row in t)
    return s, t


def frobenius_decompose(a, b, seed=0, probe_points=3):
    """Certificate that ``a = S b T`` or ``a = S b^t T``.

    ``seed`` only drives the determinant-proportionality probe; the returned
    certificate does not depend on it.
    """
    _check_pair(a, b)
    if not entry_independence_check(a):
        raise NotIndependent("entries of A are linearly dependent")
    coords = express_in_entry_basis(a, b)
    n = a.size
    if n == 1:
        lam = coords[0][0][0][0]
        if not lam:
            raise NotEquivalent("zero-entry", (0, 0))
        one = lam * 0 + 1
        cert = EquivalenceCertificate(((one,),), ((lam,),), False, lam)
        return cert

    c_probe = _det_probe(a, b, random.Random(seed), probe_points)

    p_cols, q_rows = [], []
    for sl in coefficient_slices(coords):
        try:
            p, q = rank1_factor(sl.matrix)
        except RankNotOne as exc:
            raise NotEquivalent("slice-rank", {"l": sl.l, "rank": exc.rank, "slice": sl.matrix},
                                f"coefficient slice {sl.l} has rank {exc.rank}") from None
        p_cols.append(p)
        q_rows.append(q)
    pm = transpose(p_cols)
    qm = tuple(q_rows)
    det_p, det_q = mat_det(pm), mat_det(qm)
    if not det_p or not det_q:
        raise NotEquivalent("singular-factor", {"det_P": det_p, "det_Q": det_q},
                            "the rank-one factors do not assemble into invertible P and Q")
    c = det_p * det_q
    if c_probe is not None and c != c_probe:
        raise NotEquivalent("det-ratio-mismatch", {"det_P*det_Q": c, "sampled": c_probe})

    btilde = _conjugate_coords(coords, mat_inverse(pm), mat_inverse(qm))
    results = {}
    witnesses = {}
    for transposed in (False, True):
        k, witness = _try_branch(btilde, n, transposed)
        if k is not None:
            results[transposed] = k
        else:
            witnesses[transposed] = witness
    if len(results) == 2:
        raise BothBranchesSucceed("both A = S B T and A = S B^t T hold; entries of B are not generic")
    if not results:
        raise NotEquivalent("conjugation", {"plain": witnesses[False], "transposed": witnesses[True]},
                            "P^-1 A Q^-1 is not a diagonal conjugate of B or B^t")
    transposed, k = results.popitem()
    s = mat_mul(pm, k.matrix())
    t = mat_mul(k.inverse_matrix(), qm)
    s, t = _normalize(s, t)
    cert = EquivalenceCertificate(s, t, transposed, c)
    if not verify_certificate(a, b, cert):
        raise InvariantViolation("constructed certificate failed verification")
    return cert


def verify_certificate(a, b, cert):
    """Exact check of ``A == S B T`` (or ``S B^t T`` when flagged)."""
    _check_pair(a, b)
    src = b.transpose() if cert.transposed else b
    try:
        return src.transform(cert.S, cert.T) == a
    except DimensionMismatch:
        return False
