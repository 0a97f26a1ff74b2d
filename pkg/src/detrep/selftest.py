"""Seeded property checks across all modules, run by ``detrep selftest``."""
import random
from itertools import permutations

from .algebra.field import QQ
from .algebra.linalg import bareiss_det, mat_inverse, mat_kernel, mat_mul, mat_rank, identity, shape, transpose
from .algebra.multipoly import MultiPoly
from .algebra.unipoly import UniPoly, column_primitive_part, unipoly_gcd
from .curves import (containment_check, full_rank_at, image_sheaf_basis, kernel_sheaf_basis, minor_gcd,
                     rank_profile, reconstruct_bundle_pair, restrict_to_param_curve, same_span_at)
from .errors import NotEquivalent
from .forms import (build_from_petri_tensor, determinant_hypersurface, petri_tensor_of,
                    tangent_cone_leading_form)
from .frobenius import frobenius_decompose, verify_certificate
from .generators import gen_frobenius_instance, gen_random_pair, plant_curve_instance, random_invertible
from .textio import InstanceFile, dumps, loads


def _leibniz(m):
    n = len(m)
    total = None
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = None
        for i in range(n):
            term = m[i][perm[i]] if term is None else term * m[i][perm[i]]
        term = -term if inv % 2 else term
        total = term if total is None else total + term
    return total


def check_linear_algebra(rng, trials):
    for _ in range(trials):
        rows, cols, k = rng.randint(1, 5), rng.randint(1, 5), rng.randint(0, 3)
        left = [[QQ(rng.randint(-5, 5)) for _ in range(k)] for _ in range(rows)]
        right = [[QQ(rng.randint(-5, 5)) for _ in range(cols)] for _ in range(k)]
        m = mat_mul(left, right) if k else tuple(tuple(QQ(0) for _ in range(cols)) for _ in range(rows))
        if mat_rank(m) != mat_rank(transpose(m)):
            return False, "rank differs from transpose rank"
        ker = mat_kernel(m)
        if shape(ker)[1] + mat_rank(m) != cols:
            return False, "rank-nullity fails"
        n = rng.randint(1, 4)
        a = random_invertible(n, rng)
        if mat_mul(mat_inverse(a), a) != identity(n):
            return False, "inverse is wrong"
        if bareiss_det(a) != _leibniz(a):
            return False, "Bareiss disagrees with Leibniz"
    return True, ""


def check_polynomials(rng, trials):
    for _ in range(trials):
        common = UniPoly([rng.randint(-3, 3) for _ in range(3)] + [1])
        a = common * UniPoly([rng.randint(-3, 3) for _ in range(3)] + [1])
        b = common * UniPoly([rng.randint(-3, 3) for _ in range(2)] + [1])
        g = unipoly_gcd(a, b)
        if a % g or b % g or g % common:
            return False, "gcd misses the planted common factor"
        prim, content = column_primitive_part((a, b))
        if tuple(e * content for e in prim) != (a, b):
            return False, "primitive part times content differs"
        x = MultiPoly.variables(3)
        f = x[0] * x[1] + x[2] ** 3 * rng.randint(1, 4)
        p = [rng.randint(-3, 3) for _ in range(3)]
        lf = tangent_cone_leading_form(f, p)
        if (lf.multiplicity >= 1) != (f(p) == 0) or not lf.form.is_homogeneous(lf.multiplicity):
            return False, "tangent cone invariants fail"
    return True, ""


def check_forms(rng, trials):
    for s in range(trials):
        r = rng.randint(1, 2)
        a, b, s0, t0 = gen_frobenius_instance(r, (r + 1) ** 2, seed=rng.getrandbits(32))
        db = determinant_hypersurface(b)
        if not db.is_homogeneous(r + 1):
            return False, "determinant not homogeneous of degree r+1"
        if determinant_hypersurface(a) != db * (bareiss_det(s0) * bareiss_det(t0)):
            return False, "det(S B T) != det S det T det B"
        if build_from_petri_tensor(petri_tensor_of(b)) != b:
            return False, "Petri tensor round trip fails"
    return True, ""


def check_frobenius(rng, trials):
    for s in range(trials):
        r = 1 + s % 3
        transposed = bool(s % 2)
        a, b, _, _ = gen_frobenius_instance(r, (r + 1) ** 2, transposed, seed=rng.getrandbits(32))
        cert = frobenius_decompose(a, b)
        if cert.transposed != transposed or not verify_certificate(a, b, cert):
            return False, f"round trip failed at r={r}"
        a, b = gen_random_pair(r, (r + 1) ** 2, seed=rng.getrandbits(32))
        try:
            frobenius_decompose(a, b)
            return False, "random pair declared equivalent"
        except NotEquivalent:
            pass
    return True, ""


def check_curves(rng, trials):
    for s in range(trials):
        r = 1 + s % 2
        d = 3 if r == 1 else 8
        inst = plant_curve_instance(r, d + 1, d, seed=rng.getrandbits(32))
        if not containment_check(inst.lam, inst.curve):
            return False, "curve not contained"
        m = restrict_to_param_curve(inst.lam, inst.curve)
        prof = rank_profile(m)
        if prof.generic_rank != r or prof.drop_locus:
            return False, "rank along curve is not constant r"
        for sb in (image_sheaf_basis(m), kernel_sheaf_basis(m)):
            if minor_gcd(sb.basis).degree != 0:
                return False, "basis not saturated"
            if not all(full_rank_at(sb.basis, t) for t in range(-3, 4)):
                return False, "basis drops rank"
        rep = reconstruct_bundle_pair(inst.lam, inst.curve, inst.lam)
        if not all(same_span_at(rep.selected.basis, inst.image_frame, t) for t in range(-2, 3)):
            return False, "reconstructed span differs from the planted bundle"
    return True, ""


def check_textio(rng, trials):
    for s in range(trials):
        a, b, s0, t0 = gen_frobenius_instance(1, 4, seed=rng.getrandbits(32))
        inst = InstanceFile(1, 4).add("linmat", "A", a).add("linmat", "B", b).add("smat", "S0", s0)
        inst.add("poly", "det", determinant_hypersurface(a))
        text = dumps(inst)
        if dumps(loads(text)) != text:
            return False, "serialize/parse round trip is not the identity"
    return True, ""


CHECKS = [
    ("linear algebra", check_linear_algebra),
    ("polynomials", check_polynomials),
    ("linear-form matrices", check_forms),
    ("Frobenius equivalence", check_frobenius),
    ("curve restriction", check_curves),
    ("text format", check_textio),
]


def run(trials=5, seed=0, out=print):
    """Run every check; returns True when all pass."""
    ok = True
    for name, fn in CHECKS:
        passed, detail = fn(random.Random(f"{seed}:{name}"), trials)
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    return ok
