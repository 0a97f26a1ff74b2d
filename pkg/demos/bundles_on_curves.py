"""
Kernel and image bundles along a rational curve
================================================

Restricting a matrix of linear forms to a curve on its determinant gives a
polynomial matrix of rank r everywhere.  Its image and kernel, saturated,
are the two candidate bundles.
"""
from detrep import (gen_curve_instance, image_sheaf_basis, rank_profile, reconstruct_bundle_pair,
                    restrict_to_param_curve)
from detrep.algebra import UniPoly, format_unipoly
from detrep.curves import upmat


def show(label, sb):
    print(f"{label} (degree invariant {sb.degree_invariant})")
    for row in sb.basis:
        print("   ", [format_unipoly(e) for e in row])


# the conic: catalecticant [[x1, x2], [x2, x3]] on (1, t, t^2)
lam, conic = gen_curve_instance(1, 3, 2)
rep = reconstruct_bundle_pair(lam, conic)
show("image", rep.candidate_plain)
show("kernel", rep.kernel_line)
print("disambiguation:", rep.disambiguation.value)

# a rank-2 example on a degree-8 curve, with the reference supplied
lam, curve = gen_curve_instance(2, 9, 8, seed=3)
m = restrict_to_param_curve(lam, curve)
print("rank profile:", rank_profile(m))
rep = reconstruct_bundle_pair(lam.transpose(), curve, reference=lam)
print("disambiguation:", rep.disambiguation.value)
show("selected", rep.selected)

# saturation removes a planted common factor t^2 - 2
t = UniPoly((0, 1))
h = t * t - 2
m = upmat([[h, 0], [t * h, 1], [0, t]])
print("drop locus:", [(format_unipoly(f), k) for f, k in rank_profile(m).drop_locus])
show("saturated image", image_sheaf_basis(m))
