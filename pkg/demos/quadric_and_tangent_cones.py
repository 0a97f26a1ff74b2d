"""
Determinants of linear-form matrices and their tangent cones
=============================================================

The 2x2 matrix of coordinates has determinant x1*x4 - x2*x3, a quadric of
rank 4 in four variables.  At the origin it is singular of multiplicity 2;
at a rank-one point it is smooth.
"""
from detrep import LinFormMatrix, determinant_hypersurface, tangent_cone_leading_form
from detrep.algebra import MultiPoly

coord = LinFormMatrix.coordinate(2)
print(coord)
quadric = determinant_hypersurface(coord)
print("det =", quadric)

# multiplicity at the vertex, then at a point where the matrix has rank one
for point in ([0, 0, 0, 0], [1, 2, 3, 6]):
    lf = tangent_cone_leading_form(quadric, point)
    print(point, "multiplicity", lf.multiplicity, "leading form", lf.form)

# a cusp-like plane curve recentred at (1, 2)
x, y = MultiPoly.variables(2)
f = (x - 1) ** 2 * (y - 2) + (x - 1) ** 4
lf = tangent_cone_leading_form(f, [1, 2])
print("f at (1, 2): multiplicity", lf.multiplicity, "leading form", lf.form)
