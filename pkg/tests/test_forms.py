import random

import pytest
import sympy as sp

from detrep import (LinFormMatrix, PetriTensor, build_from_petri_tensor, determinant_hypersurface,
                    entry_independence_check, evaluate_at_point, genericity_probe, tangent_cone_leading_form)
from detrep.algebra import MultiPoly
from detrep.errors import DimensionMismatch, ZeroPolynomial
from detrep.forms import petri_tensor_of
from detrep.generators import random_independent_matrix

from oracles import leading_form_oracle, multipoly_to_expr, to_sympy_matrix, xs

COORD = LinFormMatrix.coordinate(2)
CATALECTICANT = LinFormMatrix([[[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]]])


def test_petri_tensor_coordinate_slices():
    e = [[1 if k == idx else 0 for k in range(4)] for idx in range(4)]
    tensor = PetriTensor(1, 4, [[e[0], e[1]], [e[2], e[3]]])
    assert build_from_petri_tensor(tensor) == COORD
    assert str(COORD) == "[x1, x2]\n[x3, x4]"


def test_petri_tensor_zero_and_round_trip():
    zero = PetriTensor(1, 3, [[[0] * 3] * 2] * 2)
    m = build_from_petri_tensor(zero)
    assert all(not any(e) for row in m.entries for e in row)
    rng = random.Random(1)
    for _ in range(10):
        vals = [[[rng.randint(-5, 5) for _ in range(5)] for _ in range(3)] for _ in range(3)]
        m = build_from_petri_tensor(PetriTensor(2, 5, vals))
        assert [[list(map(int, e)) for e in row] for row in petri_tensor_of(m).values] == vals


def test_entry_independence_examples():
    assert entry_independence_check(COORD)
    assert not entry_independence_check(LinFormMatrix([[[1, 0, 0, 0], [0, 1, 0, 0]]] * 2))
    assert not entry_independence_check(CATALECTICANT)
    rng = random.Random(2)
    for _ in range(10):
        m = LinFormMatrix([[[rng.randint(-5, 5) for _ in range(9)] for _ in range(3)] for _ in range(3)])
        coeff = sp.Matrix([list(e) for e in m.entry_vectors()])
        assert entry_independence_check(m) == (coeff.rank() == 9)


def test_genericity_probe():
    assert genericity_probe(COORD)
    degenerate = LinFormMatrix([[[1, 0, 0, 0], [0, 1, 0, 0]], [[1, 0, 0, 0], [0, 1, 0, 0]]])
    assert not genericity_probe(degenerate)
    rng = random.Random(4)
    for seed in range(5):
        assert genericity_probe(random_independent_matrix(2, 9, rng), seed=seed)


def test_evaluate_at_point():
    assert evaluate_at_point(COORD, [1, 0, 0, 0]) == ((1, 0), (0, 0))
    assert evaluate_at_point(COORD, [0] * 4) == ((0, 0), (0, 0))
    fiber = evaluate_at_point(CATALECTICANT, [1, 3, 9])
    assert fiber == ((1, 3), (3, 9))
    assert sp.Matrix(fiber).rank() == 1
    with pytest.raises(DimensionMismatch):
        evaluate_at_point(COORD, [1, 2])


def test_tangent_cone_examples():
    x, y = MultiPoly.variables(2)
    lf = tangent_cone_leading_form(x ** 2 + y ** 3, [0, 0])
    assert (lf.multiplicity, str(lf.form)) == (2, "x1^2")

    v = MultiPoly.variables(4)
    lf = tangent_cone_leading_form(v[0] * v[3] - v[1] * v[2] + v[0] ** 3, [0, 0, 0, 0])
    assert (lf.multiplicity, str(lf.form)) == (2, "x1*x4 - x2*x3")

    f = (x - 1) ** 2 * (y - 2) + (x - 1) ** 4
    lf = tangent_cone_leading_form(f, [1, 2])
    assert (lf.multiplicity, str(lf.form)) == (3, "x1^2*x2")
    n, low = leading_form_oracle(multipoly_to_expr(f), [1, 2], xs(2))
    assert n == 3 and multipoly_to_expr(lf.form) == low


def test_tangent_cone_off_hypersurface_and_zero():
    x, y = MultiPoly.variables(2)
    lf = tangent_cone_leading_form(x * y + 1, [0, 0])
    assert lf.multiplicity == 0 and lf.form == MultiPoly.const(2, 1)
    with pytest.raises(ZeroPolynomial):
        tangent_cone_leading_form(MultiPoly.zero(2), [0, 0])


def test_determinant_examples():
    assert str(determinant_hypersurface(COORD)) == "x1*x4 - x2*x3"
    upper = LinFormMatrix([[[1, 0], [1, 1]], [[0, 0], [0, 1]]])
    assert str(determinant_hypersurface(upper)) == "x1*x2"


def test_determinant_matches_sympy():
    rng = random.Random(7)
    for n in (2, 3):
        for _ in range(5):
            m = random_independent_matrix(n - 1, n * n, rng)
            expected = sp.expand(to_sympy_matrix(m).det(method="berkowitz"))
            d = determinant_hypersurface(m)
            assert multipoly_to_expr(d) == expected
            assert d.is_homogeneous(n)
