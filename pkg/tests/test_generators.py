import time

import pytest

from detrep import (LinFormMatrix, containment_check, entry_independence_check, gen_curve_instance,
                    gen_frobenius_instance, rank_profile, restrict_to_param_curve)
from detrep.algebra import Field, mat_det
from detrep.errors import BadDimensions, LiftFailed
from detrep.generators import plant_curve_instance


def test_frobenius_instance_basics():
    a, b, s0, t0 = gen_frobenius_instance(1, 4, False, seed=0)
    assert entry_independence_check(b)
    assert mat_det(s0) and mat_det(t0)
    assert all(-5 <= x <= 5 for m in (s0, t0) for row in m for x in row)
    assert a == b.transform(s0, t0)
    assert gen_frobenius_instance(1, 4, False, seed=0)[0] == a


def test_frobenius_instance_prime_field():
    f = Field(13)
    a, b, s0, t0 = gen_frobenius_instance(2, 9, True, seed=1, field=f)
    assert a == b.transpose().transform(s0, t0)


def test_frobenius_instance_bad_dimensions():
    with pytest.raises(BadDimensions):
        gen_frobenius_instance(2, 8)


def test_large_instance_is_fast():
    start = time.perf_counter()
    gen_frobenius_instance(3, 16, seed=2)
    assert time.perf_counter() - start < 5


def test_conic_is_the_catalecticant():
    lam, curve = gen_curve_instance(1, 3, 2)
    assert lam == LinFormMatrix([[[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]]])
    assert [str(c) for c in curve.coords] == ["1", "t", "t^2"]


@pytest.mark.parametrize("r,g,d", [(1, 4, 3), (1, 6, 4), (2, 9, 8), (2, 10, 9)])
def test_curve_instances_are_well_posed(r, g, d):
    for seed in range(3):
        lam, curve = gen_curve_instance(r, g, d, seed=seed)
        assert entry_independence_check(lam)
        assert containment_check(lam, curve)
        prof = rank_profile(restrict_to_param_curve(lam, curve))
        assert prof.generic_rank == r and prof.drop_locus == ()


def test_curve_lift_failures():
    with pytest.raises(LiftFailed):
        plant_curve_instance(2, 9, 5)
    with pytest.raises(LiftFailed):
        plant_curve_instance(1, 4, 6)
    with pytest.raises(BadDimensions):
        plant_curve_instance(2, 5, 4)
