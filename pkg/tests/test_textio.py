import pytest

from detrep import LinFormMatrix, ParamCurve, PointCloudCurve, PetriTensor, determinant_hypersurface
from detrep.algebra import Field, UniPoly
from detrep.errors import FormatError
from detrep.generators import gen_frobenius_instance
from detrep.textio import InstanceFile, dumps, loads

COORD_TEXT = """detrep-instance 1
r 1
g 4
field q
linmat A
1 0 0 0
0 1 0 0
0 0 1 0
0 0 0 1
end
"""


def test_parse_coordinate_matrix():
    inst = loads(COORD_TEXT)
    assert (inst.r, inst.g, inst.field.tag) == (1, 4, "q")
    assert inst.get("linmat", "A") == LinFormMatrix.coordinate(2)
    assert dumps(inst) == COORD_TEXT


def test_comments_and_blank_lines_are_ignored():
    noisy = COORD_TEXT.replace("linmat A\n", "# a comment\n\nlinmat A\n")
    assert dumps(loads(noisy)) == COORD_TEXT


def test_round_trip_every_kind():
    a, b, s0, _ = gen_frobenius_instance(1, 5, seed=2)
    t = UniPoly((0, 1))
    inst = InstanceFile(1, 5)
    inst.add("linmat", "A", a).add("tensor", "P", PetriTensor(1, 5, b.entries))
    inst.add("smat", "S0", s0).add("poly", "det", determinant_hypersurface(a))
    inst.add("curve", "C", ParamCurve([1, t, t * t, t ** 3, t ** 4 - 2]))
    inst.add("points", "pts", PointCloudCurve([[1, 2, 3, 4, 5], [1, 0, 0, 0, 0]]))
    inst.add("upmat", "M", ((t, UniPoly.const(3)), (UniPoly(), t * t)))
    inst.add("scalar", "c", s0[0][0] / 7).add("flag", "transposed", True)
    text = dumps(inst)
    back = loads(text)
    assert dumps(back) == text
    assert back.get("linmat", "A") == a
    assert back.get("poly") == determinant_hypersurface(a)


def test_prime_field_file():
    f = Field(7)
    m = LinFormMatrix([[[f(1), f(6)], [f(3), f(0)]], [[f(2), f(2)], [f(5), f(1)]]])
    text = dumps(InstanceFile(1, 2, f).add("linmat", "A", m))
    assert "field p:7" in text
    assert loads(text).get("linmat") == m


@pytest.mark.parametrize("bad", [
    "",
    "something 1\nr 1\ng 4\nfield q\n",
    COORD_TEXT.replace("detrep-instance 1", "detrep-instance 2"),
    COORD_TEXT.replace("field q", "field z"),
    COORD_TEXT.replace("0 0 0 1\n", ""),
    COORD_TEXT.replace("0 0 0 1", "0 0 1"),
    COORD_TEXT.replace("0 0 0 1", "0 0 0 1/0"),
    COORD_TEXT.replace("end\n", ""),
    COORD_TEXT.replace("linmat A", "widget A"),
])
def test_malformed_input(bad):
    with pytest.raises(FormatError):
        loads(bad)
