import pytest

from helpers import M, P, lab, ring
from sigreduce.counters import Counters
from sigreduce.sig import evaluate_spair, make_spair, pot_cmp, sig_divides, sig_mul

R = ring("x,y,z")


def test_pot_examples():
    assert pot_cmp((1, M(R, "x")), (2, 0)) == -1
    assert pot_cmp((1, M(R, "x^2")), (1, M(R, "x*y"))) == 1
    s = (3, M(R, "y*z"))
    assert pot_cmp(s, s) == 0


def test_sig_mul_examples():
    assert sig_mul(M(R, "y"), (2, M(R, "x"))) == (2, M(R, "x*y"))
    s = (1, M(R, "z"))
    assert sig_mul(0, s) == s
    assert sig_mul(M(R, "x"), (1, 0)) == (1, M(R, "x"))


def test_sig_divides():
    assert sig_divides((2, M(R, "x")), (2, M(R, "x^2*y")), R)
    assert not sig_divides((2, M(R, "x")), (1, M(R, "x^2*y")), R)


def test_spair_example():
    a = lab(R, 2, 0, "x*y + z")
    b = lab(R, 1, 0, "y^2 + 1")
    pair = make_spair(a, b)
    assert pair.lcm == M(R, "x*y^2")
    assert pair.left is a and pair.u == M(R, "y") and pair.v == M(R, "x")
    assert pair.sig == (2, M(R, "y"))
    out = evaluate_spair(pair)
    assert out.poly == P(R, "y*z - x")
    assert out.sig == (2, M(R, "y"))
    # argument order does not matter
    assert make_spair(b, a).sig == pair.sig


def test_identical_parents_are_singular():
    a = lab(R, 1, "x", "x*y + z")
    assert make_spair(a, a) is None


def test_equal_images_cancel():
    a = lab(R, 1, 0, "x + y")
    b = lab(R, 2, 0, "x + y")
    out = evaluate_spair(make_spair(a, b))
    assert not out.poly and out.sig == (2, 0)


def test_zero_image_rejected():
    a = lab(R, 1, 0, "x")
    with pytest.raises(ValueError):
        make_spair(a, lab(R, 2, 0, "x").with_poly(R.zero()))


def test_spair_scaling_counts_non_unit_sides():
    c = Counters()
    a = lab(R, 2, 0, "2*x + y")
    b = lab(R, 1, 0, "x + z")
    out = evaluate_spair(make_spair(a, b), c)
    # 1*a - 2*b: only the right side is scaled
    assert out.poly == P(R, "y - 2*z")
    assert c.spair_mults == 2 and c.field_mults == 2
