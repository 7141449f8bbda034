import pytest
from hypothesis import given, settings, strategies as st

from sigreduce.counters import Counters
from sigreduce.ffield import DEFAULT_MODULUS, Field, inverse, is_prime

P = DEFAULT_MODULUS
F = Field(P)
elems = st.integers(min_value=0, max_value=P - 1)
nonzero = st.integers(min_value=1, max_value=P - 1)


def test_default_modulus_is_prime():
    assert P == 32003 and is_prime(P)


def test_add_examples():
    assert F.add(32000, 5) == 2
    assert F.add(1234, 0) == 1234
    assert F.add(17, P - 17) == 0


def test_mul_examples():
    assert F.mul(2, 16002) == 1
    assert F.mul(0, 999) == 0
    assert F.mul(1, 999) == 999


def test_inv_examples():
    assert F.inv(2) == 16002
    assert F.inv(1) == 1
    assert F.inv(P - 1) == P - 1


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        inverse(P, P)


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        Field(32004)


def test_small_prime_context():
    f5 = Field(5)
    assert f5.mul(3, 4) == 2
    assert f5.inv(3) == 2
    assert f5.sub(1, 3) == 3
    assert f5.neg(0) == 0


@settings(max_examples=10_000, deadline=None)
@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert 0 <= F.sub(a, b) < P


@settings(max_examples=2000, deadline=None)
@given(nonzero)
def test_inverse_law(a):
    assert F.mul(a, F.inv(a)) == 1


@given(st.lists(st.tuples(elems, elems), max_size=50))
def test_mul_counter_counts_each_call(pairs):
    c = Counters()
    f = Field(P, counter=c)
    for a, b in pairs:
        f.mul(a, b)
    assert c.field_mults == len(pairs)
    f.inv(3)
    assert c.field_mults == len(pairs)  # inversions are not multiplications
