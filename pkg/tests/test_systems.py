import pytest

from helpers import P
from sigreduce.ffield import DEFAULT_MODULUS as p
from sigreduce.postproc import buchberger, same_basis
from sigreduce.systems import (SystemSyntaxError, gen_cyclic, gen_eco, gen_katsura, gen_noon,
                               gen_random, generate, homogenize_system, parse_name, parse_system,
                               render_system)


def polys(R, *texts):
    return [P(R, t) for t in texts]


def test_cyclic_small():
    R, F = gen_cyclic(3)
    assert F == polys(R, "x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1", "x1*x2*x3 - 1")
    R, F = gen_cyclic(2)
    assert F == polys(R, "x1 + x2", "x1*x2 - 1")
    R, F = gen_cyclic(6)
    assert [f.degree() for f in F] == [1, 2, 3, 4, 5, 6]
    with pytest.raises(ValueError):
        gen_cyclic(1)


def test_cyclic3_reduced_basis():
    R, F = gen_cyclic(3)
    assert same_basis(buchberger(F), polys(R, "x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3 - 1"))


def test_katsura_small():
    R, F = gen_katsura(2)
    assert R.n == 3
    assert F == polys(R, "x1 + 2*x2 + 2*x3 - 1",
                      "x1^2 + 2*x2^2 + 2*x3^2 - x1",
                      "2*x1*x2 + 2*x2*x3 - x2")


def test_eco_small():
    R, F = gen_eco(4)
    assert F == polys(R, "x1*x4 + x1*x2*x4 + x2*x3*x4 - 1", "x2*x4 + x1*x3*x4 - 2",
                      "x3*x4 - 3", "x1 + x2 + x3 + 1")


def test_noon_small():
    R, F = gen_noon(3)
    assert F[0] == P(R, "10*x1*x2^2 + 10*x1*x3^2 - 11*x1 + 10")
    assert F[2] == P(R, "10*x3*x1^2 + 10*x3*x2^2 - 11*x3 + 10")
    assert F[0].terms[0] == 10 and F[0].terms[R.gen(0).lm()] == p - 11


def test_random_family():
    R1, F1 = gen_random(5, 2, seed=42)
    R2, F2 = gen_random(5, 2, seed=42)
    assert F1 == F2 and len(F1) == 5
    assert gen_random(5, 2, seed=43)[1] != F1
    assert all(f.degree() == 2 and len(f) == 21 for f in F1)
    assert all(0 < c < p for f in F1 for c in f.terms.values())
    assert all(f.degree() == 1 for f in gen_random(4, 1)[1])
    assert len(gen_random(3, 2, count=6)[1]) == 6
    with pytest.raises(ValueError):
        gen_random(0, 2)


@pytest.mark.parametrize("family,n", [("cyclic", 5), ("katsura", 4), ("eco", 5), ("noon", 4),
                                      ("random", 4)])
def test_homogenized_families_are_homogeneous(family, n):
    R, F = generate(family, n)
    H, G = homogenize_system(R, F)
    assert H.n == R.n + 1
    assert all(g.is_homogeneous() for g in G)
    assert [g.degree() for g in G] == [f.degree() for f in F]
    assert generate(family, n) == (R, F)


def test_parse_names():
    assert parse_name("cyclic-5").name == "cyclic-5"
    assert parse_name("hkatsura-4").homogenize
    s = parse_name("random(5,2)#7")
    assert (s.family, s.n, s.degree, s.seed, s.count) == ("random", 5, 2, 7, None)
    assert parse_name("Random(10,2,2)").count == 2
    with pytest.raises(ValueError):
        parse_name("f-633")


def test_parse_system_example():
    R, F = parse_system("vars: x,y\nchar: 32003\nx^2 - y\nx*y - x\n")
    assert R.names == ["x", "y"] and R.p == 32003
    assert F == polys(R, "x^2 - y", "x*y - x")
    assert F[0].terms[R.monomial((0, 1))] == p - 1


def test_parse_syntax_variants():
    text = "# a comment\nvars: a, b\nchar: 7\n  3a^2*b - 2 * b +a\n\n-a*a\n"
    R, F = parse_system(text)
    assert R.p == 7
    assert F[0] == R.poly([((2, 1), 3), ((0, 1), -2), ((1, 0), 1)])
    assert F[1] == R.poly([((2, 0), -1)])
    # no char line: default or caller-provided modulus
    assert parse_system("vars: a\na\n")[0].p == p
    assert parse_system("vars: a\na\n", modulus=11)[0].p == 11


@pytest.mark.parametrize("text,line", [
    ("vars: x\nchar: 32003\n", None),
    ("vars: x\nchar: 32004\nx\n", 2),
    ("vars: x\nx + y\n", 2),
    ("x + 1\n", 1),
    ("vars: x\nx x\n", 2),
    ("vars: x\nx^\n", 2),
    ("vars: x\n3*\n", 2),
    ("vars: x, 1y\nx\n", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(SystemSyntaxError) as info:
        parse_system(text)
    if line is not None:
        assert info.value.line == line


def test_unknown_variable_column():
    with pytest.raises(SystemSyntaxError) as info:
        parse_system("vars: x\nx + y\n")
    assert info.value.col == 5 and "unknown variable" in str(info.value)


@pytest.mark.parametrize("name", ["cyclic-4", "hkatsura-3", "eco-5", "noon-3", "random(3,2)#1"])
def test_render_parse_roundtrip(name):
    R, F = parse_name(name).build()
    text = render_system(R, F, comment=name)
    R2, F2 = parse_system(text)
    assert R2 == R and F2 == F
    assert render_system(R2, F2, comment=name) == text
