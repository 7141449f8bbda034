"""Benchmark families and the ``.gbsys`` text format.

Format, one item per line::

    # optional comment lines
    vars: x, y, z          (first listed is the largest variable)
    char: 32003
    x^2 - 3*y*z + 1        (one polynomial per line)

Terms are products of an optional integer coefficient and powers
``name^k`` joined by ``*``; the ``*`` between a coefficient and the first
variable may be omitted. Whitespace is ignored. Negative coefficients are
taken modulo the characteristic.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .ffield import DEFAULT_MODULUS, is_prime
from .poly import Poly, Ring, homogenize, render_poly

FAMILIES = ("cyclic", "katsura", "eco", "noon", "random")


class SystemSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__("line %d, column %d: %s" % (line, col, msg))
        self.line = line
        self.col = col


@dataclass(frozen=True)
class SystemSpec:
    family: str
    n: int
    degree: int = 2
    count: int | None = None
    seed: int = 0
    homogenize: bool = False
    modulus: int = DEFAULT_MODULUS

    @property
    def name(self) -> str:
        if self.family == "random":
            base = "random(%d,%d)" % (self.n, self.degree)
            if self.count is not None:
                base = "random(%d,%d,%d)" % (self.n, self.degree, self.count)
            base += "#%d" % self.seed
        else:
            base = "%s-%d" % (self.family, self.n)
        return ("h" + base) if self.homogenize else base

    def build(self) -> tuple[Ring, list[Poly]]:
        ring, F = generate(self.family, self.n, modulus=self.modulus, degree=self.degree,
                           count=self.count, seed=self.seed)
        if self.homogenize:
            ring, F = homogenize_system(ring, F)
        return ring, F


def _names(n: int) -> list[str]:
    return ["x%d" % (i + 1) for i in range(n)]


def gen_cyclic(n: int, modulus: int = DEFAULT_MODULUS) -> tuple[Ring, list[Poly]]:
    if n < 2:
        raise ValueError("cyclic-n needs n >= 2")
    R = Ring(n, modulus, _names(n))
    x = [R.gen(i) for i in range(n)]
    F = []
    for k in range(1, n):
        f = R.zero()
        for i in range(n):
            t = R.one()
            for j in range(i, i + k):
                t = t * x[j % n]
            f = f + t
        F.append(f)
    prod = R.one()
    for xi in x:
        prod = prod * xi
    F.append(prod - R.one())
    return R, F


def gen_katsura(n: int, modulus: int = DEFAULT_MODULUS) -> tuple[Ring, list[Poly]]:
    """katsura-n in the n+1 unknowns u_0..u_n (named x1..x_{n+1}).

    With u_{-l} = u_l and u_l = 0 for |l| > n: the linear relation
    sum_l u_l = 1 first, then sum_l u_l*u_{m-l} = u_m for m = 0..n-1.
    """
    if n < 1:
        raise ValueError("katsura-n needs n >= 1")
    R = Ring(n + 1, modulus, _names(n + 1))
    u = [R.gen(i) for i in range(n + 1)]

    def U(l):
        l = abs(l)
        return u[l] if l <= n else R.zero()

    F = [sum((U(l) for l in range(-n, n + 1)), R.zero()) - R.one()]
    for m in range(n):
        f = R.zero()
        for l in range(-n, n + 1):
            f = f + U(l) * U(m - l)
        F.append(f - U(m))
    return R, F


def gen_eco(n: int, modulus: int = DEFAULT_MODULUS) -> tuple[Ring, list[Poly]]:
    """eco-n: (x_k + sum_i x_i x_{i+k}) x_n - k for k < n, and x_1+..+x_{n-1}+1."""
    if n < 2:
        raise ValueError("eco-n needs n >= 2")
    R = Ring(n, modulus, _names(n))
    x = [R.gen(i) for i in range(n)]
    F = []
    for k in range(1, n):
        inner = x[k - 1]
        for i in range(1, n - k):
            inner = inner + x[i - 1] * x[i + k - 1]
        F.append(inner * x[n - 1] - R.const(k))
    F.append(sum(x[:n - 1], R.zero()) + R.one())
    return R, F


def gen_noon(n: int, modulus: int = DEFAULT_MODULUS) -> tuple[Ring, list[Poly]]:
    """noon-n: 10*x_i*(sum_{j != i} x_j^2) - 11*x_i + 10."""
    if n < 2:
        raise ValueError("noon-n needs n >= 2")
    R = Ring(n, modulus, _names(n))
    x = [R.gen(i) for i in range(n)]
    F = []
    for i in range(n):
        s = sum((x[j] * x[j] for j in range(n) if j != i), R.zero())
        F.append(x[i] * s * 10 - x[i] * 11 + R.const(10))
    return R, F


def gen_random(nvars: int, degree: int = 2, count: int | None = None, seed: int = 0,
               modulus: int = DEFAULT_MODULUS) -> tuple[Ring, list[Poly]]:
    """Dense polynomials of total degree <= ``degree`` with random nonzero coefficients.

    ``count`` defaults to ``nvars`` (a square system).
    """
    if nvars < 1 or degree < 1:
        raise ValueError("random systems need nvars >= 1 and degree >= 1")
    if count is None:
        count = nvars
    if count < 1:
        raise ValueError("need at least one polynomial")
    R = Ring(nvars, modulus, _names(nvars))
    rng = random.Random(seed)
    monos = []
    for d in range(degree, -1, -1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            monos.append(R.monomial(e))
    monos.sort(reverse=True)
    F = [Poly(R, {m: rng.randrange(1, modulus) for m in monos}) for _ in range(count)]
    return R, F


GENERATORS = {
    "cyclic": gen_cyclic,
    "katsura": gen_katsura,
    "eco": gen_eco,
    "noon": gen_noon,
}


def generate(family: str, n: int, modulus: int = DEFAULT_MODULUS, degree: int = 2,
             count: int | None = None, seed: int = 0) -> tuple[Ring, list[Poly]]:
    family = family.lower()
    if family == "random":
        return gen_random(n, degree, count, seed, modulus)
    if family not in GENERATORS:
        raise ValueError("unknown family %r (known: %s)" % (family, ", ".join(FAMILIES)))
    return GENERATORS[family](n, modulus)


def homogenize_system(ring: Ring, F: list[Poly]) -> tuple[Ring, list[Poly]]:
    H = ring.homogenized()
    return H, [homogenize(f, H) for f in F]


_NAME_RE = re.compile(r"^(cyclic|katsura|eco|noon)-(\d+)$")
_RANDOM_RE = re.compile(r"^random\((\d+),(\d+)(?:,(\d+))?\)(?:#(\d+))?$")


def parse_name(name: str, modulus: int = DEFAULT_MODULUS) -> SystemSpec:
    """``cyclic-5``, ``hkatsura-4`` or ``random(5,2)#7`` (leading ``h`` homogenizes)."""
    s = name.strip().lower().replace(" ", "")
    hom = False
    if s.startswith("h") and not s.startswith("hom"):
        hom, s = True, s[1:]
    m = _NAME_RE.match(s)
    if m:
        return SystemSpec(m.group(1), int(m.group(2)), homogenize=hom, modulus=modulus)
    m = _RANDOM_RE.match(s)
    if m:
        count = int(m.group(3)) if m.group(3) else None
        seed = int(m.group(4)) if m.group(4) else 0
        return SystemSpec("random", int(m.group(1)), int(m.group(2)), count, seed, hom, modulus)
    raise ValueError("unrecognised benchmark name %r" % name)


# ---------------------------------------------------------------------------
# text format



def _parse_poly(text: str, ring: Ring, lineno: int, index: dict[str, int]) -> Poly:
    p = ring.p
    pos = 0
    n = len(text)
    terms: dict[int, int] = {}
    expect_sign = False

    def err(msg, at):
        raise SystemSyntaxError(msg, lineno, at + 1)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip_ws(pos)
    if pos >= n:
        err("empty polynomial", pos)
    while True:
        pos = skip_ws(pos)
        if pos >= n:
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif expect_sign:
            err("expected '+' or '-'", pos)
        coeff = 1
        exps = [0] * ring.n
        seen_factor = False
        m = re.compile(r"\d+").match(text, pos)
        if m:
            coeff = int(m.group())
            pos = skip_ws(m.end())
            seen_factor = True
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
                if pos >= n or not (text[pos].isalpha() or text[pos] == "_"):
                    err("expected a variable after '*'", pos)
        need_star = False
        while pos < n and (text[pos].isalpha() or text[pos] == "_"):
            if need_star:
                err("expected '*' between factors", pos)
            m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(text, pos)
            name = m.group()
            if name not in index:
                err("unknown variable %r" % name, pos)
            pos = skip_ws(m.end())
            e = 1
            if pos < n and text[pos] == "^":
                pos = skip_ws(pos + 1)
                m2 = re.compile(r"\d+").match(text, pos)
                if not m2:
                    err("expected an exponent after '^'", pos)
                e = int(m2.group())
                pos = skip_ws(m2.end())
            exps[index[name]] += e
            seen_factor = True
            need_star = True
            if pos < n and text[pos] == "*":
                need_star = False
                pos = skip_ws(pos + 1)
                if pos >= n or not (text[pos].isalpha() or text[pos] == "_"):
                    err("expected a variable after '*'", pos)
        if not seen_factor:
            err("expected a term", pos)
        mono = ring.monomial(exps)
        terms[mono] = (terms.get(mono, 0) + sign * coeff) % p
        expect_sign = True
    return Poly(ring, {m: c for m, c in terms.items() if c})


def parse_system(text: str, modulus: int | None = None) -> tuple[Ring, list[Poly]]:
    """Parse ``.gbsys`` text; ``modulus`` is used when there is no ``char:`` line."""
    names = None
    char = None
    body = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        low = line.lower()
        if low.startswith("vars:"):
            if names is not None:
                raise SystemSyntaxError("duplicate 'vars:' line", lineno, 1)
            names = [v.strip() for v in line[5:].split(",")]
            for v in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise SystemSyntaxError("bad variable name %r" % v, lineno,
                                            raw.find(v) + 1 if v else 6)
            continue
        if low.startswith("char:"):
            if char is not None:
                raise SystemSyntaxError("duplicate 'char:' line", lineno, 1)
            val = line[5:].strip()
            if not val.isdigit():
                raise SystemSyntaxError("characteristic must be an integer", lineno, 6)
            char = int(val)
            if not is_prime(char):
                raise SystemSyntaxError("characteristic %d is not prime" % char, lineno, 6)
            continue
        if names is None:
            raise SystemSyntaxError("'vars:' must come before the polynomials", lineno, 1)
        body.append((lineno, raw))
    if names is None:
        raise SystemSyntaxError("missing 'vars:' line", 1, 1)
    if char is None:
        char = modulus if modulus is not None else DEFAULT_MODULUS
    if not body:
        raise SystemSyntaxError("no polynomials given", max(1, len(text.splitlines())), 1)
    try:
        ring = Ring(len(names), char, names)
    except ValueError as exc:
        raise SystemSyntaxError(str(exc), 1, 1) from None
    index = {v: i for i, v in enumerate(names)}
    polys = [_parse_poly(raw, ring, lineno, index) for lineno, raw in body]
    return ring, polys


def render_system(ring: Ring, F: list[Poly], comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append("vars: " + ", ".join(ring.names))
    lines.append("char: %d" % ring.p)
    lines.extend(render_poly(f) for f in F)
    return "\n".join(lines) + "\n"


def load_system(path: str, modulus: int | None = None) -> tuple[Ring, list[Poly]]:
    with open(path) as fh:
        return parse_system(fh.read(), modulus)


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse a single polynomial in the ``.gbsys`` term syntax."""
    return _parse_poly(text, ring, 1, {v: i for i, v in enumerate(ring.names)})
