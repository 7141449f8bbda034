from sigreduce.poly import Ring
from sigreduce.reduce import Basis
from sigreduce.sig import LabeledPoly
from sigreduce.systems import parse_poly


def ring(names: str, p: int = 32003) -> Ring:
    names = [v.strip() for v in names.split(",")]
    return Ring(len(names), p, names)


def P(R: Ring, text: str):
    return parse_poly(text, R)


def M(R: Ring, text: str) -> int:
    return P(R, text).lm()


def lab(R, sig_index, sig_mono, text, id=-1):
    mono = M(R, sig_mono) if isinstance(sig_mono, str) else sig_mono
    return LabeledPoly((sig_index, mono), P(R, text), id=id)


def basis(R, *elements) -> Basis:
    G = Basis(R)
    for k, (i, m, text) in enumerate(elements):
        G.append(lab(R, i, m, text, id=k))
    return G
