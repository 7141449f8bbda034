"""Operation tallies shared by the reduction, engine and post-processing code."""

from __future__ import annotations

from dataclasses import asdict, dataclass

MULT_KINDS = ("sred", "usual", "spair", "normalize", "other")


@dataclass
class Counters:
    s_red_steps: int = 0
    usual_red_steps: int = 0
    field_mults: int = 0
    # breakdown of field_mults by where they happened
    sred_mults: int = 0
    usual_mults: int = 0
    spair_mults: int = 0
    normalize_mults: int = 0
    other_mults: int = 0

    def count_mults(self, n: int, kind: str = "other") -> None:
        self.field_mults += n
        setattr(self, kind + "_mults", getattr(self, kind + "_mults") + n)

    @property
    def reductions(self) -> int:
        return self.s_red_steps + self.usual_red_steps

    def snapshot(self) -> "Counters":
        return Counters(**asdict(self))

    def as_dict(self) -> dict:
        return asdict(self)
