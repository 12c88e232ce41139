"""Exact-rational linear combinations of joint entropy terms.

Random variables come in three flavours: a file W_n, a cache Z_l, and a
broadcast X_i for the i-th demand of a certificate's demand table. A linear
combination maps variable sets to rational coefficients and additionally
carries coefficients for the cache budget M, the rate R, and a constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

_KIND_ORDER = {"W": 0, "Z": 1, "X": 2}


@dataclass(frozen=True)
class Var:
    """One random variable: kind 'W' (file), 'Z' (cache), or 'X' (broadcast)."""

    kind: str
    idx: int

    def sort_key(self) -> tuple[int, int]:
        return _KIND_ORDER[self.kind], self.idx

    def token(self) -> str:
        return f"{self.kind}{self.idx}"

    @classmethod
    def parse(cls, token: str) -> "Var":
        kind = token[:1]
        if kind not in _KIND_ORDER or not token[1:].isdigit():
            raise ValueError(f"bad variable token {token!r}")
        return cls(kind, int(token[1:]))


VarSet = frozenset


def wvar(n: int) -> Var:
    return Var("W", n)


def zvar(l: int) -> Var:
    return Var("Z", l)


def xvar(demand_id: int) -> Var:
    return Var("X", demand_id)


def wset(count: int) -> VarSet:
    """The file collection {W_1, ..., W_count}; empty for count 0."""
    return frozenset(wvar(i) for i in range(1, count + 1))


def xset(ids: Iterable[int]) -> VarSet:
    return frozenset(xvar(i) for i in ids)


def varset_token(vs: VarSet) -> str:
    if not vs:
        return "-"
    return ",".join(v.token() for v in sorted(vs, key=Var.sort_key))


def parse_varset(token: str) -> VarSet:
    if token == "-":
        return frozenset()
    return frozenset(Var.parse(t) for t in token.split(","))


class LinComb:
    """Mutable accumulator; zero coefficients are never stored."""

    __slots__ = ("terms", "m", "r", "const")

    def __init__(self):
        self.terms: dict[VarSet, Fraction] = {}
        self.m = Fraction(0)
        self.r = Fraction(0)
        self.const = Fraction(0)

    def add_term(self, vs: VarSet, coef) -> "LinComb":
        """Add coef * H(vs); the empty set has zero entropy and is dropped."""
        coef = Fraction(coef)
        if not vs or coef == 0:
            return self
        new = self.terms.get(vs, Fraction(0)) + coef
        if new:
            self.terms[vs] = new
        else:
            self.terms.pop(vs, None)
        return self

    def add_scaled(self, other: "LinComb", coef) -> "LinComb":
        coef = Fraction(coef)
        for vs, c in other.terms.items():
            self.add_term(vs, c * coef)
        self.m += other.m * coef
        self.r += other.r * coef
        self.const += other.const * coef
        return self

    def describe(self, limit: int = 6) -> str:
        parts = []
        for vs in sorted(self.terms, key=lambda s: sorted(v.sort_key() for v in s))[:limit]:
            parts.append(f"{self.terms[vs]}*H({varset_token(vs)})")
        if len(self.terms) > limit:
            parts.append(f"... {len(self.terms) - limit} more")
        for label, value in (("M", self.m), ("R", self.r), ("1", self.const)):
            if value:
                parts.append(f"{value}*{label}")
        return " + ".join(parts) if parts else "0"
