"""Certificates: weighted axiom lists proving a linear memory-rate bound.

A certificate asserts t_m * M + t_r * R >= rhs. It PASSes when the weighted
sum of its axiom instances cancels every entropy term exactly and the
surviving (M, R, constant) part dominates the target: proving a smaller M or
R coefficient, or a larger constant, is at least as strong because M and R
are non-negative. Inequality axioms must carry non-negative weights;
equalities may be weighted with either sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import (
    ConfigMismatch,
    MalformedAxiom,
    NegativeMultiplierOnInequality,
    SymmetryOutsideTable,
)
from .axioms import Axiom, axiom_from_tokens
from .entropy import LinComb, VarSet, varset_token

Demand = tuple[int, ...]


@dataclass(frozen=True)
class Certificate:
    n: int
    k: int
    case: int
    demands: tuple[Demand, ...]
    axioms: tuple[tuple[Axiom, Fraction], ...]
    target_m: Fraction
    target_r: Fraction
    target_rhs: Fraction

    def demand_id(self, demand: Demand) -> int | None:
        return self._lookup().get(tuple(demand))

    def _lookup(self) -> dict[Demand, int]:
        cached = getattr(self, "_ids", None)
        if cached is None:
            cached = {d: i for i, d in enumerate(self.demands, start=1)}
            object.__setattr__(self, "_ids", cached)
        return cached

    def target_text(self) -> str:
        return f"{self.target_m}M+{self.target_r}R >= {self.target_rhs}"


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    axiom_count: int
    residual_m: Fraction
    residual_r: Fraction
    residual_const: Fraction
    leftover_terms: dict[VarSet, Fraction] = field(default_factory=dict)
    reason: str = ""

    @property
    def verdict(self) -> str:
        return "PASS" if self.ok else "FAIL"


def _validate_table(cert: Certificate) -> None:
    if len(cert.demands) == 0:
        raise ConfigMismatch("certificate has an empty demand table")
    seen = set()
    for d in cert.demands:
        if len(d) != cert.k:
            raise ConfigMismatch(f"demand {d} does not have K={cert.k} entries")
        if any(not 1 <= f <= cert.n for f in d):
            raise ConfigMismatch(f"demand {d} uses a file outside [1, {cert.n}]")
        if d in seen:
            raise ConfigMismatch(f"demand {d} appears twice in the table")
        seen.add(d)


def check_certificate(cert: Certificate) -> CheckReport:
    """Validate side conditions, sum the axioms, compare with the target."""
    _validate_table(cert)
    residual = LinComb()
    for index, (axiom, mult) in enumerate(cert.axioms):
        if not axiom.equality and mult < 0:
            raise NegativeMultiplierOnInequality(index, f"{axiom.kind} weighted {mult}")
        try:
            axiom.validate(cert)
        except ValueError as exc:
            if axiom.kind == "PERMSYM" and "not in the table" in str(exc):
                raise SymmetryOutsideTable(index, str(exc)) from exc
            raise MalformedAxiom(index, str(exc)) from exc
        residual.add_scaled(axiom.lincomb(cert), mult)

    count = len(cert.axioms)
    if residual.terms:
        worst = sorted(residual.terms, key=lambda s: sorted(v.sort_key() for v in s))[0]
        return CheckReport(False, count, residual.m, residual.r, residual.const,
                           dict(residual.terms),
                           f"{len(residual.terms)} entropy terms do not cancel, "
                           f"e.g. {residual.terms[worst]}*H({varset_token(worst)})")
    if residual.m > cert.target_m:
        return CheckReport(False, count, residual.m, residual.r, residual.const,
                           reason=f"proved M coefficient {residual.m} exceeds target {cert.target_m}")
    if residual.r > cert.target_r:
        return CheckReport(False, count, residual.m, residual.r, residual.const,
                           reason=f"proved R coefficient {residual.r} exceeds target {cert.target_r}")
    if residual.const > -cert.target_rhs:
        return CheckReport(False, count, residual.m, residual.r, residual.const,
                           reason=f"proved constant {-residual.const} below target {cert.target_rhs}")
    return CheckReport(True, count, residual.m, residual.r, residual.const)


def perturbed(cert: Certificate, index: int, delta=1) -> Certificate:
    """Copy with one multiplier shifted; used by mutation tests."""
    axioms = list(cert.axioms)
    axiom, mult = axioms[index]
    axioms[index] = (axiom, mult + Fraction(delta))
    return Certificate(cert.n, cert.k, cert.case, cert.demands, tuple(axioms),
                       cert.target_m, cert.target_r, cert.target_rhs)


def _frac_token(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(token: str) -> Fraction:
    num, den = token.split("/")
    return Fraction(int(num), int(den))


def serialize_certificate(cert: Certificate) -> str:
    """Line-oriented text form; whitespace-delimited, UTF-8, LF endings."""
    lines = [f"NK {cert.n} {cert.k} CASE {cert.case}"]
    for i, d in enumerate(cert.demands, start=1):
        lines.append("D " + str(i) + " " + " ".join(str(f) for f in d))
    for axiom, mult in cert.axioms:
        lines.append("AX " + " ".join([axiom.kind, *axiom.tokens()])
                     + " MUL " + _frac_token(mult))
    lines.append(f"TARGET {_frac_token(cert.target_m)} M + "
                 f"{_frac_token(cert.target_r)} R >= {_frac_token(cert.target_rhs)}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    n = k = case = None
    demands: list[Demand] = []
    axioms: list[tuple[Axiom, Fraction]] = []
    target = None
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "NK":
            n, k, case = int(parts[1]), int(parts[2]), int(parts[4])
        elif parts[0] == "D":
            demands.append(tuple(int(f) for f in parts[2:]))
        elif parts[0] == "AX":
            if parts[-2] != "MUL":
                raise ConfigMismatch(f"axiom line lacks a multiplier: {raw!r}")
            axioms.append((axiom_from_tokens(parts[1], parts[2:-2]),
                           _parse_frac(parts[-1])))
        elif parts[0] == "TARGET":
            target = (_parse_frac(parts[1]), _parse_frac(parts[4]), _parse_frac(parts[7]))
        else:
            raise ConfigMismatch(f"unrecognized line {raw!r}")
    if n is None or target is None:
        raise ConfigMismatch("certificate text lacks a header or target")
    return Certificate(n, k, case, tuple(demands), tuple(axioms), *target)
