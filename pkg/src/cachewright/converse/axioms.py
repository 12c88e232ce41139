"""Axiom instances a certificate may combine, with their side conditions.

Every instance renders to a linear combination asserted >= 0 (inequalities)
or = 0 (equalities) over the variables of one demand table:

  Submodularity      H(A) + H(B) - H(A u B) - H(A n B) >= 0
  Monotonicity       H(sup) - H(sub) >= 0 for sub subset of sup
  CacheBound         M - H(Z_l) >= 0
  RateBound          R - H(X_i) >= 0
  Decodability       H(S u {W_d_l}) - H(S) = 0 when Z_l, X_i in S
  Totality           H(S) - N = 0 when all N files lie in S
  FileIndependence   H(W_T) - |T| = 0 for file subsets T
  PermSymmetry       H(S) - H(pi S) = 0, pi relabelling users and demands
  FileSymmetry       H(W_a, Z_l) - H(W_b, Z_l) = 0

PermSymmetry is valid only when pi maps every broadcast in S to a demand
that exists in the table; the checker enforces exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .entropy import LinComb, VarSet, parse_varset, varset_token, wset, wvar, xvar, zvar


def _check_vars(vs: VarSet, table) -> None:
    for v in vs:
        if v.kind == "W" and not 1 <= v.idx <= table.n:
            raise ValueError(f"file index {v.idx} outside [1, {table.n}]")
        if v.kind == "Z" and not 1 <= v.idx <= table.k:
            raise ValueError(f"cache index {v.idx} outside [1, {table.k}]")
        if v.kind == "X" and not 1 <= v.idx <= len(table.demands):
            raise ValueError(f"demand id {v.idx} outside the table")


@dataclass(frozen=True)
class Submodularity:
    a: VarSet
    b: VarSet

    kind = "SUBMOD"
    equality = False

    def validate(self, table) -> None:
        if not self.a or not self.b:
            raise ValueError("submodularity needs two nonempty sets")
        _check_vars(self.a | self.b, table)

    def lincomb(self, table) -> LinComb:
        lc = LinComb()
        lc.add_term(self.a, 1).add_term(self.b, 1)
        lc.add_term(self.a | self.b, -1).add_term(self.a & self.b, -1)
        return lc

    def tokens(self) -> list[str]:
        return [varset_token(self.a), varset_token(self.b)]


@dataclass(frozen=True)
class Monotonicity:
    sup: VarSet
    sub: VarSet

    kind = "MONO"
    equality = False

    def validate(self, table) -> None:
        if not self.sup:
            raise ValueError("monotonicity needs a nonempty superset")
        if not self.sub <= self.sup:
            raise ValueError("second set is not contained in the first")
        _check_vars(self.sup, table)

    def lincomb(self, table) -> LinComb:
        return LinComb().add_term(self.sup, 1).add_term(self.sub, -1)

    def tokens(self) -> list[str]:
        return [varset_token(self.sup), varset_token(self.sub)]


@dataclass(frozen=True)
class CacheBound:
    user: int

    kind = "CACHE"
    equality = False

    def validate(self, table) -> None:
        if not 1 <= self.user <= table.k:
            raise ValueError(f"user {self.user} outside [1, {table.k}]")

    def lincomb(self, table) -> LinComb:
        lc = LinComb()
        lc.m += 1
        return lc.add_term(frozenset({zvar(self.user)}), -1)

    def tokens(self) -> list[str]:
        return [str(self.user)]


@dataclass(frozen=True)
class RateBound:
    demand_id: int

    kind = "RATE"
    equality = False

    def validate(self, table) -> None:
        if not 1 <= self.demand_id <= len(table.demands):
            raise ValueError(f"demand id {self.demand_id} outside the table")

    def lincomb(self, table) -> LinComb:
        lc = LinComb()
        lc.r += 1
        return lc.add_term(frozenset({xvar(self.demand_id)}), -1)

    def tokens(self) -> list[str]:
        return [str(self.demand_id)]


@dataclass(frozen=True)
class Decodability:
    user: int
    demand_id: int
    s: VarSet

    kind = "DECODE"
    equality = True

    def validate(self, table) -> None:
        if not 1 <= self.user <= table.k:
            raise ValueError(f"user {self.user} outside [1, {table.k}]")
        if not 1 <= self.demand_id <= len(table.demands):
            raise ValueError(f"demand id {self.demand_id} outside the table")
        if zvar(self.user) not in self.s:
            raise ValueError(f"Z{self.user} missing from the conditioning set")
        if xvar(self.demand_id) not in self.s:
            raise ValueError(f"X{self.demand_id} missing from the conditioning set")
        _check_vars(self.s, table)

    def lincomb(self, table) -> LinComb:
        wanted = wvar(table.demands[self.demand_id - 1][self.user - 1])
        lc = LinComb()
        return lc.add_term(self.s | {wanted}, 1).add_term(self.s, -1)

    def tokens(self) -> list[str]:
        return [str(self.user), str(self.demand_id), varset_token(self.s)]


@dataclass(frozen=True)
class Totality:
    s: VarSet

    kind = "TOTAL"
    equality = True

    def validate(self, table) -> None:
        if not wset(table.n) <= self.s:
            raise ValueError("set does not contain every file")
        _check_vars(self.s, table)

    def lincomb(self, table) -> LinComb:
        lc = LinComb()
        lc.add_term(self.s, 1)
        lc.const -= table.n
        return lc

    def tokens(self) -> list[str]:
        return [varset_token(self.s)]


@dataclass(frozen=True)
class FileIndependence:
    files: VarSet

    kind = "FILEIND"
    equality = True

    def validate(self, table) -> None:
        if not self.files:
            raise ValueError("needs a nonempty file set")
        if any(v.kind != "W" for v in self.files):
            raise ValueError("only file variables allowed")
        _check_vars(self.files, table)

    def lincomb(self, table) -> LinComb:
        lc = LinComb()
        lc.add_term(self.files, 1)
        lc.const -= len(self.files)
        return lc

    def tokens(self) -> list[str]:
        return [varset_token(self.files)]


@dataclass(frozen=True)
class PermSymmetry:
    perm: tuple[int, ...]
    s: VarSet

    kind = "PERMSYM"
    equality = True

    def permuted_demand(self, demand: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(self.perm)
        for user, image in enumerate(self.perm, start=1):
            out[image - 1] = demand[user - 1]
        return tuple(out)

    def validate(self, table) -> None:
        if sorted(self.perm) != list(range(1, table.k + 1)):
            raise ValueError(f"{self.perm} is not a permutation of [1, {table.k}]")
        _check_vars(self.s, table)
        for v in self.s:
            if v.kind == "X":
                moved = self.permuted_demand(table.demands[v.idx - 1])
                if table.demand_id(moved) is None:
                    raise ValueError(
                        f"permutation sends demand {v.idx} to {moved}, not in the table")

    def image(self, table) -> VarSet:
        out = set()
        for v in self.s:
            if v.kind == "Z":
                out.add(zvar(self.perm[v.idx - 1]))
            elif v.kind == "X":
                out.add(xvar(table.demand_id(self.permuted_demand(table.demands[v.idx - 1]))))
            else:
                out.add(v)
        return frozenset(out)

    def lincomb(self, table) -> LinComb:
        return LinComb().add_term(self.s, 1).add_term(self.image(table), -1)

    def tokens(self) -> list[str]:
        return [",".join(str(i) for i in self.perm), varset_token(self.s)]


@dataclass(frozen=True)
class FileSymmetry:
    file_a: int
    file_b: int
    user: int

    kind = "FILESYM"
    equality = True

    def validate(self, table) -> None:
        for f in (self.file_a, self.file_b):
            if not 1 <= f <= table.n:
                raise ValueError(f"file index {f} outside [1, {table.n}]")
        if not 1 <= self.user <= table.k:
            raise ValueError(f"user {self.user} outside [1, {table.k}]")

    def lincomb(self, table) -> LinComb:
        lc = LinComb()
        lc.add_term(frozenset({wvar(self.file_a), zvar(self.user)}), 1)
        lc.add_term(frozenset({wvar(self.file_b), zvar(self.user)}), -1)
        return lc

    def tokens(self) -> list[str]:
        return [str(self.file_a), str(self.file_b), str(self.user)]


Axiom = (Submodularity | Monotonicity | CacheBound | RateBound | Decodability
         | Totality | FileIndependence | PermSymmetry | FileSymmetry)

_KINDS = {cls.kind: cls for cls in
          (Submodularity, Monotonicity, CacheBound, RateBound, Decodability,
           Totality, FileIndependence, PermSymmetry, FileSymmetry)}


def axiom_from_tokens(kind: str, tokens: list[str]) -> Axiom:
    if kind not in _KINDS:
        raise ValueError(f"unknown axiom kind {kind!r}")
    if kind == "SUBMOD":
        return Submodularity(parse_varset(tokens[0]), parse_varset(tokens[1]))
    if kind == "MONO":
        return Monotonicity(parse_varset(tokens[0]), parse_varset(tokens[1]))
    if kind == "CACHE":
        return CacheBound(int(tokens[0]))
    if kind == "RATE":
        return RateBound(int(tokens[0]))
    if kind == "DECODE":
        return Decodability(int(tokens[0]), int(tokens[1]), parse_varset(tokens[2]))
    if kind == "TOTAL":
        return Totality(parse_varset(tokens[0]))
    if kind == "FILEIND":
        return FileIndependence(parse_varset(tokens[0]))
    if kind == "PERMSYM":
        perm = tuple(int(t) for t in tokens[0].split(","))
        return PermSymmetry(perm, parse_varset(tokens[1]))
    return FileSymmetry(int(tokens[0]), int(tokens[1]), int(tokens[2]))
