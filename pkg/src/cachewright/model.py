"""Network configuration, file splitting, demand enumeration, and counting.

A file is split into K(K-1) subfiles indexed by ordered user pairs (i, j),
i != j. Demands assign one file to each of the K users; the demand set D
contains exactly the assignments that request every file at least once.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import ConfigMismatch, IndexOutOfRange
from .field import FieldCtx, Symbol, decode_bytes, default_modulus, encode_bytes, make_field

Demand = tuple[int, ...]


@dataclass(frozen=True)
class NetworkConfig:
    """An (N, K) cache network served over the field Z_p."""

    n: int
    k: int
    p: int = 0

    def __post_init__(self):
        if self.p == 0:
            object.__setattr__(self, "p", default_modulus(self.k))
        if not 1 <= self.n <= self.k:
            raise ConfigMismatch(f"need 1 <= N <= K, got N={self.n}, K={self.k}")
        object.__setattr__(self, "_field", make_field(self.p))
        if self.p <= self.k:
            raise ConfigMismatch(f"modulus {self.p} must exceed K={self.k}")

    @property
    def field(self) -> FieldCtx:
        return self._field

    @property
    def subfiles_per_file(self) -> int:
        return self.k * (self.k - 1)


def pair_order(k: int) -> list[tuple[int, int]]:
    """Canonical lexicographic order of the ordered pairs (i, j), i != j."""
    return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j]


@dataclass
class SubfileGrid:
    """One file cut into K(K-1) equal-length subfiles, keyed by (i, j)."""

    parts: dict[tuple[int, int], tuple[Symbol, ...]]
    subfile_len: int
    original_length: int


def split_symbols(symbols: Sequence[Symbol], cfg: NetworkConfig,
                  original_length: int | None = None) -> SubfileGrid:
    """Zero-pad to a multiple of K(K-1) (at least one symbol each) and split."""
    count = cfg.subfiles_per_file
    subfile_len = max(1, -(-len(symbols) // count))
    padded = tuple(symbols) + (0,) * (subfile_len * count - len(symbols))
    parts = {}
    for idx, pair in enumerate(pair_order(cfg.k)):
        parts[pair] = padded[idx * subfile_len:(idx + 1) * subfile_len]
    kept = len(symbols) if original_length is None else original_length
    return SubfileGrid(parts=parts, subfile_len=subfile_len, original_length=kept)


def split_file(data: bytes, cfg: NetworkConfig) -> SubfileGrid:
    return split_symbols(encode_bytes(data, cfg.field), cfg, original_length=len(data))


def grid_symbols(grid: SubfileGrid, cfg: NetworkConfig) -> tuple[Symbol, ...]:
    """Concatenate subfiles in canonical order (still padded)."""
    out: list[Symbol] = []
    for pair in pair_order(cfg.k):
        out.extend(grid.parts[pair])
    return tuple(out)


def grid_bytes(grid: SubfileGrid, cfg: NetworkConfig) -> bytes:
    return decode_bytes(grid_symbols(grid, cfg))[: grid.original_length]


def surjection_count(n: int, k: int) -> int:
    """|D| by inclusion-exclusion: sum_i (-1)^i C(n,i) (n-i)^k."""
    return sum((-1) ** i * comb(n, i) * (n - i) ** k for i in range(n + 1))


def enumerate_demands(cfg: NetworkConfig) -> Iterator[Demand]:
    """Yield the demand set D in lexicographic order.

    Backtracking with a feasibility prune (files still missing cannot exceed
    positions left), so the cost is proportional to |D|, not N^K.
    """
    n, k = cfg.n, cfg.k
    demand = [0] * k
    seen = [0] * (n + 1)

    def walk(pos: int, missing: int) -> Iterator[Demand]:
        if missing > k - pos:
            return
        if pos == k:
            yield tuple(demand)
            return
        for f in range(1, n + 1):
            demand[pos] = f
            seen[f] += 1
            yield from walk(pos + 1, missing - (seen[f] == 1))
            seen[f] -= 1

    yield from walk(0, n)


def validate_demand(demand: Sequence[int], cfg: NetworkConfig) -> Demand:
    if len(demand) != cfg.k:
        raise ConfigMismatch(f"demand length {len(demand)} != K={cfg.k}")
    for f in demand:
        if not 1 <= f <= cfg.n:
            raise ConfigMismatch(f"file index {f} outside [1, {cfg.n}]")
    return tuple(demand)


def in_demand_set(demand: Sequence[int], cfg: NetworkConfig) -> bool:
    """True iff every one of the N files is requested at least once."""
    return len(set(demand)) == cfg.n


def successor(k: int, users: int) -> int:
    """Next user index with wraparound: k+1 for k < K, 1 for k = K."""
    if not 1 <= k <= users:
        raise IndexOutOfRange(f"user {k} outside [1, {users}]")
    return k % users + 1


@dataclass(frozen=True)
class DemandContext:
    """Per-user request counts for one demand.

    For user k, counts[k-1][f] is the number of users other than k that
    request file f; at least 1 whenever some s != k requests f.
    """

    demand: Demand
    counts: tuple[dict[int, int], ...]

    def others(self, k: int) -> list[int]:
        """The user set S_k = [K] \\ {k}."""
        return [u for u in range(1, len(self.demand) + 1) if u != k]

    def n_ks(self, k: int, s: int) -> int:
        """How many users in S_k request the same file as user s."""
        return self.counts[k - 1].get(self.demand[s - 1], 0)

    def own_file_count(self, k: int) -> int:
        """How many users in S_k request user k's own file (may be 0)."""
        return self.counts[k - 1].get(self.demand[k - 1], 0)


def demand_context(demand: Sequence[int], cfg: NetworkConfig) -> DemandContext:
    d = validate_demand(demand, cfg)
    total: dict[int, int] = {}
    for f in d:
        total[f] = total.get(f, 0) + 1
    counts = []
    for k in range(1, cfg.k + 1):
        mine = dict(total)
        mine[d[k - 1]] -= 1
        counts.append({f: c for f, c in mine.items() if c})
    return DemandContext(demand=d, counts=tuple(counts))
