"""Baseline schemes and closed-form rate calculators.

The Maddah-Ali--Niesen corner at M = N(K-1)/K is implemented end to end:
each file is cut into K pieces indexed by the excluded user, every cache
stores the K-1 pieces that mention its owner, and delivery is the single
packet summing W_{d_k}^{[K] minus k} over k. Everything else here is a rate
formula used when assembling tradeoff curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConfigMismatch, LengthMismatch, OutOfRange
from .field import Symbol, decode_bytes, encode_bytes, vec_add, vec_sub, vec_zero
from .model import NetworkConfig, validate_demand

Vec = tuple[Symbol, ...]


@dataclass
class ManGrid:
    """One file cut into K pieces; piece e is the one user e does not cache."""

    parts: dict[int, Vec]
    subfile_len: int
    original_length: int


@dataclass
class ManCache:
    user: int
    parts: dict[tuple[int, int], Vec]
    file_lengths: tuple[int, ...]
    subfile_len: int

    @property
    def symbol_count(self) -> int:
        return len(self.parts) * self.subfile_len


def man_split(data: bytes, cfg: NetworkConfig) -> ManGrid:
    symbols = encode_bytes(data, cfg.field)
    sub_len = max(1, -(-len(symbols) // cfg.k))
    padded = symbols + (0,) * (sub_len * cfg.k - len(symbols))
    parts = {e: padded[(e - 1) * sub_len: e * sub_len] for e in range(1, cfg.k + 1)}
    return ManGrid(parts=parts, subfile_len=sub_len, original_length=len(data))


def man_place(library: list[ManGrid], cfg: NetworkConfig) -> list[ManCache]:
    if cfg.k < 2:
        raise ConfigMismatch("the K-1 subset split is degenerate for K = 1")
    if len(library) != cfg.n:
        raise ConfigMismatch(f"library holds {len(library)} files, config says {cfg.n}")
    if len({g.subfile_len for g in library}) != 1:
        raise ConfigMismatch("files split with differing subfile lengths")
    lengths = tuple(g.original_length for g in library)
    caches = []
    for k in range(1, cfg.k + 1):
        parts = {}
        for n, grid in enumerate(library, start=1):
            for e in range(1, cfg.k + 1):
                if e != k:
                    parts[(n, e)] = grid.parts[e]
        caches.append(ManCache(user=k, parts=parts, file_lengths=lengths,
                               subfile_len=library[0].subfile_len))
    return caches


def man_deliver(library: list[ManGrid], demand, cfg: NetworkConfig) -> Vec:
    """One packet of F/K symbols; valid for every demand, not only D."""
    d = validate_demand(demand, cfg)
    fld = cfg.field
    acc = vec_zero(library[0].subfile_len)
    for k in range(1, cfg.k + 1):
        acc = vec_add(fld, acc, library[d[k - 1] - 1].parts[k])
    return acc


def man_decode(cache: ManCache, packet: Vec, demand, cfg: NetworkConfig) -> bytes:
    d = validate_demand(demand, cfg)
    if len(packet) != cache.subfile_len:
        raise LengthMismatch("packet length != subfile length")
    fld = cfg.field
    k, wanted = cache.user, d[cache.user - 1]
    missing = packet
    for j in range(1, cfg.k + 1):
        if j != k:
            missing = vec_sub(fld, missing, cache.parts[(d[j - 1], j)])
    symbols: list[Symbol] = []
    for e in range(1, cfg.k + 1):
        symbols.extend(missing if e == k else cache.parts[(wanted, e)])
    return decode_bytes(symbols)[: cache.file_lengths[wanted - 1]]


def man_point(n: int, k: int) -> tuple[Fraction, Fraction]:
    return Fraction(n * (k - 1), k), Fraction(1, k)


def rate_yu(n: int, k: int, r: int) -> Fraction:
    """Corner rate R_r = (C(K, r+1) - C(K-N, r+1)) / C(K, r) at M = Nr/K."""
    if not 1 <= n <= k:
        raise OutOfRange(f"need 1 <= N <= K, got ({n}, {k})")
    if not 0 <= r <= k:
        raise OutOfRange(f"corner index {r} outside [0, {k}]")
    return Fraction(comb(k, r + 1) - comb(k - n, r + 1), comb(k, r))


def yu_point(n: int, k: int, r: int) -> tuple[Fraction, Fraction]:
    return Fraction(n * r, k), rate_yu(n, k, r)


def rate_chen(n: int, k: int, memory: Fraction) -> Fraction:
    """N - N*M, exact on [0, 1/K] for N <= K."""
    if not 1 <= n <= k:
        raise OutOfRange(f"need 1 <= N <= K, got ({n}, {k})")
    memory = Fraction(memory)
    if not 0 <= memory <= Fraction(1, k):
        raise OutOfRange(f"M={memory} outside [0, 1/{k}]")
    return n - n * memory


def rate_gomez(n: int, memory: Fraction) -> Fraction:
    """(N^2-1)/N - (N-1)*M, exact on [1/N, 1/(N-1)] when K = N >= 2."""
    if n < 2:
        raise OutOfRange("needs N >= 2")
    memory = Fraction(memory)
    if not Fraction(1, n) <= memory <= Fraction(1, n - 1):
        raise OutOfRange(f"M={memory} outside [1/{n}, 1/{n - 1}]")
    return Fraction(n * n - 1, n) - (n - 1) * memory
