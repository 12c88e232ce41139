"""Exhaustive decode verification over the demand set D.

For a given (N, K) and scheme, every demand in D is delivered once and every
user decodes; any byte mismatch is recorded. The library content is
deterministic in (N, K), so independent workers rebuild identical state and
reports merge in demand order. One symbol per subfile keeps the sweep fast.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

from . import baselines, coded_placement
from .errors import ConfigMismatch
from .model import NetworkConfig, demand_context, enumerate_demands, split_file

SCHEMES = ("new", "man")


@dataclass
class VerifyReport:
    config: dict
    demands_checked: int
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    memory: Fraction = Fraction(0)
    rate: Fraction = Fraction(0)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        payload = {
            "config": self.config,
            "demands_checked": self.demands_checked,
            "failures": self.failures,
            "measured": {"M": str(self.memory), "R": str(self.rate)},
            "wall_time": round(self.wall_time, 6),
        }
        return json.dumps(payload, sort_keys=True, indent=2)


def _deterministic_blob(n: int, k: int, index: int, length: int) -> bytes:
    rng = random.Random(f"cachewright-{n}-{k}-{index}")
    return bytes(rng.randrange(256) for _ in range(length))


def _check_chunk(args) -> tuple[int, list[dict]]:
    n, k, p, scheme, chunk = args
    cfg = NetworkConfig(n, k, p)
    failures: list[dict] = []
    if scheme == "new":
        plain = [_deterministic_blob(n, k, i, cfg.subfiles_per_file) for i in range(n)]
        library = [split_file(blob, cfg) for blob in plain]
        caches = coded_placement.place(library, cfg)
        for demand in chunk:
            broadcast = coded_placement.deliver(library, demand, cfg)
            ctx = demand_context(demand, cfg)
            for user in range(1, k + 1):
                got = coded_placement.decode(caches[user - 1], broadcast, cfg, ctx)
                if got != plain[demand[user - 1] - 1]:
                    failures.append({"demand": list(demand), "user": user,
                                     "reason": "decoded bytes differ"})
    else:
        plain = [_deterministic_blob(n, k, i, k) for i in range(n)]
        library = [baselines.man_split(blob, cfg) for blob in plain]
        caches = baselines.man_place(library, cfg)
        for demand in chunk:
            packet = baselines.man_deliver(library, demand, cfg)
            for user in range(1, k + 1):
                got = baselines.man_decode(caches[user - 1], packet, demand, cfg)
                if got != plain[demand[user - 1] - 1]:
                    failures.append({"demand": list(demand), "user": user,
                                     "reason": "decoded bytes differ"})
    return len(chunk), failures


def measured_point(n: int, k: int, scheme: str, p: int | None = None):
    """(M, R) actually occupied by placement and delivery, as exact rationals."""
    cfg = NetworkConfig(n, k, p or 0)
    if scheme == "new":
        library = [split_file(_deterministic_blob(n, k, i, cfg.subfiles_per_file), cfg)
                   for i in range(n)]
        caches = coded_placement.place(library, cfg)
        f_sym = cfg.subfiles_per_file * library[0].subfile_len
        demand = next(iter(enumerate_demands(cfg)))
        broadcast = coded_placement.deliver(library, demand, cfg)
        return (Fraction(caches[0].symbol_count, f_sym),
                Fraction(broadcast.symbol_count, f_sym))
    library = [baselines.man_split(_deterministic_blob(n, k, i, k), cfg)
               for i in range(n)]
    caches = baselines.man_place(library, cfg)
    f_sym = cfg.k * library[0].subfile_len
    demand = next(iter(enumerate_demands(cfg)))
    packet = baselines.man_deliver(library, demand, cfg)
    return (Fraction(caches[0].symbol_count, f_sym), Fraction(len(packet), f_sym))


def run_verification(n: int, k: int, scheme: str = "new", jobs: int = 1,
                     p: int | None = None) -> VerifyReport:
    if scheme not in SCHEMES:
        raise ConfigMismatch(f"unknown scheme {scheme!r}; pick one of {SCHEMES}")
    cfg = NetworkConfig(n, k, p or 0)
    start = time.perf_counter()
    demands = list(enumerate_demands(cfg))
    jobs = max(1, min(jobs, len(demands)))
    if jobs == 1:
        checked, failures = _check_chunk((n, k, cfg.p, scheme, demands))
    else:
        size = -(-len(demands) // jobs)
        chunks = [demands[i:i + size] for i in range(0, len(demands), size)]
        with Pool(processes=len(chunks)) as pool:
            results = pool.map(_check_chunk,
                               [(n, k, cfg.p, scheme, c) for c in chunks])
        checked = sum(c for c, _ in results)
        failures = [f for _, fs in results for f in fs]
    failures.sort(key=lambda f: (f["demand"], f["user"]))
    memory, rate = measured_point(n, k, scheme, cfg.p)
    return VerifyReport(
        config={"k": k, "n": n, "p": cfg.p, "scheme": scheme},
        demands_checked=checked,
        failures=failures,
        wall_time=time.perf_counter() - start,
        memory=memory,
        rate=rate,
    )
