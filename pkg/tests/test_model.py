from __future__ import annotations

import itertools
import random

import pytest

from cachewright.errors import ConfigMismatch, IndexOutOfRange
from cachewright.model import (
    NetworkConfig,
    demand_context,
    enumerate_demands,
    grid_bytes,
    in_demand_set,
    pair_order,
    split_file,
    split_symbols,
    successor,
    surjection_count,
)


def brute_force_demands(n, k):
    """Independent oracle: filter the full N^K product."""
    return [d for d in itertools.product(range(1, n + 1), repeat=k)
            if len(set(d)) == n]


def test_config_validation():
    cfg = NetworkConfig(3, 4)
    assert cfg.p == 257
    with pytest.raises(ConfigMismatch):
        NetworkConfig(5, 4)
    with pytest.raises(ConfigMismatch):
        NetworkConfig(0, 4)
    with pytest.raises(ConfigMismatch):
        NetworkConfig(3, 4, p=3)  # p must exceed K


def test_pair_order_lexicographic():
    assert pair_order(3) == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]
    assert len(pair_order(4)) == 12


def test_split_file_24_bytes():
    cfg = NetworkConfig(3, 4)
    grid = split_file(bytes(range(24)), cfg)
    assert len(grid.parts) == 12
    assert grid.subfile_len == 2
    assert all(len(v) == 2 for v in grid.parts.values())
    assert grid.parts[(1, 2)] == (0, 1)
    assert grid.parts[(4, 3)] == (22, 23)


def test_split_file_empty():
    cfg = NetworkConfig(3, 4)
    grid = split_file(b"", cfg)
    assert grid.subfile_len == 1
    assert grid.original_length == 0
    assert all(v == (0,) for v in grid.parts.values())
    assert grid_bytes(grid, cfg) == b""


def test_split_file_pads_to_36():
    # smallest multiple of 12 holding 25 bytes with at least one symbol each
    cfg = NetworkConfig(3, 4)
    grid = split_file(bytes(25), cfg)
    assert grid.subfile_len * 12 == 36
    assert grid.original_length == 25


def test_split_round_trip_random():
    cfg = NetworkConfig(2, 5)
    rng = random.Random(3)
    for _ in range(25):
        blob = bytes(rng.randrange(256) for _ in range(rng.randrange(0, 300)))
        assert grid_bytes(split_file(blob, cfg), cfg) == blob


def test_split_symbols_small_modulus():
    cfg = NetworkConfig(2, 4, p=5)
    grid = split_symbols((1, 2, 3, 4), cfg)
    assert grid.subfile_len == 1
    assert grid.parts[(1, 2)] == (1,)


def test_enumerate_demands_matches_brute_force():
    for n, k in [(1, 1), (1, 3), (2, 2), (2, 4), (3, 4), (3, 5), (4, 4), (2, 6)]:
        cfg = NetworkConfig(n, k)
        got = list(enumerate_demands(cfg))
        assert got == brute_force_demands(n, k)
        assert len(got) == surjection_count(n, k)


def test_enumerate_demands_counts():
    assert list(enumerate_demands(NetworkConfig(2, 2))) == [(1, 2), (2, 1)]
    assert surjection_count(3, 4) == 36
    assert surjection_count(2, 4) == 14
    assert len(list(enumerate_demands(NetworkConfig(3, 4)))) == 36
    assert len(list(enumerate_demands(NetworkConfig(2, 4)))) == 14
    # spot checks where the full product would be expensive
    assert len(list(enumerate_demands(NetworkConfig(2, 8)))) == surjection_count(2, 8)
    assert len(list(enumerate_demands(NetworkConfig(7, 7)))) == 5040


def test_every_demand_surjective():
    cfg = NetworkConfig(3, 5)
    for d in enumerate_demands(cfg):
        assert in_demand_set(d, cfg)
        assert set(d) == {1, 2, 3}


def test_other_users_cover_all_other_files():
    # every file besides user k's own has a requester among the other users
    for n, k in [(2, 3), (3, 4), (4, 5)]:
        cfg = NetworkConfig(n, k)
        for d in enumerate_demands(cfg):
            for user in range(1, k + 1):
                others = {d[u - 1] for u in range(1, k + 1) if u != user}
                assert others >= set(range(1, n + 1)) - {d[user - 1]}


def test_demand_context_counts():
    cfg = NetworkConfig(3, 4)
    ctx = demand_context((1, 1, 2, 3), cfg)
    # users 1 and 2 both request file 1, seen from user 3
    assert ctx.n_ks(3, 1) == 2
    assert ctx.n_ks(3, 2) == 2
    assert ctx.n_ks(3, 4) == 1
    assert ctx.own_file_count(1) == 1
    assert ctx.own_file_count(3) == 0
    assert ctx.others(2) == [1, 3, 4]


def test_demand_context_distinct_files():
    cfg = NetworkConfig(4, 4)
    ctx = demand_context((1, 2, 3, 4), cfg)
    for k in range(1, 5):
        for s in ctx.others(k):
            assert ctx.n_ks(k, s) == 1


def test_demand_context_2_4():
    ctx = demand_context((1, 1, 1, 2), NetworkConfig(2, 4))
    assert ctx.n_ks(1, 2) == 2  # users 2 and 3 in S_1 request file 1


def test_successor():
    assert successor(4, 4) == 1
    assert successor(1, 4) == 2
    assert successor(3, 4) == 4
    with pytest.raises(IndexOutOfRange):
        successor(5, 4)


def test_counts_sum_to_k_minus_1():
    cfg = NetworkConfig(3, 5)
    rng = random.Random(5)
    demands = list(enumerate_demands(cfg))
    for d in rng.sample(demands, 20):
        ctx = demand_context(d, cfg)
        for k in range(1, 6):
            assert sum(ctx.counts[k - 1].values()) == 4
