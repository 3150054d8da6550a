import math
import random

import pytest

import wangtiler as wt
from wangtiler import (ConfigurationError, Hard, Soft, Tile, TileSet, VOID,
                       WILDCARD, alg1_simple, alg2_half, alg3_twothirds,
                       alg4_improve, builtin_set, complete_stochastic_set,
                       max_cover_oracle, max_row_cover, validate_tiling)
from wangtiler.heuristics import (PenaltyScheme, _order_half,
                                  _order_two_thirds, build_layered_dag,
                                  shortest_row)

from helpers import naive_row_min_voids, random_tileset

BUILTINS = ["fig3", "finite1", "finite2", "ammann16"]


# -- penalties and the DAG kernel ---------------------------------------------

def test_penalty_scheme_values():
    pen = PenaltyScheme.for_width(9)
    assert pen.void_cost == 1.0
    assert pen.eps_half == 1 / 20
    assert pen.eps_full == 1 / 10
    assert 9 * pen.eps_full < 1.0


def test_dag_size_formulas_unpruned():
    rng = random.Random(5)
    for _ in range(30):
        ts = random_tileset(rng, max_colors=4, max_tiles=8)
        width = rng.randint(1, 7)
        dag = build_layered_dag(ts, width, [WILDCARD] * width, [WILDCARD] * width)
        W, C, T = width, ts.num_colors, len(ts)
        assert dag.vertex_count == 2 + (W + 1) * C + W
        assert dag.edge_count == 2 * C + 2 * W * C + W * T


def test_max_row_cover_fig3_full_row():
    row, cost = max_row_cover(builtin_set("fig3"), 3, [WILDCARD] * 3,
                              [WILDCARD] * 3)
    assert VOID not in row
    assert cost == 0.0


def test_max_row_cover_forced_void():
    ts = TileSet([Tile(0, 0, 1, 1)], num_colors=2)
    row, cost = max_row_cover(ts, 2, [WILDCARD] * 2, [WILDCARD] * 2)
    assert sorted(row) == [VOID, 0]
    assert int(cost) == 1


def test_max_row_cover_width_one():
    for name in BUILTINS:
        ts = builtin_set(name)
        row, cost = max_row_cover(ts, 1, [WILDCARD], [WILDCARD])
        assert row[0] != VOID and cost == 0.0


def test_max_row_cover_rejects_zero_width():
    with pytest.raises(ConfigurationError):
        max_row_cover(builtin_set("fig3"), 0, [], [])


def test_max_row_cover_hard_constraints_prune():
    ts = builtin_set("fig3")
    # north colors forced to 1: only tile 2 has north 1
    row, _ = max_row_cover(ts, 2, [Hard(1)] * 2, [WILDCARD] * 2)
    for k in row:
        assert k == VOID or ts.norths[k] == 1


def test_max_row_cover_soft_constraints_bias():
    ts = complete_stochastic_set(2)
    width = 4
    soft = [Soft([1])] * width
    row, cost = max_row_cover(ts, width, soft, [WILDCARD] * width)
    assert all(k != VOID and ts.norths[k] == 1 for k in row)
    assert cost == 0.0


def test_max_row_cover_void_count_is_integer_part_of_cost():
    rng = random.Random(6)
    for _ in range(40):
        ts = random_tileset(rng)
        width = rng.randint(1, 6)
        south = [Soft([0]) if rng.random() < 0.4 else WILDCARD
                 for _ in range(width)]
        row, cost = max_row_cover(ts, width, [WILDCARD] * width, south)
        assert row.count(VOID) == int(cost)


def test_max_row_cover_optimal_vs_row_brute_force():
    # 200 random small instances: shortest path voids == brute-force minimum.
    rng = random.Random(7)
    for _ in range(200):
        ts = random_tileset(rng, max_colors=3, max_tiles=6)
        width = rng.randint(1, 5)
        row, _ = max_row_cover(ts, width, [WILDCARD] * width, [WILDCARD] * width)
        assert row.count(VOID) == naive_row_min_voids(ts, width)


def test_shortest_row_deterministic_for_fixed_order():
    ts = builtin_set("finite1")
    width = 6
    dag = build_layered_dag(ts, width, [WILDCARD] * width, [WILDCARD] * width)
    assert shortest_row(dag) == shortest_row(dag)


# -- row orders -----------------------------------------------------------------

def test_order_half():
    assert _order_half(1) == [1]
    assert _order_half(2) == [1, 2]
    assert _order_half(5) == [1, 3, 2, 5, 4]
    assert _order_half(6) == [1, 3, 2, 5, 4, 6]
    assert sorted(set(_order_half(9))) == list(range(1, 10))


def test_order_two_thirds():
    assert _order_two_thirds(1) == [1]
    assert _order_two_thirds(5) == [1, 4, 3, 2, 3, 5]
    assert _order_two_thirds(9)[:9] == [1, 4, 3, 2, 3, 7, 6, 5, 6]
    assert sorted(set(_order_two_thirds(15))) == list(range(1, 16))


# -- cover algorithms -------------------------------------------------------------

def test_alg1_complete2_full():
    r = alg1_simple(complete_stochastic_set(2), 20, 20, seed=0)
    assert r.placed == 400


def test_alg1_single_row_equals_kernel():
    for name in BUILTINS:
        ts = builtin_set(name)
        r = alg1_simple(ts, 1, 7, seed=0)
        row, cost = max_row_cover(ts, 7, [WILDCARD] * 7, [WILDCARD] * 7)
        assert r.placed == 7 - row.count(VOID)
        assert r.placed == 7 - int(cost)


def test_alg1_finite1_quality_band():
    ts = builtin_set("finite1")
    placed = [alg1_simple(ts, 20, 20, seed).placed for seed in range(100)]
    assert 353 <= sum(placed) / len(placed) <= 369


def test_alg2_bound_flag_and_guarantee():
    for name in BUILTINS:
        ts = builtin_set(name)
        r = alg2_half(ts, 15, 15, seed=1)
        assert r.bound == "1/2"
        assert r.placed >= math.ceil(225 / 2)


def test_alg2_single_row():
    ts = builtin_set("fig3")
    r = alg2_half(ts, 1, 6, seed=0)
    assert r.placed == 6


def test_alg2_stochastic_full():
    assert alg2_half(complete_stochastic_set(2), 25, 25, seed=2).placed == 625


def test_alg3_bound_flags():
    assert alg3_twothirds(builtin_set("ammann16"), 9, 9, 0).bound == "2/3"
    assert alg3_twothirds(builtin_set("finite2"), 9, 9, 0).bound is None


def test_alg3_guarantee_ammann():
    for seed in range(10):
        r = alg3_twothirds(builtin_set("ammann16"), 15, 15, seed)
        assert r.placed >= math.ceil(2 * 225 / 3)


def test_alg3_single_row_full():
    r = alg3_twothirds(builtin_set("fig3"), 1, 8, seed=0)
    assert r.placed == 8


def test_alg3_stochastic_full():
    assert alg3_twothirds(complete_stochastic_set(2), 12, 12, seed=3).placed == 144


def test_alg4_never_below_init():
    for name in BUILTINS:
        ts = builtin_set(name)
        for init, raw in [("simple", alg1_simple), ("half", alg2_half),
                          ("twothirds", alg3_twothirds)]:
            for seed in (0, 1, 2):
                base = raw(ts, 9, 9, seed)
                improved = alg4_improve(ts, 9, 9, init, seed)
                assert improved.placed >= base.placed
                assert improved.bound == base.bound


def test_alg4_sweeps_bounded():
    for name in BUILTINS:
        r = alg4_improve(builtin_set(name), 9, 9, "simple", seed=4)
        assert r.sweeps <= 81


def test_alg4_stochastic_all_inits_full():
    ts = complete_stochastic_set(2)
    for init in ("simple", "half", "twothirds"):
        assert alg4_improve(ts, 12, 12, init, seed=5).placed == 144


def test_alg4_finite2_quality_band():
    ts = builtin_set("finite2")
    placed = [alg4_improve(ts, 20, 20, "simple", seed).placed
              for seed in range(100)]
    avg = sum(placed) / len(placed)
    assert 344.36 * 0.95 <= avg <= 344.36 * 1.05


def test_alg4_bad_init():
    with pytest.raises(ConfigurationError):
        alg4_improve(builtin_set("fig3"), 2, 2, "fancy", seed=0)


def test_all_runs_sound_and_seeded():
    rng = random.Random(8)
    for _ in range(15):
        ts = random_tileset(rng)
        h, w = rng.randint(1, 5), rng.randint(1, 5)
        for alg in (alg1_simple, alg2_half, alg3_twothirds):
            r1 = alg(ts, h, w, seed=13)
            r2 = alg(ts, h, w, seed=13)
            assert validate_tiling(ts, r1.tiling).is_valid
            assert r1.tiling == r2.tiling
            assert r1.placed == r1.tiling.placed
        r = alg4_improve(ts, h, w, "simple", seed=13)
        assert validate_tiling(ts, r.tiling).is_valid


def test_heuristics_never_beat_oracle():
    rng = random.Random(10)
    for _ in range(25):
        ts = random_tileset(rng)
        h, w = rng.randint(1, 3), rng.randint(1, 3)
        best, _ = max_cover_oracle(ts, h, w)
        for alg in (alg1_simple, alg2_half, alg3_twothirds):
            assert alg(ts, h, w, seed=2).placed <= best
        assert alg4_improve(ts, h, w, "simple", seed=2).placed <= best
