"""Shared helpers for the test suite: random instance generation and small
independent brute-force oracles kept deliberately separate from the package
implementations they check."""

from __future__ import annotations

import itertools
import random

from wangtiler import Tile, TileSet, VOID


def random_tileset(rng: random.Random, max_colors: int = 3,
                   max_tiles: int = 6) -> TileSet:
    nc = rng.randint(1, max_colors)
    nt = rng.randint(1, min(max_tiles, nc ** 4))
    quads = set()
    while len(quads) < nt:
        quads.add(tuple(rng.randrange(nc) for _ in range(4)))
    return TileSet([Tile(*q) for q in sorted(quads)], num_colors=nc)


def naive_max_cover(ts: TileSet, h: int, w: int) -> int:
    """Plain enumeration over all (tiles+VOID)^(h*w) assignments."""
    n, we, s, e = ts.norths, ts.wests, ts.souths, ts.easts
    best = 0
    for assign in itertools.product(range(-1, len(ts)), repeat=h * w):
        ok = True
        placed = 0
        for idx, k in enumerate(assign):
            if k == VOID:
                continue
            placed += 1
            i, j = divmod(idx, w)
            if j + 1 < w:
                r = assign[idx + 1]
                if r != VOID and e[k] != we[r]:
                    ok = False
                    break
            if i + 1 < h:
                b = assign[idx + w]
                if b != VOID and s[k] != n[b]:
                    ok = False
                    break
        if ok and placed > best:
            best = placed
    return best


def naive_row_min_voids(ts: TileSet, width: int) -> int:
    """Row-only brute force: fewest voids over all horizontally valid rows."""
    we, e = ts.wests, ts.easts
    best = width
    for assign in itertools.product(range(-1, len(ts)), repeat=width):
        ok = True
        for j in range(width - 1):
            a, b = assign[j], assign[j + 1]
            if a != VOID and b != VOID and e[a] != we[b]:
                ok = False
                break
        if ok:
            best = min(best, sum(1 for k in assign if k == VOID))
    return best


def naive_full_tiling_exists(ts: TileSet, h: int, w: int) -> bool:
    """Plain enumeration over all full assignments."""
    n, we, s, e = ts.norths, ts.wests, ts.souths, ts.easts
    for assign in itertools.product(range(len(ts)), repeat=h * w):
        ok = True
        for idx, k in enumerate(assign):
            i, j = divmod(idx, w)
            if j + 1 < w and e[k] != we[assign[idx + 1]]:
                ok = False
                break
            if i + 1 < h and s[k] != n[assign[idx + w]]:
                ok = False
                break
        if ok:
            return True
    return False
