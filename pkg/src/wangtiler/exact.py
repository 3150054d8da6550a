"""Desk-scale exact solvers.

All solvers here give provable answers or an honest CAPPED status; none of
them guesses.  They share the frontier idea: the only information a partial
tiling exposes to its unfilled remainder is the coloring of its boundary.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import BudgetExceededError, ConfigurationError
from .extensions import (ForbidEdgeColor, ForbidTile, ForceEdgeColor,
                         ForceTile, LOCAL_EXTENSIONS)
from .tileset import TileSet, Tiling, VOID

VALID = "VALID"
INFEASIBLE = "INFEASIBLE"
CAPPED = "CAPPED"

#: Default hard limit on stored frontier states for the decision solver.
DEFAULT_STATE_CAP = 1 << 22


@dataclass(frozen=True)
class SolveResult:
    status: str
    witness: Tiling | None = None
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TorusResult:
    """Smallest periodic rectangles of a tile set.

    ``count`` totals the distinct labeled tilings over all shapes of the
    minimum area; ``dims`` is the first shape (ordered by height) that has
    at least one solution; ``dim_counts`` breaks the count down per shape.
    """

    min_area: int
    dims: tuple[int, int]
    count: int
    witnesses: tuple[Tiling, ...]
    dim_counts: tuple[tuple[tuple[int, int], int], ...]


def _allowed_tiles(ts: TileSet, height: int, width: int, bcs) -> list[list[list[int]]]:
    """Per-cell candidate tile ids after applying the local boundary conditions."""
    side_of = {"n": ts.norths, "w": ts.wests, "s": ts.souths, "e": ts.easts}
    allowed = [[list(range(len(ts))) for _ in range(width)] for _ in range(height)]
    for bc in bcs:
        if not isinstance(bc, LOCAL_EXTENSIONS):
            raise ConfigurationError(
                f"the frontier solver only supports per-cell boundary "
                f"conditions, got {type(bc).__name__}")
        if not (1 <= bc.i <= height and 1 <= bc.j <= width):
            raise ConfigurationError(f"coordinate ({bc.i}, {bc.j}) outside the grid")
        cell = allowed[bc.i - 1][bc.j - 1]
        if isinstance(bc, ForceTile):
            if not 0 <= bc.k < len(ts):
                raise ConfigurationError(f"tile id {bc.k} out of range")
            cell[:] = [k for k in cell if k == bc.k]
        elif isinstance(bc, ForbidTile):
            cell[:] = [k for k in cell if k != bc.k]
        elif isinstance(bc, ForceEdgeColor):
            colors = side_of[bc.side]
            cell[:] = [k for k in cell if colors[k] == bc.color]
        elif isinstance(bc, ForbidEdgeColor):
            colors = side_of[bc.side]
            cell[:] = [k for k in cell if colors[k] != bc.color]
    return allowed


_REFLECTED_SIDE = {"n": "w", "w": "n", "s": "e", "e": "s"}


def _reflect_bc(bc):
    """Map a per-cell boundary condition onto the transposed grid."""
    if isinstance(bc, (ForceTile, ForbidTile)):
        return type(bc)(bc.j, bc.i, bc.k)
    if isinstance(bc, (ForceEdgeColor, ForbidEdgeColor)):
        return type(bc)(bc.j, bc.i, _REFLECTED_SIDE[bc.side], bc.color)
    return bc


def solve_decision(ts: TileSet, height: int, width: int, bcs: Iterable = (),
                   cap: int = DEFAULT_STATE_CAP) -> SolveResult:
    """Decide whether a valid full tiling exists by a cell-by-cell frontier sweep.

    The frontier after a cell holds exactly what the remaining cells can see:
    the exposed south colors across the width plus the pending east color.
    Equal frontiers are merged, with parent links kept for witness
    reconstruction.  INFEASIBLE is a proof; CAPPED means the stored-state
    budget ran out before an answer.
    """
    if height < 1 or width < 1:
        raise ConfigurationError("grid dimensions must be positive")
    if cap <= 0:
        raise ConfigurationError("state cap must be positive")
    if width > height:
        # The frontier grows with the width; solve the diagonally reflected
        # instance instead (tilings of the two correspond under transposition).
        res = solve_decision(ts.reflected(), width, height,
                             [_reflect_bc(bc) for bc in bcs], cap)
        if res.witness is None:
            return res
        return SolveResult(res.status, Tiling(res.witness.cells.T), res.stats)
    allowed = _allowed_tiles(ts, height, width, bcs)
    norths, wests, souths, easts = ts.norths, ts.wests, ts.souths, ts.easts
    NONE = -2  # out-of-domain or never-read exposure

    # parents[p] maps frontier -> (previous frontier, tile id placed at p).
    parents: list[dict[tuple, tuple]] = []
    stored = 0
    start = ((NONE,) * width, NONE)
    frontier: dict[tuple, None] = {start: None}
    for p in range(height * width):
        i, j = divmod(p, width)
        last_row = i == height - 1
        last_col = j == width - 1
        by_nw: dict[tuple[int, int], list[int]] = {}
        for k in allowed[i][j]:
            by_nw.setdefault((norths[k], wests[k]), []).append(k)
        level: dict[tuple, tuple] = {}
        for (profile, carry) in frontier:
            want_n = profile[j]
            if want_n == NONE and carry == NONE:
                pool = allowed[i][j]
            elif carry == NONE:
                pool = [k for k in allowed[i][j] if norths[k] == want_n]
            elif want_n == NONE:
                pool = [k for k in allowed[i][j] if wests[k] == carry]
            else:
                pool = by_nw.get((want_n, carry), ())
            for k in pool:
                new_profile = (profile[:j]
                               + (NONE if last_row else souths[k],)
                               + profile[j + 1:])
                new_carry = NONE if last_col else easts[k]
                key = (new_profile, new_carry)
                if key not in level:
                    level[key] = ((profile, carry), k)
                    stored += 1
                    if stored > cap:
                        return SolveResult(CAPPED, stats={"states": stored})
        if not level:
            return SolveResult(INFEASIBLE, stats={"states": stored})
        parents.append(level)
        frontier = level

    cells = np.full((height, width), VOID, dtype=np.int32)
    state = next(iter(parents[-1]))
    for p in range(height * width - 1, -1, -1):
        prev, k = parents[p][state]
        cells[divmod(p, width)] = k
        state = prev
    return SolveResult(VALID, Tiling(cells), stats={"states": stored})


def _cyclic_rows(ts: TileSet, width: int) -> list[tuple[int, ...]]:
    """Row tilings whose east boundary wraps back onto their west boundary."""
    by_w: dict[int, list[int]] = {}
    for k in range(len(ts)):
        by_w.setdefault(ts.wests[k], []).append(k)
    easts = ts.easts
    rows: list[tuple[int, ...]] = []
    row: list[int] = []

    def rec(j: int, start: int, cur: int) -> None:
        if j == width:
            if cur == start:
                rows.append(tuple(row))
            return
        for k in by_w.get(cur, ()):
            row.append(k)
            rec(j + 1, start, easts[k])
            row.pop()

    for c in sorted(by_w):
        rec(0, c, c)
    return rows


def count_torus(ts: TileSet, height: int, width: int,
                witness_cap: int = 100) -> tuple[int, list[Tiling]]:
    """Count labeled tilings of the (height, width) torus; collect witnesses."""
    rows = _cyclic_rows(ts, width)
    if not rows:
        return 0, []
    norths = ts.norths
    souths = ts.souths
    profile_n = {r: tuple(norths[k] for k in r) for r in rows}
    profile_s = {r: tuple(souths[k] for k in r) for r in rows}
    by_north: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for r in rows:
        by_north.setdefault(profile_n[r], []).append(r)

    count = 0
    witnesses: list[Tiling] = []
    stack: list[tuple[int, ...]] = []

    def rec(level: int, want_north: tuple[int, ...], close_on: tuple[int, ...]) -> None:
        nonlocal count
        if level == height:
            if want_north == close_on:
                count += 1
                if len(witnesses) < witness_cap:
                    witnesses.append(Tiling(np.array(stack, dtype=np.int32)))
            return
        for r in by_north.get(want_north, ()):
            stack.append(r)
            rec(level + 1, profile_s[r], close_on)
            stack.pop()

    for r0 in rows:
        stack.append(r0)
        rec(1, profile_s[r0], profile_n[r0])
        stack.pop()
    return count, witnesses


def smallest_torus(ts: TileSet, max_area: int,
                   witness_cap: int = 100) -> TorusResult | None:
    """Search (height, width) shapes by area, then by height, for the
    smallest periodic rectangle; counts every labeled solution of that area.
    """
    if max_area < 1:
        raise ConfigurationError("max_area must be >= 1")
    for area in range(1, max_area + 1):
        dim_counts = []
        witnesses: list[Tiling] = []
        first_dims = None
        total = 0
        for h in range(1, area + 1):
            if area % h:
                continue
            w = area // h
            count, wit = count_torus(ts, h, w, witness_cap)
            if count:
                dim_counts.append(((h, w), count))
                total += count
                witnesses.extend(wit[: max(0, witness_cap - len(witnesses))])
                if first_dims is None:
                    first_dims = (h, w)
        if total:
            return TorusResult(area, first_dims, total, tuple(witnesses),
                               tuple(dim_counts))
    return None


def pack_tiles(ts: TileSet, height: int, width: int, periodic: bool = False,
               deadline: float | None = None,
               most_constrained: bool = False) -> SolveResult:
    """Place every tile of the set exactly once on the grid.

    Backtracking with forward checking; cells are filled row-major (or by a
    fewest-candidates-first override), tiles tried in ascending id.  With
    ``periodic`` the opposite boundaries must carry equal colors.  ``deadline``
    is a wall-clock budget in seconds; hitting it returns CAPPED.
    """
    if len(ts) != height * width:
        raise ConfigurationError(
            f"packing needs exactly height*width tiles "
            f"({height}*{width}={height * width}, set has {len(ts)})")
    norths, wests, souths, easts = ts.norths, ts.wests, ts.souths, ts.easts
    by_wn: dict[tuple[int, int], list[int]] = {}
    by_w: dict[int, list[int]] = {}
    by_n: dict[int, list[int]] = {}
    all_ids = list(range(len(ts)))
    for k in all_ids:
        by_wn.setdefault((wests[k], norths[k]), []).append(k)
        by_w.setdefault(wests[k], []).append(k)
        by_n.setdefault(norths[k], []).append(k)

    grid = [[VOID] * width for _ in range(height)]
    used = [False] * len(ts)
    t0 = time.monotonic()
    nodes = 0
    capped = False

    def requirements(i: int, j: int):
        """(west, north, south, east) requirements; None means unconstrained."""
        def cell(a: int, b: int) -> int:
            return grid[a][b]

        w_req = n_req = s_req = e_req = None
        if j > 0 and cell(i, j - 1) != VOID:
            w_req = easts[cell(i, j - 1)]
        elif periodic and j == 0 and cell(i, width - 1) != VOID:
            w_req = easts[cell(i, width - 1)]
        if i > 0 and cell(i - 1, j) != VOID:
            n_req = souths[cell(i - 1, j)]
        elif periodic and i == 0 and cell(height - 1, j) != VOID:
            n_req = souths[cell(height - 1, j)]
        if j + 1 < width and cell(i, j + 1) != VOID:
            e_req = wests[cell(i, j + 1)]
        elif periodic and j == width - 1 and cell(i, 0) != VOID:
            e_req = wests[cell(i, 0)]
        if i + 1 < height and cell(i + 1, j) != VOID:
            s_req = norths[cell(i + 1, j)]
        elif periodic and i == height - 1 and cell(0, j) != VOID:
            s_req = norths[cell(0, j)]
        return w_req, n_req, s_req, e_req

    def candidates(i: int, j: int) -> list[int]:
        w_req, n_req, s_req, e_req = requirements(i, j)
        if w_req is not None and n_req is not None:
            pool = by_wn.get((w_req, n_req), ())
        elif w_req is not None:
            pool = by_w.get(w_req, ())
        elif n_req is not None:
            pool = by_n.get(n_req, ())
        else:
            pool = all_ids
        return [k for k in pool
                if not used[k]
                and (s_req is None or souths[k] == s_req)
                and (e_req is None or easts[k] == e_req)]

    order = [(i, j) for i in range(height) for j in range(width)]

    def next_cell(filled: int):
        if not most_constrained:
            return order[filled], None
        best = None
        best_cands = None
        for (i, j) in order:
            if grid[i][j] != VOID:
                continue
            cands = candidates(i, j)
            if best_cands is None or len(cands) < len(best_cands):
                best, best_cands = (i, j), cands
                if not cands:
                    break
        return best, best_cands

    def rec(filled: int) -> bool:
        nonlocal nodes, capped
        if filled == height * width:
            return True
        nodes += 1
        if deadline is not None and nodes % 1024 == 0:
            if time.monotonic() - t0 > deadline:
                capped = True
                return False
        (i, j), cands = next_cell(filled)
        if cands is None:
            cands = candidates(i, j)
        for k in cands:
            grid[i][j] = k
            used[k] = True
            if rec(filled + 1):
                return True
            used[k] = False
            grid[i][j] = VOID
            if capped:
                return False
        return False

    found = rec(0)
    stats = {"nodes": nodes, "seconds": time.monotonic() - t0}
    if found:
        return SolveResult(VALID, Tiling(np.array(grid, dtype=np.int32)), stats)
    if capped:
        return SolveResult(CAPPED, stats=stats)
    return SolveResult(INFEASIBLE, stats=stats)


def max_cover_oracle(ts: TileSet, height: int, width: int,
                     budget_states: int = 2_000_000) -> tuple[int, Tiling]:
    """Exact maximum cover by exhaustive search over cells in {tiles, VOID}.

    Scans cells row-major; equal search frontiers (the exposed colors of the
    last ``width`` cells) are merged, which keeps the enumeration exhaustive
    while visiting each distinct frontier once.  Raises if the frontier table
    would exceed ``budget_states`` rather than returning a guess.
    """
    if height < 1 or width < 1:
        raise ConfigurationError("grid dimensions must be positive")
    if width > height:
        best, witness = max_cover_oracle(ts.reflected(), width, height,
                                         budget_states)
        return best, Tiling(witness.cells.T)
    norths, wests, souths, easts = ts.norths, ts.wests, ts.souths, ts.easts
    n_cells = height * width
    NONE = -2  # exposure of a VOID cell or one whose edge is never checked

    memo: dict[tuple, tuple[int, int]] = {}

    def best_from(pos: int, west_exp: int, skyline: tuple[int, ...]) -> int:
        if pos == n_cells:
            return 0
        key = (pos, west_exp, skyline)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        if len(memo) >= budget_states:
            raise BudgetExceededError(
                f"max_cover_oracle exceeded {budget_states} stored frontiers")
        i, j = divmod(pos, width)
        north_exp = skyline[0]
        last_row = i == height - 1
        last_col = j == width - 1
        # VOID choice first: exposes nothing.
        tail = skyline[1:] + (NONE,)
        best = best_from(pos + 1, NONE if not last_col else NONE, tail)
        choice = VOID
        for k in range(len(ts)):
            if west_exp != NONE and wests[k] != west_exp:
                continue
            if north_exp != NONE and norths[k] != north_exp:
                continue
            s_exp = NONE if last_row else souths[k]
            e_exp = NONE if last_col else easts[k]
            val = 1 + best_from(pos + 1, e_exp, skyline[1:] + (s_exp,))
            if val > best:
                best = val
                choice = k
        memo[key] = (best, choice)
        return best

    start_sky = (NONE,) * width
    best = best_from(0, NONE, start_sky)

    # Replay the memoized choices to reconstruct one witness.
    cells = np.full((height, width), VOID, dtype=np.int32)
    pos, west_exp, skyline = 0, NONE, start_sky
    while pos < n_cells:
        i, j = divmod(pos, width)
        _, choice = memo[(pos, west_exp, skyline)]
        cells[i, j] = choice
        last_row = i == height - 1
        last_col = j == width - 1
        if choice == VOID:
            west_exp, skyline = NONE, skyline[1:] + (NONE,)
        else:
            west_exp = NONE if last_col else easts[choice]
            skyline = skyline[1:] + (NONE if last_row else souths[choice],)
        pos += 1
    return best, Tiling(cells)
