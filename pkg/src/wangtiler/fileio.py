"""Text formats for tile sets, corner sets and tilings.

Tile set files: one ``n w s e`` quadruple per line, ``#`` comments, and an
optional ``colors <n>`` header pinning the alphabet size.  Without the
header, colors are compacted onto a dense 0-based alphabet in value order.
Corner sets use the same layout with a mandatory ``corners <n>`` header.
Tiling files: a ``tiling <height> <width>`` header, then one row per line
with tile ids or ``.`` for VOID.
"""

from __future__ import annotations

import os

import numpy as np

from .tileset import CornerTile, Tile, TileSet, Tiling, VOID


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def dumps_tileset(ts: TileSet) -> str:
    lines = [f"colors {ts.num_colors}"]
    lines += [f"{t.north} {t.west} {t.south} {t.east}" for t in ts]
    return "\n".join(lines) + "\n"


def loads_tileset(text: str, name: str = "") -> TileSet:
    lines = _data_lines(text)
    num_colors = None
    if lines and lines[0].split()[0] == "colors":
        num_colors = int(lines[0].split()[1])
        lines = lines[1:]
    if lines and lines[0].split()[0] == "corners":
        raise ValueError("this is a corner-set file; use loads_corner_set")
    quads = []
    for line in lines:
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"expected 4 edge colors per line, got {line!r}")
        quads.append(tuple(int(p) for p in parts))
    if not quads:
        raise ValueError("tile set file contains no tiles")
    if num_colors is None:
        # Compact arbitrary labels onto a dense alphabet.
        palette = sorted({c for q in quads for c in q})
        remap = {c: i for i, c in enumerate(palette)}
        quads = [tuple(remap[c] for c in q) for q in quads]
        num_colors = len(palette)
    return TileSet((Tile(*q) for q in quads), num_colors=num_colors, name=name)


def dumps_corner_set(corners, n_vc: int) -> str:
    lines = [f"corners {n_vc}"]
    lines += [f"{c.nw} {c.sw} {c.se} {c.ne}" for c in corners]
    return "\n".join(lines) + "\n"


def loads_corner_set(text: str) -> tuple[list[CornerTile], int]:
    lines = _data_lines(text)
    if not lines or lines[0].split()[0] != "corners":
        raise ValueError("corner-set files must start with a 'corners <n>' header")
    n_vc = int(lines[0].split()[1])
    corners = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"expected 4 corner colors per line, got {line!r}")
        corners.append(CornerTile(*(int(p) for p in parts)))
    return corners, n_vc


def dumps_tiling(t: Tiling) -> str:
    lines = [f"tiling {t.height} {t.width}"]
    for row in t.cells:
        lines.append(" ".join("." if v == VOID else str(v) for v in row))
    return "\n".join(lines) + "\n"


def loads_tiling(text: str) -> Tiling:
    lines = _data_lines(text)
    if not lines or lines[0].split()[0] != "tiling":
        raise ValueError("tiling files must start with a 'tiling <h> <w>' header")
    _, h, w = lines[0].split()
    h, w = int(h), int(w)
    if len(lines) != h + 1:
        raise ValueError(f"expected {h} rows, got {len(lines) - 1}")
    cells = np.full((h, w), VOID, dtype=np.int32)
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != w:
            raise ValueError(f"row {i + 1} has {len(parts)} entries, expected {w}")
        for j, p in enumerate(parts):
            cells[i, j] = VOID if p == "." else int(p)
    return Tiling(cells)


def save_tileset(ts: TileSet, path: str | os.PathLike) -> None:
    with open(path, "w") as f:
        f.write(dumps_tileset(ts))


def load_tileset(path: str | os.PathLike) -> TileSet:
    with open(path) as f:
        name = os.path.splitext(os.path.basename(path))[0]
        return loads_tileset(f.read(), name=name)


def save_corner_set(corners, n_vc: int, path: str | os.PathLike) -> None:
    with open(path, "w") as f:
        f.write(dumps_corner_set(corners, n_vc))


def load_corner_set(path: str | os.PathLike) -> tuple[list[CornerTile], int]:
    with open(path) as f:
        return loads_corner_set(f.read())


def save_tiling(t: Tiling, path: str | os.PathLike) -> None:
    with open(path, "w") as f:
        f.write(dumps_tiling(t))


def load_tiling(path: str | os.PathLike) -> Tiling:
    with open(path) as f:
        return loads_tiling(f.read())
