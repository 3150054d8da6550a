"""Tiles, tile sets and tilings: the data model in five minutes.

A Wang tile is a unit square with a color on each edge; adjacent tiles must
agree on the shared edge.  This script builds the small published sets, runs
the validator on good and bad grids, and shows the corner-tile encoding.
"""

import wangtiler as wt

# Three tiles over two colors: enough to show everything.
fig3 = wt.builtin_set("fig3")
print(f"{fig3}:")
for k, tile in enumerate(fig3):
    print(f"  tile {k}: (n, w, s, e) = {tile.as_tuple()}")

# Tile 1 has east color 1, tile 0 has west color 1, so [1, 0] is a valid row.
good = wt.Tiling([[1, 0]])
print("\n[1, 0] valid?", wt.validate_tiling(fig3, good).is_valid)

# Swapping them breaks the shared edge (east 0 against west 1).
bad = wt.Tiling([[0, 1]])
report = wt.validate_tiling(fig3, bad)
print("[0, 1] valid?", report.is_valid)
for m in report.mismatches:
    print(f"  mismatch between {m.first} and {m.second} on the {m.axis} axis")

# VOID cells satisfy every adjacency, so sparse grids validate too.
sparse = wt.Tiling([[1, wt.VOID], [wt.VOID, 0]])
print("sparse grid valid?", wt.validate_tiling(fig3, sparse).is_valid)

# Complete sets contain every edge-color combination.
c2 = wt.complete_stochastic_set(2)
print(f"\ncomplete 2-color set: {len(c2)} tiles")

# Corner tiles match at shared corners; packing the two corner colors of
# each edge into one label turns them into ordinary edge tiles.
corner = wt.CornerTile(2, 3, 0, 1)
converted = wt.corner_to_wang([corner], n_vc=6)
print(f"corner {corner.as_tuple()} becomes edge tile "
      f"{converted[0].as_tuple()} over {converted.num_colors} colors")
