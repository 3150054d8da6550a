"""Transducer graphs: rows of a tiling as walks over edge colors.

Each tile is an arc west -(south|north)-> east; a valid row is a walk.  The
dual graph (north -(east|west)-> south) plays the same role for columns.
This script analyzes the 16-tile Ammann set and shows why its corner-tile
translation loses information.
"""

import wangtiler as wt

amm = wt.builtin_set("ammann16")
g = wt.build_transducer(amm, wt.HORIZONTAL)
print(f"horizontal transducer: {g.num_states} states, {len(g.arcs)} arcs")
for arc in g.arcs[:4]:
    print(f"  {arc.from_state} -({arc.label()})-> {arc.to_state}   [tile {arc.tile_id}]")
print("  ...")

# Every used color sits on a cycle, so arbitrarily long rows and columns
# exist: the coverage guarantees of the heuristics apply to this set.
print("all states on cycles (horizontal):",
      wt.all_states_on_cycles(g))
print("all states on cycles (dual):     ",
      wt.all_states_on_cycles(wt.build_transducer(amm, wt.DUAL)))

# Two arcs join state 1 to state 0: the translation to corner tiles cannot
# tell the corresponding tiles apart.
print("parallel arcs:", wt.parallel_arcs(g))

translation = wt.translate_horizontal(amm)
print(f"\nhorizontal translation: {len(translation)} corner tiles over "
      f"{translation.n_vc} colors, lossless: {translation.bijective}")
print("witness arcs:", list(translation.parallel_witnesses))

# The translated set is therefore weaker than the original: see demo 04,
# where a small periodic rectangle for it is found by exhaustive search.

with open("ammann16.dot", "w") as f:
    f.write(wt.to_dot(g, name="ammann16"))
print("\nwrote ammann16.dot (render with: dot -Tsvg ammann16.dot)")
