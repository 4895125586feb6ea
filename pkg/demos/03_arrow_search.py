#!/usr/bin/env python3
"""
The arrow relation T -> (H)^P_k and the backtracking decision procedure
=======================================================================

T -> (H)^P_k means: every k-coloring of the copies of P in T contains a
copy of H all of whose inner P-copies got the same color. check_arrow
decides it by searching for a counterexample ("bad") coloring with
not-all-equal constraint propagation; a Fails verdict carries the bad
coloring as a checkable witness.
"""

import json

from ramsey_trees import (
    SearchBudget,
    check_arrow,
    leaf,
    min_arrow_height_scan,
    parse_newick,
    perfect_tree,
    to_newick,
)

cherry = parse_newick("(,)")

# Two leaves, two colors: color them differently and no cherry is mono.
v = check_arrow(cherry, cherry, leaf(), 2)
print("cherry -> (cherry)^leaf_2:", v.status)
print("bad coloring:", json.dumps(v.witness.to_json_obj()))

# Four leaves, two colors: pigeonhole forces a repeated color, and any two
# equal-colored leaves form a monochromatic cherry.
v = check_arrow(perfect_tree(2), cherry, leaf(), 2)
print("T(2) -> (cherry)^leaf_2:", v.status, f"({v.nodes} search nodes)")

# A substantial instance: copies of the cherry pattern are colored, and we
# ask for a height-2 perfect tree all of whose 6 cherries agree.
v = check_arrow(perfect_tree(4), perfect_tree(2), cherry, 2)
print("T(4) -> (T(2))^cherry_2:", v.status,
      f"({v.nodes} nodes, {v.millis} ms)")

# min_arrow_height_scan walks d = height(H), height(H)+1, ... until the
# perfect tree of height d arrows the target, reporting each verdict.
print()
print("least d with T(d) -> (T(2))^leaf_2:")
d, scan = min_arrow_height_scan(perfect_tree(2), leaf(), 2)
for height, verdict in scan:
    print(f"  height {height}: {verdict.status}")
print("answer:", d)

# Budgets make the search interruptible rather than open-ended: verdicts
# degrade to "unknown" instead of hanging. Exit code 2 in the CLI.
tight = SearchBudget(max_nodes=10, max_millis=1000)
v = check_arrow(perfect_tree(4), perfect_tree(2), cherry, 2, budget=tight)
print()
print("same query under a 10-node budget:", v.status)
