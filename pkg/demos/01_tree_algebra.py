#!/usr/bin/env python3
"""
Plane-tree basics: parsing, printing, and the substitution algebra
==================================================================

Run as a script; every step prints what it builds.
"""

from ramsey_trees import (
    all_trees,
    catalan,
    iterate,
    leaf,
    node,
    parse_newick,
    perfect_tree,
    substitute,
    to_newick,
)

# Trees are immutable values. The text form is a minimal Newick dialect:
# a leaf is a bare label (possibly empty), an internal node is "(L,R)".
cherry = parse_newick("(,)")
cat3 = node(cherry, leaf())
print("cherry:", to_newick(cherry))
print("3-leaf caterpillar:", to_newick(cat3))
print("a labeled tree:", parse_newick(" (( alpha , beta ), gamma ) "))

# perfect_tree(c) is the complete tree of height c with 2**c leaves.
for c in range(4):
    t = perfect_tree(c)
    print(f"perfect_tree({c}) = {to_newick(t)}  ({t.leaf_count} leaves)")

# Structural sharing makes huge perfect trees cheap: both children of every
# node are the same object, so height 20 costs 21 nodes, not 2**21. A global
# size guard (set_max_leaves / the RAMSEY_MAX_LEAVES env var, default 2**20
# leaves) keeps accidental blowups from materializing.
big = perfect_tree(20)
print("perfect_tree(20).leaf_count =", big.leaf_count)
print("left child is right child:", big.left is big.right)

# substitute(g, h) replaces every leaf of g by a copy of h; iterate(h, i)
# is the i-fold self-substitution. The leaf counts multiply.
print("substitute(cat3, cherry):", to_newick(substitute(cat3, cherry)))
print("iterate(cherry, 3) == perfect_tree(3):", iterate(cherry, 3) == perfect_tree(3))
t = iterate(cat3, 2)
print("iterate(cat3, 2):", to_newick(t), f"({t.leaf_count} leaves)")

# The number of shapes with n leaves is the Catalan number C(n-1).
print()
print("n leaves : shapes")
for n in range(1, 9):
    assert len(all_trees(n)) == catalan(n - 1)
    print(f"{n:8d} : {catalan(n - 1)}")
print("the 5 shapes with 4 leaves:")
for t in all_trees(4):
    print("   ", to_newick(t))
