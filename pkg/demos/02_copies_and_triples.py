#!/usr/bin/env python3
"""
Copies of a pattern, induced subtrees, and the rooted-triple encoding
=====================================================================

A "copy" of a pattern P inside a host T is a set of leaves of T whose
minimal LCA-closed spanning subtree (with degree-2 vertices smoothed away)
has exactly the ordered shape of P. Copies are referred to by their sorted
leaf positions.
"""

import json

from ramsey_trees import (
    InconsistentTriplesError,
    TripleStructure,
    count_copies,
    enumerate_copies,
    format_copy,
    induced_subtree,
    parse_newick,
    perfect_tree,
    reconstruct,
    restrict,
    structure_of,
    to_newick,
)

host = parse_newick("((a,b),(c,d))")
print("host:", to_newick(host))

# Any leaf subset induces a subtree; (a,c) is what the pair {0,2} spans.
for subset in [(0, 2), (0, 1, 2), (1, 2, 3)]:
    print(f"induced by {subset}: {to_newick(induced_subtree(host, subset))}")

# Copies of the 3-leaf caterpillar ((,),) in the height-2 perfect tree:
# only {0,1,2} and {0,1,3} close up to that shape - {0,2,3} closes to (,(,))
# instead, because leaf 0 splits off at the root.
cat3 = parse_newick("((,),)")
t2 = perfect_tree(2)
print()
print("caterpillar copies in", to_newick(t2), "->",
      [format_copy(c) for c in enumerate_copies(t2, cat3)])
print("cherry copies:", count_copies(t2, parse_newick("(,)")),
      "(every pair of leaves forms one)")

# Counting stays cheap when enumeration would not: the recursion
#   copies(T, P) = copies(T_L, P) + copies(T_R, P) + copies(T_L, P_L) * copies(T_R, P_R)
# runs on shared subtrees, so perfect hosts of height 12 are instant.
t12 = perfect_tree(12)
print()
print("copies of T(2) in T(12):", count_copies(t12, t2))

# The rooted-triple relation ab|c ("a and b branch off below their split
# with c") determines a tree up to plane isomorphism. structure_of encodes,
# reconstruct decodes; the JSON form is the CLI interchange format.
g = structure_of(host)
print()
print("triple structure of the host:")
print(json.dumps(g.to_json_obj(), indent=2))
print("reconstruct(structure_of(host)) == host:", reconstruct(g) == host)

# Restriction of the relation commutes with taking induced subtrees.
sub = restrict(g, ["a", "c", "d"])
print("restricted to a,c,d:", sub.triples)
print("matches structure of the induced subtree:",
      sub == structure_of(induced_subtree(host, (0, 2, 3))))

# Not every symmetric ternary relation comes from a tree; reconstruct
# refuses the ones that do not.
bogus = TripleStructure(("a", "b", "c"), frozenset())
try:
    reconstruct(bogus)
except InconsistentTriplesError as e:
    print()
    print("empty relation on 3 leaves:", e)
