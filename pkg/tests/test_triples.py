import itertools
import json

import pytest
from hypothesis import given, strategies as st

from ramsey_trees import (
    FormatError,
    InconsistentTriplesError,
    TripleStructure,
    all_trees,
    iso,
    leaf,
    node,
    parse_newick,
    reconstruct,
    restrict,
    structure_of,
    substructure_iso,
)
from helpers import labeled

trees = st.recursive(
    st.just(leaf()), lambda sub: st.builds(node, sub, sub), max_leaves=8
)


def test_structure_of_caterpillar():
    g = structure_of(parse_newick("((a,b),c)"))
    assert g.domain == ("a", "b", "c")
    assert g.triples == frozenset({("a", "b", "c"), ("b", "a", "c")})


def test_structure_of_cherry_is_empty():
    g = structure_of(parse_newick("(a,b)"))
    assert g.domain == ("a", "b")
    assert g.triples == frozenset()


def test_structure_of_uses_positions_when_unlabeled():
    g = structure_of(parse_newick("((,),)"))
    assert g.domain == ("0", "1", "2")
    assert ("0", "1", "2") in g.triples


def test_structure_of_balanced_four_leaves_json():
    g = structure_of(parse_newick("((a,b),(c,d))"))
    assert g.to_json_obj() == {
        "domain": ["a", "b", "c", "d"],
        "triples": [
            ["a", "b", "c"],
            ["a", "b", "d"],
            ["b", "a", "c"],
            ["b", "a", "d"],
            ["c", "d", "a"],
            ["c", "d", "b"],
            ["d", "c", "a"],
            ["d", "c", "b"],
        ],
    }


def test_structure_of_rejects_duplicate_identities():
    with pytest.raises(ValueError, match="not distinct"):
        structure_of(parse_newick("(a,(a,b))"))
    # Unlabeled positions may also collide with explicit labels.
    with pytest.raises(ValueError, match="not distinct"):
        structure_of(parse_newick("(1,(,))"))


def test_constructor_validation():
    with pytest.raises(ValueError, match="symmetric"):
        TripleStructure(("a", "b", "c"), frozenset({("a", "b", "c")}))
    with pytest.raises(ValueError, match="distinct entries"):
        TripleStructure(("a", "b"), frozenset({("a", "a", "b"), ("a", "a", "b")}))
    with pytest.raises(ValueError, match="not in the domain"):
        TripleStructure(("a", "b"), frozenset({("a", "b", "z"), ("b", "a", "z")}))
    with pytest.raises(ValueError, match="nonempty"):
        TripleStructure((), frozenset())
    with pytest.raises(ValueError, match="duplicate"):
        TripleStructure(("a", "a"), frozenset())
    with pytest.raises(ValueError):
        TripleStructure(("a,b",), frozenset())


def test_reconstruct_roundtrip_labeled():
    t = parse_newick("((a,(b,c)),((d,e),f))")
    assert reconstruct(structure_of(t)) == t


def test_reconstruct_roundtrip_all_small_shapes():
    for n in range(1, 7):
        for t in all_trees(n):
            lt = labeled(t)
            assert reconstruct(structure_of(lt)) == lt
            # Unlabeled trees come back with positional labels; same shape.
            assert iso(reconstruct(structure_of(t)), t)


@given(trees)
def test_reconstruct_roundtrip_random(t):
    assert iso(reconstruct(structure_of(t)), t)


def test_reconstruct_rejects_flipped_orientation():
    # ab|c and bc|a cannot both hold in one tree.
    g = TripleStructure(
        ("a", "b", "c"),
        frozenset({("a", "b", "c"), ("b", "a", "c"), ("b", "c", "a"), ("c", "b", "a")}),
    )
    with pytest.raises(InconsistentTriplesError, match="inconsistent"):
        reconstruct(g)


def test_reconstruct_rejects_unoriented_3_set():
    # Three leaves with no triple at all: no plane tree realizes that.
    g = TripleStructure(("a", "b", "c"), frozenset())
    with pytest.raises(InconsistentTriplesError, match="inconsistent"):
        reconstruct(g)


def test_reconstruct_rejects_wrong_leaf_order():
    # ac|b says a,b are separated later than a,c - impossible with b between.
    g = TripleStructure(
        ("a", "b", "c"), frozenset({("a", "c", "b"), ("c", "a", "b")})
    )
    with pytest.raises(InconsistentTriplesError, match="inconsistent"):
        reconstruct(g)


def test_reconstruct_rejects_surplus_triples():
    g = structure_of(parse_newick("((a,b),(c,d))"))
    extra = g.triples | {("a", "c", "d"), ("c", "a", "d")}
    with pytest.raises(InconsistentTriplesError, match="inconsistent"):
        reconstruct(TripleStructure(g.domain, extra))


def test_restrict_validation():
    g = structure_of(parse_newick("((a,b),c)"))
    with pytest.raises(ValueError, match="nonempty"):
        restrict(g, ())
    with pytest.raises(ValueError, match="not in the domain"):
        restrict(g, ("a", "z"))


def test_restrict_commutes_with_induced_subtree():
    from ramsey_trees import induced_subtree

    for n in range(2, 6):
        for t in all_trees(n):
            lt = labeled(t)
            g = structure_of(lt)
            for size in range(1, n + 1):
                for subset in itertools.combinations(range(n), size):
                    sub = induced_subtree(lt, subset)
                    keep = [g.domain[i] for i in subset]
                    assert structure_of(sub) == restrict(g, keep)


def test_substructure_iso_tracks_tree_iso():
    shapes = [labeled(t, "p") for t in all_trees(4)]
    others = [labeled(t, "q") for t in all_trees(4)]
    for a in shapes:
        for b in others:
            assert substructure_iso(structure_of(a), structure_of(b)) == iso(a, b)
    assert not substructure_iso(
        structure_of(parse_newick("(a,b)")), structure_of(parse_newick("((a,b),c)"))
    )


def test_json_roundtrip_and_errors():
    g = structure_of(parse_newick("((a,(b,c)),d)"))
    blob = json.dumps(g.to_json_obj())
    assert TripleStructure.from_json_obj(json.loads(blob)) == g
    with pytest.raises(FormatError):
        TripleStructure.from_json_obj(["a"])
    with pytest.raises(FormatError):
        TripleStructure.from_json_obj({"domain": ["a"]})
    with pytest.raises(FormatError):
        TripleStructure.from_json_obj({"domain": ["a"], "triples": [], "x": 1})
    with pytest.raises(FormatError):
        TripleStructure.from_json_obj({"domain": [1], "triples": []})
    with pytest.raises(FormatError):
        TripleStructure.from_json_obj({"domain": ["a"], "triples": [["a", "b"]]})
    # Structural breakage (asymmetry) surfaces as ValueError from the ctor.
    with pytest.raises(ValueError, match="symmetric"):
        TripleStructure.from_json_obj(
            {"domain": ["a", "b", "c"], "triples": [["a", "b", "c"]]}
        )


def test_json_triples_sorted_by_domain_position():
    g = structure_of(parse_newick("((z,y),x)"))
    obj = g.to_json_obj()
    assert obj["domain"] == ["z", "y", "x"]
    assert obj["triples"] == [["z", "y", "x"], ["y", "z", "x"]]
