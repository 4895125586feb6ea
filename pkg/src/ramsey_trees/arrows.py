"""Arrow (partition) relations between plane trees.

check_arrow decides T -> (H)^P_k: does every k-coloring of the copies of P
in T admit a copy of H all of whose inner P-copies share one color? The
negation is a constraint problem: one variable per P-copy, domain 0..k-1,
and a not-all-equal constraint per H-copy; a solution is a "bad" coloring
and the arrow Fails, exhaustion means it Holds, and exceeding the search
budget yields Unknown.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExhaustedError, FormatError, ResourceLimitError
from .tree import PlaneTree, iso, iterate, parse_newick, perfect_tree, to_newick
from .embedding import CopyRef, enumerate_copies, induced_subtree
from .coloring import Coloring, find_mono_copy, is_mono


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_millis: int = 60_000


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class ArrowVerdict:
    """Outcome of one arrow decision.

    status is "holds", "fails" (witness carries the bad coloring) or
    "unknown" (budget ran out; nodes/millis report the effort spent).
    """

    status: str
    witness: Coloring | None
    nodes: int
    millis: int

    def to_report_obj(self) -> dict:
        return {
            "verdict": self.status,
            "witness": None if self.witness is None else self.witness.to_json_obj(),
            "nodes": self.nodes,
            "millis": self.millis,
        }


def _arrow_edges(
    host: PlaneTree, target: PlaneTree, pattern: PlaneTree
) -> tuple[list[CopyRef], list[tuple[int, ...]] | None]:
    """Variables (P-copies) and NAE constraints (inner P-copies per H-copy).

    Returns (variables, edges); edges is None when some H-copy has at most
    one inner P-copy, which makes the arrow hold under every coloring.
    """
    variables = enumerate_copies(host, pattern)
    var_index = {c: i for i, c in enumerate(variables)}
    edges: set[tuple[int, ...]] = set()
    for hc in enumerate_copies(host, target):
        sub = induced_subtree(host, hc)
        inner = [
            tuple(hc[i] for i in rel) for rel in enumerate_copies(sub, pattern)
        ]
        if len(inner) <= 1:
            return variables, None
        edges.add(tuple(sorted(var_index[c] for c in inner)))
    return variables, sorted(edges)


def check_arrow(
    host: PlaneTree,
    target: PlaneTree,
    pattern: PlaneTree,
    k: int,
    budget: SearchBudget | None = None,
) -> ArrowVerdict:
    """Decide host -> (target)^pattern_k within a node/time budget.

    Deterministic: variables are tried most-constrained first (descending
    constraint degree, ties by lexicographic copy order), colors in
    increasing order, and the first variable is pinned to color 0 (sound by
    color-permutation symmetry). The witness of a Fails verdict is the first
    bad coloring that order encounters.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"number of colors must be a positive integer, got {k!r}")
    budget = budget or DEFAULT_BUDGET
    t0 = time.monotonic()

    def elapsed_ms() -> int:
        return int((time.monotonic() - t0) * 1000)

    variables, edges = _arrow_edges(host, target, pattern)
    m = len(variables)
    if edges is None:
        return ArrowVerdict("holds", None, 0, elapsed_ms())
    if not edges:
        witness = Coloring(host, pattern, k, {c: 0 for c in variables})
        return ArrowVerdict("fails", witness, 0, elapsed_ms())

    var_edges: list[list[int]] = [[] for _ in range(m)]
    for ei, e in enumerate(edges):
        for v in e:
            var_edges[v].append(ei)
    order = sorted(range(m), key=lambda v: (-len(var_edges[v]), v))

    full = (1 << k) - 1
    domain = [full] * m
    domain[order[0]] = 1  # symmetry: the first decision variable gets color 0
    color_of = [-1] * m
    # edge state: count of unassigned vars; common color so far
    # (-1 none assigned, -2 already two colors, i.e. satisfied)
    e_unassigned = [len(e) for e in edges]
    e_color = [-1] * len(edges)
    trail: list[tuple[str, int, int]] = []

    def assign(v: int, c: int) -> bool:
        color_of[v] = c
        ok = True
        for ei in var_edges[v]:
            e_unassigned[ei] -= 1
            st = e_color[ei]
            if st == -2:
                continue
            if st == -1:
                trail.append(("c", ei, -1))
                e_color[ei] = c
                st = c
            if st == c:
                left = e_unassigned[ei]
                if left == 0:
                    ok = False  # fully assigned and monochromatic
                elif left == 1:
                    for u in edges[ei]:
                        if color_of[u] < 0:
                            bit = 1 << c
                            old = domain[u]
                            if old & bit:
                                trail.append(("d", u, old))
                                domain[u] = old & ~bit
                                if domain[u] == 0:
                                    ok = False
                            break
            else:
                trail.append(("c", ei, st))
                e_color[ei] = -2
        return ok

    def unassign(v: int, mark: int) -> None:
        for ei in var_edges[v]:
            e_unassigned[ei] += 1
        while len(trail) > mark:
            kind, idx, old = trail.pop()
            if kind == "c":
                e_color[idx] = old
            else:
                domain[idx] = old
        color_of[v] = -1

    nodes = 0
    status = None
    v0 = order[0]
    frames: list[list[int]] = [[v0, domain[v0], 0, 0]]  # var, mask, trail mark, assigned
    while frames:
        fr = frames[-1]
        v = fr[0]
        if fr[3]:
            unassign(v, fr[2])
            fr[3] = 0
        mask = fr[1]
        if mask == 0:
            frames.pop()
            continue
        c = (mask & -mask).bit_length() - 1
        fr[1] = mask & (mask - 1)
        nodes += 1
        if nodes > budget.max_nodes:
            status = "unknown"
            nodes -= 1
            break
        if not nodes & 1023 and elapsed_ms() > budget.max_millis:
            status = "unknown"
            break
        fr[2] = len(trail)
        fr[3] = 1
        if not assign(v, c):
            continue
        if len(frames) == m:
            status = "fails"
            break
        u = order[len(frames)]
        frames.append([u, domain[u], 0, 0])

    if status == "fails":
        assignment = {variables[i]: color_of[i] for i in range(m)}
        for e in edges:
            assert len({color_of[v] for v in e}) > 1
        witness = Coloring(host, pattern, k, assignment)
        return ArrowVerdict("fails", witness, nodes, elapsed_ms())
    if status == "unknown":
        return ArrowVerdict("unknown", None, nodes, elapsed_ms())
    return ArrowVerdict("holds", None, nodes, elapsed_ms())


def min_arrow_height_scan(
    target: PlaneTree,
    pattern: PlaneTree,
    k: int,
    budget: SearchBudget | None = None,
    max_height: int | None = None,
) -> tuple[int | None, list[tuple[int, ArrowVerdict]]]:
    """Scan d = height(target), height(target)+1, ... for the least d with
    perfect_tree(d) -> (target)^pattern_k; returns (d or None, scan trail).

    The scan stops without an answer when a verdict comes back unknown, when
    perfect_tree(d) would exceed the tree size guard, or past max_height.
    """
    scan: list[tuple[int, ArrowVerdict]] = []
    d = target.height
    while max_height is None or d <= max_height:
        try:
            host = perfect_tree(d)
        except ResourceLimitError:
            return None, scan
        verdict = check_arrow(host, target, pattern, k, budget)
        scan.append((d, verdict))
        if verdict.status == "holds":
            return d, scan
        if verdict.status == "unknown":
            return None, scan
        d += 1
    return None, scan


def min_arrow_height(
    target: PlaneTree,
    pattern: PlaneTree,
    k: int,
    budget: SearchBudget | None = None,
    max_height: int | None = None,
) -> int | None:
    return min_arrow_height_scan(target, pattern, k, budget, max_height)[0]


def prop21_witness(h: PlaneTree, k: int) -> PlaneTree:
    """The k-fold self-substitution iterate(h, k): it arrows (h) under leaf
    colorings with k colors, and extract_mono_leafcolor realizes the copy."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"number of colors must be a positive integer, got {k!r}")
    return iterate(h, k)


def extract_mono_leafcolor(
    h: PlaneTree, j: int, host: PlaneTree, chi: Coloring
) -> tuple[CopyRef, int]:
    """A monochromatic copy of h in host = iterate(h, j) under a leaf
    coloring with at most j distinct colors.

    Descend through the block structure of the iterate: the current window
    is a copy of iterate(h, level) and splits into leaf_count(h) contiguous
    blocks, each a copy of iterate(h, level-1). If some block uses fewer
    than level colors, recurse into the leftmost such; otherwise every block
    uses exactly the window's color set, and picking the leftmost leaf of
    the smallest used color in each block forms a copy of h.
    """
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise ValueError(f"iteration count must be a positive integer, got {j!r}")
    if not iso(host, iterate(h, j)):
        raise ValueError("host must be the j-fold self-substitution of h")
    if not chi.pattern.is_leaf:
        raise ValueError("coloring must color single-leaf copies")
    if not iso(chi.host, host):
        raise ValueError("coloring host does not match the given host")
    colors = [chi.assignment[(i,)] for i in range(host.leaf_count)]
    if len(set(colors)) > j:
        raise ValueError(
            f"coloring uses {len(set(colors))} distinct colors, more than j = {j}"
        )
    n = h.leaf_count
    lo, hi = 0, host.leaf_count
    level = j
    while True:
        window = colors[lo:hi]
        if level == 1:
            assert len(set(window)) == 1
            return tuple(range(lo, hi)), window[0]
        block = (hi - lo) // n
        descend = None
        for i in range(n):
            if len(set(colors[lo + i * block : lo + (i + 1) * block])) <= level - 1:
                descend = i
                break
        if descend is not None:
            lo = lo + descend * block
            hi = lo + block
            level -= 1
            continue
        cstar = min(set(window))
        picks = []
        for i in range(n):
            base = lo + i * block
            picks.append(base + colors[base : base + block].index(cstar))
        return tuple(picks), cstar


@dataclass(frozen=True)
class ReductionChain:
    """Trees h = T0, T1, ..., Tl with Ti -> (T(i-1))^pattern_2 certified,
    l = ceil(log2 k); it reduces k-color mono search to l two-color steps."""

    trees: tuple[PlaneTree, ...]
    pattern: PlaneTree
    k: int
    certificates: tuple[ArrowVerdict, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"number of colors must be a positive integer, got {self.k!r}")
        expected = (self.k - 1).bit_length() + 1
        if len(self.trees) != expected:
            raise ValueError(
                f"chain for k = {self.k} needs {expected} trees, got {len(self.trees)}"
            )

    def verify(self, budget: SearchBudget | None = None) -> tuple[ArrowVerdict, ...]:
        """Re-check every link; raises unless each arrow conclusively holds."""
        certs = []
        for i in range(1, len(self.trees)):
            verdict = check_arrow(self.trees[i], self.trees[i - 1], self.pattern, 2, budget)
            if verdict.status == "unknown":
                raise BudgetExhaustedError(
                    f"could not certify chain link {i} within the search budget"
                )
            if verdict.status == "fails":
                raise ValueError(f"chain link {i} does not hold")
            certs.append(verdict)
        return tuple(certs)

    def to_json_obj(self) -> dict:
        return {
            "trees": [to_newick(t) for t in self.trees],
            "pattern": to_newick(self.pattern),
            "k": self.k,
        }

    @classmethod
    def from_json_obj(cls, obj, budget: SearchBudget | None = None) -> "ReductionChain":
        """Parse and re-certify a chain (links are not taken on trust)."""
        if not isinstance(obj, dict) or set(obj) != {"trees", "pattern", "k"}:
            raise FormatError('chain JSON must be an object with keys "trees", "pattern", "k"')
        if not isinstance(obj["trees"], list) or not all(
            isinstance(s, str) for s in obj["trees"]
        ):
            raise FormatError('"trees" must be an array of Newick strings')
        if not isinstance(obj["pattern"], str):
            raise FormatError('"pattern" must be a Newick string')
        if not isinstance(obj["k"], int) or isinstance(obj["k"], bool):
            raise FormatError('"k" must be an integer')
        chain = cls(
            tuple(parse_newick(s) for s in obj["trees"]),
            parse_newick(obj["pattern"]),
            obj["k"],
        )
        certs = chain.verify(budget)
        object.__setattr__(chain, "certificates", certs)
        return chain


def build_reduction_chain(
    h: PlaneTree,
    pattern: PlaneTree,
    k: int,
    budget: SearchBudget | None = None,
    max_height: int | None = None,
) -> ReductionChain:
    """Grow the chain upward: each next tree is the least-height perfect tree
    that arrows the previous one with two colors."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"number of colors must be a positive integer, got {k!r}")
    trees = [h]
    certs = []
    for i in range((k - 1).bit_length()):
        d, scan = min_arrow_height_scan(trees[-1], pattern, 2, budget, max_height)
        if d is None:
            raise BudgetExhaustedError(
                f"could not certify chain link {i + 1} within the given limits"
            )
        trees.append(perfect_tree(d))
        certs.append(scan[-1][1])
    return ReductionChain(tuple(trees), pattern, k, tuple(certs))


def extract_mono_k(chain: ReductionChain, chi: Coloring) -> tuple[CopyRef, int]:
    """A monochromatic copy of chain.trees[0] under a chain.k-coloring of the
    pattern-copies in the top tree, via bitwise descent.

    Step i looks only at bit i-1 of each copy's color (a 2-coloring), finds
    a monochromatic copy of the next tree down inside the current region,
    and recurses; after all bits are pinned the surviving region's copies
    agree on the full color.
    """
    top = chain.trees[-1]
    if not iso(chi.host, top):
        raise ValueError("coloring host does not match the top tree of the chain")
    if not iso(chi.pattern, chain.pattern):
        raise ValueError("coloring pattern does not match the chain pattern")
    if chi.k != chain.k:
        raise ValueError(f"coloring has k = {chi.k}, chain has k = {chain.k}")
    region: CopyRef = tuple(range(top.leaf_count))
    for i in range(len(chain.trees) - 1, 0, -1):
        shift = i - 1
        bit_colors = {c: (col >> shift) & 1 for c, col in chi.assignment.items()}
        bit_chi = Coloring(chi.host, chi.pattern, 2, bit_colors)
        found = find_mono_copy(bit_chi, chain.trees[i - 1], region=region)
        if found is None:
            raise ValueError(
                f"no monochromatic copy at chain step {i}; the chain does not certify this host"
            )
        region = found[0]
    color = is_mono(chi, region)
    assert color is not None
    return region, color
