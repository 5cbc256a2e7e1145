"""Exact counting of pattern copies: subgraphs of a host isomorphic to a pattern.

A "copy" is an edge subset of the host whose graph is isomorphic to the
pattern, after discarding the pattern's isolated vertices.  Copies are counted
as injective adjacency-preserving embeddings divided by the pattern's
automorphism count; the division must be exact and is asserted.  A direct
edge-subset enumeration oracle is kept alongside for cross-checking.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from turantools.graphs import Graph, make_graph, mask_from_edges, slot_pairs

AUT_ORDER_CAP = 10


def strip_isolated(g: Graph) -> Graph:
    """Restrict to vertices of positive degree, relabeled in increasing order."""
    keep = [v for v in range(g.n) if g.adj[v]]
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges()]
    return make_graph(len(keep), edges)


def _pattern_order(f: Graph) -> list[int]:
    """Pattern vertices by decreasing degree, ties by label; maximizes pruning."""
    return sorted(range(f.n), key=lambda v: (-f.degree(v), v))


def _count_embeddings(host: Graph, pattern: Graph) -> int:
    """Injective maps pattern -> host sending pattern edges to host edges."""
    if pattern.n > host.n:
        return 0
    if pattern.n == 0:
        return 1
    order = _pattern_order(pattern)
    # earlier[k] = pattern neighbors of order[k] already placed at step k
    earlier = []
    for k, p in enumerate(order):
        placed = order[:k]
        earlier.append([(j, q) for j, q in enumerate(placed) if pattern.has_edge(p, q)])

    image = [0] * pattern.n
    used = 0
    total = 0

    def extend(k: int) -> None:
        nonlocal used, total
        if k == pattern.n:
            total += 1
            return
        reqs = earlier[k]
        for w in range(host.n):
            bit = 1 << w
            if used & bit:
                continue
            ok = True
            for j, _ in reqs:
                if not host.adj[image[j]] >> w & 1:
                    ok = False
                    break
            if ok:
                image[k] = w
                used |= bit
                extend(k + 1)
                used ^= bit

    extend(0)
    return total


def automorphism_count(f: Graph) -> int:
    """|Aut(f)| by pruned backtracking over label permutations."""
    if f.n > AUT_ORDER_CAP:
        raise ValueError(f"automorphism search capped at {AUT_ORDER_CAP} vertices")
    if f.n == 0:
        return 1
    # An injective self-map preserving edges is an automorphism once edge
    # counts agree, which they do for a self-embedding.
    return _count_embeddings(f, f)


def count_copies(host: Graph, pattern: Graph) -> int:
    """Number of subgraphs of host isomorphic to pattern (isolated vertices ignored)."""
    f = strip_isolated(pattern)
    if f.n == 0:
        return 1
    emb = _count_embeddings(host, f)
    aut = automorphism_count(f)
    copies, rem = divmod(emb, aut)
    if rem:
        raise AssertionError(
            f"embedding count {emb} not divisible by |Aut|={aut}"
        )
    return copies


def count_copies_bruteforce(host: Graph, pattern: Graph) -> int:
    """Oracle twin of count_copies: enumerate edge subsets, test isomorphism."""
    f = strip_isolated(pattern)
    if f.n == 0:
        return 1
    k = f.edge_count()
    hits = 0
    host_edges = host.edges()
    for subset in combinations(host_edges, k):
        sub = strip_isolated(make_graph(host.n, subset))
        if are_isomorphic(sub, f):
            hits += 1
    return hits


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return _count_embeddings(h, g) > 0


def count_family(host: Graph, fam, n: int | None = None) -> int:
    """Total copies over a family; members must be pairwise non-isomorphic.

    `fam` is either a GraphFamily (instantiated at ambient order n, default
    the host's order) or a plain iterable of pattern graphs.
    """
    if hasattr(fam, "members"):
        members = fam.members(host.n if n is None else n)
    else:
        members = list(fam)
    stripped = [strip_isolated(m) for m in members]
    for a, b in combinations(stripped, 2):
        if are_isomorphic(a, b):
            raise ValueError("family members must be pairwise non-isomorphic")
    return sum(count_copies(host, m) for m in stripped)


def labeled_copies(n: int, pattern: Graph) -> tuple[int, ...]:
    """All copies of pattern inside K_n, as edge-slot masks, ascending.

    Each mask is one distinct edge subset of K_n isomorphic to the stripped
    pattern, so for any graph G on n vertices the number of masks contained
    in G's edge mask equals count_copies(G, pattern).
    """
    f = strip_isolated(pattern)
    if f.n > n:
        return ()
    if f.n == 0:
        return (0,)
    fe = f.edges()
    masks = set()
    for sub in combinations(range(n), f.n):
        for img in permutations(sub):
            masks.add(mask_from_edges(n, [(img[u], img[v]) for u, v in fe]))
    return tuple(sorted(masks))


@lru_cache(maxsize=None)
def all_pattern_classes(max_order: int) -> tuple[Graph, ...]:
    """Non-isomorphic graphs with >= 1 edge and no isolated vertices, order <= max_order."""
    found: list[Graph] = []
    m = len(slot_pairs(max_order))
    from turantools.graphs import graph_from_mask

    for mask in range(1, 1 << m):
        g = strip_isolated(graph_from_mask(max_order, mask))
        if any(are_isomorphic(g, h) for h in found):
            continue
        found.append(g)
    found.sort(key=lambda g: (g.n, g.edge_count(), g.edge_mask()))
    return tuple(found)
