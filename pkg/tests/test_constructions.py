import pytest

from turantools.constructions import (
    build_klikk,
    build_star_k,
    build_triangle_k,
    build_unique_kab,
)
from turantools.counting import count_copies
from turantools.families import GraphFamily
from turantools.graphs import complete_bipartite, complete_graph
from turantools.oracle import exa_oracle
from turantools.partitions import PartitionPair, mup


def test_klikk_examples():
    rep = build_klikk(5, 3)
    assert rep.actual_edges == 6 and rep.actual_copies == 1 and rep.ok
    rep = build_klikk(7, 3)
    assert rep.actual_edges == 11 and rep.ok
    rep = build_klikk(6, 6)  # degenerate: bare clique
    assert rep.actual_edges == 15 and rep.actual_copies == 1 and rep.ok


def test_klikk_rejects_bad_params():
    with pytest.raises(ValueError):
        build_klikk(5, 2)
    with pytest.raises(ValueError):
        build_klikk(4, 5)


@pytest.mark.parametrize("n", range(3, 13))
def test_klikk_contract_sweep(n):
    for r in range(3, min(n, 5) + 1):
        assert build_klikk(n, r).ok


def test_klikk_matches_oracle_small():
    for n in range(3, 7):
        rep = build_klikk(n, 3)
        assert exa_oracle(n, 1, GraphFamily("clique:3")).value == rep.actual_edges


def test_triangle_examples():
    rep = build_triangle_k(7, 2)
    assert rep.actual_edges == 12 and rep.actual_copies == 2 and rep.ok
    rep = build_triangle_k(5, 1)
    assert rep.actual_edges == 6 and rep.actual_copies == 1 and rep.ok


def test_triangle_rejects_small_class():
    with pytest.raises(ValueError):
        build_triangle_k(4, 3)
    with pytest.raises(ValueError):
        build_triangle_k(7, 5)
    with pytest.raises(ValueError):
        build_triangle_k(5, 0)


@pytest.mark.parametrize("n", range(3, 13))
def test_triangle_contract_sweep(n):
    for k in range(1, 5):
        large = (n - 1) - (n - 1) // 2
        if n < k + 2 or k > large:
            continue
        rep = build_triangle_k(n, k)
        assert rep.ok
        assert rep.actual_edges == (n - 1) ** 2 // 4 + k + 1


def test_triangle_is_lower_bound_for_oracle():
    fam = GraphFamily("clique:3")
    for n in range(4, 7):
        for k in (1, 2, 3):
            large = (n - 1) - (n - 1) // 2
            if n < k + 2 or k > large:
                continue
            rep = build_triangle_k(n, k)
            assert exa_oracle(n, k, fam).value >= rep.actual_edges


def test_unique_kab_examples():
    rep = build_unique_kab(1, 2, PartitionPair((1,), (2,)))
    assert rep.actual_edges == 2 and rep.actual_copies == 1 and rep.ok
    rep = build_unique_kab(2, 2, PartitionPair((1, 1), (2,)))
    assert rep.actual_edges == 5 and rep.actual_copies == 1 and rep.ok
    # that witness is K_4 minus one edge
    assert rep.graph.edge_count() == 5 and rep.graph.n == 4


def test_unique_kab_rejects_non_unique():
    with pytest.raises(ValueError, match="unique"):
        build_unique_kab(2, 2, PartitionPair((2,), (2,)))


def test_unique_kab_matches_oracle():
    for a in range(1, 4):
        for b in range(a, 4):
            if a + b > 7 or (a, b) == (1, 1):
                continue
            res = mup(a, b)
            rep = build_unique_kab(a, b, res.witness)
            assert rep.ok
            oracle = exa_oracle(a + b, 1, GraphFamily(f"bipartite:{a},{b}"))
            assert oracle.value == rep.actual_edges


def test_unique_kab_spanning_copy_only():
    rep = build_unique_kab(2, 3, mup(2, 3).witness)
    assert count_copies(rep.graph, complete_bipartite(2, 3)) == 1


def test_star_examples():
    rep = build_star_k(6, 3, 2)
    assert rep.actual_edges == 7 and rep.actual_copies == 2 and rep.ok
    rep = build_star_k(6, 3, 0)
    assert rep.actual_edges == 6 and rep.actual_copies == 0 and rep.ok


def test_star_rejects_bad_params():
    with pytest.raises(ValueError):
        build_star_k(6, 3, 3)  # odd k
    with pytest.raises(ValueError):
        build_star_k(7, 3, 2)  # r does not divide n
    with pytest.raises(ValueError):
        build_star_k(6, 3, 4)  # only one component pair


def test_star_contract_sweep():
    for n, r in ((6, 3), (8, 2), (8, 4), (12, 3), (12, 4)):
        comps = n // r
        for k in range(0, 2 * (comps // 2) + 1, 2):
            rep = build_star_k(n, r, k)
            assert rep.ok, (n, r, k)


def test_reports_carry_the_graph():
    rep = build_klikk(6, 4)
    assert count_copies(rep.graph, complete_graph(4)) == 1
    doc = rep.to_json()
    assert doc["ok"] is True and doc["graph6"]
