from math import comb

import pytest

from turantools.constructions import build_klikk
from turantools.errors import AdversaryError
from turantools.families import GraphFamily, parse_family
from turantools.game import (
    GameState,
    adversary_no_first,
    consistent_placements,
    matching_first_questioner,
    placements,
    questioner_extremal_strategy,
    simulate,
    solve_L,
    solve_x,
    solve_x_prime,
    solver_questioner,
    strategy_worst_case,
    sweep_patterns,
)
from turantools.graphs import complete_graph, make_graph
from turantools.oracle import exa_oracle, exa_prime_oracle

K3 = GraphFamily("clique:3")
STAR = GraphFamily("star")
TREES = GraphFamily("trees")
KMINUS = GraphFamily("kminus")


def test_placement_counts():
    assert len(placements(4, K3)) == 4
    assert len(placements(4, STAR)) == 4
    assert len(placements(4, TREES)) == 16


def test_consistent_placements_fresh():
    st = GameState(4, K3)
    assert len(consistent_placements(st)) == 4


def test_consistent_placements_after_no():
    st = GameState(4, K3, no=((0, 1),))
    cons = consistent_placements(st)
    assert len(cons) == 2
    assert all((0, 1) not in p for p in cons)


def test_consistent_placements_after_full_yes():
    st = GameState(4, K3, yes=((0, 1), (0, 2), (1, 2)))
    cons = consistent_placements(st)
    assert cons == [((0, 1), (0, 2), (1, 2))]


def test_adversary_no_first_fresh_says_no():
    st = GameState(4, K3)
    for q in ((0, 1), (2, 3), (1, 3)):
        assert adversary_no_first(st, q) is False


def test_adversary_no_first_forced_yes():
    st = GameState(4, K3, no=((0, 1), (0, 2), (0, 3)))
    assert adversary_no_first(st, (1, 2)) is True


def test_adversary_rejects_repeated_query():
    st = GameState(4, K3, no=((0, 1),))
    with pytest.raises(ValueError, match="already"):
        adversary_no_first(st, (0, 1))


def test_solver_values_stars():
    assert solve_L(4, STAR).value == 2
    assert solve_L(5, STAR).value == 3
    assert solve_x(4, STAR).value == 2
    assert solve_x(5, STAR).value == 2
    assert solve_x_prime(4, STAR).value == 5


def test_solver_values_trees_and_cliques():
    assert solve_L(4, TREES).value == 5
    assert solve_x(4, TREES).value == 3
    assert solve_L(4, KMINUS).value == 5
    assert solve_x(4, KMINUS).value == 1
    exa1 = exa_oracle(4, 1, K3).value
    assert solve_L(4, K3).value == comb(4, 2) - exa1


def test_family_union_games():
    fam = parse_family("trees+clique:3")
    assert solve_x_prime(4, fam).value == comb(4, 2)
    assert solve_x(4, fam).value == 3


def test_chain_inequalities():
    for n, fam in ((4, K3), (4, STAR), (5, STAR), (4, TREES), (4, KMINUS)):
        total = comb(n, 2)
        x = solve_x(n, fam).value
        L = solve_L(n, fam).value
        xp = solve_x_prime(n, fam).value
        exa1 = exa_oracle(n, 1, fam).value
        exap = exa_prime_oracle(n, fam).value
        assert total - exa1 <= x <= L <= xp
        assert total - exap <= xp


def test_uniform_edge_identity():
    for n, fam in ((4, K3), (4, STAR), (5, STAR), (4, TREES), (4, KMINUS)):
        e = fam.uniform_edge_count(n)
        assert e is not None
        assert solve_x(n, fam).value + e == solve_x_prime(n, fam).value


def test_symmetry_reduction_is_transparent():
    for fam in (K3, STAR, TREES):
        for cost_solve in (solve_L, solve_x, solve_x_prime):
            plain = cost_solve(4, fam, symmetry=False)
            reduced = cost_solve(4, fam, symmetry=True)
            assert plain.value == reduced.value
            assert plain.first_moves == reduced.first_moves


def test_solver_deterministic():
    a = solve_L(4, TREES)
    b = solve_L(4, TREES)
    assert a.value == b.value and a.first_moves == b.first_moves


def test_solver_order_cap():
    with pytest.raises(ValueError, match="capped"):
        solve_L(7, STAR)


def test_state_ceiling_reports_unsolved():
    res = solve_L(5, TREES, state_cap=10)
    assert not res.complete and res.value is None


def test_first_moves_cover_root_optimum():
    res = solve_L(4, K3)
    assert res.first_moves  # at least one optimal opening
    assert all(len(q) == 2 for q in res.first_moves)


def test_simulate_solver_vs_no_first():
    tr = simulate(4, K3, solver_questioner(4, K3, "L"), adversary_no_first)
    assert tr.total == solve_L(4, K3).value
    # bookkeeping: YES answers are exactly the asked part of the placement
    yes_pairs = {q for q, a in tr.queries if a}
    asked = {q for q, _ in tr.queries}
    assert yes_pairs == set(tr.final_placement) & asked


def test_simulate_no_count_bound():
    for n, fam in ((4, K3), (4, STAR), (5, STAR), (4, TREES)):
        exa1 = exa_oracle(n, 1, fam).value
        for cost in ("L", "x"):
            tr = simulate(n, fam, solver_questioner(n, fam, cost), adversary_no_first)
            assert tr.no_count >= comb(n, 2) - exa1


def test_simulate_xprime_asks_all_copy_edges():
    tr = simulate(4, STAR, solver_questioner(4, STAR, "xprime"), adversary_no_first)
    asked = {q for q, _ in tr.queries}
    assert set(tr.final_placement) <= asked
    assert tr.total == solve_x_prime(4, STAR).value


def test_matching_first_questioner():
    tr = simulate(4, STAR, matching_first_questioner(4), adversary_no_first)
    assert tr.no_count == 2


def test_terminal_no_mass_under_no_first():
    # when the NO-first adversary is beaten, NOs cover all pairs off E_y u E_0
    for n, fam in ((4, K3), (4, TREES)):
        exa1 = exa_oracle(n, 1, fam).value
        tr = simulate(n, fam, solver_questioner(n, fam, "L"), adversary_no_first)
        assert tr.no_count >= comb(n, 2) - exa1


def test_extremal_strategy_exact_query_count():
    g = build_klikk(5, 3).graph
    strat = questioner_extremal_strategy(5, complete_graph(3), g)
    tr = simulate(5, K3, strat, adversary_no_first)
    assert tr.total == comb(5, 2) - g.edge_count() == 4
    assert tr.no_count == 4


def test_extremal_strategy_worst_case_capped():
    g = build_klikk(5, 3).graph
    strat = questioner_extremal_strategy(5, complete_graph(3), g)
    assert strategy_worst_case(5, K3, strat) <= comb(5, 2)


def test_extremal_strategy_survives_eager_yes():
    g = build_klikk(5, 3).graph
    strat = questioner_extremal_strategy(5, complete_graph(3), g)

    def eager_yes(state, query):
        # YES whenever some consistent placement contains the pair
        q = (min(query), max(query))
        return any(q in p for p in consistent_placements(state))

    tr = simulate(5, K3, strat, eager_yes)
    assert tr.total <= comb(5, 2)


def test_extremal_strategy_validates_inputs():
    with pytest.raises(ValueError, match="exactly one"):
        questioner_extremal_strategy(4, complete_graph(3), complete_graph(4))
    with pytest.raises(ValueError, match="connected"):
        questioner_extremal_strategy(4, make_graph(4, [(0, 1), (2, 3)]),
                                     make_graph(4, [(0, 1), (2, 3)]))


def test_simulate_flags_bad_adversary():
    # answering NO to both matching pairs leaves no star placement at all
    def stubborn_no(state, query):
        return False

    with pytest.raises(AdversaryError):
        simulate(4, STAR, matching_first_questioner(4), stubborn_no)


def test_solver_matches_unpruned_minimax():
    # brute force without move skipping or endgame shortcuts, tiny instance
    fam = K3
    masks = fam.placements(4)
    total = 6

    def value(yes, no, cost):
        cons = [p for p in masks if p & no == 0 and yes & ~p == 0]
        if len(cons) == 1 and (cost != "xprime" or yes == cons[0]):
            return 0
        best = None
        for s in range(total):
            b = 1 << s
            if (yes | no) & b:
                continue
            opts = []
            if any(p & b for p in cons):
                opts.append((0 if cost == "x" else 1) + value(yes | b, no, cost))
            if any(not (p & b) for p in cons):
                opts.append(1 + value(yes, no | b, cost))
            v = max(opts)
            if best is None or v < best:
                best = v
        return best

    assert value(0, 0, "L") == solve_L(4, fam).value
    assert value(0, 0, "x") == solve_x(4, fam).value
    assert value(0, 0, "xprime") == solve_x_prime(4, fam).value


def test_sweep_smoke():
    rep = sweep_patterns(4, max_pattern_order=3)
    assert rep["rows"]
    for row in rep["rows"]:
        if row["gap_x"] is not None:
            assert row["gap_x"] >= 0
        if row["gap_xprime"] is not None:
            assert row["gap_xprime"] >= 0
