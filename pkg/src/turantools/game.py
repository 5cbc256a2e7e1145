"""The Questioner/Adversary edge-query identification game, solved exactly.

A hidden placement of some family member sits on n labeled vertices.  The
Questioner asks vertex pairs; the Adversary answers adaptively, constrained
only to keep at least one placement consistent with all answers.  The game
ends when a single consistent placement remains (for the checked variant,
additionally every edge of it must have been asked).  Exact minimax values:

  L  - total queries,
  x  - queries answered NO,
  x' - total queries with the checked endgame.

States are (YES-mask, NO-mask) pairs memoized under an optional vertex-
symmetry reduction; the reduction never changes values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from turantools.counting import count_copies
from turantools.errors import AdversaryError, UnsolvedError
from turantools.families import GraphFamily
from turantools.graphs import (
    Edge,
    Graph,
    complement,
    mask_from_edges,
    pair_count,
    slot_pairs,
)

SOLVER_ORDER_CAP = 6
DEFAULT_STATE_CAP = 5_000_000


@dataclass(frozen=True)
class GameState:
    """Answered-YES and answered-NO pair sets; everything else is unasked."""

    n: int
    fam: GraphFamily
    yes: tuple[Edge, ...] = ()
    no: tuple[Edge, ...] = ()

    def yes_mask(self) -> int:
        return mask_from_edges(self.n, self.yes)

    def no_mask(self) -> int:
        return mask_from_edges(self.n, self.no)

    def asked(self) -> frozenset[Edge]:
        return frozenset(self.yes) | frozenset(self.no)

    def answer(self, query: Edge, is_yes: bool) -> "GameState":
        q = (min(query), max(query))
        if is_yes:
            return GameState(self.n, self.fam, self.yes + (q,), self.no)
        return GameState(self.n, self.fam, self.yes, self.no + (q,))


@dataclass
class GameValue:
    value: int | None
    first_moves: tuple[Edge, ...]
    states_explored: int
    complete: bool

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "first_moves": [list(q) for q in self.first_moves],
            "states_explored": self.states_explored,
            "complete": self.complete,
        }


def placements(n: int, fam: GraphFamily) -> list[tuple[Edge, ...]]:
    """All labeled copies of family members on 0..n-1, as sorted edge tuples."""
    pairs = slot_pairs(n)
    out = []
    for mask in fam.placements(n):
        edges = []
        m = mask
        while m:
            s = (m & -m).bit_length() - 1
            edges.append(pairs[s])
            m &= m - 1
        out.append(tuple(sorted(edges)))
    return sorted(out)


def _consistent_masks(masks, yes: int, no: int) -> list[int]:
    return [p for p in masks if p & no == 0 and yes & ~p == 0]


def consistent_placements(state: GameState) -> list[tuple[Edge, ...]]:
    """Placements containing every YES pair and avoiding every NO pair."""
    yes, no = state.yes_mask(), state.no_mask()
    if yes & no:
        raise ValueError("a pair cannot be answered both YES and NO")
    pairs = slot_pairs(state.n)
    out = []
    for p in _consistent_masks(state.fam.placements(state.n), yes, no):
        edges = []
        m = p
        while m:
            s = (m & -m).bit_length() - 1
            edges.append(pairs[s])
            m &= m - 1
        out.append(tuple(sorted(edges)))
    return sorted(out)


def adversary_no_first(state: GameState, query: Edge) -> bool:
    """NO whenever some consistent placement excludes the query, else YES."""
    q = (min(query), max(query))
    if q in state.asked():
        raise ValueError(f"pair {q} was already asked")
    qbit = mask_from_edges(state.n, [q])
    cons = _consistent_masks(
        state.fam.placements(state.n), state.yes_mask(), state.no_mask()
    )
    if not cons:
        raise AdversaryError("no consistent placement remains")
    return all(p & qbit for p in cons)


class _Solver:
    """Memoized exact minimax over (YES-mask, NO-mask) states."""

    def __init__(
        self,
        n: int,
        fam: GraphFamily,
        cost: str,
        symmetry: bool | None = None,
        state_cap: int = DEFAULT_STATE_CAP,
    ):
        if n > SOLVER_ORDER_CAP:
            raise ValueError(f"game solver capped at n <= {SOLVER_ORDER_CAP}")
        if cost not in ("L", "x", "xprime"):
            raise ValueError(f"unknown cost functional {cost!r}")
        self.n = n
        self.fam = fam
        self.cost = cost
        self.masks = fam.placements(n)
        if not self.masks:
            raise ValueError("family has no placements at this order")
        self.m_slots = pair_count(n)
        self.state_cap = state_cap
        self.memo: dict[tuple[int, int], int] = {}
        if symmetry is None:
            symmetry = n >= 6
        self.tables = self._symmetry_tables() if symmetry else None

    def _symmetry_tables(self) -> list[tuple[int, ...]]:
        """Slot permutations induced by vertex permutations fixing the placement set."""
        from turantools.graphs import slot_index

        idx = slot_index(self.n)
        mask_set = frozenset(self.masks)
        tables = []
        for perm in permutations(range(self.n)):
            table = tuple(
                idx[tuple(sorted((perm[u], perm[v])))]
                for u, v in slot_pairs(self.n)
            )
            if all(_remap(p, table) in mask_set for p in self.masks):
                tables.append(table)
        return tables

    def _canon(self, yes: int, no: int) -> tuple[int, int]:
        if not self.tables:
            return (yes, no)
        return min((_remap(yes, t), _remap(no, t)) for t in self.tables)

    def value(self, yes: int = 0, no: int = 0) -> int:
        key = self._canon(yes, no)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        if len(self.memo) >= self.state_cap:
            raise UnsolvedError(f"state ceiling {self.state_cap} reached")
        cons = _consistent_masks(self.masks, yes, no)
        if not cons:
            raise AdversaryError("unreachable inconsistent state")
        if len(cons) == 1:
            # checked endgame: the unasked edges of the survivor are forced
            v = (cons[0] & ~yes).bit_count() if self.cost == "xprime" else 0
            self.memo[key] = v
            return v
        best = None
        for s in self._informative(cons, yes | no):
            b = 1 << s
            v = self._answer_value(yes, no, b)
            if best is None or v < best:
                best = v
        assert best is not None  # two placements always differ on an unasked pair
        self.memo[key] = best
        return best

    def _answer_value(self, yes: int, no: int, b: int) -> int:
        cost_yes = 0 if self.cost == "x" else 1
        cost_no = 1
        return max(
            cost_yes + self.value(yes | b, no),
            cost_no + self.value(yes, no | b),
        )

    def _informative(self, cons: list[int], asked: int):
        inter = cons[0]
        union = cons[0]
        for p in cons[1:]:
            inter &= p
            union |= p
        informative = union & ~inter & ~asked
        out = []
        m = informative
        while m:
            s = (m & -m).bit_length() - 1
            out.append(s)
            m &= m - 1
        return out

    def solve(self) -> GameValue:
        try:
            v = self.value(0, 0)
        except UnsolvedError:
            return GameValue(None, (), len(self.memo), False)
        pairs = slot_pairs(self.n)
        cons = _consistent_masks(self.masks, 0, 0)
        moves = []
        if len(cons) > 1:
            for s in self._informative(cons, 0):
                if self._answer_value(0, 0, 1 << s) == v:
                    moves.append(pairs[s])
        return GameValue(v, tuple(sorted(moves)), len(self.memo), True)

    def best_query(self, yes: int, no: int) -> int | None:
        """Lex-smallest optimal informative slot, None at terminal states."""
        cons = _consistent_masks(self.masks, yes, no)
        if len(cons) == 1:
            if self.cost == "xprime":
                remaining = cons[0] & ~yes & ~no
                if remaining:
                    return (remaining & -remaining).bit_length() - 1
            return None
        target = self.value(yes, no)
        for s in self._informative(cons, yes | no):
            if self._answer_value(yes, no, 1 << s) == target:
                return s
        raise AssertionError("no optimal query found")


def _remap(mask: int, table: tuple[int, ...]) -> int:
    out = 0
    m = mask
    while m:
        s = (m & -m).bit_length() - 1
        out |= 1 << table[s]
        m &= m - 1
    return out


def solve_L(n: int, fam: GraphFamily, **kw) -> GameValue:
    """Worst-case total queries to pin the hidden placement, optimal play."""
    return _Solver(n, fam, "L", **kw).solve()


def solve_x(n: int, fam: GraphFamily, **kw) -> GameValue:
    """Worst-case NO answers to pin the hidden placement, optimal play."""
    return _Solver(n, fam, "x", **kw).solve()


def solve_x_prime(n: int, fam: GraphFamily, **kw) -> GameValue:
    """Worst-case total queries when every edge of the copy must be asked."""
    return _Solver(n, fam, "xprime", **kw).solve()


def solver_questioner(n: int, fam: GraphFamily, cost: str = "L", **kw):
    """Deterministic optimal questioner: lex-smallest optimal query each turn."""
    solver = _Solver(n, fam, cost, **kw)
    pairs = slot_pairs(n)

    def questioner(state: GameState) -> Edge | None:
        s = solver.best_query(state.yes_mask(), state.no_mask())
        return pairs[s] if s is not None else None

    return questioner


@dataclass
class Transcript:
    """Full record of one played game."""

    queries: tuple[tuple[Edge, bool], ...]
    final_placement: tuple[Edge, ...]
    total: int = field(init=False)
    yes_count: int = field(init=False)
    no_count: int = field(init=False)

    def __post_init__(self):
        self.total = len(self.queries)
        self.yes_count = sum(1 for _, a in self.queries if a)
        self.no_count = self.total - self.yes_count


def simulate(n: int, fam: GraphFamily, questioner, adversary) -> Transcript:
    """Play questioner vs adversary; validate consistency at every step.

    The questioner returns the next unasked pair or None to claim
    identification; the adversary returns True for YES.  Raises
    AdversaryError if an answer leaves no consistent placement.
    """
    masks = fam.placements(n)
    pairs = slot_pairs(n)
    state = GameState(n, fam)
    record: list[tuple[Edge, bool]] = []
    for _ in range(pair_count(n) + 1):
        q = questioner(state)
        if q is None:
            break
        q = (min(q), max(q))
        if q in state.asked():
            raise ValueError(f"questioner repeated pair {q}")
        ans = bool(adversary(state, q))
        state = state.answer(q, ans)
        if not _consistent_masks(masks, state.yes_mask(), state.no_mask()):
            raise AdversaryError(f"answer {ans} on {q} left no consistent placement")
        record.append((q, ans))
    cons = _consistent_masks(masks, state.yes_mask(), state.no_mask())
    if len(cons) != 1:
        raise ValueError(
            f"questioner stopped with {len(cons)} consistent placements"
        )
    final = cons[0]
    if state.yes_mask() & ~final:
        raise AdversaryError("YES answers are not a subset of the final placement")
    edges = []
    m = final
    while m:
        s = (m & -m).bit_length() - 1
        edges.append(pairs[s])
        m &= m - 1
    return Transcript(tuple(record), tuple(sorted(edges)))


def questioner_extremal_strategy(n: int, pattern: Graph, g_ext: Graph):
    """Questioner built on an extremal graph with a unique pattern copy.

    Queries the non-edges of g_ext first; after any YES it expands around the
    endpoints of known YES pairs until the copy is pinned, falling back to
    the remaining pairs.  Total and correct against every valid adversary.
    """
    if g_ext.n != n:
        raise ValueError("extremal graph order must match the ambient order")
    if not pattern.is_connected() or pattern.edge_count() == 0:
        raise ValueError("pattern must be connected with at least one edge")
    if count_copies(g_ext, pattern) != 1:
        raise ValueError("extremal graph must contain exactly one pattern copy")
    non_edges = complement(g_ext).edges()

    def questioner(state: GameState) -> Edge | None:
        cons = consistent_placements(state)
        if len(cons) == 1:
            return None
        asked = state.asked()
        if not state.yes:
            for q in non_edges:
                if q not in asked:
                    return q
        else:
            frontier = {v for e in state.yes for v in e}
            for u in sorted(frontier):
                for w in range(n):
                    if w == u:
                        continue
                    q = (min(u, w), max(u, w))
                    if q not in asked:
                        return q
        for q in slot_pairs(n):
            qq = (min(q), max(q))
            if qq not in asked:
                return qq
        raise AssertionError("all pairs asked yet multiple placements remain")

    return questioner


def matching_first_questioner(n: int):
    """Star-family questioner: query a matching, then one probe on a YES pair."""

    def questioner(state: GameState) -> Edge | None:
        cons = consistent_placements(state)
        if len(cons) == 1:
            return None
        asked = state.asked()
        if not state.yes:
            for i in range(0, n - 1, 2):
                q = (i, i + 1)
                if q not in asked:
                    return q
        else:
            u, v = state.yes[0]
            for w in range(n):
                if w in (u, v):
                    continue
                q = (min(u, w), max(u, w))
                if q not in asked:
                    return q
        for q in slot_pairs(n):
            if q not in asked:
                return q
        raise AssertionError("all pairs asked yet multiple placements remain")

    return questioner


def strategy_worst_case(n: int, fam: GraphFamily, questioner) -> int:
    """Max total queries of a deterministic questioner over all valid adversaries."""
    masks = fam.placements(n)
    memo: dict[tuple[int, int], int] = {}

    def walk(state: GameState) -> int:
        key = (state.yes_mask(), state.no_mask())
        if key in memo:
            return memo[key]
        q = questioner(state)
        if q is None:
            cons = _consistent_masks(masks, *key)
            if len(cons) != 1:
                raise ValueError("questioner stopped before identification")
            memo[key] = 0
            return 0
        qbit = mask_from_edges(n, [q])
        best = None
        for ans in (False, True):
            nxt = state.answer(q, ans)
            if _consistent_masks(masks, nxt.yes_mask(), nxt.no_mask()):
                v = 1 + walk(nxt)
                if best is None or v > best:
                    best = v
        assert best is not None
        memo[key] = best
        return best

    return walk(GameState(n, fam))


def sweep_patterns(n: int, max_pattern_order: int = 4) -> dict:
    """Gap survey over all single-pattern families with small patterns.

    For every pattern class F with at most max_pattern_order vertices,
    reports x(n,F) against C(n,2) - exa_1(n,F) and x'(n,F) against
    C(n,2) - exa'_1(n,F); findings only, nothing asserted.
    """
    from turantools.counting import all_pattern_classes
    from turantools.graphs import encode_graph6
    from turantools.oracle import exa_oracle, exa_prime_oracle

    total_pairs = pair_count(n)
    rows = []
    for f in all_pattern_classes(max_pattern_order):
        if f.n > n:
            continue
        fam = GraphFamily.explicit((f,), label=f"pattern:{encode_graph6(f)}")
        exa1 = exa_oracle(n, 1, fam)
        exap = exa_prime_oracle(n, fam)
        xv = solve_x(n, fam)
        xpv = solve_x_prime(n, fam)
        gap_x = (
            xv.value - (total_pairs - exa1.value)
            if exa1.value is not None and xv.value is not None
            else None
        )
        gap_xp = (
            xpv.value - (total_pairs - exap.value)
            if exap.value is not None and xpv.value is not None
            else None
        )
        rows.append(
            {
                "pattern_graph6": encode_graph6(f),
                "pattern_edges": f.edge_count(),
                "exa1": exa1.value,
                "x": xv.value,
                "gap_x": gap_x,
                "exa_prime1": exap.value,
                "xprime": xpv.value,
                "gap_xprime": gap_xp,
            }
        )
    return {
        "n": n,
        "max_pattern_order": max_pattern_order,
        "rows": rows,
        "strict_gap_x_found": any(r["gap_x"] not in (0, None) for r in rows),
        "strict_gap_xprime_found": any(r["gap_xprime"] not in (0, None) for r in rows),
    }
