"""Exact solvers for domination and independence numbers.

The workhorse is a branch-and-bound feasibility test: does a dominating
set of size at most k exist?  Branching always targets an undominated
vertex with the fewest candidate dominators, and every search node is
cut by two lower bounds: a greedy packing of pairwise-disjoint closed
neighborhoods (each packed vertex needs its own dominator) and a
coverage bound (budget times the largest closed neighborhood must reach
every undominated vertex).  The domination number is found by probing
increasing budgets between a packing lower bound and a greedy upper
bound; the reported witness is recomputed by a lexicographic first-fit
search at the optimum, so it matches brute-force enumeration exactly.

All functions are pure: graphs come in, numbers and bitmask sets come
out, and no state survives a call.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, bits, closed_masks, connected_components, is_dominating

BRUTEFORCE_MAX = 30
ALL_SETS_MAX = 24


@dataclass(frozen=True)
class DominationReport:
    """Result bundle: the number, one witness, optionally every witness.

    gamma is the optimum size; witness is a bitmask optimum set (None
    only when a solver computes the value alone); all_sets, when
    present, lists every optimum set in lexicographic order of their
    sorted vertex sequences.
    """

    gamma: int
    witness: int | None
    all_sets: tuple[int, ...] | None = None


def _greedy_cover(closed: list[int], full: int) -> list[int]:
    """Greedy max-coverage dominating set; returns the picked vertices."""
    picked = []
    dominated = 0
    while dominated != full:
        best_v = -1
        best_gain = 0
        for v in range(len(closed)):
            gain = (closed[v] & ~dominated).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        picked.append(best_v)
        dominated |= closed[best_v]
    return picked


def _packing_bound(closed: list[int], undominated: int) -> int:
    """Count undominated vertices with pairwise-disjoint closed neighborhoods.

    No vertex can dominate two of them, so any completion needs at least
    this many further picks.
    """
    count = 0
    blocked = 0
    m = undominated
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        nb = closed[v]
        if not nb & blocked:
            count += 1
            blocked |= nb
    return count


def _exists_dominating(closed: list[int], full: int, budget: int, dominated: int = 0) -> bool:
    """True if some set of at most `budget` vertices dominates everything."""
    undominated = full & ~dominated
    if not undominated:
        return True
    if budget <= 0:
        return False
    if _packing_bound(closed, undominated) > budget:
        return False
    # pivot: undominated vertex with the fewest candidate dominators
    pivot_candidates = 0
    pivot_count = 65
    m = undominated
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        cand = closed[v]
        c = cand.bit_count()
        if c < pivot_count:
            pivot_count = c
            pivot_candidates = cand
            if c == 1:
                break
    order = sorted(
        bits(pivot_candidates),
        key=lambda w: -(closed[w] & undominated).bit_count(),
    )
    for w in order:
        if _exists_dominating(closed, full, budget - 1, dominated | closed[w]):
            return True
    return False


def exists_dominating_within(g: Graph, budget: int) -> bool:
    """Feasibility probe: is there a dominating set of size <= budget?"""
    if budget < 0:
        return g.n == 0
    return _exists_dominating(closed_masks(g), g.full_mask, budget)


def gamma_value(g: Graph) -> int:
    """Domination number, computed by budget probes between two bounds."""
    if g.n == 0:
        return 0
    closed = closed_masks(g)
    full = g.full_mask
    upper = len(_greedy_cover(closed, full))
    lower = _packing_bound(closed, full)
    for k in range(lower, upper):
        if _exists_dominating(closed, full, k):
            return k
    return upper


def _lex_smallest_dominating(
    closed: list[int], full: int, n: int, size: int, independent_adj: tuple[int, ...] | None = None
) -> int | None:
    """Lexicographically first set of exactly `size` vertices that dominates.

    Vertex sets compare as their sorted index sequences, matching the
    order itertools.combinations produces.  With independent_adj given,
    only independent sets are considered.
    """

    def rec(start: int, dominated: int, banned: int, remaining: int) -> int | None:
        if remaining == 0:
            return 0 if dominated == full else None
        if n - start < remaining:
            return None
        avail = (full & ~((1 << start) - 1)) & ~banned
        undominated = full & ~dominated
        packing = 0
        blocked = 0
        m = undominated
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nb = closed[v]
            if not nb & avail:
                return None
            if not nb & blocked:
                packing += 1
                blocked |= nb
        if packing > remaining:
            return None
        w = start
        rest = avail
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            nb = banned | independent_adj[w] if independent_adj is not None else banned
            sub = rec(w + 1, dominated | closed[w], nb, remaining - 1)
            if sub is not None:
                return sub | (1 << w)
        return None

    return rec(0, 0, 0, size)


def gamma_exact(g: Graph) -> DominationReport:
    """Domination number with the lexicographically smallest witness."""
    if g.n == 0:
        return DominationReport(0, 0)
    value = gamma_value(g)
    witness = _lex_smallest_dominating(closed_masks(g), g.full_mask, g.n, value)
    assert witness is not None
    return DominationReport(value, witness)


def gamma_bruteforce(g: Graph) -> DominationReport:
    """Reference solver: test all vertex subsets in increasing size.

    Kept deliberately naive; it is the ground truth the optimized
    solver is checked against.  Sizes above BRUTEFORCE_MAX vertices are
    refused.
    """
    if g.n > BRUTEFORCE_MAX:
        raise GraphError(f"brute force is limited to {BRUTEFORCE_MAX} vertices")
    if g.n == 0:
        return DominationReport(0, 0)
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if is_dominating(g, s):
                return DominationReport(k, s)
    raise AssertionError("the full vertex set always dominates")


def all_minimum_dominating_sets(g: Graph) -> DominationReport:
    """Every minimum dominating set, in lexicographic order.

    Complete by construction: the search only prunes branches that
    cannot reach any set of the optimum size (not enough indices left,
    an undominated vertex with no remaining candidate dominator, or a
    disjoint-neighborhood packing larger than the remaining budget).
    """
    if g.n > ALL_SETS_MAX:
        raise GraphError(f"exhaustive set listing is limited to {ALL_SETS_MAX} vertices")
    if g.n == 0:
        return DominationReport(0, 0, (0,))
    closed = closed_masks(g)
    full = g.full_mask
    value = gamma_value(g)
    found: list[int] = []

    def rec(start: int, dominated: int, chosen: int, remaining: int) -> None:
        if remaining == 0:
            if dominated == full:
                found.append(chosen)
            return
        if g.n - start < remaining:
            return
        avail = full & ~((1 << start) - 1)
        undominated = full & ~dominated
        packing = 0
        blocked = 0
        m = undominated
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nb = closed[v]
            if not nb & avail:
                return
            if not nb & blocked:
                packing += 1
                blocked |= nb
        if packing > remaining:
            return
        for w in range(start, g.n):
            rec(w + 1, dominated | closed[w], chosen | (1 << w), remaining - 1)

    rec(0, 0, 0, value)
    return DominationReport(value, found[0], tuple(found))


def core_and_corona(g: Graph) -> tuple[int, int]:
    """Masks (intersection, union) over all minimum dominating sets.

    Streams the same complete search as all_minimum_dominating_sets but
    folds each witness into two accumulators, stopping early once the
    intersection is empty and the union is everything.
    """
    if g.n == 0:
        return (0, 0)
    closed = closed_masks(g)
    full = g.full_mask
    value = gamma_value(g)
    state = {"core": full, "corona": 0}

    def rec(start: int, dominated: int, chosen: int, remaining: int) -> bool:
        if remaining == 0:
            if dominated == full:
                state["core"] &= chosen
                state["corona"] |= chosen
                return state["core"] == 0 and state["corona"] == full
            return False
        if g.n - start < remaining:
            return False
        avail = full & ~((1 << start) - 1)
        undominated = full & ~dominated
        packing = 0
        blocked = 0
        m = undominated
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nb = closed[v]
            if not nb & avail:
                return False
            if not nb & blocked:
                packing += 1
                blocked |= nb
        if packing > remaining:
            return False
        for w in range(start, g.n):
            if rec(w + 1, dominated | closed[w], chosen | (1 << w), remaining - 1):
                return True
        return False

    rec(0, 0, 0, value)
    return (state["core"], state["corona"])


def independence_number(g: Graph) -> int:
    """Size of a largest independent set."""
    adj = g.adj

    def rec(candidates: int) -> int:
        best = 0
        while candidates:
            # degree-0 candidates always join the set
            low = candidates & -candidates
            v = low.bit_length() - 1
            if adj[v] & candidates:
                break
            best += 1
            candidates ^= low
        if not candidates:
            return best
        pivot = -1
        pivot_deg = -1
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & candidates).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = v
        bit = 1 << pivot
        with_pivot = 1 + rec(candidates & ~(adj[pivot] | bit))
        without_pivot = rec(candidates ^ bit)
        return best + max(with_pivot, without_pivot)

    return rec(g.full_mask)


def _exists_independent_dominating(
    g: Graph, closed: list[int], budget: int, dominated: int, allowed: int
) -> bool:
    full = g.full_mask
    undominated = full & ~dominated
    if not undominated:
        return True
    if budget <= 0:
        return False
    if _packing_bound(closed, undominated) > budget:
        return False
    low = undominated & -undominated
    v = low.bit_length() - 1
    candidates = closed[v] & allowed
    for w in bits(candidates):
        if _exists_independent_dominating(
            g, closed, budget - 1, dominated | closed[w], allowed & ~closed[w]
        ):
            return True
    return False


def independent_domination_number(g: Graph) -> DominationReport:
    """Minimum size of an independent dominating set, with witness.

    Always well defined: every maximal independent set dominates.  The
    pivot rule (dominate the lowest undominated vertex next) is complete
    because that vertex's dominator must be one of its closed neighbors
    and must stay independent from earlier picks.
    """
    if g.n == 0:
        return DominationReport(0, 0)
    closed = closed_masks(g)
    full = g.full_mask
    # greedy maximal independent set gives an upper bound
    greedy = 0
    free = full
    while free:
        low = free & -free
        v = low.bit_length() - 1
        greedy |= low
        free &= ~closed[v]
    upper = greedy.bit_count()
    lower = _packing_bound(closed, full)
    value = upper
    for k in range(lower, upper):
        if _exists_independent_dominating(g, closed, k, 0, full):
            value = k
            break
    witness = _lex_smallest_dominating(closed, full, g.n, value, independent_adj=g.adj)
    assert witness is not None
    return DominationReport(value, witness)


def _forest_components(g: Graph) -> list[list[int]] | None:
    """Rooted BFS orders per component, or None if g has a cycle."""
    if g.edge_count() != g.n - len(connected_components(g)):
        return None
    orders = []
    seen = 0
    for root in range(g.n):
        if (seen >> root) & 1:
            continue
        order = [root]
        seen |= 1 << root
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for u in bits(g.adj[v] & ~seen):
                seen |= 1 << u
                order.append(u)
        orders.append(order)
    return orders


def gamma_tree(g: Graph) -> DominationReport:
    """Linear-time domination number for forests via dynamic programming.

    Three states per vertex: in the set, out but covered from below, or
    out and waiting for its parent.  Rejects graphs with cycles.
    """
    orders = _forest_components(g)
    if orders is None:
        raise GraphError("gamma_tree requires a forest")
    if g.n == 0:
        return DominationReport(0, None)
    INF = g.n + 1
    total = 0
    in_cost = [0] * g.n
    covered = [0] * g.n
    needs = [0] * g.n
    for order in orders:
        parent = {order[0]: -1}
        for v in order:
            for u in bits(g.adj[v]):
                if u not in parent:
                    parent[u] = v
        for v in reversed(order):
            children = [u for u in bits(g.adj[v]) if parent.get(u) == v]
            best_in = 1
            sum_covered = 0
            extra = INF
            has_child = bool(children)
            for c in children:
                best_in += min(in_cost[c], covered[c], needs[c])
                base = min(in_cost[c], covered[c])
                sum_covered += base
                extra = min(extra, in_cost[c] - base)
            in_cost[v] = best_in
            needs[v] = sum_covered if has_child else 0
            covered[v] = sum_covered + extra if has_child else INF
        root = order[0]
        total += min(in_cost[root], covered[root])
    return DominationReport(total, None)
