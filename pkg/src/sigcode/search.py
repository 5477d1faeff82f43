"""Exhaustive search for maximum signature codes.

Candidates are enumerated as integers whose bits spell the codeword with
coordinate 1 as the most significant bit, so integer order is exactly
lexicographic order on codewords.  The DFS extends a partial code only
with strictly larger candidates, which enumerates every code set exactly
once (column-permutation symmetry is broken for free).  Acceptance of a
candidate is checked incrementally: for t = 2 through the sum-collision
hash (carry-free base-4 packing makes a multiset sum a single integer
add), for larger t through the exact LP restricted to subset pairs that
involve the new codeword.

Optional symmetry flags, both provably exhaustive-safe:

* ``perm_canonical`` restricts the FIRST codeword to bottom-justified
  form (ones in the last coordinates).  Any code can be coordinate-
  permuted so its minimum codeword is bottom-justified, and that
  permutation keeps it minimal: a codeword whose support lies strictly
  inside the minimum's support would already have been the smaller
  integer, and every other image carries a one outside the low block and
  is therefore larger.
* ``complement`` restricts the first codeword below 2^(n-1).  Flipping
  every bit of every codeword preserves the signature property and maps
  min(C) to 2^n - 1 - max(C), so at least one of C and its flip starts
  below 2^(n-1).  Flipping first and then permuting keeps both
  restrictions satisfied at once, so the flags compose.  The flip does
  not preserve constant weight, so the flag is rejected for weight-w
  searches unless 2w = n.

A search that explores its whole (pruned) tree certifies optimality; a
budgeted search that runs out of time reports best-so-far with
``completed=False``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .core import BinaryCode, CodeError
from .geometry import relative_interiors_intersect
from .verify import check_bipartite_girth, subsets_up_to


@dataclass
class SearchConfig:
    n: int
    t: int = 2
    weight: int | None = None
    perm_canonical: bool = True
    complement: bool = False
    girth_filter: bool = False
    budget: float | None = None
    threads: int = 1

    def __post_init__(self):
        if self.n < 1 or self.t < 2:
            raise CodeError("need n >= 1 and t >= 2")
        if self.weight is not None and not 0 <= self.weight <= self.n:
            raise CodeError("weight must lie in [0, n]")
        if self.complement and self.weight is not None and 2 * self.weight != self.n:
            raise CodeError("complement symmetry does not preserve weight "
                            f"{self.weight} at length {self.n}")


@dataclass
class SearchResult:
    max_size: int
    witness: BinaryCode
    nodes_explored: int
    completed: bool

    def to_json_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "witness": self.witness.to_json_dict()["codewords"],
            "n": self.witness.n,
            "nodes_explored": self.nodes_explored,
            "completed": self.completed,
        }


def _to_tuple(value: int, n: int) -> tuple[int, ...]:
    return tuple((value >> (n - 1 - i)) & 1 for i in range(n))


def _spread(value: int, n: int) -> int:
    """Pack bits into base-4 digits so sums of two codewords never carry."""
    out = 0
    for i in range(n):
        if (value >> i) & 1:
            out += 1 << (2 * i)
    return out


def _candidate_pool(config: SearchConfig) -> list[int]:
    values = range(2 ** config.n)
    if config.weight is None:
        return list(values)
    return [v for v in values if bin(v).count("1") == config.weight]


def _first_allowed(config: SearchConfig, value: int) -> bool:
    if config.complement and value >= 2 ** (config.n - 1):
        return False
    if config.perm_canonical:
        w = bin(value).count("1")
        if value != (1 << w) - 1:
            return False
    return True


class _Budget:
    def __init__(self, seconds):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.exceeded = False

    def check(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.exceeded = True
        return self.exceeded


def _lp_extension_ok(words: list[tuple[int, ...]], t: int) -> bool:
    """All subset pairs that involve the newly appended codeword must
    keep disjoint relative interiors."""
    m = len(words)
    x = m  # 1-based index of the new word
    old = list(subsets_up_to(m - 1, t))
    with_x = [s + (x,) for s in subsets_up_to(m - 1, t - 1)] + [(x,)]
    with_x = [s for s in with_x if len(s) <= t]
    for a in with_x:
        va = [words[j - 1] for j in a]
        for b in old:
            if relative_interiors_intersect(va, [words[j - 1] for j in b]):
                return False
    for a, b in combinations(with_x, 2):
        if relative_interiors_intersect([words[j - 1] for j in a],
                                        [words[j - 1] for j in b]):
            return False
    return True


def _girth_ok(words: list[tuple[int, ...]], t: int, n: int) -> bool:
    split = (max(1, n // 2), n - max(1, n // 2))
    if min(split) < 1:
        return True
    return check_bipartite_girth(BinaryCode(n, words), t, split).passed


def max_code(config: SearchConfig) -> SearchResult:
    """Depth-first exhaustive search for a maximum t-signature code."""
    n, t = config.n, config.t
    pool = _candidate_pool(config)
    spread = {v: _spread(v, n) for v in pool}
    budget = _Budget(config.budget)
    state = {"best": 0, "witness": None, "nodes": 0}

    def extend(chosen: list[int], sums: set[int], start: int):
        if budget.exceeded:
            return
        state["nodes"] += 1
        if state["nodes"] % 4096 == 0 and budget.check():
            return
        if len(chosen) > state["best"]:
            state["best"] = len(chosen)
            state["witness"] = list(chosen)
        for idx in range(start, len(pool)):
            if len(chosen) + (len(pool) - idx) <= state["best"]:
                break
            v = pool[idx]
            if not chosen and not _first_allowed(config, v):
                continue
            if t == 2:
                sv = spread[v]
                new_sums = [sv + spread[u] for u in chosen] + [2 * sv]
                if any(s in sums for s in new_sums):
                    continue
                if config.girth_filter and not _girth_ok(
                        [_to_tuple(u, n) for u in chosen + [v]], t, n):
                    continue
                sums.update(new_sums)
                extend(chosen + [v], sums, idx + 1)
                sums.difference_update(new_sums)
            else:
                words = [_to_tuple(u, n) for u in chosen + [v]]
                if config.girth_filter and not _girth_ok(words, t, n):
                    continue
                if not _lp_extension_ok(words, t):
                    continue
                extend(chosen + [v], sums, idx + 1)

    if config.threads > 1:
        _parallel_roots(config, pool, state, budget)
    else:
        extend([], set(), 0)
    witness_vals = state["witness"] or [pool[0]]
    witness = BinaryCode(n, [_to_tuple(v, n) for v in sorted(witness_vals)])
    return SearchResult(state["best"], witness, state["nodes"], not budget.exceeded)


def _parallel_roots(config, pool, state, budget):
    """Split the search by first codeword across worker processes.

    Branches are disjoint (every code belongs to the branch of its
    smallest codeword), so the maximum over branches is the global
    maximum, and taking the earliest branch that attains it keeps the
    reported witness identical to the sequential lex-first witness.
    Best-size bounds are not shared across processes.
    """
    import multiprocessing as mp

    roots = [i for i, v in enumerate(pool) if _first_allowed(config, v)]
    args = [(config, i) for i in roots]
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=config.threads) as pool_proc:
        results = pool_proc.map(_search_branch, args)
    for res in results:
        state["nodes"] += res["nodes"]
        if res["best"] > state["best"]:
            state["best"] = res["best"]
            state["witness"] = res["witness"]
        if res["budget_exceeded"]:
            budget.exceeded = True


def _search_branch(args) -> dict:
    config, root_idx = args
    sub = SearchConfig(config.n, config.t, config.weight,
                       perm_canonical=False, complement=False,
                       girth_filter=config.girth_filter,
                       budget=config.budget, threads=1)
    pool = _candidate_pool(sub)
    n, t = sub.n, sub.t
    spread = {v: _spread(v, n) for v in pool}
    budget = _Budget(sub.budget)
    state = {"best": 0, "witness": None, "nodes": 0}

    def extend(chosen, sums, start):
        if budget.exceeded:
            return
        state["nodes"] += 1
        if state["nodes"] % 4096 == 0 and budget.check():
            return
        if len(chosen) > state["best"]:
            state["best"] = len(chosen)
            state["witness"] = list(chosen)
        for idx in range(start, len(pool)):
            if len(chosen) + (len(pool) - idx) <= state["best"]:
                break
            v = pool[idx]
            if t == 2:
                sv = spread[v]
                new_sums = [sv + spread[u] for u in chosen] + [2 * sv]
                if any(s in sums for s in new_sums):
                    continue
                if sub.girth_filter and not _girth_ok(
                        [_to_tuple(u, n) for u in chosen + [v]], t, n):
                    continue
                sums.update(new_sums)
                extend(chosen + [v], sums, idx + 1)
                sums.difference_update(new_sums)
            else:
                words = [_to_tuple(u, n) for u in chosen + [v]]
                if sub.girth_filter and not _girth_ok(words, t, n):
                    continue
                if not _lp_extension_ok(words, t):
                    continue
                extend(chosen + [v], sums, idx + 1)

    v0 = pool[root_idx]
    sums0 = {2 * spread[v0]}
    extend([v0], sums0, root_idx + 1)
    return {"best": state["best"], "witness": state["witness"],
            "nodes": state["nodes"], "budget_exceeded": budget.exceeded}


# ---------------------------------------------------------------------------
# specialized constant-weight-2 search: maximum C4-free graph


def max_weight2_via_graph(n: int, budget: float | None = None) -> SearchResult:
    """Maximum 4-cycle-free graph on n vertices, as a weight-2 code.

    Edge-addition DFS in lexicographic edge order.  The C4-free invariant
    is maintained through pair coverage: a graph is C4-free iff every
    vertex pair has at most one common neighbor, so each covered pair is
    recorded and an edge whose insertion would cover an already covered
    pair is rejected.  The remaining-candidate count gives the pruning
    bound (coverage only grows along a branch, so an edge infeasible now
    stays infeasible).
    """
    if n < 2:
        raise CodeError("need n >= 2 vertices")
    edges = list(combinations(range(n), 2))
    adj = [0] * n
    covered = [[False] * n for _ in range(n)]
    budget_ = _Budget(budget)
    state = {"best": 0, "witness": None, "nodes": 0}

    def newly_covered(u, v):
        pairs = []
        au, av = adj[u], adj[v]
        for w in range(n):
            if (au >> w) & 1 and w != v:
                a, b = min(w, v), max(w, v)
                if covered[a][b]:
                    return None
                pairs.append((a, b))
            if (av >> w) & 1 and w != u:
                a, b = min(w, u), max(w, u)
                if covered[a][b]:
                    return None
                pairs.append((a, b))
        if len(set(pairs)) != len(pairs):
            return None
        return pairs

    def extend(chosen: list[int], start: int):
        if budget_.exceeded:
            return
        state["nodes"] += 1
        if state["nodes"] % 4096 == 0 and budget_.check():
            return
        if len(chosen) > state["best"]:
            state["best"] = len(chosen)
            state["witness"] = list(chosen)
        addable = []
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if newly_covered(u, v) is not None:
                addable.append(idx)
        if len(chosen) + len(addable) <= state["best"]:
            return
        for pos, idx in enumerate(addable):
            if len(chosen) + (len(addable) - pos) <= state["best"]:
                break
            u, v = edges[idx]
            pairs = newly_covered(u, v)
            if pairs is None:
                continue
            for a, b in pairs:
                covered[a][b] = True
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            extend(chosen + [idx], idx + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            for a, b in pairs:
                covered[a][b] = False

    extend([], 0)
    chosen = state["witness"] or []
    words = []
    for idx in sorted(chosen):
        u, v = edges[idx]
        w = [0] * n
        w[u] = 1
        w[v] = 1
        words.append(tuple(w))
    if not words:
        w = [0] * n
        w[0] = 1
        w[1] = 1
        words = [tuple(w)]
        state["best"] = 1
    witness = BinaryCode(n, words)
    return SearchResult(state["best"], witness, state["nodes"], not budget_.exceeded)
