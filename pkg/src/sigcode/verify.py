"""Property checkers for signature codes and their combinatorial relatives.

Every checker returns a VerificationReport whose witness, on failure, can
be re-verified by direct substitution: a polytope crossing carries exact
weights, a sum collision carries the two multisets, a graph cycle carries
its edges, and so on.  Pair enumeration is canonical (subsets ordered by
size then lexicographically, each unordered pair visited once) so the
first witness is deterministic.

``check_signature`` is definition-level: it scans all pairs of distinct
subsets of size up to t with the exact LP.  For t = 2 it normally
delegates to equivalent combinatorial fast paths (sum-distinctness in
general, 4-cycle-freeness for constant weight 2, pair-link intersection
for constant weight 3); pass ``fast_paths=False`` to force the LP scan.
Subset pairs where one side contains the other are never skipped: with
affinely dependent codewords such pairs can still cross.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .core import (
    BinaryCode,
    CodeError,
    CoalitionCertificate,
    GroupedCode,
    QaryCode,
    VerificationReport,
    format_rational,
    hamming_weight,
    puncture,
    support,
)
from .geometry import (
    hull_distance,
    min_distance_squared_exact,
    relative_interiors_intersect,
)

_F0 = Fraction(0)


@dataclass(frozen=True)
class SetFamily:
    """Distinct subsets of a ground set [n], given as 1-based index sets."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks",
                           tuple(frozenset(int(x) for x in b) for b in self.blocks))
        for b in self.blocks:
            if any(not 1 <= x <= self.n for x in b):
                raise CodeError("block element out of ground-set range")
        if len(set(self.blocks)) != len(self.blocks):
            raise CodeError("duplicate block")


def family_of(code: BinaryCode) -> SetFamily:
    return SetFamily(code.n, tuple(frozenset(support(c)) for c in code.codewords))


def subsets_up_to(size: int, t: int):
    """All nonempty 1-based index subsets of [size] with at most t elements,
    in (cardinality, lexicographic) order."""
    for k in range(1, t + 1):
        yield from combinations(range(1, size + 1), k)


def subset_pairs(size: int, t: int):
    """Unordered pairs of distinct subsets, canonically ordered."""
    subs = list(subsets_up_to(size, t))
    for i in range(len(subs)):
        for j in range(i + 1, len(subs)):
            yield subs[i], subs[j]


def _cert_with_indices(cert: CoalitionCertificate, subset) -> CoalitionCertificate:
    """Translate solver positions (1-based within the subset) to codeword ids."""
    return CoalitionCertificate(
        tuple(subset[pos - 1] for pos in cert.indices), cert.weights)


def _crossing_witness(subset_a, subset_b, witness) -> dict:
    return {
        "kind": "polytope-crossing",
        "left": _cert_with_indices(witness.left, subset_a).to_json_dict(),
        "right": _cert_with_indices(witness.right, subset_b).to_json_dict(),
        "point": [format_rational(x) for x in witness.point],
    }


# ---------------------------------------------------------------------------
# signature property


def check_signature(code: BinaryCode, t: int, fast_paths: bool = True,
                    exhaustive: bool = False) -> VerificationReport:
    """Is the code a t-signature code?

    Pass means no two distinct subsets of size at most t admit a common
    strictly positive convex combination.  Fail carries the first
    crossing found (or, on a fast path, the equivalent combinatorial
    witness).  ``exhaustive`` scans the full census and reports the
    lexicographically smallest witness plus a violation count.
    """
    if t < 2:
        raise CodeError("signature parameter t must be at least 2")
    if fast_paths and t == 2:
        weights = {hamming_weight(c) for c in code.codewords}
        if weights == {2}:
            rep = check_weight2_graph(code)
            rep.property_name = "signature"
            rep.details.update(t=2, method="c4-free-graph")
            return rep
        if weights == {3}:
            rep = check_weight3_links(code)
            rep.property_name = "signature"
            rep.details.update(t=2, method="pair-links")
            return rep
        rep = check_bt(code, 2)
        rep.property_name = "signature"
        rep.details.update(t=2, method="sum-collision")
        return rep
    first = None
    violations = 0
    for sa, sb in subset_pairs(code.size, t):
        w = relative_interiors_intersect(
            [code.word(j) for j in sa], [code.word(j) for j in sb])
        if w is not None:
            violations += 1
            if first is None:
                first = _crossing_witness(sa, sb, w)
            if not exhaustive:
                break
    details = {"t": t, "method": "lp"}
    if exhaustive:
        details["violations"] = violations
    if first is not None:
        return VerificationReport("signature", False, first, details)
    return VerificationReport("signature", True, None, details)


def check_bt(code: BinaryCode, t: int, exhaustive: bool = False) -> VerificationReport:
    """Are all size-t multiset sums of codewords distinct?

    Multisets are enumerated with repetition; a collision of two multisets
    with different content is returned as the witness.
    """
    if t < 2:
        raise CodeError("sum-distinctness parameter t must be at least 2")
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    first = None
    violations = 0
    for multi in combinations_with_replacement(range(1, code.size + 1), t):
        s = [0] * code.n
        for j in multi:
            c = code.word(j)
            for i in range(code.n):
                s[i] += c[i]
        key = tuple(s)
        if key in seen:
            violations += 1
            if first is None:
                first = {
                    "kind": "sum-collision",
                    "multiset_a": list(seen[key]),
                    "multiset_b": list(multi),
                    "sum": list(key),
                }
            if not exhaustive:
                break
        else:
            seen[key] = multi
    details = {"t": t}
    if exhaustive:
        details["violations"] = violations
    if first is not None:
        return VerificationReport("bt", False, first, details)
    return VerificationReport("bt", True, None, details)


# ---------------------------------------------------------------------------
# frameproof / superimposed ingredients


def check_fpc(code: QaryCode | BinaryCode, t: int) -> VerificationReport:
    """Frameproof: no coalition of size <= t can frame an outsider.

    For every subset and every codeword outside it, some coordinate of
    the outsider must lie outside the subset's symbol set there.
    """
    if t < 2:
        raise CodeError("frameproof parameter t must be at least 2")
    words = code.codewords
    for subset in subsets_up_to(code.size, t):
        cols = [set() for _ in range(code.n)]
        for j in subset:
            for i, x in enumerate(words[j - 1]):
                cols[i].add(x)
        inside = set(subset)
        for j in range(1, code.size + 1):
            if j in inside:
                continue
            c = words[j - 1]
            if all(c[i] in cols[i] for i in range(code.n)):
                witness = {
                    "kind": "framed-outsider",
                    "coalition": list(subset),
                    "outsider": j,
                }
                return VerificationReport("fpc", False, witness, {"t": t})
    return VerificationReport("fpc", True, None, {"t": t})


def check_superimposed(code: BinaryCode, t: int) -> VerificationReport:
    """Superimposed: some coordinate isolates every outsider with a 1
    against an all-zero coalition column.  A code containing the zero
    vector can never pass (the zero outsider has no witnessing column).
    """
    if t < 2:
        raise CodeError("superimposed parameter t must be at least 2")
    for j, c in enumerate(code.codewords, start=1):
        if not any(c):
            witness = {"kind": "zero-codeword", "outsider": j}
            return VerificationReport("superimposed", False, witness, {"t": t})
    for subset in subsets_up_to(code.size, t):
        union = [0] * code.n
        for j in subset:
            c = code.word(j)
            for i in range(code.n):
                union[i] |= c[i]
        inside = set(subset)
        for j in range(1, code.size + 1):
            if j in inside:
                continue
            c = code.word(j)
            if not any(c[i] == 1 and union[i] == 0 for i in range(code.n)):
                witness = {
                    "kind": "covered-outsider",
                    "coalition": list(subset),
                    "outsider": j,
                }
                return VerificationReport("superimposed", False, witness, {"t": t})
    return VerificationReport("superimposed", True, None, {"t": t})


# ---------------------------------------------------------------------------
# constant-weight fast paths


def check_weight2_graph(code: BinaryCode) -> VerificationReport:
    """Constant-weight-2 code as a graph on [n]: pass iff 4-cycle-free.

    A 4-cycle is exactly a vertex pair with two common neighbors; the
    witness lists the cycle and the sum collision it induces.
    """
    edges = {}
    adj: dict[int, set[int]] = {}
    for j, c in enumerate(code.codewords, start=1):
        s = sorted(support(c))
        if len(s) != 2:
            raise CodeError("4-cycle check requires constant weight 2")
        u, v = s
        edges[(u, v)] = j
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    verts = sorted(adj)
    for a, b in combinations(verts, 2):
        common = sorted(adj[a] & adj[b])
        if len(common) >= 2:
            w1, w2 = common[:2]
            cyc = [a, w1, b, w2]
            def eidx(x, y):
                return edges[(min(x, y), max(x, y))]
            witness = {
                "kind": "four-cycle",
                "cycle": cyc,
                "codewords": [eidx(a, w1), eidx(w1, b), eidx(b, w2), eidx(w2, a)],
            }
            return VerificationReport("weight2-c4free", False, witness, {})
    return VerificationReport("weight2-c4free", True, None, {})


def check_weight3_links(code: BinaryCode) -> VerificationReport:
    """Constant-weight-3 code as a triple system: pass iff the link sets
    of any two distinct pairs intersect in at most one point.

    The link of a pair A is {z : A + {z} is a block}.  Two pairs sharing
    two link points yield four distinct blocks forming a sum collision,
    which is the returned witness.
    """
    fam = {}
    for j, c in enumerate(code.codewords, start=1):
        s = frozenset(support(c))
        if len(s) != 3:
            raise CodeError("pair-link check requires constant weight 3")
        fam[s] = j
    links: dict[frozenset[int], list[int]] = {}
    for block in fam:
        for pair in combinations(sorted(block), 2):
            z = next(iter(block - set(pair)))
            links.setdefault(frozenset(pair), []).append(z)
    seen_zpairs: dict[tuple[frozenset[int], frozenset[int]], frozenset[int]] = {}
    for pair, zs in sorted(links.items(), key=lambda kv: sorted(kv[0])):
        for z1, z2 in combinations(sorted(zs), 2):
            zkey = frozenset((z1, z2))
            if zkey in seen_zpairs:
                other = seen_zpairs[zkey]
                blocks = [other | {z1}, other | {z2}, pair | {z1}, pair | {z2}]
                witness = {
                    "kind": "link-collision",
                    "pairs": [sorted(other), sorted(pair)],
                    "link_points": sorted((z1, z2)),
                    "codewords": [fam[frozenset(b)] for b in blocks],
                }
                return VerificationReport("weight3-links", False, witness, {})
            seen_zpairs[zkey] = pair
    return VerificationReport("weight3-links", True, None, {})


def check_weakly_union_free(family: SetFamily) -> VerificationReport:
    """No two pairs of blocks sharing no block may have equal unions."""
    unions: dict[frozenset[int], list[tuple[int, int]]] = {}
    blocks = family.blocks
    for a, b in combinations(range(len(blocks)), 2):
        u = blocks[a] | blocks[b]
        for (c, d) in unions.get(u, ()):
            if len({a, b, c, d}) == 4:
                witness = {
                    "kind": "union-collision",
                    "pair_a": [sorted(blocks[c]), sorted(blocks[d])],
                    "pair_b": [sorted(blocks[a]), sorted(blocks[b])],
                    "blocks": [c + 1, d + 1, a + 1, b + 1],
                    "union": sorted(u),
                }
                return VerificationReport("weakly-union-free", False, witness, {})
        unions.setdefault(u, []).append((a, b))
    return VerificationReport("weakly-union-free", True, None, {})


# ---------------------------------------------------------------------------
# two-level, noisy-model, and girth checks


def check_two_level(grouped: GroupedCode, t1: int, t2: int) -> VerificationReport:
    """Two-level signature property: full identification up to t2 and
    group-level identification up to t1 (requires t1 > t2 >= 1)."""
    if not t1 > t2 >= 1:
        raise CodeError("two-level parameters require t1 > t2 >= 1")
    code = grouped.code
    if t2 >= 2:
        inner = check_signature(code, t2)
        if not inner.passed:
            inner.property_name = "two-level"
            inner.details.update(level="full", t1=t1, t2=t2)
            return inner
    for sa, sb in subset_pairs(code.size, t1):
        if grouped.group_index_set(sa) == grouped.group_index_set(sb):
            continue
        w = relative_interiors_intersect(
            [code.word(j) for j in sa], [code.word(j) for j in sb])
        if w is not None:
            witness = _crossing_witness(sa, sb, w)
            witness["groups"] = [sorted(grouped.group_index_set(sa)),
                                 sorted(grouped.group_index_set(sb))]
            return VerificationReport(
                "two-level", False, witness, {"level": "group", "t1": t1, "t2": t2})
    return VerificationReport("two-level", True, None, {"t1": t1, "t2": t2})


def check_frameproof_signature(code: BinaryCode, t: int, delta: Fraction,
                               tol: float = 1e-9) -> VerificationReport:
    """Disjoint coalitions of size <= t must keep hull distance >= 2*delta.

    Only DISJOINT subset pairs are evaluated; overlapping pairs are at
    distance 0 by definition and excluded from the requirement.  Verdicts
    within 2*tol of the threshold escalate to an exact rational distance;
    an exact tie d = 2*delta counts as a pass.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise CodeError("noise radius delta must be positive")
    if tol <= 0:
        raise CodeError("tolerance must be positive")
    threshold = 2 * delta
    thr = float(threshold)
    worst = None
    for sa, sb in subset_pairs(code.size, t):
        if set(sa) & set(sb):
            continue
        left = [code.word(j) for j in sa]
        right = [code.word(j) for j in sb]
        d = hull_distance(left, right, tol)
        decided = None
        exact_sq = None
        if d.converged and d.lower > thr + 2 * tol:
            decided = True
        elif d.converged and d.upper < thr - 2 * tol:
            decided = False
        else:
            try:
                exact_sq = min_distance_squared_exact(left, right)
                decided = exact_sq >= threshold * threshold
            except CodeError:
                decided = None
        if decided is None:
            witness = {
                "kind": "distance-inconclusive",
                "pair": [list(sa), list(sb)],
                "bracket": [d.lower, d.upper],
                "threshold": float(thr),
            }
            return VerificationReport(
                "frameproof-signature", None, witness,
                {"t": t, "delta": format_rational(delta)})
        if not decided:
            witness = {
                "kind": "distance-violation",
                "pair": [list(sa), list(sb)],
                "distance_bracket": [d.lower, d.upper],
                "threshold": float(thr),
            }
            if exact_sq is not None:
                witness["exact_distance_squared"] = format_rational(exact_sq)
            return VerificationReport(
                "frameproof-signature", False, witness,
                {"t": t, "delta": format_rational(delta)})
        if worst is None or d.upper < worst:
            worst = d.upper
    details = {"t": t, "delta": format_rational(delta)}
    if worst is not None:
        details["min_disjoint_distance"] = worst
    return VerificationReport("frameproof-signature", True, None, details)


def check_complete_traceability(code: BinaryCode, t: int, delta: Fraction,
                                tol: float = 1e-9) -> VerificationReport:
    """Noisy complete traceability over ALL distinct subset pairs.

    Demonstrator only: any pair of overlapping distinct subsets has hull
    distance 0 < 2*delta, so no binary code with at least two codewords
    can satisfy this.  The report carries such a pair as witness.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise CodeError("noise radius delta must be positive")
    if code.size >= 2 and t >= 2:
        sa, sb = (1,), (1, 2)
        witness = {
            "kind": "overlapping-pair",
            "pair": [list(sa), list(sb)],
            "distance": 0.0,
            "threshold": float(2 * delta),
        }
        return VerificationReport(
            "complete-traceability", False, witness,
            {"t": t, "delta": format_rational(delta)})
    rep = check_frameproof_signature(code, t, delta, tol)
    rep.property_name = "complete-traceability"
    return rep


def _bipartite_graph(code: BinaryCode, left_coords):
    left_coords = sorted(set(int(i) for i in left_coords))
    right_coords = [i for i in range(1, code.n + 1) if i not in left_coords]
    if not left_coords or not right_coords:
        raise CodeError("split must leave both sides nonempty")
    lefts = puncture(code, left_coords)
    rights = puncture(code, right_coords)
    edges = []
    for j in range(code.size):
        edges.append((("L", lefts[j]), ("R", rights[j])))
    return edges, left_coords, right_coords


def _shortest_cycle(edges):
    """Shortest cycle (as a list of edge indices) in a simple graph, or None.

    BFS from each edge endpoint with that edge removed; the shortest
    reconnecting path closes the shortest cycle through the edge.
    """
    adj: dict = {}
    for idx, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append((v, idx))
        adj.setdefault(v, []).append((u, idx))
    best = None
    for eidx, (u, v) in enumerate(edges):
        dist = {u: 0}
        back = {u: None}
        frontier = [u]
        found = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y, through in adj[x]:
                    if through == eidx:
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        back[y] = (x, through)
                        if y == v:
                            found = y
                            break
                        nxt.append(y)
                if found:
                    break
            frontier = nxt
        if found is None:
            continue
        path = []
        node = v
        while back[node] is not None:
            prev, through = back[node]
            path.append(through)
            node = prev
        cycle = path[::-1] + [eidx]
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


def check_bipartite_girth(code: BinaryCode, t: int, split) -> VerificationReport:
    """Necessary condition: the bipartite graph of punctured halves must
    have girth at least 2t + 2.

    ``split`` is either (n1, n2) for a prefix split or an iterable of
    1-based coordinates forming the left side.  This is necessary for the
    signature property, not sufficient; the report is labeled accordingly.
    """
    if t < 2:
        raise CodeError("girth parameter t must be at least 2")
    if (isinstance(split, tuple) and len(split) == 2
            and all(isinstance(x, int) for x in split)
            and split[0] + split[1] == code.n):
        n1 = split[0]
        if n1 < 1 or split[1] < 1:
            raise CodeError("both split parts must be nonempty")
        left_coords = list(range(1, n1 + 1))
    else:
        left_coords = list(split)
    edges, lc, rc = _bipartite_graph(code, left_coords)
    cycle = _shortest_cycle(edges)
    girth = len(cycle) if cycle else None
    details = {"t": t, "kind": "necessary-condition",
               "left_coords": lc, "right_coords": rc,
               "girth": girth}
    if cycle is not None and girth < 2 * t + 2:
        witness = {
            "kind": "short-cycle",
            "length": girth,
            "codewords": [i + 1 for i in cycle],
        }
        return VerificationReport("bipartite-girth", False, witness, details)
    return VerificationReport("bipartite-girth", True, None, details)
