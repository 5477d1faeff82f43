"""Independent brute-force oracles used to cross-check the package.

These deliberately avoid the package's solver machinery: small crossing
questions are settled by solving the 2-unknown rational linear systems
directly, distances by a dense grid scan, and entropy values by
high-precision summation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import mpmath

F0 = Fraction(0)
F1 = Fraction(1)


def point_on_open_segment(r, c, d):
    """lambda with r = lambda*c + (1-lambda)*d, 0 < lambda < 1, or None."""
    lam = None
    for ri, ci, di in zip(r, c, d):
        ri, ci, di = Fraction(ri), Fraction(ci), Fraction(di)
        if ci == di:
            if ri != ci:
                return None
        else:
            cand = (ri - di) / (ci - di)
            if lam is None:
                lam = cand
            elif lam != cand:
                return None
    if lam is None or not 0 < lam < 1:
        return None
    return lam


def segments_cross(a, b, c, d):
    """(lambda, mu) with lam*a+(1-lam)*b = mu*c+(1-mu)*d strictly inside
    both open segments, or None.  Solves the n x 2 rational system
    lam*(a-b) - mu*(c-d) = d - b by elimination, covering the unique,
    inconsistent and one-parameter cases exactly."""
    rows = []
    for ai, bi, ci, di in zip(a, b, c, d):
        rows.append((Fraction(ai - bi), Fraction(di - ci), Fraction(di - bi)))
    pivot1 = next((r for r in rows if r[0] != 0), None)
    if pivot1 is None:
        # no lambda dependence: a == b, degenerate input
        return None
    al, be, ga = pivot1
    reduced = []
    for r in rows:
        if r is pivot1:
            continue
        f = r[0] / al
        reduced.append((r[1] - f * be, r[2] - f * ga))
    pivot2 = next((r for r in reduced if r[0] != 0), None)
    if pivot2 is None:
        # rank 1 in (lambda, mu): consistent iff all reduced rhs vanish
        if any(rhs != 0 for _, rhs in reduced):
            return None
        # lambda = (ga - be*mu)/al; intersect 0<lambda<1 with 0<mu<1
        lo, hi = F0, F1
        # solve 0 < (ga - be*mu)/al < 1 as an interval in mu
        if be == 0:
            lam = ga / al
            if not 0 < lam < 1:
                return None
            mu = Fraction(1, 2)
            return lam, mu
        b1 = ga / be            # lambda = 0 boundary
        b2 = (ga - al) / be     # lambda = 1 boundary
        lo2, hi2 = min(b1, b2), max(b1, b2)
        lo, hi = max(lo, lo2), min(hi, hi2)
        if lo >= hi:
            return None
        mu = (lo + hi) / 2
        lam = (ga - be * mu) / al
        if 0 < lam < 1 and 0 < mu < 1:
            return lam, mu
        return None
    mu = pivot2[1] / pivot2[0]
    lam = (ga - be * mu) / al
    for ai, bi, ci, di in zip(a, b, c, d):
        if lam * ai + (1 - lam) * bi != mu * ci + (1 - mu) * di:
            return None
    if 0 < lam < 1 and 0 < mu < 1:
        return lam, mu
    return None


def open_polytopes_cross_small(A, B):
    """Crossing verdict for subset pairs of size at most 2, by direct solve."""
    A, B = list(A), list(B)
    if len(A) > len(B):
        A, B = B, A
    if len(A) == 1 and len(B) == 1:
        return tuple(A[0]) == tuple(B[0])
    if len(A) == 1 and len(B) == 2:
        return point_on_open_segment(A[0], B[0], B[1]) is not None
    return segments_cross(A[0], A[1], B[0], B[1]) is not None


def point_in_open_small(r, S):
    """Membership verdict for |S| <= 2 by direct solve."""
    S = list(S)
    if len(S) == 1:
        return tuple(Fraction(x) for x in r) == tuple(Fraction(x) for x in S[0])
    return point_on_open_segment(r, S[0], S[1]) is not None


def hull_distance_grid(A, B, steps: int = 24) -> float:
    """Upper bound on hull distance from a dense grid of convex combos."""
    def grid_points(S):
        m = len(S)
        n = len(S[0])
        if m == 1:
            return [tuple(float(x) for x in S[0])]
        pts = []
        fracs = [k / steps for k in range(steps + 1)]
        if m == 2:
            for lam in fracs:
                pts.append(tuple(lam * S[0][i] + (1 - lam) * S[1][i]
                                 for i in range(n)))
        else:
            for ws in product(fracs, repeat=m - 1):
                rest = 1.0 - sum(ws)
                if rest < 0:
                    continue
                weights = list(ws) + [rest]
                pts.append(tuple(sum(weights[j] * S[j][i] for j in range(m))
                                 for i in range(n)))
        return pts

    pa, pb = grid_points(list(A)), grid_points(list(B))
    best = float("inf")
    for x in pa:
        for y in pb:
            d = sum((xi - yi) ** 2 for xi, yi in zip(x, y)) ** 0.5
            best = min(best, d)
    return best


def binomial_entropy_highprec(t: int) -> float:
    """H_t by 50-digit summation, independent of the float formula."""
    with mpmath.workdps(50):
        total = mpmath.mpf(0)
        for k in range(t + 1):
            p = mpmath.binomial(t, k) / mpmath.power(2, t)
            total -= p * mpmath.log(p, 2)
        return float(total)


def multiset_sums_all_distinct(code_words, t: int) -> bool:
    """Sort-based duplicate scan over all size-t multiset sums."""
    from itertools import combinations_with_replacement
    sums = sorted(
        tuple(sum(w[i] for w in multi) for i in range(len(code_words[0])))
        for multi in combinations_with_replacement(code_words, t))
    return all(sums[i] != sums[i + 1] for i in range(len(sums) - 1))


def weakly_union_free_bruteforce(blocks) -> bool:
    """Quantifier-literal scan over ordered 4-tuples of distinct blocks."""
    m = len(blocks)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    if len({i, j, k, l}) != 4:
                        continue
                    if blocks[i] | blocks[j] == blocks[k] | blocks[l]:
                        return False
    return True


def has_four_cycle_bruteforce(n: int, edges) -> bool:
    """C4 detection by scanning all quadruples of vertices."""
    eset = {frozenset(e) for e in edges}
    from itertools import combinations, permutations
    for quad in combinations(range(1, n + 1), 4):
        for perm in permutations(quad):
            a, b, c, d = perm
            if (frozenset((a, b)) in eset and frozenset((b, c)) in eset
                    and frozenset((c, d)) in eset and frozenset((d, a)) in eset):
                return True
    return False
