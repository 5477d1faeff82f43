"""Exact rational geometry for open 0/1-polytopes.

The open polytope of a point set S is the set of strictly positive convex
combinations of S, i.e. the relative interior of conv(S).  Two such
polytopes cross iff the linear program

    maximize  s
    s.t.      sum_j lam_j c_j = sum_k mu_k c'_k
              sum_j lam_j = 1,  sum_k mu_k = 1
              lam_j >= s,  mu_k >= s,  0 <= s <= 1

has optimum s* > 0.  Substituting lam_j = u_j + s, mu_k = v_k + s with
u, v >= 0 turns this into a standard-form LP which is solved by a
two-phase primal simplex over exact Fractions with Bland's anti-cycling
rule, so termination is guaranteed and the sign test on s* is exact.
The same LP with the optimum pinned at s = 0 is a feasibility test for
the CLOSED hulls, which is how hull_distance decides exact zero.

s* = 0 means the closures touch while the relative interiors stay
disjoint; that is NOT a crossing.  Membership of a fixed point in an open
polytope is the one-sided variant of the same program.

A cheap presolve removes pairs that cannot cross: along each coordinate
the open polytope projects to {0}, {1}, or the open interval (0,1)
depending on whether the column is all-zero, all-one, or mixed, and these
projections must agree side by side.  The presolve can be disabled to
exercise the bare simplex.

hull_distance is the one deliberately floating-point computation in the
package (it feeds an inequality against a noise radius, not an exact
verdict); min_distance_squared_exact provides the exact-rational
escalation used when a verdict sits near its threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import CoalitionCertificate, CodeError, RationalVector

_F0 = Fraction(0)
_F1 = Fraction(1)


class PivotLimitExceeded(RuntimeError):
    """Simplex pivot count exceeded the configured cap."""


@dataclass(frozen=True)
class IntersectionWitness:
    """A common point of two open polytopes, with exact weights.

    The certificates index into the vector lists handed to the solver
    (1-based positions); callers translate positions into codeword indices.
    """

    left: CoalitionCertificate
    right: CoalitionCertificate
    point: RationalVector

    def recheck(self, left_vectors, right_vectors) -> bool:
        """Re-verify the witness by direct substitution."""
        for cert, vecs in ((self.left, left_vectors), (self.right, right_vectors)):
            n = len(vecs[0])
            acc = [_F0] * n
            for pos, w in zip(cert.indices, cert.weights):
                v = vecs[pos - 1]
                for i in range(n):
                    acc[i] += w * v[i]
            if tuple(acc) != tuple(self.point):
                return False
        return True


@dataclass
class DistanceResult:
    """Bracketed Euclidean distance between two closed convex hulls."""

    lower: float
    upper: float
    left_point: tuple[float, ...]
    right_point: tuple[float, ...]
    converged: bool
    iterations: int


# ---------------------------------------------------------------------------
# two-phase primal simplex over exact rationals


def _pivot(tab, basis, prow, pcol):
    pivot_row = tab[prow]
    inv = _F1 / pivot_row[pcol]
    tab[prow] = [x * inv for x in pivot_row]
    pivot_row = tab[prow]
    for i, row in enumerate(tab):
        if i == prow:
            continue
        f = row[pcol]
        if f:
            tab[i] = [a - f * p for a, p in zip(row, pivot_row)]
    basis[prow] = pcol


def _phase(tab, basis, cost, ncols, state):
    """Minimize cost over the canonical tableau in place (Bland's rule).

    ``tab`` rows are constraint rows ending in the rhs column; ``cost`` is
    indexed over all ncols columns.  Returns the objective value.
    """
    m = len(tab)
    # reduced costs z_j = c_j - c_B . column_j, tracked as an extra row
    z = [Fraction(c) for c in cost] + [_F0]
    for i in range(m):
        cb = cost[basis[i]]
        if cb:
            z = [a - cb * b for a, b in zip(z, tab[i])]
    while True:
        pcol = -1
        for j in range(ncols):
            if z[j] < 0:
                pcol = j
                break
        if pcol == -1:
            return -z[-1]
        prow = -1
        best = None
        for i in range(m):
            a = tab[i][pcol]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[prow]):
                    best = ratio
                    prow = i
        if prow == -1:
            raise CodeError("linear program is unbounded")
        state["pivots"] += 1
        cap = state.get("max_pivots")
        if cap is not None and state["pivots"] > cap:
            raise PivotLimitExceeded(f"simplex exceeded {cap} pivots")
        _pivot(tab, basis, prow, pcol)
        f = z[pcol]
        if f:
            prowv = tab[prow]
            z = [a - f * p for a, p in zip(z, prowv)]
        if state.get("bases") is not None:
            key = tuple(sorted(basis))
            if key in state["bases"]:
                raise CodeError("simplex revisited a basis despite Bland's rule")
            state["bases"].add(key)


def solve_lp_min(A, b, c, max_pivots=None, track_bases=False):
    """Minimize c.x subject to A x = b, x >= 0, all entries Fractions.

    Returns (status, x, objective, pivots) with status "optimal" or
    "infeasible".  Fractions keep every tableau entry in lowest terms, so
    coefficient growth stays bounded by the usual subdeterminant bound.
    """
    m = len(A)
    nv = len(c)
    rows = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-x for x in A[i]] + [-b[i]])
        else:
            rows.append(list(A[i]) + [b[i]])
    # phase 1: artificial basis
    tab = []
    for i, r in enumerate(rows):
        art = [_F0] * m
        art[i] = _F1
        tab.append(r[:nv] + art + [r[nv]])
    basis = list(range(nv, nv + m))
    cost1 = [_F0] * nv + [_F1] * m
    state = {"pivots": 0, "max_pivots": max_pivots,
             "bases": set() if track_bases else None}
    z1 = _phase(tab, basis, cost1, nv + m, state)
    if z1 > 0:
        return "infeasible", None, None, state["pivots"]
    # drive leftover artificials out of the basis; drop rows that are
    # redundant in the original columns
    for i in range(m - 1, -1, -1):
        if basis[i] >= nv:
            pcol = next((j for j in range(nv) if tab[i][j] != 0), None)
            if pcol is None:
                del tab[i]
                del basis[i]
            else:
                state["pivots"] += 1
                _pivot(tab, basis, i, pcol)
    for row in tab:
        del row[nv:-1]
    cost2 = [Fraction(x) for x in c]
    z2 = _phase(tab, basis, cost2, nv, state)
    x = [_F0] * nv
    for i, bv in enumerate(basis):
        x[bv] = tab[i][-1]
    return "optimal", x, z2, state["pivots"]


# ---------------------------------------------------------------------------
# presolve and LP builders


def _column_kind(vectors, i):
    seen0 = seen1 = False
    for v in vectors:
        if v[i]:
            seen1 = True
        else:
            seen0 = True
        if seen0 and seen1:
            return 2
    return 1 if seen1 else 0


def _kinds_match(left, right, n):
    return all(_column_kind(left, i) == _column_kind(right, i) for i in range(n))


def _dedupe(vectors):
    """Unique vectors plus, per unique vector, its original 0-based slots."""
    uniq = []
    slots = []
    where = {}
    for pos, v in enumerate(vectors):
        v = tuple(v)
        if v in where:
            slots[where[v]].append(pos)
        else:
            where[v] = len(uniq)
            uniq.append(v)
            slots.append([pos])
    return uniq, slots


def _spread_weights(weights, slots, total_positions):
    """Distribute each unique-vector weight equally over its duplicate slots."""
    out = [_F0] * total_positions
    for w, ps in zip(weights, slots):
        share = w / len(ps)
        for p in ps:
            out[p] = share
    return out


def _max_min_weight_lp(left, right, max_pivots=None, track_bases=False):
    """Core LP shared by the crossing and membership tests.

    ``right`` may be a list of vectors (two-sided) or a single fixed point
    (one-sided membership).  Returns (status, s*, lam, mu).
    """
    n = len(left[0])
    p = len(left)
    fixed_point = right is not None and len(right) > 0 and isinstance(right[0], Fraction)
    if fixed_point:
        # variables: u_1..u_p, s
        A, b = [], []
        colsum = [sum(v[i] for v in left) for i in range(n)]
        for i in range(n):
            A.append([Fraction(v[i]) for v in left] + [Fraction(colsum[i])])
            b.append(Fraction(right[i]))
        A.append([_F1] * p + [Fraction(p)])
        b.append(_F1)
        c = [_F0] * p + [-_F1]
        status, x, obj, _ = solve_lp_min(A, b, c, max_pivots, track_bases)
        if status != "optimal":
            return "infeasible", None, None, None
        s = x[p]
        lam = [x[j] + s for j in range(p)]
        return "optimal", s, lam, None
    q = len(right)
    # variables: u_1..u_p, v_1..v_q, s
    A, b = [], []
    for i in range(n):
        row = [Fraction(v[i]) for v in left]
        row += [-Fraction(w[i]) for w in right]
        row.append(Fraction(sum(v[i] for v in left) - sum(w[i] for w in right)))
        A.append(row)
        b.append(_F0)
    A.append([_F1] * p + [_F0] * q + [Fraction(p)])
    b.append(_F1)
    A.append([_F0] * p + [_F1] * q + [Fraction(q)])
    b.append(_F1)
    c = [_F0] * (p + q) + [-_F1]
    status, x, obj, _ = solve_lp_min(A, b, c, max_pivots, track_bases)
    if status != "optimal":
        return "infeasible", None, None, None
    s = x[p + q]
    lam = [x[j] + s for j in range(p)]
    mu = [x[p + k] + s for k in range(q)]
    return "optimal", s, lam, mu


def _combination(vectors, weights, n):
    acc = [_F0] * n
    for v, w in zip(vectors, weights):
        for i in range(n):
            if v[i]:
                acc[i] += w * v[i]
    return tuple(acc)


# ---------------------------------------------------------------------------
# public operations


def relative_interiors_intersect(left_vectors, right_vectors, presolve=True,
                                 max_pivots=None) -> IntersectionWitness | None:
    """Witness that the open polytopes of two vertex lists cross, or None.

    None means the relative interiors are disjoint; touching closures
    (optimum s* = 0) also return None.
    """
    left_vectors = [tuple(v) for v in left_vectors]
    right_vectors = [tuple(v) for v in right_vectors]
    if not left_vectors or not right_vectors:
        raise CodeError("both vertex lists must be nonempty")
    n = len(left_vectors[0])
    if any(len(v) != n for v in left_vectors + right_vectors):
        raise CodeError("ambient dimension mismatch")
    left, lslots = _dedupe(left_vectors)
    right, rslots = _dedupe(right_vectors)
    if presolve and not _kinds_match(left, right, n):
        return None
    status, s, lam, mu = _max_min_weight_lp(left, right, max_pivots)
    if status != "optimal" or s <= 0:
        return None
    point = _combination(left, lam, n)
    lw = _spread_weights(lam, lslots, len(left_vectors))
    rw = _spread_weights(mu, rslots, len(right_vectors))
    witness = IntersectionWitness(
        left=CoalitionCertificate(tuple(range(1, len(left_vectors) + 1)), tuple(lw)),
        right=CoalitionCertificate(tuple(range(1, len(right_vectors) + 1)), tuple(rw)),
        point=point,
    )
    return witness


def point_in_open_polytope(r, vectors, presolve=True,
                           max_pivots=None) -> CoalitionCertificate | None:
    """Exact strict membership: weights lam > 0, sum 1, sum lam_j v_j = r."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise CodeError("vertex list must be nonempty")
    n = len(vectors[0])
    r = tuple(Fraction(x) for x in r)
    if len(r) != n or any(len(v) != n for v in vectors):
        raise CodeError("ambient dimension mismatch")
    uniq, slots = _dedupe(vectors)
    if presolve:
        for i in range(n):
            kind = _column_kind(uniq, i)
            if r[i] == 0:
                if kind != 0:
                    return None
            elif r[i] == 1:
                if kind != 1:
                    return None
            elif not 0 < r[i] < 1:
                return None
            elif kind != 2:
                return None
    status, s, lam, _ = _max_min_weight_lp(uniq, r, max_pivots)
    if status != "optimal" or s <= 0:
        return None
    weights = _spread_weights(lam, slots, len(vectors))
    return CoalitionCertificate(tuple(range(1, len(vectors) + 1)), tuple(weights))


def closed_hulls_intersect(left_vectors, right_vectors, max_pivots=None) -> bool:
    """Exact feasibility of conv(left) meeting conv(right)."""
    left, _ = _dedupe([tuple(v) for v in left_vectors])
    right, _ = _dedupe([tuple(v) for v in right_vectors])
    n = len(left[0])
    if any(len(v) != n for v in left + right):
        raise CodeError("ambient dimension mismatch")
    status, _, _, _ = _max_min_weight_lp(left, right, max_pivots)
    return status == "optimal"


def _difference_atoms(left, right):
    return [tuple(a[i] - b[i] for i in range(len(a))) for a in left for b in right]


def hull_distance(left_vectors, right_vectors, tol: float,
                  max_iterations: int = 200_000) -> DistanceResult:
    """Euclidean distance between the closed hulls, bracketed to ``tol``.

    Runs the exact closed-hull LP first and returns exact 0 on feasibility.
    Otherwise iterates Gilbert's minimum-norm scheme on the Minkowski
    difference until the support-function duality gap is at most ``tol``.
    On hitting the iteration cap the best bracket so far is returned with
    ``converged=False``.  The infimum over the open polytopes equals this
    closed-hull minimum, so no separate open-set computation is needed.
    """
    if tol <= 0:
        raise CodeError("tolerance must be positive")
    left = [tuple(v) for v in left_vectors]
    right = [tuple(v) for v in right_vectors]
    n = len(left[0])
    uniq_left, _ = _dedupe(left)
    uniq_right, _ = _dedupe(right)
    status, _, lam, _ = _max_min_weight_lp(uniq_left, uniq_right)
    if status == "optimal":
        pt = tuple(float(x) for x in _combination(uniq_left, lam, n))
        return DistanceResult(0.0, 0.0, pt, pt, True, 0)
    atoms = _difference_atoms(left, right)
    coeffs = [0.0] * len(atoms)
    fa = [tuple(float(x) for x in a) for a in atoms]
    start = min(range(len(fa)), key=lambda k: sum(x * x for x in fa[k]))
    coeffs[start] = 1.0
    z = list(fa[start])
    lower = 0.0
    iterations = 0
    converged = False
    while iterations < max_iterations:
        iterations += 1
        norm = math.sqrt(sum(x * x for x in z))
        k = min(range(len(fa)), key=lambda j: sum(zi * ai for zi, ai in zip(z, fa[j])))
        supp = sum(zi * ai for zi, ai in zip(z, fa[k]))
        if norm > 0:
            lower = max(lower, supp / norm)
        if norm - lower <= tol:
            converged = True
            break
        d = fa[k]
        dz = [zi - di for zi, di in zip(z, d)]
        dd = sum(x * x for x in dz)
        if dd == 0:
            converged = norm - lower <= tol
            break
        theta = min(1.0, max(0.0, sum(zi * w for zi, w in zip(z, dz)) / dd))
        z = [zi - theta * w for zi, w in zip(z, dz)]
        coeffs = [c * (1.0 - theta) for c in coeffs]
        coeffs[k] += theta
    upper = math.sqrt(sum(x * x for x in z))
    lw = [0.0] * len(left)
    rw = [0.0] * len(right)
    for idx, cval in enumerate(coeffs):
        lw[idx // len(right)] += cval
        rw[idx % len(right)] += cval
    lp = tuple(sum(lw[j] * left[j][i] for j in range(len(left))) for i in range(n))
    rp = tuple(sum(rw[k] * right[k][i] for k in range(len(right))) for i in range(n))
    return DistanceResult(max(0.0, lower), upper, lp, rp, converged, iterations)


def _affine_minimizer(atoms):
    """Exact projection of the origin onto the affine hull of ``atoms``.

    Solves the KKT system for min |sum a_i p_i|^2 with sum a_i = 1 by
    Gaussian elimination over Fractions.  Returns (coeffs, point) or None
    when the atoms are affinely dependent (the system is singular).
    """
    m = len(atoms)
    n = len(atoms[0])
    gram = [[Fraction(sum(atoms[i][k] * atoms[j][k] for k in range(n)))
             for j in range(m)] for i in range(m)]
    size = m + 1
    aug = []
    for i in range(m):
        aug.append(gram[i][:] + [_F1] + [_F0])
    aug.append([_F1] * m + [_F0] + [_F1])
    cols = size
    row = 0
    piv_cols = []
    for col in range(cols):
        sel = next((r for r in range(row, size) if aug[r][col] != 0), None)
        if sel is None:
            return None
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = _F1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(size):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        piv_cols.append(col)
        row += 1
        if row == size:
            break
    if row < size:
        return None
    coeffs = [aug[i][-1] for i in range(m)]
    point = tuple(sum(coeffs[i] * atoms[i][k] for i in range(m)) for k in range(n))
    return coeffs, point


def min_distance_squared_exact(left_vectors, right_vectors,
                               max_atoms: int = 20) -> Fraction:
    """Exact squared distance between the closed hulls, as a Fraction.

    Escalation path for threshold verdicts: enumerates affinely
    independent subsets of the Minkowski-difference atoms (vertex-vertex
    pairs, vertex-edge and higher faces alike), projects the origin onto
    each affine hull exactly, and keeps the nearest projection that lands
    inside its simplex.  The optimum is attained on some face, so the
    minimum over candidates is the exact distance.  Raises CodeError when
    the atom count exceeds ``max_atoms`` (enumeration would be too large).
    """
    left = [tuple(v) for v in left_vectors]
    right = [tuple(v) for v in right_vectors]
    if closed_hulls_intersect(left, right):
        return _F0
    atoms, _ = _dedupe(_difference_atoms(left, right))
    if len(atoms) > max_atoms:
        raise CodeError(f"exact distance limited to {max_atoms} difference atoms")
    n = len(atoms[0])
    best = None
    for size in range(1, min(len(atoms), n + 1) + 1):
        for subset in combinations(atoms, size):
            sol = _affine_minimizer(list(subset))
            if sol is None:
                continue
            coeffs, point = sol
            if any(c < 0 for c in coeffs):
                continue
            d2 = sum(x * x for x in point)
            if best is None or d2 < best:
                best = d2
    if best is None:
        raise CodeError("no candidate face found for exact distance")
    return best
