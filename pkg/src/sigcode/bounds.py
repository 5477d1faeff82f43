"""Closed-form size and rate bounds for signature codes, plus the known
exact-value tables for constant weights 2 and 3.

Size bounds come in three flavors: the power lower bound 2^floor(n/t),
the girth-based general upper bound (from bipartite graphs with no short
cycles), and the sharper t = 2 upper bound from forbidden complete
bipartite subgraphs.  Non-integer exponents are evaluated in floats and
floored; ``certify=True`` redoes the floor in 60-digit interval
arithmetic and refuses values that sit too close to an integer.

Rate bounds for t in {2, 4} are literature lookups; other t use the
entropy-based case formulas over H_t (the entropy of a binomial(t, 1/2)
count) and h_t = log2(t+1) + t/(t+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

import mpmath

_TABLE_WEIGHT2 = {
    2: 1, 3: 3, 4: 4, 5: 6, 6: 7, 7: 9, 8: 11, 9: 13, 10: 16, 11: 18,
    12: 21, 13: 24, 14: 27, 15: 30, 16: 33, 17: 36, 18: 39, 19: 42,
    20: 46, 21: 50,
}

_RATE_LOOKUPS = {2: 0.5753, 4: 0.4451}

_WEIGHT3_EXACT_SMALL = {13, 16, 17, 19, 20, 21}


@dataclass
class BoundReport:
    n: int
    t: int
    w: int | None
    lower: int
    upper: int
    rate_upper: float
    provenance: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "t": self.t,
            "lower": self.lower,
            "upper": self.upper,
            "rate_upper": self.rate_upper,
            "provenance": self.provenance,
        }
        if self.w is not None:
            d["w"] = self.w
        d.update(self.extras)
        return d


def size_lower_bound(n: int, t: int) -> int:
    """2^floor(n/t): every such code exists, so max size is at least this."""
    if n < 1 or t < 2:
        raise ValueError("need n >= 1 and t >= 2")
    return 2 ** (n // t)


def _certified_floor(value_expr) -> int:
    """Floor of a positive mpmath expression, certified away from integers."""
    with mpmath.workdps(60):
        v = value_expr()
        f = int(mpmath.floor(v))
        if not mpmath.almosteq(v, f, abs_eps=0) and abs(v - f) < mpmath.mpf(10) ** -40:
            raise ArithmeticError(f"floor of {v} too close to an integer to certify")
        if abs(v - (f + 1)) < mpmath.mpf(10) ** -40:
            raise ArithmeticError(f"floor of {v} too close to an integer to certify")
        return f


def size_upper_bound(n: int, t: int, certify: bool = False) -> int:
    """General girth-based upper bound on the size of a t-signature code.

    Even t:  (2t-3) * (2^((t+2)n/(2t+2) + 1) + 2^(tn/(2t+2)))
    Odd t:   (2t-3) * (2^((t+1)n/(2t)) + 2^ceil(n/2) + 2^floor(n/2))
    floored to an integer.
    """
    if n < 2 or t < 2:
        raise ValueError("need n >= 2 and t >= 2")
    if t % 2 == 0:
        e1 = (t + 2) * n / (2 * t + 2) + 1
        e2 = t * n / (2 * t + 2)
        value = (2 * t - 3) * (2.0 ** e1 + 2.0 ** e2)
        if certify:
            def expr():
                q = mpmath.mpf(2 * t + 2)
                return (2 * t - 3) * (mpmath.power(2, ((t + 2) * n) / q + 1)
                                      + mpmath.power(2, (t * n) / q))
            return _certified_floor(expr)
        return math.floor(value)
    e1 = (t + 1) * n / (2 * t)
    value = (2 * t - 3) * (2.0 ** e1 + 2 ** ((n + 1) // 2) + 2 ** (n // 2))
    if certify:
        def expr():
            return (2 * t - 3) * (mpmath.power(2, ((t + 1) * n) / mpmath.mpf(2 * t))
                                  + 2 ** ((n + 1) // 2) + 2 ** (n // 2))
        return _certified_floor(expr)
    return math.floor(value)


def size_upper_bound_t2(n: int) -> int:
    """Sharper upper bound for t = 2; exact integer arithmetic throughout.

    n = 2 mod 3:  2^floor(2n/3) + 2^ceil(n/3) (2^ceil(n/3) - 1) / 2
    otherwise:    2^ceil(2n/3) + 2^floor(n/3) (2^floor(n/3) - 1) / 2
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n % 3 == 2:
        a = 2 ** (2 * n // 3)
        b = 2 ** ((n + 2) // 3)
    else:
        a = 2 ** (-(-2 * n // 3))
        b = 2 ** (n // 3)
    return a + b * (b - 1) // 2


def binomial_entropy(t: int) -> float:
    """H_t: entropy (bits) of the count of heads in t fair coin flips."""
    total = 0.0
    for k in range(t + 1):
        p = comb(t, k) / 2.0 ** t
        total -= p * math.log2(p)
    return total


def h_value(t: int) -> float:
    """h_t = log2(t+1) + t/(t+1)."""
    return math.log2(t + 1) + t / (t + 1)


def girth_rate_bound(t: int) -> float:
    """Rate bound implied by the girth argument alone."""
    if t % 2 == 0:
        return 0.5 + 1.0 / (2 * t + 2)
    return 0.5 + 1.0 / (2 * t)


def rate_upper_bound(t: int) -> dict:
    """Best known asymptotic rate upper bound for t-signature codes.

    Returns {"value", "method", "girth_bound"}.  t in {2, 4} are cited
    lookup constants; other t evaluate the sum-distinctness entropy
    formulas (t = 2u-1 uses u/H_u + (u-1)/h_u for 2 <= u <= 5, t = 2u
    uses u/H_u + u/h_u for 3 <= u <= 5, larger t use H_t/t).
    """
    if t < 2:
        raise ValueError("need t >= 2")
    girth = girth_rate_bound(t)
    if t in _RATE_LOOKUPS:
        return {"value": _RATE_LOOKUPS[t], "method": "lookup", "girth_bound": girth}
    if t % 2 == 1:
        u = (t + 1) // 2
        if 2 <= u <= 5:
            value = 1.0 / (u / binomial_entropy(u) + (u - 1) / h_value(u))
        else:
            value = binomial_entropy(t) / t
    else:
        u = t // 2
        if 3 <= u <= 5:
            value = 1.0 / (u / binomial_entropy(u) + u / h_value(u))
        else:
            value = binomial_entropy(t) / t
    return {"value": value, "method": "entropy-formula", "girth_bound": girth}


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _is_prime_power(m: int) -> bool:
    if m < 2:
        return False
    for p in range(2, m + 1):
        if p * p > m:
            return _is_prime(m)
        if _is_prime(p) and m % p == 0:
            while m % p == 0:
                m //= p
            return m == 1
    return False


def _projective_order(n: int) -> int | None:
    """m with n = m^2 + m + 1, if any."""
    m = int((n - 1) ** 0.5)
    for cand in (m - 1, m, m + 1):
        if cand >= 1 and cand * cand + cand + 1 == n:
            return cand
    return None


def weight2_max_size(n: int) -> int | None:
    """Known exact max size of a 2-signature code of constant weight 2.

    Table values for 2 <= n <= 21; m(m+1)^2/2 when n = m^2+m+1 with m a
    power of 2 or a prime power above 13; None when unknown.
    """
    if n in _TABLE_WEIGHT2:
        return _TABLE_WEIGHT2[n]
    m = _projective_order(n)
    if m is not None and ((m & (m - 1)) == 0 or (m > 13 and _is_prime_power(m))):
        return m * (m + 1) ** 2 // 2
    return None


def weight3_max_size(n: int) -> tuple[int, bool]:
    """(value, exact) for the max size of a weight-3 2-signature code.

    The bound is floor(n(n-1)/3); it is attained (exact=True) for all
    n >= 24 and for n in {13, 16, 17, 19, 20, 21}, via optimal weakly
    union-free triple families.  Otherwise only the upper bound is
    reported (exact=False).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    value = n * (n - 1) // 3
    exact = n >= 24 or n in _WEIGHT3_EXACT_SMALL
    return value, exact


def bound_report(n: int, t: int, w: int | None = None) -> BoundReport:
    """Assemble every applicable bound for the given parameters."""
    lower = size_lower_bound(n, t)
    provenance = [["lower", "power-construction"]]
    upper = size_upper_bound(n, t)
    provenance.append(["upper", "girth-general"])
    if t == 2:
        u2 = size_upper_bound_t2(n)
        if u2 < upper:
            upper = u2
            provenance.append(["upper", "forbidden-bipartite-t2"])
    rate = rate_upper_bound(t)
    provenance.append(["rate_upper", rate["method"]])
    extras = {"girth_rate_bound": rate["girth_bound"]}
    if w is not None and t == 2:
        if w == 2:
            known = weight2_max_size(n)
            if known is not None:
                extras["weight_exact"] = known
                provenance.append(["weight_exact", "c4-free-table"])
        elif w == 3:
            value, exact = weight3_max_size(n)
            extras["weight_exact" if exact else "weight_upper"] = value
            provenance.append(
                ["weight_exact" if exact else "weight_upper", "union-free-families"])
    return BoundReport(n, t, w, lower, upper, rate["value"], provenance, extras)
