"""Attack simulator for the weighted adder channel.

The noiseless channel result is the exact convex combination
r = sum lam_j c_j over the coalition, with weights either supplied or
sampled.  Sampled weights are exact rationals (positive integer draws
normalized by their total), never Dirichlet floats, so decoder round
trips stay exact.  The noisy variant adds a float perturbation drawn
uniformly from the open ball of a given radius; it models the projected
noise directly at the result level.

All randomness goes through ``random.Random(seed)``, so outputs are
reproducible across platforms for a fixed seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import BinaryCode, CodeError, CoalitionCertificate, RationalVector


@dataclass(frozen=True)
class AttackSpec:
    """Coalition indices (1-based), optional explicit weights, rng seed,
    and optional noise radius for the noisy variant."""

    coalition: tuple[int, ...]
    weights: tuple[Fraction, ...] | None = None
    seed: int = 0
    delta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "coalition", tuple(int(j) for j in self.coalition))
        if len(self.coalition) < 1:
            raise CodeError("coalition must be nonempty")
        if len(set(self.coalition)) != len(self.coalition):
            raise CodeError("coalition indices must be distinct")
        if self.weights is not None:
            w = tuple(Fraction(x) for x in self.weights)
            object.__setattr__(self, "weights", w)
            if len(w) != len(self.coalition):
                raise CodeError("one weight per coalition member required")
            if any(x <= 0 for x in w):
                raise CodeError("weights must be strictly positive")
            if sum(w) != 1:
                raise CodeError("weights must sum to exactly 1")


def sample_simplex_weights(k: int, seed: int = 0,
                           denominator_bound: int = 1000) -> list[Fraction]:
    """k strictly positive exact rationals summing to 1.

    Draws k integers uniformly from [1, denominator_bound] and normalizes
    by their sum; deterministic for a fixed seed.
    """
    if k < 1:
        raise CodeError("need at least one weight")
    if denominator_bound < 1:
        raise CodeError("denominator bound must be positive")
    rng = random.Random(seed)
    draws = [rng.randint(1, denominator_bound) for _ in range(k)]
    total = sum(draws)
    return [Fraction(d, total) for d in draws]


def resolve_weights(spec: AttackSpec) -> CoalitionCertificate:
    if spec.weights is not None:
        return CoalitionCertificate(spec.coalition, spec.weights)
    weights = sample_simplex_weights(len(spec.coalition), spec.seed)
    return CoalitionCertificate(spec.coalition, tuple(weights))


def attack(code: BinaryCode, spec: AttackSpec) -> RationalVector:
    """Exact channel result of the coalition's linear attack."""
    cert = resolve_weights(spec)
    for j in cert.indices:
        code.word(j)
    return cert.combination(code)


def noisy_attack(code: BinaryCode, spec: AttackSpec) -> tuple[float, ...]:
    """Channel result plus a perturbation from the open ball of radius delta.

    The noise direction is an isotropic Gaussian draw normalized to unit
    length; the radius is delta * u^(1/n) for uniform u, which is the
    uniform distribution over the ball.  Norm strictly below delta is
    asserted on every draw.
    """
    if spec.delta is None or spec.delta <= 0:
        raise CodeError("noisy attack requires a positive delta")
    r = attack(code, spec)
    rng = random.Random(spec.seed)
    n = code.n
    while True:
        direction = [rng.gauss(0.0, 1.0) for _ in range(n)]
        norm = math.sqrt(sum(x * x for x in direction))
        if norm > 0:
            break
    radius = spec.delta * rng.random() ** (1.0 / n)
    noise = [radius * x / norm for x in direction]
    assert math.sqrt(sum(x * x for x in noise)) < spec.delta
    return tuple(float(x) + e for x, e in zip(r, noise))
