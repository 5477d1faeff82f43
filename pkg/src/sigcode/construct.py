"""Code constructions: concatenation, Kronecker product, polarity graphs,
support families, identity superimposed codes, and bundled example codes.

Output codeword order follows the printed matrix convention
(outer-codeword-major, then inner index), so the bundled concatenated and
product examples reproduce byte for byte.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from .core import BinaryCode, CodeError, GroupedCode, QaryCode
from .verify import SetFamily


@dataclass(frozen=True)
class ConcatenationRecipe:
    """Outer q-ary code, binary inner code of size q, and the bijection
    from outer symbols to inner codeword indices (1-based).

    Verifying that the outer code is frameproof and the inner code is a
    signature code is the caller's job; ``claimed_t`` records the intent.
    """

    outer: QaryCode
    inner: BinaryCode
    bijection: tuple[int, ...]
    claimed_t: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "bijection", tuple(int(x) for x in self.bijection))
        if self.inner.size != self.outer.q:
            raise CodeError("inner code size must equal the outer alphabet size")
        if len(self.bijection) != self.outer.q:
            raise CodeError("bijection must map every outer symbol")
        if sorted(self.bijection) != list(range(1, self.inner.size + 1)):
            raise CodeError("bijection must be a permutation of inner indices")

    def inner_word(self, symbol: int):
        return self.inner.word(self.bijection[symbol])

    def symbol_of(self, inner_index: int) -> int:
        return self.bijection.index(inner_index)


@dataclass(frozen=True)
class ProductRecipe:
    """Superimposed ingredient A and signature ingredient B, 0 in B."""

    superimposed: BinaryCode
    signature: BinaryCode
    claimed_t: int | None = None

    def __post_init__(self):
        zero = (0,) * self.signature.n
        if zero not in self.signature.codewords:
            raise CodeError("signature ingredient must contain the zero codeword")

    def nonzero_inner(self) -> tuple:
        zero = (0,) * self.signature.n
        return tuple(c for c in self.signature.codewords if c != zero)


def concatenate(recipe: ConcatenationRecipe) -> BinaryCode:
    """Replace every outer symbol by its inner codeword.

    Output length n1*n2 and size M1; block i of output codeword j is the
    inner word for the i-th symbol of outer codeword j.
    """
    out = []
    for a in recipe.outer.codewords:
        word = []
        for symbol in a:
            word.extend(recipe.inner_word(symbol))
        out.append(tuple(word))
    return BinaryCode(recipe.outer.n * recipe.inner.n, out)


def kronecker(recipe: ProductRecipe) -> GroupedCode:
    """Kronecker product of A with B minus its zero codeword.

    Group h holds the words built from the h-th column of A: block i of a
    group-h word is a_h(i) * b for each nonzero b.  Output length n1*n2,
    size M1*(M2-1), with M1 groups in outer-major order.
    """
    a_code = recipe.superimposed
    bstar = recipe.nonzero_inner()
    if not bstar:
        raise CodeError("signature ingredient needs a nonzero codeword")
    zero_outer = (0,) * a_code.n
    if zero_outer in a_code.codewords:
        warnings.warn("superimposed ingredient contains the zero codeword; "
                      "its group collapses to all-zero blocks")
    words = []
    groups = []
    for h, a in enumerate(a_code.codewords, start=1):
        for b in bstar:
            word = []
            for i in range(a_code.n):
                word.extend(b if a[i] else (0,) * len(b))
            words.append(tuple(word))
            groups.append(h)
    code = BinaryCode(a_code.n * len(bstar[0]), words)
    return GroupedCode(code, tuple(groups))


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


def polarity_code(m: int) -> BinaryCode:
    """Optimal constant-weight-2 code from the polarity graph of a
    projective plane of prime order m.

    Vertices are the points of the plane over the prime field (normalized
    homogeneous triples with leading nonzero coordinate 1, in
    lexicographic order); edges join distinct points x, y with x.y = 0
    (the standard dot-product polarity).  Absolute points (x.x = 0)
    contribute no loops, giving exactly m(m+1)^2/2 edges on m^2+m+1
    vertices.  The resulting graph has no 4-cycle because two distinct
    lines meet in exactly one point.  Prime powers would need full field
    arithmetic and are not implemented.
    """
    if not _is_prime(m):
        raise CodeError("polarity construction implemented for prime orders only")
    points = []
    for x in range(m):
        for y in range(m):
            points.append((1, x, y))
    for y in range(m):
        points.append((0, 1, y))
    points.append((0, 0, 1))
    points.sort()
    index = {p: i + 1 for i, p in enumerate(points)}
    n = len(points)
    edges = []
    for p, q in combinations(points, 2):
        if sum(pi * qi for pi, qi in zip(p, q)) % m == 0:
            edges.append((index[p], index[q]))
    edges.sort()
    words = []
    for u, v in edges:
        w = [0] * n
        w[u - 1] = 1
        w[v - 1] = 1
        words.append(tuple(w))
    return BinaryCode(n, words)


def from_supports(n: int, family: SetFamily | list) -> BinaryCode:
    """One codeword per block, with the block as its support."""
    blocks = family.blocks if isinstance(family, SetFamily) else [
        frozenset(int(x) for x in b) for b in family]
    words = []
    for b in blocks:
        if any(not 1 <= x <= n for x in b):
            raise CodeError("block element out of range")
        w = [0] * n
        for x in b:
            w[x - 1] = 1
        words.append(tuple(w))
    return BinaryCode(n, words)


def identity_superimposed(m: int) -> BinaryCode:
    """The m x m identity: the m unit vectors, superimposed for t <= m-1."""
    if m < 2:
        raise CodeError("identity superimposed code needs m >= 2")
    return BinaryCode(m, [tuple(1 if i == j else 0 for i in range(m))
                          for j in range(m)])


# ---------------------------------------------------------------------------
# bundled example codes (matrices transcribed with codewords as columns)


def _ex2_cube() -> BinaryCode:
    return BinaryCode(3, [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0)])


def _ex3_weight2() -> BinaryCode:
    return BinaryCode(5, [
        (1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (0, 1, 1, 0, 0),
        (1, 0, 0, 1, 0), (1, 0, 0, 0, 1), (0, 0, 0, 1, 1)])


def _ex4_weight3() -> BinaryCode:
    return BinaryCode(5, [
        (1, 1, 1, 0, 0), (0, 0, 1, 1, 1), (1, 0, 1, 1, 0), (0, 1, 0, 1, 1)])


def _ex5_outer() -> QaryCode:
    return QaryCode(3, 3, [
        (0, 0, 0), (1, 1, 1), (2, 2, 2),
        (0, 1, 2), (1, 2, 0), (2, 0, 1),
        (0, 2, 1), (1, 0, 2), (2, 1, 0)])


def _ex5_inner() -> BinaryCode:
    return BinaryCode(2, [(1, 0), (0, 1), (1, 1)])


def _ex5_recipe() -> ConcatenationRecipe:
    return ConcatenationRecipe(_ex5_outer(), _ex5_inner(), (1, 2, 3), claimed_t=2)


def _ex5_concatenated() -> BinaryCode:
    return concatenate(_ex5_recipe())


def _ex7_recipe() -> ProductRecipe:
    return ProductRecipe(identity_superimposed(3), _ex2_cube(), claimed_t=2)


def _ex7_product() -> GroupedCode:
    return kronecker(_ex7_recipe())


def _frameproof_half() -> BinaryCode:
    return BinaryCode(3, [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)])


def _optimal_n4() -> BinaryCode:
    return BinaryCode(4, [
        (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 0, 0),
        (1, 1, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)])


BUILTIN_EXAMPLES = {
    "ex2-3cube": _ex2_cube,
    "ex3-weight2": _ex3_weight2,
    "ex4-weight3": _ex4_weight3,
    "ex5-outer": _ex5_outer,
    "ex5-inner": _ex5_inner,
    "ex5-concatenated": _ex5_concatenated,
    "ex7-superimposed": lambda: identity_superimposed(3),
    "ex7-product": _ex7_product,
    "frameproof-half": _frameproof_half,
    "optimal-n4": _optimal_n4,
}

EXAMPLE_NOTES = {
    "ex2-3cube": "(3,5,2) 2-signature code on the 3-cube",
    "ex3-weight2": "(5,6,2) optimal 2-signature code of constant weight 2",
    "ex4-weight3": "(5,4,2) weight-3 2-signature code whose support family "
                   "is not weakly union-free",
    "ex5-outer": "(3,9,3) 2-frameproof outer code from an orthogonal array",
    "ex5-inner": "(2,3,2) optimal 2-signature inner code",
    "ex5-concatenated": "(6,9,2) concatenated 2-signature code",
    "ex7-superimposed": "(3,3,2) 2-superimposed identity ingredient",
    "ex7-product": "(9,12,2) product 2-signature code with 3 groups",
    "frameproof-half": "(3,4,2) code that is (2, 1/2)-frameproof",
    "optimal-n4": "(4,7,2) optimal 2-signature code",
}


def builtin_example(name: str):
    """Return a bundled example code by name (see BUILTIN_EXAMPLES)."""
    try:
        factory = BUILTIN_EXAMPLES[name]
    except KeyError:
        raise CodeError(f"unknown example {name!r}; known: "
                        + ", ".join(sorted(BUILTIN_EXAMPLES))) from None
    return factory()


def example_recipe(name: str):
    """Construction recipes behind the concatenated and product examples."""
    if name == "ex5-concatenated":
        return _ex5_recipe()
    if name == "ex7-product":
        return _ex7_recipe()
    raise CodeError(f"no recipe behind example {name!r}")
