"""Tracing algorithms for signature codes.

Three decoders recover the coalition and its exact weights from a
noiseless channel result r:

* decode_generic scans nonempty subsets of size at most t in
  (size, lexicographic) order and returns the one whose open polytope
  contains r.  For a t-signature code that subset is unique, so the scan
  order only fixes determinism.
* decode_concatenated decodes each inner block first, maps the recovered
  inner words back to outer symbols, then keeps every outer codeword
  consistent with all blocks.
* decode_product identifies the active groups from all-zero blocks
  first, then decodes one designated block per active group.

A channel result that matches no subset raises NoCoalitionError; one that
matches several (possible only when the code is not a t-signature code at
this scope) is reported through MultipleCoalitionsError carrying all
matches as a diagnostic, never as a bare assertion failure.  Work
counters record how many candidate membership tests and symbol scans each
decoder performed so complexity claims can be asserted in tests.

Weight recovery is exact: subsets of a signature code are affinely
independent (a dependence would split into two disjoint subsets whose
open polytopes share a point), so barycentric coordinates are unique.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass, field

from .core import (
    BinaryCode,
    CodeError,
    CoalitionCertificate,
    RationalVector,
)
from .construct import ConcatenationRecipe, ProductRecipe, concatenate, kronecker
from .geometry import point_in_open_polytope
from .verify import subsets_up_to

_F0 = Fraction(0)


class NoCoalitionError(CodeError):
    """No coalition of the allowed size generates the given result."""


class MultipleCoalitionsError(CodeError):
    """Several coalitions generate the result: a signature violation.

    Carries every matching (indices, certificate) pair as a diagnostic.
    """

    def __init__(self, matches):
        self.matches = matches
        subsets = [list(cert.indices) for cert in matches]
        super().__init__(f"result generated by multiple coalitions: {subsets}")


@dataclass
class DecodeResult:
    coalition: CoalitionCertificate
    method: str
    work: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        d = self.coalition.to_json_dict()
        d["method"] = self.method
        d["work"] = self.work
        return d


def _check_result_vector(r, n):
    r = tuple(Fraction(x) for x in r)
    if len(r) != n:
        raise CodeError(f"result length {len(r)} does not match code length {n}")
    if any(x < 0 or x > 1 for x in r):
        raise CodeError("noiseless channel results have entries in [0, 1]")
    return r


def _membership(code: BinaryCode, subset, r):
    cert = point_in_open_polytope(r, [code.word(j) for j in subset])
    if cert is None:
        return None
    return CoalitionCertificate(tuple(subset), cert.weights)


def decode_generic(code: BinaryCode, t: int, r, diagnose: bool = False) -> DecodeResult:
    """Find the unique coalition of size <= t whose open polytope holds r.

    With ``diagnose=True`` the full candidate census is scanned and
    multiple matches raise MultipleCoalitionsError listing all of them.
    """
    if t < 1:
        raise CodeError("coalition bound t must be at least 1")
    r = _check_result_vector(r, code.n)
    tests = 0
    matches = []
    for subset in subsets_up_to(code.size, t):
        tests += 1
        cert = _membership(code, subset, r)
        if cert is not None:
            matches.append(cert)
            if not diagnose:
                break
    if not matches:
        raise NoCoalitionError(
            f"no coalition of size <= {t} generates the given result")
    if len(matches) > 1:
        raise MultipleCoalitionsError(matches)
    return DecodeResult(matches[0], "generic", {"membership_tests": tests})


def _decode_block(inner: BinaryCode, t: int, r_block, counters):
    """Inner decode of one block; returns the certificate over inner indices."""
    for subset in subsets_up_to(inner.size, t):
        counters["membership_tests"] += 1
        cert = _membership(inner, subset, r_block)
        if cert is not None:
            return cert
    return None


def decode_concatenated(recipe: ConcatenationRecipe, t: int, r) -> DecodeResult:
    """Two-stage decoder for concatenated codes.

    Stage 1 decodes every inner block, giving per-block sets of feasible
    outer symbols.  Stage 2 keeps the outer codewords whose symbols are
    feasible in every block; for a frameproof outer code this survivor
    set equals the true coalition.  Weights are read off a block whose
    inner words separate all survivors, with an exact full-length
    membership solve as fallback.
    """
    outer, inner = recipe.outer, recipe.inner
    n1, n2 = outer.n, inner.n
    code = concatenate(recipe)
    r = _check_result_vector(r, n1 * n2)
    work = {"membership_tests": 0, "symbol_checks": 0}
    blocks = [r[i * n2:(i + 1) * n2] for i in range(n1)]
    block_syms: list[set[int]] = []
    block_certs = []
    for i, rb in enumerate(blocks):
        cert = _decode_block(inner, t, rb, work)
        if cert is None:
            raise NoCoalitionError(f"inner decode failed on block {i + 1}")
        block_certs.append(cert)
        block_syms.append({recipe.symbol_of(b) for b in cert.indices})
    survivors = []
    for j in range(1, outer.size + 1):
        a = outer.word(j)
        work["symbol_checks"] += n1
        if all(a[i] in block_syms[i] for i in range(n1)):
            survivors.append(j)
    if not survivors:
        raise NoCoalitionError("no outer codeword is consistent with all blocks")
    weights = _weights_from_blocks(recipe, survivors, block_certs)
    if weights is None:
        cert = point_in_open_polytope(r, [code.word(j) for j in survivors])
        work["membership_tests"] += 1
        if cert is None:
            raise NoCoalitionError(
                "survivor set does not reproduce the result exactly")
        weights = cert.weights
    result = CoalitionCertificate(tuple(survivors), tuple(weights))
    if result.combination(code) != tuple(r):
        raise NoCoalitionError("decoded coalition does not reproduce the result")
    return DecodeResult(result, "concatenated", work)


def _weights_from_blocks(recipe, survivors, block_certs):
    """Read weights off an informative block (all survivors distinct there)."""
    outer = recipe.outer
    for i, cert in enumerate(block_certs):
        syms = [outer.word(j)[i] for j in survivors]
        if len(set(syms)) != len(syms) or len(syms) != len(cert.indices):
            continue
        by_inner = dict(zip(cert.indices, cert.weights))
        try:
            return [by_inner[recipe.bijection[s]] for s in syms]
        except KeyError:
            continue
    return None


def decode_product(recipe: ProductRecipe, t: int, r) -> DecodeResult:
    """Two-stage decoder for Kronecker-product codes.

    Stage 1 rules out every group whose superimposed column has a 1 at an
    all-zero block; the survivors are exactly the active groups.  Stage 2
    decodes one designated block per active group (a coordinate where
    that group's column is the only active 1); the weights recovered
    there are already the global weights, because all other groups
    contribute zero to the block.
    """
    a_code = recipe.superimposed
    bstar = recipe.nonzero_inner()
    inner_full = recipe.signature
    grouped = kronecker(recipe)
    code = grouped.code
    n1, n2 = a_code.n, inner_full.n
    r = _check_result_vector(r, n1 * n2)
    work = {"membership_tests": 0, "zero_checks": 0, "coordinate_scans": 0}
    blocks = [r[i * n2:(i + 1) * n2] for i in range(n1)]
    zero_block = tuple([_F0] * n2)
    zero_blocks = {i for i, b in enumerate(blocks) if b == zero_block}
    work["zero_checks"] = n1 * a_code.size
    active = [h for h in range(1, a_code.size + 1)
              if not any(a_code.word(h)[i] == 1 for i in zero_blocks)]
    if not active:
        raise NoCoalitionError("every group is ruled out by an all-zero block")
    zero_inner = (0,) * n2
    zero_pos = inner_full.codewords.index(zero_inner) + 1
    indices: list[int] = []
    weights: list[Fraction] = []
    if len(active) == 1:
        h = active[0]
        col = a_code.word(h)
        i = next((i for i in range(n1) if col[i] == 1), None)
        if i is None:
            raise NoCoalitionError("superimposed column is all zero")
        work["coordinate_scans"] += n1
        star = BinaryCode(n2, list(bstar))
        cert = _decode_block(star, t, blocks[i], work)
        if cert is None:
            raise NoCoalitionError(f"inner decode failed on block {i + 1}")
        base = (h - 1) * len(bstar)
        for pos, w in zip(cert.indices, cert.weights):
            indices.append(base + pos)
            weights.append(w)
    else:
        active_set = set(active)
        for h in active:
            col = a_code.word(h)
            i = next((i for i in range(n1)
                      if col[i] == 1 and all(a_code.word(h2)[i] == 0
                                             for h2 in active_set - {h})), None)
            work["coordinate_scans"] += n1
            if i is None:
                raise NoCoalitionError(
                    f"no isolating coordinate for group {h}: superimposed "
                    f"ingredient is not strong enough for {len(active)} groups")
            cert = _decode_block(inner_full, t, blocks[i], work)
            if cert is None:
                raise NoCoalitionError(f"inner decode failed on block {i + 1}")
            base = (h - 1) * len(bstar)
            got_zero = False
            for pos, w in zip(cert.indices, cert.weights):
                word = inner_full.word(pos)
                if pos == zero_pos:
                    got_zero = True
                    continue
                star_pos = bstar.index(word) + 1
                indices.append(base + star_pos)
                weights.append(w)
            if not got_zero:
                raise NoCoalitionError(
                    f"block {i + 1} shows no zero share despite other active groups")
    total = sum(weights)
    if total != 1:
        raise NoCoalitionError(
            f"recovered group weights sum to {total}, expected exactly 1")
    result = CoalitionCertificate(tuple(indices), tuple(weights))
    if result.combination(code) != tuple(r):
        raise NoCoalitionError("decoded coalition does not reproduce the result")
    return DecodeResult(result, "product", work)
