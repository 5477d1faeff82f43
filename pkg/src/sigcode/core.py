"""Core data types for binary and q-ary codes.

Codewords are stored row-per-codeword as tuples of small ints.  The
signature-code literature prints a code as an n x M matrix whose COLUMNS
are the codewords; the parser accepts that orientation behind an explicit
flag.  All indices visible to users (codeword indices, coordinates, group
ids) are 1-based, matching the usual c_1..c_M convention.

Exactness policy: every quantity a verdict depends on is a
``fractions.Fraction``.  Floats appear only in the hull-distance
computations of the geometry module.  JSON input is parsed with
``parse_float=Fraction`` so that a literal like ``0.7`` becomes exactly
7/10 and is never rounded through binary floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

Codeword = tuple[int, ...]
RationalVector = tuple[Fraction, ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


class CodeError(ValueError):
    """Raised when a code or certificate violates a structural invariant."""


def _as_codewords(codewords) -> tuple[Codeword, ...]:
    return tuple(tuple(int(x) for x in c) for c in codewords)


@dataclass(frozen=True)
class BinaryCode:
    """An (n, M, 2) code: M distinct binary codewords of length n."""

    n: int
    codewords: tuple[Codeword, ...]

    def __post_init__(self):
        object.__setattr__(self, "codewords", _as_codewords(self.codewords))
        if self.n < 1:
            raise CodeError("code length must be positive")
        if len(self.codewords) < 1:
            raise CodeError("code must contain at least one codeword")
        for c in self.codewords:
            if len(c) != self.n:
                raise CodeError(f"ragged codeword {c}: expected length {self.n}")
            if any(x not in (0, 1) for x in c):
                raise CodeError(f"non-binary symbol in codeword {c}")
        if len(set(self.codewords)) != len(self.codewords):
            raise CodeError("duplicate codeword")

    @property
    def size(self) -> int:
        return len(self.codewords)

    def word(self, j: int) -> Codeword:
        """Codeword c_j, 1-based."""
        if not 1 <= j <= self.size:
            raise CodeError(f"codeword index {j} out of range 1..{self.size}")
        return self.codewords[j - 1]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "codewords": ["".join(map(str, c)) for c in self.codewords]}


@dataclass(frozen=True)
class QaryCode:
    """An (n, M, q) code over the alphabet {0, .., q-1}."""

    n: int
    q: int
    codewords: tuple[Codeword, ...]

    def __post_init__(self):
        object.__setattr__(self, "codewords", _as_codewords(self.codewords))
        if self.n < 1:
            raise CodeError("code length must be positive")
        if self.q < 2:
            raise CodeError("alphabet size must be at least 2")
        if len(self.codewords) < 1:
            raise CodeError("code must contain at least one codeword")
        for c in self.codewords:
            if len(c) != self.n:
                raise CodeError(f"ragged codeword {c}: expected length {self.n}")
            if any(not 0 <= x < self.q for x in c):
                raise CodeError(f"symbol out of alphabet range in {c}")
        if len(set(self.codewords)) != len(self.codewords):
            raise CodeError("duplicate codeword")

    @property
    def size(self) -> int:
        return len(self.codewords)

    def word(self, j: int) -> Codeword:
        if not 1 <= j <= self.size:
            raise CodeError(f"codeword index {j} out of range 1..{self.size}")
        return self.codewords[j - 1]

    def to_json_dict(self) -> dict:
        if self.q > 10:
            raise CodeError("digit-string serialization supports q <= 10")
        return {
            "n": self.n,
            "q": self.q,
            "codewords": ["".join(map(str, c)) for c in self.codewords],
        }


@dataclass(frozen=True)
class GroupedCode:
    """A binary code whose codewords are partitioned into nonempty groups.

    ``groups[j-1]`` is the 1-based group id of codeword j.  Group ids must
    cover 1..M1 with every group nonempty.
    """

    code: BinaryCode
    groups: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(int(g) for g in self.groups))
        if len(self.groups) != self.code.size:
            raise CodeError("group assignment length must match code size")
        ids = set(self.groups)
        if not ids or min(ids) < 1 or ids != set(range(1, max(ids) + 1)):
            raise CodeError("group ids must cover 1..M1 with no empty group")

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def size(self) -> int:
        return self.code.size

    @property
    def num_groups(self) -> int:
        return max(self.groups)

    def group_of(self, j: int) -> int:
        if not 1 <= j <= self.size:
            raise CodeError(f"codeword index {j} out of range 1..{self.size}")
        return self.groups[j - 1]

    def group_members(self, h: int) -> tuple[int, ...]:
        """1-based codeword indices assigned to group h."""
        return tuple(j for j in range(1, self.size + 1) if self.groups[j - 1] == h)

    def group_index_set(self, indices) -> frozenset[int]:
        """Set of group ids touched by a set of 1-based codeword indices."""
        return frozenset(self.group_of(j) for j in indices)

    def to_json_dict(self) -> dict:
        d = self.code.to_json_dict()
        d["groups"] = list(self.groups)
        return d


@dataclass(frozen=True)
class CoalitionCertificate:
    """Strictly positive rational weights on a subset of codewords.

    ``indices`` are distinct 1-based codeword indices; the parallel
    ``weights`` are positive and sum to exactly 1.  Entries are kept
    sorted by index so certificates compare deterministically.
    """

    indices: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        idx = tuple(int(j) for j in self.indices)
        wts = tuple(Fraction(w) for w in self.weights)
        if len(idx) != len(wts):
            raise CodeError("indices and weights must have equal length")
        if len(idx) < 1:
            raise CodeError("certificate must name at least one codeword")
        if len(set(idx)) != len(idx):
            raise CodeError("certificate indices must be distinct")
        order = sorted(range(len(idx)), key=lambda i: idx[i])
        idx = tuple(idx[i] for i in order)
        wts = tuple(wts[i] for i in order)
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "weights", wts)
        if any(w <= 0 for w in self.weights):
            raise CodeError("certificate weights must be strictly positive")
        if sum(self.weights) != 1:
            raise CodeError("certificate weights must sum to exactly 1")

    def combination(self, code: BinaryCode) -> RationalVector:
        """The exact point sum(weight_j * c_j) produced by this coalition."""
        acc = [_F0] * code.n
        for j, w in zip(self.indices, self.weights):
            c = code.word(j)
            for i in range(code.n):
                if c[i]:
                    acc[i] += w
        return tuple(acc)

    def to_json_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "weights": [format_rational(w) for w in self.weights],
        }


@dataclass
class VerificationReport:
    """Outcome of a property check, with a re-checkable witness on failure.

    ``passed`` is True/False, or None for an inconclusive numeric verdict.
    A failing report always carries a witness that can be re-verified by
    direct substitution (a polytope crossing, a sum collision, a graph
    cycle, a union collision, or a distance violation).
    """

    property_name: str
    passed: bool | None
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed is False and self.witness is None:
            raise CodeError("failing report requires a witness")

    @property
    def verdict(self) -> str:
        if self.passed is None:
            return "inconclusive"
        return "pass" if self.passed else "fail"

    def to_json_dict(self) -> dict:
        return {
            "property": self.property_name,
            "verdict": self.verdict,
            "witness": self.witness,
            "details": self.details,
        }


# ---------------------------------------------------------------------------
# elementary codeword operations


def support(c) -> set[int]:
    """1-based coordinate positions where the codeword is nonzero."""
    return {i + 1 for i, x in enumerate(c) if x}


def hamming_weight(c) -> int:
    return sum(1 for x in c if x)


def puncture(code, coords) -> list[Codeword]:
    """Restrict every codeword to the 1-based coordinate set ``coords``.

    Returns a plain list in the original codeword order; duplicates that
    arise from the projection are preserved, so callers needing base sets
    must deduplicate explicitly.
    """
    words = code.codewords if hasattr(code, "codewords") else list(code)
    if not words:
        return []
    n = len(words[0])
    cols = sorted(set(int(i) for i in coords))
    if not cols:
        raise CodeError("coordinate set must be nonempty")
    if cols[0] < 1 or cols[-1] > n:
        raise CodeError(f"coordinate index out of range 1..{n}")
    return [tuple(c[i - 1] for i in cols) for c in words]


# ---------------------------------------------------------------------------
# rationals and serialization


def parse_rational(x) -> Fraction:
    """Parse an int, a "p/q" string, or an exact decimal string like "0.7"."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise CodeError("refusing to parse a binary float as an exact rational")
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise CodeError(f"malformed rational {x!r}") from e
    raise CodeError(f"cannot parse rational from {type(x).__name__}")


def format_rational(q: Fraction) -> str | int:
    q = Fraction(q)
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational_vector(values) -> RationalVector:
    return tuple(parse_rational(v) for v in values)


def format_rational_vector(vec) -> list:
    return [format_rational(v) for v in vec]


def loads_exact(text: str):
    """json.loads that turns numeric literals into exact Fractions."""
    return json.loads(text, parse_float=Fraction)


def _rows_from_text(text: str) -> list[str]:
    rows = []
    for line in text.splitlines():
        line = "".join(line.split())
        if line:
            rows.append(line)
    return rows


def parse_code(text: str, columns: bool = False):
    """Parse a code from JSON or plain digit rows.

    Plain rows are one codeword per line by default; with ``columns=True``
    the input is read as a printed matrix whose columns are the codewords.
    Returns a BinaryCode, a QaryCode (when a ``q`` field is present and
    exceeds 2 or any symbol does), or a GroupedCode (when ``groups`` is
    present).
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = loads_exact(text)
        return code_from_json_dict(doc, columns=columns)
    rows = _rows_from_text(text)
    if not rows:
        raise CodeError("empty code input")
    return _code_from_rows(rows, q=None, groups=None, columns=columns)


def _code_from_rows(rows: list[str], q, groups, columns: bool):
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise CodeError("ragged rows")
        if not r.isdigit():
            raise CodeError(f"non-digit symbol in row {r!r}")
    grid = [[int(ch) for ch in r] for r in rows]
    if columns:
        grid = [list(col) for col in zip(*grid)]
    maxsym = max(max(row) for row in grid)
    if q is None:
        q = 2 if maxsym <= 1 else maxsym + 1
    if maxsym >= q:
        raise CodeError(f"symbol {maxsym} out of range for alphabet size {q}")
    n = len(grid[0])
    if q == 2:
        code = BinaryCode(n, grid)
        if groups is not None:
            return GroupedCode(code, tuple(groups))
        return code
    if groups is not None:
        raise CodeError("grouped codes must be binary")
    return QaryCode(n, q, grid)


def code_from_json_dict(doc: dict, columns: bool = False):
    if "codewords" not in doc:
        raise CodeError("code JSON requires a 'codewords' field")
    rows = [str(c) for c in doc["codewords"]]
    q = doc.get("q")
    groups = doc.get("groups")
    parsed = _code_from_rows(rows, q=q, groups=groups, columns=columns)
    n = doc.get("n")
    if n is not None and parsed.n != int(n):
        raise CodeError(f"declared length {n} does not match codewords of length {parsed.n}")
    return parsed


def dumps_code(code, indent: int | None = None) -> str:
    return json.dumps(code.to_json_dict(), indent=indent)
