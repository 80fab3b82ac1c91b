"""Seifert matrices, Alexander polynomials and the bundled knot catalog.

Conventions: ``mirror(A) = -A^T`` negates signatures, ``reverse(A) = A^T``
preserves them, and the concordance inverse is ``mirror(reverse(A)) = -A``.
The catalog trefoil is the one with sigma(-1) = -2.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import cached_property
from importlib import resources

from .errors import BadParameter, NotFound, NotSeifert, SchemaError
from .exactnum import polyops as P
from .exactnum.laurent import LaurentPoly


def det_int(M) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _interpolate(values) -> tuple:
    """Integer polynomial through (i, values[i]) for i = 0..len-1."""
    n = len(values)
    coeffs = [Fraction(0)] * n
    for i, yi in enumerate(values):
        if yi == 0:
            continue
        basis = (Fraction(1),)
        denom = 1
        for j in range(n):
            if j != i:
                basis = P.pmul(basis, (-j, 1))
                denom *= i - j
        for k, c in enumerate(basis):
            coeffs[k] += c * yi / denom
    return P.trim(int(c) for c in coeffs)


def _components(A) -> list[list[int]]:
    n = len(A)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (A[i][j] or A[j][i]):
                    seen[j] = True
                    stack.append(j)
        out.append(sorted(comp))
    return out


class SeifertMatrix:
    """Validated integer Seifert matrix (even size, det(A - A^T) = 1)."""

    __slots__ = ("entries", "name", "__dict__")

    def __init__(self, entries, name: str | None = None, _checked: bool = False):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not _checked:
            n = len(rows)
            if any(len(r) != n for r in rows):
                raise NotSeifert("matrix is not square")
            if n % 2:
                raise NotSeifert(f"odd size {n}")
            skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
            d = det_int(skew)
            if d != 1:
                raise NotSeifert(f"det(A - A^T) = {d}, expected 1")
        self.entries = rows
        self.name = name

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def __eq__(self, other):
        return isinstance(other, SeifertMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"SeifertMatrix({label}{[list(r) for r in self.entries]})"

    # -- structure -----------------------------------------------------
    @cached_property
    def blocks(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Diagonal blocks of the nonzero pattern; signatures add and
        Alexander polynomials multiply over them."""
        out = []
        for comp in _components(self.entries):
            out.append(tuple(tuple(self.entries[i][j] for j in comp) for i in comp))
        return tuple(out)

    @cached_property
    def alexander_raw(self) -> tuple:
        """Integer coefficients of det(A - t A^T), unnormalized."""
        f = (1,)
        for b in self.blocks:
            f = P.pmul(f, block_alexander(b))
        return f

    def alexander(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.alexander_raw).normalize()

    def transpose(self) -> tuple:
        n = self.size
        return tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n))

    def to_json(self) -> dict:
        out = {"name": self.name, "seifert": [list(r) for r in self.entries]}
        return out


_BLOCK_ALEX: dict = {}


def block_alexander(B) -> tuple:
    """det(B - t B^T) for a square integer block, cached."""
    B = tuple(tuple(r) for r in B)
    hit = _BLOCK_ALEX.get(B)
    if hit is not None:
        return hit
    n = len(B)
    vals = []
    for t in range(n + 1):
        vals.append(det_int([[B[i][j] - t * B[j][i] for j in range(n)] for i in range(n)]))
    f = _interpolate(vals)
    if len(_BLOCK_ALEX) < 8192:
        _BLOCK_ALEX[B] = f
    return f


def make_seifert(entries, name: str | None = None) -> SeifertMatrix:
    return SeifertMatrix(entries, name)


def alexander_poly(A: SeifertMatrix) -> LaurentPoly:
    return A.alexander()


def block_sum(A: SeifertMatrix, B: SeifertMatrix, name=None) -> SeifertMatrix:
    n, m = A.size, B.size
    rows = [list(r) + [0] * m for r in A.entries]
    rows += [[0] * n + list(r) for r in B.entries]
    return SeifertMatrix(rows, name, _checked=True)


def mirror(A: SeifertMatrix) -> SeifertMatrix:
    """-A^T: the mirror image; negates sigma and the jump function."""
    T = A.transpose()
    name = f"mirror({A.name})" if A.name else None
    return SeifertMatrix([[-x for x in r] for r in T], name, _checked=True)


def reverse(A: SeifertMatrix) -> SeifertMatrix:
    """A^T: orientation reversal; preserves sigma."""
    name = f"reverse({A.name})" if A.name else None
    return SeifertMatrix(A.transpose(), name, _checked=True)


def concordance_inverse(A: SeifertMatrix) -> SeifertMatrix:
    """-A = mirror(reverse(A))."""
    name = f"-({A.name})" if A.name else None
    return SeifertMatrix([[-x for x in r] for r in A.entries], name, _checked=True)


def torus_knot_2q(q: int) -> SeifertMatrix:
    """Band Seifert matrix of T(2, q): -1 diagonal, +1 superdiagonal."""
    if q < 3 or q % 2 == 0:
        raise BadParameter(f"T(2,q) needs odd q >= 3, got {q}")
    n = q - 1
    rows = [[-1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]
    return SeifertMatrix(rows, f"T2_{q}")


def unknot() -> SeifertMatrix:
    return SeifertMatrix([], "unknot")


class KnotSum:
    """Formal connected sum  sum_i c_i K_i  of Seifert-matrix knots.

    Negative coefficients mean concordance inverses.  Multiplicities stay
    symbolic so that families with very many copies remain cheap; the
    signature and jump function are linear in the coefficients.
    """

    __slots__ = ("terms", "name")

    def __init__(self, terms, name: str | None = None):
        merged: dict = {}
        order = []
        for A, c in terms:
            if A not in merged:
                merged[A] = 0
                order.append(A)
            merged[A] += int(c)
        self.terms = tuple((A, merged[A]) for A in order if merged[A] and A.size)
        self.name = name

    @classmethod
    def of(cls, A: SeifertMatrix) -> "KnotSum":
        return cls([(A, 1)], A.name)

    def scaled(self, k: int) -> "KnotSum":
        return KnotSum([(A, c * k) for A, c in self.terms], self.name)

    def __add__(self, other: "KnotSum") -> "KnotSum":
        return KnotSum(self.terms + other.terms)

    def __neg__(self):
        return self.scaled(-1)

    @property
    def total_size(self) -> int:
        return sum(abs(c) * A.size for A, c in self.terms)

    def materialize(self, limit: int = 400) -> SeifertMatrix:
        """Explicit block-sum Seifert matrix (refuses huge sums)."""
        if self.total_size > limit:
            raise BadParameter(f"connected sum of size {self.total_size} exceeds {limit}")
        out = unknot()
        for A, c in self.terms:
            piece = A if c > 0 else concordance_inverse(A)
            for _ in range(abs(c)):
                out = block_sum(out, piece)
        out.name = self.name
        return out

    def __eq__(self, other):
        return isinstance(other, KnotSum) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        inner = ""
        for A, c in self.terms:
            label = A.name or list(map(list, A.entries))
            sep = (" - " if c < 0 else " + ") if inner else ("-" if c < 0 else "")
            inner += f"{sep}{abs(c)}*{label}"
        return f"KnotSum({inner or '0'})"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "summands": [{"knot": A.to_json(), "multiplicity": c} for A, c in self.terms],
        }


# --- catalog ---------------------------------------------------------------

def _load_records(text: str, source: str) -> dict:
    data = json.loads(text)
    if not isinstance(data, list):
        raise SchemaError("catalog", f"{source}: expected a JSON array of knot records")
    out = {}
    for rec in data:
        if not isinstance(rec, dict) or "name" not in rec or "seifert" not in rec:
            raise SchemaError("catalog", f"{source}: each record needs 'name' and 'seifert'")
        out[rec["name"]] = rec
    return out


def catalog_records() -> dict:
    """Bundled records, overlaid by the file named in CONCORDIA_CATALOG."""
    text = resources.files("concordia.data").joinpath("catalog.json").read_text()
    recs = _load_records(text, "bundled catalog")
    path = os.environ.get("CONCORDIA_CATALOG")
    if path:
        with open(path) as fh:
            recs.update(_load_records(fh.read(), path))
    return recs


def catalog_get(name: str) -> SeifertMatrix:
    recs = catalog_records()
    if name not in recs:
        raise NotFound(f"no catalog knot named {name!r}")
    return SeifertMatrix(recs[name]["seifert"], name)


def crossing_number(name: str) -> int | None:
    rec = catalog_records().get(name)
    return None if rec is None else rec.get("crossing_number")
