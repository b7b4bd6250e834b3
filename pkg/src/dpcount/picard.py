"""Picard-lattice combinatorics, Weil traces, Urabe tables, elliptic fibres.

Classes in the Picard lattice of a blowup of P^2 in ``r`` points are
written ``(d; m_1, ..., m_r)`` meaning ``d L - sum m_i E_i``, with pairing
``d d' - sum m_i m'_i``.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import product
from math import isqrt
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .families import FamilySpec, Surface, restrict
from .gf import FieldSpec, _is_prime
from .smooth import affine_singular_points
from .wps import all_tuples, canonical_keys

EXCEPTIONAL_COUNTS = (0, 1, 3, 6, 10, 16, 27, 56, 240)


# -- lattice ----------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PicClass:
    d: int
    m: tuple[int, ...]

    def __init__(self, d: int, m: Sequence[int] = ()):
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "m", tuple(int(x) for x in m))

    @property
    def r(self) -> int:
        return len(self.m)

    def self_intersection(self) -> int:
        return self.d * self.d - sum(x * x for x in self.m)

    def anticanonical_degree(self) -> int:
        return 3 * self.d - sum(self.m)

    def __str__(self) -> str:
        return f"({self.d}; {', '.join(map(str, self.m))})"


def line_class(r: int) -> PicClass:
    return PicClass(1, (0,) * r)


def exceptional_divisor(i: int, r: int) -> PicClass:
    """The class E_i, written with multiplicity -1 at position ``i``."""
    if not 0 <= i < r:
        raise ValueError(f"index {i} out of range for r={r}")
    return PicClass(0, tuple(-1 if j == i else 0 for j in range(r)))


def pair(a: PicClass, b: PicClass) -> int:
    if a.r != b.r:
        raise ValueError(f"rank mismatch: r={a.r} vs r={b.r}")
    return a.d * b.d - sum(x * y for x, y in zip(a.m, b.m))


def _partitions(total_sq: int, total: int, slots: int, lo: int, hi: int):
    """Non-increasing sequences in [lo, hi] with given sum and sum of squares."""
    if slots == 0:
        if total == 0 and total_sq == 0:
            yield ()
        return
    for v in range(min(hi, total - lo * (slots - 1)), lo - 1, -1):
        rest_sq = total_sq - v * v
        if rest_sq < 0:
            continue
        for tail in _partitions(rest_sq, total - v, slots - 1, lo, v):
            yield (v,) + tail


def _distinct_permutations(seq: tuple[int, ...]) -> set[tuple[int, ...]]:
    out = {()}
    for v in seq:
        out = {p[:k] + (v,) + p[k:] for p in out for k in range(len(p) + 1)}
    return out


def exceptional_classes(r: int) -> list[PicClass]:
    """All classes with self-intersection -1 and anticanonical degree 1."""
    if not 0 <= r <= 8:
        raise ValueError("r must lie in 0..8")
    found = set()
    for d in range(0, 8):
        # sum m_i = 3d - 1 and sum m_i^2 = d^2 + 1
        for shape in _partitions(d * d + 1, 3 * d - 1, r, -1, d):
            for perm in _distinct_permutations(shape):
                found.add(PicClass(d, perm))
    return sorted(found)


# -- Weil traces ------------------------------------------------------------------

def weil_count(q: int, trace: int) -> int:
    return q * q + q * trace + 1


def min_trace_on_pic(d: int) -> int:
    table = {1: -7, 2: -6, 3: -2}
    if d not in table:
        raise ValueError(f"unsupported degree {d}")
    return table[d]


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(k for k in range(2, q + 1) if q % k == 0)
    while q % p == 0:
        q //= p
    return q == 1 and _is_prime(p)


def candidate_fields(d: int, target: int) -> list[int]:
    """Prime powers q admitting a trace T in range with q^2 + qT + 1 = target."""
    if target < 0:
        raise ValueError("target must be nonnegative")
    lo, hi = min_trace_on_pic(d), 10 - d
    out = []
    # q^2 + q lo + 1 <= target forces a finite search range
    q = 2
    while q * q + q * lo + 1 <= max(target, 1) or q <= -lo:
        if is_prime_power(q) and (target - 1 - q * q) % q == 0:
            t = (target - 1 - q * q) // q
            if lo <= t <= hi:
                out.append(q)
        q += 1
    return out


# -- Urabe tables ------------------------------------------------------------------

_F_PIECES = (
    (2, 24, 36), (25, 33, 41), (46, 52, 45), (53, 56, 46), (57, 59, 48),
)
_F_POINTS = {1: 98, 34: 76, 35: 79, 36: 80, 37: 109, 38: 87, 39: 88, 40: 95,
             41: 101, 42: 103, 43: 104, 44: 107, 45: 110, 60: 111}
F_EXCLUDED = (40, 41, 44, 50, 55, 59)


def urabe_f(i: int) -> int:
    """Row map from the E7 table to the E8 table induced by blowing up a point."""
    if not 1 <= i <= 60:
        raise ValueError("row must lie in 1..60")
    if i in _F_POINTS:
        return _F_POINTS[i]
    for lo, hi, shift in _F_PIECES:
        if lo <= i <= hi:
            return i + shift
    raise AssertionError(i)


def urabe_f_preimages(j: int) -> list[int]:
    return [i for i in range(1, 61) if urabe_f(i) == j]


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class UrabeRow:
    row: int
    carter: str
    trace: int
    index: int
    orbits: tuple[tuple[int, int], ...]
    h1: str

    def orbit_total(self) -> int:
        return sum(size * mult for size, mult in self.orbits)


TABLE_HEADER = ["row", "carter", "trace", "index", "orbits", "h1"]


def parse_orbits(text: str) -> tuple[tuple[int, int], ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split("*"):
        size, sep, mult = part.strip().partition("^")
        out.append((int(size), int(mult) if sep else 1))
    return tuple(out)


def parse_table(source) -> list[UrabeRow]:
    """Read a CSV table; ``source`` is a path or an open text stream."""
    if isinstance(source, (str, Path)):
        with open(source, newline="") as fh:
            return parse_table(io.StringIO(fh.read()))
    reader = csv.reader(source)
    rows: list[UrabeRow] = []
    header_seen = False
    for lineno, record in enumerate(reader, start=1):
        if not record or all(not c.strip() for c in record) or record[0].lstrip().startswith("#"):
            continue
        if not header_seen:
            if [c.strip().lower() for c in record] != TABLE_HEADER:
                raise TableError(f"line {lineno}: expected header {','.join(TABLE_HEADER)}")
            header_seen = True
            continue
        if len(record) != len(TABLE_HEADER):
            raise TableError(f"line {lineno}: expected {len(TABLE_HEADER)} fields, got {len(record)}")
        try:
            rows.append(UrabeRow(int(record[0]), record[1].strip(), int(record[2]),
                                 int(record[3]), parse_orbits(record[4]), record[5].strip()))
        except ValueError as exc:
            raise TableError(f"line {lineno}: {exc}") from exc
    return rows


def filter_rows(rows: Iterable[UrabeRow], q: int, target: int) -> list[int]:
    return [r.row for r in rows if weil_count(q, r.trace) == target]


# -- elliptic fibration of degree-1 surfaces -----------------------------------------

@dataclass(frozen=True)
class FiberReport:
    base: tuple[int, int]
    count: int
    smooth: bool
    hasse: bool

    def to_json(self) -> dict:
        return {"base": list(self.base), "count": self.count,
                "smooth": self.smooth, "hasse": self.hasse}


def hasse_ok(n: int, q: int) -> bool:
    return (n - q - 1) ** 2 <= 4 * q


def min_fiber_points(q: int) -> int:
    if q < 2:
        raise ValueError("q must be at least 2")
    return q + 1 - isqrt(4 * q)


def base_points(field: FieldSpec) -> list[tuple[int, int]]:
    """The q+1 points (m:n) of P^1, normalised with the last nonzero entry 1."""
    return [(m, 1) for m in range(field.q)] + [(1, 0)]


def _check_dp1(s: Surface) -> None:
    if s.family.ambient.weights != (1, 1, 2, 3) or s.family.variables[:2] != ("x", "y"):
        raise ValueError("fibres are defined for degree-1 families in P(1,1,2,3)")


def fiber_curve(s: Surface, base: tuple[int, int]) -> Surface:
    """The affine (z, w) curve cut out by fixing (x, y) = (m, n)."""
    _check_dp1(s)
    m, n = base
    if m == 0 and n == 0:
        raise ValueError("base point (0:0) is not a point of P^1")
    return restrict(s, {"x": m, "y": n})


def fiber_count(s: Surface, base: tuple[int, int], max_ext: int = 2) -> FiberReport:
    """Rational points of ``s`` above ``base``, the base locus x=y=0 excluded.

    With (x, y) normalised to (m, n) the residual scaling is trivial, so
    fibre points are exactly the affine (z, w) solutions.  The Hasse check is
    applied to the completed Weierstrass curve, whose one extra point at
    infinity is the section through the base locus.
    """
    curve = fiber_curve(s, base)
    f = s.field
    tuples = all_tuples(2, f, nonzero=False)
    count = int((curve.values(tuples) == 0).sum())
    smooth = True
    for k in range(1, max_ext + 1):
        if f.q ** k > 4096:
            break
        if affine_singular_points(curve, k):
            smooth = False
            break
    return FiberReport(tuple(base), count, smooth, hasse_ok(count + 1, f.q))


def fibers(s: Surface, max_ext: int = 2) -> list[FiberReport]:
    return [fiber_count(s, b, max_ext) for b in base_points(s.field)]


def base_locus_count(s: Surface) -> int:
    """Projective points of ``s`` with x = y = 0."""
    _check_dp1(s)
    f = s.field
    zw = all_tuples(2, f)
    tuples = np.zeros((len(zw), 4), dtype=np.int64)
    tuples[:, 2:] = zw
    hits = tuples[s.values(tuples) == 0]
    if not len(hits):
        return 0
    return len(np.unique(canonical_keys(hits, s.family.ambient, f)))
