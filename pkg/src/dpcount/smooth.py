"""Singular points of weighted hypersurfaces over F_q and its extensions.

The Jacobian criterion is applied on the affine cone: a class is singular
when the defining polynomial and every formal partial derivative vanish at
one (hence every) representative.  Scans run over the class
representatives of :func:`dpcount.wps.class_representatives`, whose order
also fixes which witness is reported first.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .families import FamilySpec, Surface, monomial_values
from .gf import FieldSpec, extension
from .wps import all_tuples, class_representatives

MAX_EXTENSION_SIZE = 4096
DEFAULT_MAX_EXT = 3
_CACHE_LIMIT = 2 ** 24  # table entries kept per extension degree


class ExtensionTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SmoothnessVerdict:
    status: str                       # "smooth" or "singular"
    max_ext: int
    witness: tuple[int, ...] | None = None
    k: int | None = None
    checked: tuple[int, ...] = dc_field(default=())

    @property
    def smooth(self) -> bool:
        return self.status == "smooth"

    def __str__(self) -> str:
        if self.smooth:
            return f"SmoothUpTo({self.max_ext})"
        return f"SingularAt({self.witness}, {self.k})"

    def to_json(self) -> dict:
        out = {"status": "smooth_up_to" if self.smooth else "singular",
               "max_ext": self.max_ext, "checked": list(self.checked)}
        if not self.smooth:
            out.update(witness=list(self.witness), k=self.k)
        return out


def _term_tables(family: FamilySpec, p: int):
    """Monomials needed for F and all partials, with the integer factors.

    Returns ``(monomials, rows)`` where ``rows[0]`` describes F and
    ``rows[1 + i]`` the partial in variable ``i``.  Each row is a list of
    ``(slot or None, fixed coeff, monomial index, integer factor)``.
    """
    monos: dict[tuple, int] = {}

    def idx(m):
        return monos.setdefault(m, len(monos))

    rows = [[] for _ in range(len(family.ambient) + 1)]
    terms = [(None, m, c) for m, c in family.fixed] + [(s, m, None) for s, m in enumerate(family.free)]
    for slot, m, c in terms:
        rows[0].append((slot, c, idx(m), 1))
        for i, e in enumerate(m):
            if e % p:
                lowered = m[:i] + (e - 1,) + m[i + 1:]
                rows[1 + i].append((slot, c, idx(lowered), e % p))
    return list(monos), rows


def _row_values(big: FieldSpec, emb: np.ndarray, coeffs, row, vals: np.ndarray) -> np.ndarray:
    acc = np.zeros(len(vals), dtype=np.int64)
    for slot, fixed_c, mi, factor in row:
        c = fixed_c if slot is None else int(coeffs[slot])
        if not c:
            continue
        c = big.mul(int(emb[c]), big.from_int(factor))
        if c:
            acc = big.add_array(acc, big.scalar_mul_array(c, vals[:, mi]))
    return np.asarray(acc)


class SmoothnessChecker:
    """Reusable singularity scans for many members of one family."""

    def __init__(self, family: FamilySpec, field: FieldSpec, max_ext: int = DEFAULT_MAX_EXT):
        if max_ext < 1:
            raise ValueError("max_ext must be >= 1")
        if family.degree is None:
            raise ValueError("smoothness needs a graded family")
        self.family = family
        self.field = field
        self.max_ext = max_ext
        self.monomials, self.rows = _term_tables(family, field.p)
        self._tables: dict[int, tuple] = {}

    def _setup(self, k: int):
        if k in self._tables:
            return self._tables[k]
        if self.field.q ** k > MAX_EXTENSION_SIZE:
            raise ExtensionTooLarge(f"F_{self.field.q}^{k} exceeds {MAX_EXTENSION_SIZE} elements")
        big, emb = extension(self.field, k)
        reps = class_representatives(self.family.ambient, big)
        vals = None
        if len(reps) * len(self.monomials) <= _CACHE_LIMIT:
            vals = np.asarray(monomial_values(self.monomials, reps, big), dtype=big.dtype)
        self._tables[k] = (big, emb, reps, vals)
        return self._tables[k]

    def singular_tuples(self, coeffs, k: int, first_only: bool = False) -> list[tuple[int, ...]]:
        big, emb, reps, vals = self._setup(k)
        found: list[tuple[int, ...]] = []
        step = len(reps) if vals is not None else max(1, _CACHE_LIMIT // max(1, len(self.monomials)))
        for lo in range(0, len(reps), step):
            chunk = reps[lo:lo + step]
            v = vals[lo:lo + step] if vals is not None else monomial_values(self.monomials, chunk, big)
            live = np.flatnonzero(_row_values(big, emb, coeffs, self.rows[0], v) == 0)
            for row in self.rows[1:]:
                if not len(live):
                    break
                live = live[_row_values(big, emb, coeffs, row, v[live]) == 0]
            found.extend(tuple(int(c) for c in chunk[i]) for i in live)
            if first_only and found:
                return found[:1]
        return found

    def verdict(self, coeffs) -> SmoothnessVerdict:
        checked = []
        for k in range(1, self.max_ext + 1):
            checked.append(k)
            hit = self.singular_tuples(coeffs, k, first_only=True)
            if hit:
                return SmoothnessVerdict("singular", self.max_ext, hit[0], k, tuple(checked))
        return SmoothnessVerdict("smooth", self.max_ext, checked=tuple(checked))

    def is_smooth(self, coeffs) -> bool:
        return self.verdict(coeffs).smooth


@lru_cache(maxsize=32)
def _checker(family: FamilySpec, field: FieldSpec, max_ext: int) -> SmoothnessChecker:
    return SmoothnessChecker(family, field, max_ext)


def singular_tuples(s: Surface, k: int) -> list[tuple[int, ...]]:
    """Singular classes of ``s`` over F_{q^k}, one representative each."""
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    return _checker(s.family, s.field, max(k, 1)).singular_tuples(s.coefficients, k)


def is_smooth_up_to(s: Surface, max_ext: int = DEFAULT_MAX_EXT) -> SmoothnessVerdict:
    return _checker(s.family, s.field, max_ext).verdict(s.coefficients)


def affine_singular_points(s: Surface, k: int = 1) -> list[tuple[int, ...]]:
    """Singular points of an affine hypersurface (all tuples, origin included).

    Used for restricted curves such as the fibres of the degree-1 elliptic
    fibration, where the chart is affine rather than weighted projective.
    """
    if s.field.q ** k > MAX_EXTENSION_SIZE:
        raise ExtensionTooLarge(f"F_{s.field.q}^{k} exceeds {MAX_EXTENSION_SIZE} elements")
    big, emb = extension(s.field, k)
    monos, rows = _term_tables(s.family, s.field.p)
    tuples = all_tuples(len(s.family.ambient), big, nonzero=False)
    vals = monomial_values(monos, tuples, big)
    live = np.arange(len(tuples))
    for row in rows:
        v = _row_values(big, emb, s.coefficients, row, vals[live])
        live = live[v == 0]
    return [tuple(int(c) for c in tuples[i]) for i in live]
