"""Rational points of weighted projective spaces over finite fields.

A tuple ``t`` (element indices, one per coordinate) is acted on by
``lam . t = (lam**w_0 t_0, ..., lam**w_n t_n)``.  Two F_q tuples are the
same *geometric* point when some ``lam`` in the algebraic closure maps one
to the other.  On a fixed support ``S`` with ``d = gcd(w_i : i in S)`` this
is the same as an F_q* orbit under the reduced weights ``w_i / d``, which
is what :func:`canonicalize` and the vectorised helpers use.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Sequence

import numpy as np

from .gf import FieldSpec, format_element, parse_element

AffineTuple = tuple[int, ...]


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int], check: bool = True):
        object.__setattr__(self, "weights", tuple(int(w) for w in weights))
        if not self.weights or any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive: {self.weights}")
        if check:
            if len(self.weights) < 2:
                raise ValueError("need at least two coordinates")
            if reduce(gcd, self.weights) != 1:
                raise ValueError(f"weights {self.weights} are not well formed (gcd != 1)")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


P3 = WeightSystem((1, 1, 1, 1))
P1123 = WeightSystem((1, 1, 2, 3))
P1112 = WeightSystem((1, 1, 1, 2))


def _check_tuple(t: Sequence[int], ws: WeightSystem, field: FieldSpec) -> tuple[int, ...]:
    t = tuple(int(c) for c in t)
    if len(t) != len(ws):
        raise ValueError(f"tuple {t} does not match weights {ws.weights}")
    if any(not 0 <= c < field.q for c in t):
        raise ValueError(f"tuple {t} has entries outside F_{field.q}")
    return t


def scale(t: Sequence[int], lam: int, ws: WeightSystem, field: FieldSpec) -> AffineTuple:
    t = _check_tuple(t, ws, field)
    if lam == 0:
        raise ValueError("scaling factor must be nonzero")
    return tuple(field.mul(field.pow(lam, w), c) for w, c in zip(ws, t))


def support(t: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(t) if c)


def _bezout(ws: Sequence[int]) -> list[int]:
    """Integers a_i with sum(a_i * w_i) == gcd(ws)."""
    coeffs = [1] + [0] * (len(ws) - 1)
    g = ws[0]
    for k in range(1, len(ws)):
        # extended Euclid on (g, ws[k])
        old_r, r, old_s, s, old_t, t = g, ws[k], 1, 0, 0, 1
        while r:
            quot = old_r // r
            old_r, r = r, old_r - quot * r
            old_s, s = s, old_s - quot * s
            old_t, t = t, old_t - quot * t
        coeffs = [c * old_s for c in coeffs]
        coeffs[k] = old_t
        g = old_r
    return coeffs


def equivalent(u: Sequence[int], v: Sequence[int], ws: WeightSystem, field: FieldSpec) -> bool:
    """Whether ``u`` and ``v`` are the same point over the algebraic closure."""
    u = _check_tuple(u, ws, field)
    v = _check_tuple(v, ws, field)
    s = support(u)
    if s != support(v):
        return False
    if not s:
        return True
    ratios = [field.mul(v[i], field.inv(u[i])) for i in s]
    w = [ws[i] for i in s]
    d = reduce(gcd, w)
    # mu = lam**d is pinned down by the Bezout combination; then check it
    mu = 1
    for a, r in zip(_bezout([x // d for x in w]), ratios):
        mu = field.mul(mu, field.pow(r, a))
    return all(field.pow(mu, wi // d) == r for wi, r in zip(w, ratios))


@dataclass(frozen=True)
class ProjPoint:
    representative: AffineTuple
    weights: WeightSystem

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.representative) + "]"


def _orbit(t: AffineTuple, ws: WeightSystem, field: FieldSpec) -> list[AffineTuple]:
    s = support(t)
    d = reduce(gcd, [ws[i] for i in s])
    return [tuple(field.mul(field.pow(mu, w // d), c) for w, c in zip(ws, t))
            for mu in range(1, field.q)]


def canonicalize(t: Sequence[int], ws: WeightSystem, field: FieldSpec) -> ProjPoint:
    """Lexicographically least F_q tuple equivalent to ``t``."""
    t = _check_tuple(t, ws, field)
    if not any(t):
        raise ValueError("the zero tuple is not a point")
    return ProjPoint(min(_orbit(t, ws, field)), ws)


def enumerate_points(ws: WeightSystem, field: FieldSpec) -> list[ProjPoint]:
    reps = {canonicalize(tuple(int(c) for c in row), ws, field).representative
            for row in class_representatives(ws, field)}
    return [ProjPoint(r, ws) for r in sorted(reps)]


def point_count(ws: WeightSystem, field: FieldSpec) -> int:
    return (field.q ** len(ws) - 1) // (field.q - 1)


# -- vectorised tuple sets ------------------------------------------------------

def all_tuples(n: int, field: FieldSpec, nonzero: bool = True) -> np.ndarray:
    """Every tuple of length ``n`` in index order (first coordinate slowest)."""
    if n == 0:
        grids = np.zeros((1, 0), dtype=np.int64)
    else:
        grids = np.indices((field.q,) * n).reshape(n, -1).T
    if nonzero:
        grids = grids[1:]
    return grids.astype(np.int64)


def class_representatives(ws: WeightSystem, field: FieldSpec) -> np.ndarray:
    """One F_q tuple per point of the weighted projective space.

    Tuples with a nonzero weight-1 coordinate are normalised so that the
    first such coordinate equals 1; the remaining tuples (supported on
    heavier coordinates) are deduplicated by brute-force canonicalisation.
    The representatives are not lex-minimal; see :func:`canonicalize`.
    """
    return _class_representatives(ws, field).copy()


@lru_cache(maxsize=64)
def _class_representatives(ws: WeightSystem, field: FieldSpec) -> np.ndarray:
    n = len(ws)
    ones = [i for i, w in enumerate(ws) if w == 1]
    heavy = [i for i, w in enumerate(ws) if w != 1]
    blocks = []
    for k, pivot in enumerate(ones):
        free = ones[k + 1:] + heavy
        rest = all_tuples(len(free), field, nonzero=False)
        block = np.zeros((len(rest), n), dtype=np.int64)
        block[:, pivot] = 1
        block[:, free] = rest
        blocks.append(block)
    if heavy:
        sub = WeightSystem([ws[i] for i in heavy], check=False)
        combos = all_tuples(len(heavy), field)
        _, first = np.unique(canonical_keys(combos, sub, field), return_index=True)
        block = np.zeros((len(first), n), dtype=np.int64)
        block[:, heavy] = combos[np.sort(first)]
        blocks.append(block)
    out = np.concatenate(blocks) if blocks else np.zeros((0, n), dtype=np.int64)
    out.setflags(write=False)
    return out


def canonical_keys(tuples: np.ndarray, ws: WeightSystem, field: FieldSpec) -> np.ndarray:
    """Integer key of the canonical representative of every row."""
    tuples = np.asarray(tuples, dtype=np.int64)
    q = field.q
    n = tuples.shape[1]
    mask = tuples != 0
    # gcd of weights over each row's support
    d = np.zeros(len(tuples), dtype=np.int64)
    for i, w in enumerate(ws):
        d = np.where(mask[:, i], np.gcd(d, w), d)
    best = None
    for mu in range(1, q):
        key = np.zeros(len(tuples), dtype=np.int64)
        for i, w in enumerate(ws):
            col = tuples[:, i]
            # mu ** (w // d) depends on the row through d
            factors = np.array([field.pow(mu, w // g) if g else 1
                                for g in range(int(d.max()) + 1)], dtype=np.int64)
            key = key * q + field.mul_array(factors[d], col)
        best = key if best is None else np.minimum(best, key)
    return best


def decode_key(key: int, n: int, field: FieldSpec) -> AffineTuple:
    out = []
    for _ in range(n):
        out.append(key % field.q)
        key //= field.q
    return tuple(reversed(out))


def format_point(t: Sequence[int], field: FieldSpec) -> str:
    return "[" + ",".join(format_element(int(c), field) for c in t) + "]"


def parse_point(text: str, field: FieldSpec) -> AffineTuple:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed point literal {text!r}")
    return tuple(parse_element(part, field) for part in text[1:-1].split(","))
