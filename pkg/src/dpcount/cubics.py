"""Cubic forms over F_2 as 20-bit masks, and their GL_4(F_2) orbits.

Bit ``k`` of a mask is the coefficient of ``CUBIC_P3.free[k]``.  A linear
form is a 4-bit mask (bit ``i`` = coefficient of variable ``i``).  An
invertible substitution sends each variable to a linear form; the image
of a cubic is the XOR of the images of its monomials, each a product of
three linear forms, which are tabulated once.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .families import CUBIC_P3, Surface
from .gf import GF

N_VARS = 4


def _slot_index():
    return {m: k for k, m in enumerate(CUBIC_P3.free)}


def surface_to_mask(s: Surface) -> int:
    if s.family != CUBIC_P3 or s.field.q != 2:
        raise ValueError("masks are defined for cubic forms over F_2")
    return sum(1 << k for k, c in enumerate(s.coefficients) if c)


def mask_to_surface(mask: int) -> Surface:
    return Surface(CUBIC_P3, GF(2), tuple((mask >> k) & 1 for k in range(CUBIC_P3.n_slots)))


@lru_cache(maxsize=1)
def _cube_table() -> np.ndarray:
    """``table[a, b, c]`` = mask of the product of linear forms a, b, c."""
    index = _slot_index()
    table = np.zeros((16, 16, 16), dtype=np.int64)
    for a, b, c in product(range(16), repeat=3):
        acc: dict[tuple[int, ...], int] = {}
        for i, j, k in product(range(N_VARS), repeat=3):
            if (a >> i) & 1 and (b >> j) & 1 and (c >> k) & 1:
                e = [0] * N_VARS
                e[i] += 1
                e[j] += 1
                e[k] += 1
                acc[tuple(e)] = acc.get(tuple(e), 0) ^ 1
        table[a, b, c] = sum(1 << index[m] for m, v in acc.items() if v)
    return table


@lru_cache(maxsize=1)
def gl4_f2() -> tuple[tuple[int, ...], ...]:
    """All invertible 4x4 matrices over F_2 as tuples of row masks."""
    out = []
    for rows in product(range(1, 16), repeat=N_VARS):
        span = {0}
        ok = True
        for r in rows:
            if r in span:
                ok = False
                break
            span |= {v ^ r for v in span}
        if ok:
            out.append(rows)
    return tuple(out)


def transform(mask: int, rows: tuple[int, ...]) -> int:
    """Image of a cubic under the substitution x_i -> rows[i]."""
    table = _cube_table()
    out = 0
    for k, m in enumerate(CUBIC_P3.free):
        if (mask >> k) & 1:
            forms = [rows[i] for i in range(N_VARS) for _ in range(m[i])]
            out ^= int(table[forms[0], forms[1], forms[2]])
    return out


def orbit(mask: int) -> frozenset[int]:
    return frozenset(transform(mask, g) for g in gl4_f2())
