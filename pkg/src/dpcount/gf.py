"""Arithmetic in small finite fields F_{p^r}.

Elements are encoded by an integer index in ``[0, q)`` whose base-``p``
digits (little-endian) are the coefficients of the residue polynomial
modulo the field's defining polynomial.  In characteristic 2 addition is
therefore a plain XOR of indices, and in prime fields the index *is* the
residue.

All hot-path arithmetic is table driven.  For ``q <= 512`` full
``q x q`` addition and multiplication tables are built; larger fields
(only used as extensions by the smoothness scan) fall back to log/exp
tables and digit-wise addition.
"""
from __future__ import annotations

import builtins
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "FieldSpec", "Element", "GF", "field_from_literal", "field_literal",
    "add", "mul", "inv", "pow", "enumerate", "extension", "embedding",
    "parse_element", "format_element",
]

TABLE_LIMIT = 512

# little-endian coefficient lists of monic moduli, keyed by (p, r)
CANONICAL_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p as little-endian int tuples

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = builtins.pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in builtins.enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    r = len(modulus) - 1
    if r == 1:
        return True
    # no monic factor of degree 1..r//2
    for k in range(1, r // 2 + 1):
        for low in product(range(p), repeat=k):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def _find_modulus(p: int, r: int) -> tuple[int, ...]:
    if (p, r) in CANONICAL_MODULI:
        return CANONICAL_MODULI[(p, r)]
    if r == 1:
        return (0, 1)
    for low in product(range(p), repeat=r):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] != 0 and _is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {r} over F_{p}")


class FieldSpec:
    """The finite field F_{p^r} = F_p[t]/(modulus).

    Instances are immutable; the lookup tables are built lazily and can be
    shared freely between threads or pickled to worker processes.
    """

    def __init__(self, p: int, r: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if r < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = _find_modulus(p, r)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {r}")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = modulus

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, r={self.r}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.r, self.modulus) == (
            other.p, other.r, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __reduce__(self):
        return (FieldSpec, (self.p, self.r, self.modulus))

    # -- encoding -----------------------------------------------------------
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.r):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(list(ds)[: self.r]):
            a = a * self.p + d % self.p
        return a

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    # -- slow reference arithmetic (used to build the tables) ---------------
    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.r - 1)
        for i, x in builtins.enumerate(da):
            if x:
                for j, y in builtins.enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_poly_mod(prod, self.modulus, self.p) + [0] * self.r)

    def _digit_add(self, a, b):
        """Vectorised digit-wise addition for fields without full tables."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.r):
            out += ((a // scale + b // scale) % self.p) * scale
            scale *= self.p
        return out

    # -- tables ---------------------------------------------------------------
    @cached_property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint16

    @cached_property
    def _log_exp(self) -> tuple[np.ndarray, np.ndarray]:
        g = self.primitive_element
        exp = np.zeros(2 * (self.q - 1), dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, g)
        exp[self.q - 1:] = exp[: self.q - 1]
        return log, exp

    @cached_property
    def primitive_element(self) -> int:
        order = self.q - 1
        primes = [f for f in range(2, order + 1) if order % f == 0 and _is_prime(f)]
        for g in range(1, self.q):
            if all(self._slow_pow(g, order // f) != 1 for f in primes):
                return g
        raise AssertionError("multiplicative group is cyclic")  # pragma: no cover

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    @cached_property
    def add_table(self) -> np.ndarray:
        idx = np.arange(self.q)
        return self._digit_add(idx[:, None], idx[None, :]).astype(self.dtype)

    @cached_property
    def mul_table(self) -> np.ndarray:
        log, exp = self._log_exp
        idx = np.arange(self.q)
        t = exp[(log[idx][:, None] + log[idx][None, :]) % (self.q - 1)]
        t[0, :] = 0
        t[:, 0] = 0
        return t.astype(self.dtype)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.from_digits([-d for d in self.digits(a)])
                         for a in range(self.q)], dtype=self.dtype)

    @cached_property
    def inv_table(self) -> np.ndarray:
        log, exp = self._log_exp
        t = exp[(-log) % (self.q - 1)]
        t[0] = 0
        return t.astype(self.dtype)

    # -- vectorised arithmetic on index arrays --------------------------------
    def add_array(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.q <= TABLE_LIMIT:
            return self.add_table[a, b]
        return self._digit_add(a, b)

    def mul_array(self, a, b) -> np.ndarray:
        if self.q <= TABLE_LIMIT:
            return self.mul_table[a, b]
        log, exp = self._log_exp
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_array(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        log, exp = self._log_exp
        out = exp[(log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def scalar_mul_array(self, c: int, a) -> np.ndarray:
        if c == 0:
            return np.zeros(np.shape(a), dtype=self.dtype)
        if c == 1:
            return np.asarray(a)
        return self.mul_array(np.full(np.shape(a), c, dtype=np.int64), a)

    # -- scalar arithmetic ----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.add_array(a, b))

    def neg(self, a: int) -> int:
        if self.q <= TABLE_LIMIT:
            return int(self.neg_table[a])
        return self.from_digits([-d for d in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_array(a, b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.q <= TABLE_LIMIT:
            return int(self.inv_table[a])
        log, exp = self._log_exp
        return int(exp[(-log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1  # 0**0 == 1 by convention
        if a == 0:
            return 0
        log, exp = self._log_exp
        return int(exp[(int(log[a]) * e) % (self.q - 1)])

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    def elements(self) -> list["Element"]:
        return [Element(self, i) for i in range(self.q)]

    def __call__(self, value) -> "Element":
        if isinstance(value, str):
            return Element(self, parse_element(value, self))
        return Element(self, int(value))

    @property
    def alpha(self) -> "Element":
        """The residue class of ``t`` (only meaningful for r > 1)."""
        return Element(self, self.p if self.r > 1 else 0)


@dataclass(frozen=True)
class Element:
    field: FieldSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise ValueError(f"index {self.index} outside F_{self.field.q}")

    def _check(self, other) -> "Element":
        if isinstance(other, int):
            return Element(self.field, self.field.from_int(other))
        if not isinstance(other, Element) or other.field != self.field:
            raise TypeError("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.add(self.index, other.index))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.field, self.field.neg(self.index))

    def __sub__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.sub(self.index, other.index))

    def __mul__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.mul(self.index, other.index))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.mul(self.index, self.field.inv(other.index)))

    def __pow__(self, e: int):
        return Element(self.field, self.field.pow(self.index, e))

    def __bool__(self) -> bool:
        return self.index != 0

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return format_element(self.index, self.field)


# -- module level operations ------------------------------------------------

def _same_field(a: Element, b: Element) -> FieldSpec:
    if a.field != b.field:
        raise TypeError("elements belong to different fields")
    return a.field


def add(a: Element, b: Element) -> Element:
    return Element(_same_field(a, b), a.field.add(a.index, b.index))


def mul(a: Element, b: Element) -> Element:
    return Element(_same_field(a, b), a.field.mul(a.index, b.index))


def inv(a: Element) -> Element:
    return Element(a.field, a.field.inv(a.index))


def pow(a: Element, e: int) -> Element:  # noqa: A001 - mirrors the operation name
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return Element(a.field, a.field.pow(a.index, e))


def enumerate(field: FieldSpec) -> list[Element]:  # noqa: A001
    return field.elements()


@lru_cache(maxsize=None)
def GF(q: int, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Field with ``q`` elements and the canonical (or given) modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise ValueError(f"{q} is not a prime power")
    r, n = 0, q
    while n % p == 0:
        n //= p
        r += 1
    if n != 1 or not _is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return FieldSpec(p, r, modulus)


_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def field_from_literal(text: str | int) -> FieldSpec:
    """Parse ``"p^r"`` or ``"q"`` (e.g. ``"4"`` or ``"2^2"``)."""
    m = _FIELD_RE.match(str(text))
    if not m:
        raise ValueError(f"malformed field literal {text!r}")
    base = int(m.group(1))
    if m.group(2) is None:
        return GF(base)
    if not _is_prime(base):
        raise ValueError(f"malformed field literal {text!r}: {base} is not prime")
    r = int(m.group(2))
    if r < 1:
        raise ValueError(f"malformed field literal {text!r}: exponent must be >= 1")
    return GF(base ** r)


def field_literal(field: FieldSpec) -> str:
    return str(field.p) if field.r == 1 else f"{field.p}^{field.r}"


def parse_element(text: str, field: FieldSpec) -> int:
    """Base-p digit string, little-endian: ``"01"`` is t in F_4."""
    text = text.strip()
    if not text or not text.isdigit():
        raise ValueError(f"malformed element literal {text!r}")
    ds = [int(c) for c in text]
    if len(ds) > field.r or any(d >= field.p for d in ds):
        raise ValueError(f"element literal {text!r} not in F_{field.q}")
    return field.from_digits(ds + [0] * (field.r - len(ds)))


def format_element(a: int, field: FieldSpec) -> str:
    if field.r == 1:
        return str(a)
    ds = field.digits(a)
    while len(ds) > 1 and ds[-1] == 0:
        ds.pop()
    return "".join(str(d) for d in ds)


# -- extensions ---------------------------------------------------------------

@lru_cache(maxsize=None)
def extension(field: FieldSpec, k: int) -> tuple[FieldSpec, np.ndarray]:
    """The degree-``k`` extension of ``field`` and the embedding table.

    Returns ``(big, table)`` where ``table[a]`` is the index in ``big`` of
    the image of ``a``.
    """
    if k == 1:
        return field, np.arange(field.q)
    big = GF(field.q ** k)
    return big, embedding(field, big)


def embedding(small: FieldSpec, big: FieldSpec) -> np.ndarray:
    if small.p != big.p or big.r % small.r:
        raise ValueError("no embedding between these fields")
    if small.r == 1:
        return np.arange(small.q)
    # locate a root of small's modulus inside big
    roots = [b for b in range(big.q)
             if _eval_poly(small.modulus, b, big) == 0]
    beta = roots[0]
    table = np.zeros(small.q, dtype=np.int64)
    for a in range(small.q):
        acc, power = 0, 1
        for d in small.digits(a):
            if d:
                acc = big.add(acc, big.mul(big.from_int(d), power))
            power = big.mul(power, beta)
        table[a] = acc
    return table


def _eval_poly(coeffs: Sequence[int], x: int, field: FieldSpec) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), field.from_int(c))
    return acc


def iter_elements(field: FieldSpec) -> Iterator[int]:
    return iter(range(field.q))
