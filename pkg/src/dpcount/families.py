"""Graded surface families, their members, and evaluation on tuples.

A :class:`FamilySpec` is a list of monomials in a weighted ambient: some
carry a fixed coefficient (``w**2`` and ``z**3`` in the degree-1 normal
forms), the rest are free slots.  A :class:`Surface` fills the slots with
field elements.  Monomials are exponent tuples in ambient variable order,
so ``(1, 0, 1, 1)`` is ``x*z*w`` in ``P(1,1,2,3)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping, Sequence

import numpy as np

from .gf import FieldSpec, format_element
from .wps import (P1112, P1123, P3, WeightSystem, all_tuples, canonical_keys,
                  class_representatives)

Monomial = tuple[int, ...]

VARIABLES = ("x", "y", "z", "w")


def monomial_key(m: Monomial) -> str:
    return ".".join(str(e) for e in m)


def parse_monomial_key(key: str) -> Monomial:
    try:
        return tuple(int(e) for e in key.split("."))
    except ValueError:
        raise ValueError(f"malformed monomial key {key!r}") from None


def monomial_str(m: Monomial, names: Sequence[str] = VARIABLES) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def weighted_degree(m: Monomial, ws: WeightSystem) -> int:
    return sum(e * w for e, w in zip(m, ws))


def _graded_lex(monomials) -> tuple[Monomial, ...]:
    return tuple(sorted(set(monomials), key=lambda m: (-sum(m), tuple(-e for e in m))))


@dataclass(frozen=True)
class FamilySpec:
    """Monomial basis of a surface family.

    ``fixed`` holds ``(monomial, coefficient)`` pairs where the coefficient
    is an element index (1 for the built-in normal forms).  ``degree`` is
    None for derived inhomogeneous families.  ``homogeneous_solutions``
    records that every member's zero set is a union of scaling classes,
    which is what allows counting on class representatives.
    """
    id: str
    ambient: WeightSystem
    degree: int | None
    fixed: tuple[tuple[Monomial, int], ...]
    free: tuple[Monomial, ...]
    variables: tuple[str, ...] = VARIABLES
    homogeneous_solutions: bool = True
    _slot_index: dict = dc_field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = len(self.ambient)
        if len(self.variables) != n:
            raise ValueError("one variable name per ambient coordinate")
        for m in list(self.free) + [m for m, _ in self.fixed]:
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m} for {n} variables")
            if self.degree is not None and weighted_degree(m, self.ambient) != self.degree:
                raise ValueError(f"monomial {monomial_str(m, self.variables)} "
                                 f"is not of weighted degree {self.degree}")
        if len(set(self.free)) != len(self.free):
            raise ValueError("duplicate free monomial")
        fixed_monos = [m for m, _ in self.fixed]
        if len(set(fixed_monos)) != len(fixed_monos):
            raise ValueError("duplicate fixed monomial")
        if self.degree is not None and set(fixed_monos) & set(self.free):
            raise ValueError("a monomial is both fixed and free")
        object.__setattr__(self, "_slot_index", {m: i for i, m in enumerate(self.free)})

    @property
    def n_slots(self) -> int:
        return len(self.free)

    def slot(self, m: Monomial | str) -> int:
        if isinstance(m, str):
            m = parse_monomial_key(m) if "." in m else _parse_slot_name(m, self)
        try:
            return self._slot_index[tuple(m)]
        except KeyError:
            raise KeyError(f"{m} is not a free slot of {self.id}") from None

    def describe(self) -> str:
        terms = [monomial_str(m, self.variables) for m, _ in self.fixed]
        terms += [f"c{i}*{monomial_str(m, self.variables)}" for i, m in enumerate(self.free)]
        return " + ".join(terms)


def _parse_slot_name(text: str, fam: FamilySpec) -> Monomial:
    """A slot index or a monomial written like ``x^2*w``."""
    if text.isdigit():
        return fam.free[int(text)]
    e = [0] * len(fam.variables)
    for factor in text.replace(" ", "").split("*"):
        var, sep, power = factor.partition("^")
        if var not in fam.variables or (sep and not power.isdigit()):
            raise ValueError(f"unknown slot {text!r}")
        e[fam.variables.index(var)] += int(power) if sep else 1
    return tuple(e)


def binary_forms(deg: int) -> list[tuple[int, int]]:
    return [(deg - j, j) for j in range(deg + 1)]


def forms(deg: int, nvars: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def _dp1(id_: str, parts: Mapping[tuple[int, int], int]) -> FamilySpec:
    """Degree-6 family in P(1,1,2,3): ``parts[(a, b)] = k`` adds z^a w^b * G_k(x, y)."""
    free = []
    for (a, b), k in parts.items():
        free += [(i, j, a, b) for i, j in binary_forms(k)]
    return FamilySpec(id_, P1123, 6, (((0, 0, 0, 2), 1), ((0, 0, 3, 0), 1)), _graded_lex(free))


DP1_CHAR2 = _dp1("DP1_CHAR2", {(1, 1): 1, (0, 1): 3, (1, 0): 4, (0, 0): 6})
DP1_CHAR3 = _dp1("DP1_CHAR3", {(2, 0): 2, (1, 0): 4, (0, 0): 6})
DP1_CLASSIC = _dp1("DP1_CLASSIC", {(1, 0): 4, (0, 0): 6})
DP2_CHAR2 = FamilySpec(
    "DP2_CHAR2", P1112, 4, (((0, 0, 0, 2), 1),),
    _graded_lex([m[:3] + (1,) for m in forms(2, 4) if m[3] == 0]
                + [m[:3] + (0,) for m in forms(4, 4) if m[3] == 0]))
DP2_CLASSIC = FamilySpec(
    "DP2_CLASSIC", P1112, 4, (((0, 0, 0, 2), 1),),
    _graded_lex([m[:3] + (0,) for m in forms(4, 4) if m[3] == 0]))
CUBIC_P3 = FamilySpec("CUBIC_P3", P3, 3, (), _graded_lex(forms(3, 4)))

BUILTIN_FAMILIES = {f.id: f for f in
                    (DP1_CHAR2, DP1_CHAR3, DP1_CLASSIC, DP2_CHAR2, DP2_CLASSIC, CUBIC_P3)}


@dataclass(frozen=True)
class Surface:
    family: FamilySpec
    field: FieldSpec
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != self.family.n_slots:
            raise ValueError(f"{self.family.id} has {self.family.n_slots} slots, "
                             f"got {len(coeffs)} coefficients")
        if any(not 0 <= c < self.field.q for c in coeffs):
            raise ValueError(f"coefficient outside F_{self.field.q}")

    @classmethod
    def from_terms(cls, family: FamilySpec, field: FieldSpec,
                   terms: Mapping[Monomial, int]) -> "Surface":
        coeffs = [0] * family.n_slots
        for m, c in terms.items():
            coeffs[family.slot(tuple(m))] = int(c)
        return cls(family, field, tuple(coeffs))

    def terms(self) -> list[tuple[Monomial, int]]:
        """All (monomial, coefficient) pairs with nonzero coefficient."""
        out = [(m, c) for m, c in self.family.fixed if c]
        out += [(m, c) for m, c in zip(self.family.free, self.coefficients) if c]
        return out

    def is_zero(self) -> bool:
        return not self.terms()

    def evaluate(self, t: Sequence[int]) -> int:
        return evaluate(self, t)

    def values(self, tuples: np.ndarray) -> np.ndarray:
        return surface_values(self, tuples)

    def __str__(self) -> str:
        f = self.field
        parts = []
        for m, c in self.terms():
            mono = monomial_str(m, self.family.variables)
            lit = format_element(c, f)
            if mono == "1":
                parts.append(lit)
            else:
                parts.append(mono if c == 1 else f"{lit}*{mono}")
        return " + ".join(parts) if parts else "0"


# -- evaluation -------------------------------------------------------------

def evaluate(s: Surface, t: Sequence[int]) -> int:
    """Value of the defining polynomial at one tuple (scalar reference path)."""
    f = s.field
    t = tuple(int(c) for c in t)
    if len(t) != len(s.family.ambient):
        raise ValueError("tuple length does not match the ambient")
    if any(not 0 <= c < f.q for c in t):
        raise ValueError(f"tuple entries outside F_{f.q}")
    acc = 0
    for m, c in s.terms():
        term = c
        for x, e in zip(t, m):
            term = f.mul(term, f.pow(x, e))
        acc = f.add(acc, term)
    return acc


def monomial_values(monomials: Sequence[Monomial], tuples: np.ndarray,
                    field: FieldSpec) -> np.ndarray:
    """``out[t, j]`` = value of monomial j at tuple t (element indices)."""
    tuples = np.asarray(tuples, dtype=np.int64)
    out = np.ones((len(tuples), len(monomials)), dtype=np.int64)
    powers: dict[tuple[int, int], np.ndarray] = {}
    for j, m in enumerate(monomials):
        col = out[:, j]
        for i, e in enumerate(m):
            if e == 0:
                continue
            key = (i, e)
            if key not in powers:
                powers[key] = field.pow_array(tuples[:, i], e)
            col = field.mul_array(col, powers[key])
        out[:, j] = col
    return out


def fixed_values(family: FamilySpec, tuples: np.ndarray, field: FieldSpec) -> np.ndarray:
    acc = np.zeros(len(tuples), dtype=np.int64)
    if family.fixed:
        vals = monomial_values([m for m, _ in family.fixed], tuples, field)
        for j, (_, c) in enumerate(family.fixed):
            acc = field.add_array(acc, field.scalar_mul_array(c, vals[:, j]))
    return np.asarray(acc, dtype=np.int64)


def surface_values(s: Surface, tuples: np.ndarray) -> np.ndarray:
    f = s.field
    acc = fixed_values(s.family, tuples, f)
    live = [(m, c) for m, c in zip(s.family.free, s.coefficients) if c]
    if live:
        vals = monomial_values([m for m, _ in live], tuples, f)
        for j, (_, c) in enumerate(live):
            acc = f.add_array(acc, f.scalar_mul_array(c, vals[:, j]))
    return np.asarray(acc, dtype=np.int64)


# -- exponent reduction -------------------------------------------------------

def reduce_exponent(e: int, q: int) -> int:
    return 0 if e == 0 else (e - 1) % (q - 1) + 1


def reduce_monomial(m: Monomial, q: int) -> Monomial:
    return tuple(reduce_exponent(e, q) for e in m)


@lru_cache(maxsize=None)
def reduced_family(family: FamilySpec, field: FieldSpec) -> FamilySpec:
    """Family of exponent-reduced monomials reachable from ``family``'s slots.

    Over F_q, ``x**e`` and ``x**reduce_exponent(e, q)`` agree on every
    element, so the reduced family has the same solution sets as the
    original one.
    """
    q = field.q
    if all(reduce_monomial(m, q) == m for m in family.free) and \
            all(reduce_monomial(m, q) == m for m, _ in family.fixed):
        return family
    fixed: dict[Monomial, int] = {}
    for m, c in family.fixed:
        rm = reduce_monomial(m, q)
        fixed[rm] = field.add(fixed.get(rm, 0), c)
    free = _graded_lex(reduce_monomial(m, q) for m in family.free)
    return FamilySpec(f"{family.id}:reduced[{q}]", family.ambient, None,
                      tuple((m, c) for m, c in fixed.items() if c), free,
                      family.variables, family.homogeneous_solutions)


def reduction_map(family: FamilySpec, field: FieldSpec) -> list[int]:
    """Slot index in the reduced family for every slot of ``family``."""
    red = reduced_family(family, field)
    return [red.slot(reduce_monomial(m, field.q)) for m in family.free]


def reduce_exponents(s: Surface) -> Surface:
    f = s.field
    red = reduced_family(s.family, f)
    if red is s.family:
        return s
    coeffs = [0] * red.n_slots
    for slot, c in zip(reduction_map(s.family, f), s.coefficients):
        coeffs[slot] = f.add(coeffs[slot], c)
    return Surface(red, f, tuple(coeffs))


# -- restriction ----------------------------------------------------------------

def restrict(s: Surface, substitution: Mapping[int | str, int | None]) -> Surface:
    """Substitute field values for some variables; ``None`` keeps a variable.

    Variables absent from ``substitution`` are kept.  Terms that collapse to
    the same monomial in the kept variables have their coefficients summed.
    """
    fam, f = s.family, s.field
    subs: dict[int, int] = {}
    for var, val in substitution.items():
        i = fam.variables.index(var) if isinstance(var, str) else int(var)
        if val is not None:
            if not 0 <= int(val) < f.q:
                raise ValueError(f"substituted value outside F_{f.q}")
            subs[i] = int(val)
    if not subs:
        return s
    kept = [i for i in range(len(fam.ambient)) if i not in subs]

    def fold(m: Monomial) -> tuple[int, Monomial]:
        factor = 1
        for i, v in subs.items():
            factor = f.mul(factor, f.pow(v, m[i]))
        return factor, tuple(m[i] for i in kept)

    fixed: dict[Monomial, int] = {}
    for m, c in fam.fixed:
        factor, km = fold(m)
        if factor:
            fixed[km] = f.add(fixed.get(km, 0), f.mul(factor, c))
    free: dict[Monomial, int] = {}
    for m, c in zip(fam.free, s.coefficients):
        factor, km = fold(m)
        if factor:
            free[km] = f.add(free.get(km, 0), f.mul(factor, c))
    graded = fam.homogeneous_solutions and all(v == 0 for v in subs.values())
    label = ",".join(f"{fam.variables[i]}={format_element(v, f)}" for i, v in sorted(subs.items()))
    ambient = WeightSystem([fam.ambient[i] for i in kept], check=False)
    new_free = _graded_lex(free)
    family = FamilySpec(f"{fam.id}|{label}", ambient,
                        fam.degree if graded and fam.degree is not None else None,
                        tuple((m, c) for m, c in fixed.items() if c), new_free,
                        tuple(fam.variables[i] for i in kept), graded)
    return Surface(family, f, tuple(free[m] for m in new_free))


# -- formal partial derivatives ---------------------------------------------------

def partial_derivative(s: Surface, var: int | str) -> Surface:
    fam, f = s.family, s.field
    i = fam.variables.index(var) if isinstance(var, str) else int(var)

    def lower(m: Monomial) -> Monomial:
        return m[:i] + (m[i] - 1,) + m[i + 1:]

    fixed = []
    for m, c in fam.fixed:
        e = m[i] % f.p
        if e and c:
            fixed.append((lower(m), f.mul(f.from_int(e), c)))
    slots, coeffs = [], []
    for m, c in zip(fam.free, s.coefficients):
        if m[i] % f.p:
            slots.append(lower(m))
            coeffs.append(f.mul(f.from_int(m[i]), c))
    degree = None if fam.degree is None else fam.degree - fam.ambient[i]
    family = FamilySpec(f"d{fam.variables[i]}({fam.id})[{f.p}]", fam.ambient, degree,
                        tuple(fixed), tuple(slots), fam.variables,
                        fam.homogeneous_solutions)
    return Surface(family, f, tuple(coeffs))


def jacobian(s: Surface) -> list[Surface]:
    return [partial_derivative(s, i) for i in range(len(s.family.ambient))]


# -- point counts -----------------------------------------------------------------

def count_points(s: Surface, mode: str = "projective", early_exit: int | None = None) -> int:
    """Number of projective points (or nonzero affine tuples) on ``s``.

    With ``early_exit=B`` the result is capped at ``B + 1``.
    """
    f, ws = s.field, s.family.ambient
    if mode == "affine":
        n = int((surface_values(s, all_tuples(len(ws), f)) == 0).sum())
    elif mode == "projective":
        if s.family.homogeneous_solutions:
            n = int((surface_values(s, class_representatives(ws, f)) == 0).sum())
        else:
            tuples = all_tuples(len(ws), f)
            zeros = tuples[surface_values(s, tuples) == 0]
            n = len(np.unique(canonical_keys(zeros, ws, f))) if len(zeros) else 0
    else:
        raise ValueError(f"unknown counting mode {mode!r}")
    if early_exit is not None:
        n = min(n, early_exit + 1)
    return n


def solutions(s: Surface, mode: str = "projective") -> list[tuple[int, ...]]:
    """Zero tuples (affine) or canonical zero points (projective), sorted."""
    from .wps import canonicalize
    f, ws = s.field, s.family.ambient
    tuples = all_tuples(len(ws), f)
    zeros = [tuple(int(c) for c in row) for row in tuples[surface_values(s, tuples) == 0]]
    if mode == "affine":
        return zeros
    return sorted({canonicalize(t, ws, f).representative for t in zeros})
