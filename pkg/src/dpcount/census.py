"""Exhaustive point-count censuses over coefficient spaces.

The inner loop never evaluates a polynomial.  For a fixed tuple set the
value of every free monomial is tabulated once; multiplying that column by
each possible coefficient gives a ``(q, T)`` contribution table per slot.
A surface's value vector is then the field sum of one row per slot.  The
lowest ``k`` slots of the mixed-radix index are pre-summed into an
``(q**k, T)`` block so a whole block of surfaces is one broadcast add and
one ``== 0`` reduction.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .families import (FamilySpec, Surface, fixed_values, monomial_key,
                       monomial_values)
from .gf import FieldSpec, field_literal, format_element
from .wps import all_tuples, canonical_keys, class_representatives

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2 ** 40
CHECKPOINT_CHUNK = 2 ** 20
EXTREMAL_CAP = 64
CHECKPOINT_VERSION = 1


class BudgetExceeded(RuntimeError):
    pass


class CheckpointMismatch(RuntimeError):
    pass


def search_budget() -> int:
    raw = os.environ.get("DPC_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# search spaces

@dataclass(frozen=True)
class SearchSpace:
    family: FamilySpec
    field: FieldSpec
    pins: tuple[tuple[int, int], ...] = ()

    def __init__(self, family: FamilySpec, field: FieldSpec,
                 pins: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = pins.items() if isinstance(pins, Mapping) else pins
        clean = {}
        for slot, value in items:
            slot, value = int(slot), int(value)
            if not 0 <= slot < family.n_slots:
                raise ValueError(f"slot {slot} out of range for {family.id}")
            if not 0 <= value < field.q:
                raise ValueError(f"pinned value outside F_{field.q}")
            clean[slot] = value
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "pins", tuple(sorted(clean.items())))

    @property
    def pin_map(self) -> dict[int, int]:
        return dict(self.pins)

    @property
    def unpinned(self) -> list[int]:
        pinned = self.pin_map
        return [i for i in range(self.family.n_slots) if i not in pinned]

    @property
    def size(self) -> int:
        return self.field.q ** len(self.unpinned)

    def with_pins(self, extra: Mapping[int, int]) -> "SearchSpace":
        merged = self.pin_map
        merged.update(extra)
        return SearchSpace(self.family, self.field, merged)

    def coefficients(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise IndexError(index)
        coeffs = [0] * self.family.n_slots
        for slot, value in self.pins:
            coeffs[slot] = value
        for slot in self.unpinned:
            index, coeffs[slot] = divmod(index, self.field.q)
        return tuple(coeffs)

    def index_of(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for slot in reversed(self.unpinned):
            idx = idx * self.field.q + int(coeffs[slot])
        return idx

    def surface(self, index: int) -> Surface:
        return Surface(self.family, self.field, self.coefficients(index))

    def descriptor(self) -> dict:
        fam, f = self.family, self.field
        return {
            "family": fam.id,
            "field": field_literal(f),
            "modulus": list(f.modulus),
            "fixed": {monomial_key(m): format_element(c, f) for m, c in fam.fixed},
            "slots": [monomial_key(m) for m in fam.free],
            "pins": {monomial_key(fam.free[s]): format_element(v, f) for s, v in self.pins},
        }

    def digest(self) -> str:
        blob = json.dumps(self.descriptor(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


# ---------------------------------------------------------------------------
# the evaluation kernel

def point_set(family: FamilySpec, field: FieldSpec, mode: str) -> tuple[np.ndarray, np.ndarray | None]:
    """Tuples to test and, for class-partition counting, class group starts.

    Returns ``(tuples, starts)``; ``starts`` is None when counting zeros of
    the tuples directly gives the answer.
    """
    ws = family.ambient
    if mode == "affine":
        return all_tuples(len(ws), field), None
    if mode != "projective":
        raise ValueError(f"unknown counting mode {mode!r}")
    if family.homogeneous_solutions:
        return class_representatives(ws, field), None
    tuples = all_tuples(len(ws), field)
    keys = canonical_keys(tuples, ws, field)
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    return tuples[order], starts


class Kernel:
    """Precomputed contribution tables for one space and tuple set."""

    def __init__(self, space: SearchSpace, tuples: np.ndarray,
                 starts: np.ndarray | None = None, slots: Sequence[int] | None = None):
        f = space.field
        fam = space.family
        self.field = f
        self.space = space
        self.starts = starts
        self.slots = list(space.unpinned if slots is None else slots)
        T = len(tuples)
        self.T = T
        base = fixed_values(fam, tuples, f)
        vals = monomial_values(fam.free, tuples, f) if fam.n_slots else np.zeros((T, 0), np.int64)
        for slot, c in space.pins:
            base = f.add_array(base, f.scalar_mul_array(c, vals[:, slot]))
        self.base = np.asarray(base, dtype=f.dtype)
        coeffs = np.arange(f.q)
        # contrib[k][c, t] = c * monomial_k(t)
        self.contrib = [np.asarray(f.mul_array(coeffs[:, None], vals[None, :, s]), dtype=f.dtype)
                        for s in self.slots]
        q = f.q
        k = 0
        while k < len(self.slots) and q ** (k + 1) * max(T, 1) <= 2 ** 18:
            k += 1
        self.k_inner = k
        self.inner = self._order_inner(k)
        self.batch = max(1, 2 ** 22 // max(1, len(self.inner) * max(T, 1)))

    def _order_inner(self, k: int) -> np.ndarray:
        f, T = self.field, self.T
        inner = np.zeros((1, T), dtype=f.dtype)
        for j in range(k):
            # new digit is more significant than the ones already folded in
            inner = f.add_array(inner[None, :, :], self.contrib[j][:, None, :]).reshape(-1, T)
        return np.asarray(inner, dtype=f.dtype)

    def _zero_counts(self, vals: np.ndarray) -> np.ndarray:
        zero = vals == 0
        if self.starts is None:
            return zero.sum(axis=-1)
        return np.logical_or.reduceat(zero, self.starts, axis=-1).sum(axis=-1)

    def counts_for(self, coeff_rows: np.ndarray) -> np.ndarray:
        """Point counts for explicit rows of coefficients over ``self.slots``."""
        f = self.field
        coeff_rows = np.asarray(coeff_rows, dtype=np.int64)
        out = np.empty(len(coeff_rows), dtype=np.int64)
        step = max(1, 2 ** 22 // max(1, self.T))
        for lo in range(0, len(coeff_rows), step):
            rows = coeff_rows[lo:lo + step]
            vals = np.broadcast_to(self.base, (len(rows), self.T))
            for j in range(len(self.slots)):
                vals = f.add_array(vals, self.contrib[j][rows[:, j]])
            out[lo:lo + step] = self._zero_counts(vals)
        return out

    def counts_range(self, start: int, stop: int) -> np.ndarray:
        """Point counts for mixed-radix indices in ``[start, stop)``."""
        f, q = self.field, self.field.q
        if stop <= start:
            return np.zeros(0, dtype=np.int64)
        block = q ** self.k_inner
        first, last = start // block, (stop - 1) // block + 1
        outer_slots = len(self.slots) - self.k_inner
        pieces = []
        for lo in range(first, last, self.batch):
            hi = min(last, lo + self.batch)
            outer_idx = np.arange(lo, hi, dtype=np.int64)
            ovals = np.broadcast_to(self.base, (len(outer_idx), self.T))
            rem = outer_idx.copy()
            for j in range(outer_slots):
                rem, digit = np.divmod(rem, q)
                ovals = f.add_array(ovals, self.contrib[self.k_inner + j][digit])
            vals = f.add_array(self.inner[None, :, :], np.asarray(ovals)[:, None, :])
            pieces.append(self._zero_counts(vals).reshape(-1))
        counts = np.concatenate(pieces)
        offset = first * block
        return counts[start - offset: stop - offset]


# ---------------------------------------------------------------------------
# reports

@dataclass
class CensusReport:
    space: dict
    mode: str
    early_exit: int | None
    histogram: dict[int, int]
    extremals: list[tuple[int, ...]]
    scanned: int
    wall_time: float = 0.0
    extremal_cap: int = EXTREMAL_CAP
    notes: dict = dc_field(default_factory=dict)

    @property
    def min_count(self) -> int | None:
        keys = [k for k, v in self.histogram.items() if v]
        return min(keys) if keys else None

    @property
    def max_count(self) -> int | None:
        keys = [k for k, v in self.histogram.items() if v]
        return max(keys) if keys else None

    def payload(self) -> dict:
        """JSON-ready content; excludes wall time so reruns compare equal."""
        return {
            "space": self.space,
            "mode": self.mode,
            "early_exit": self.early_exit,
            "overflow_bucket": None if self.early_exit is None else self.early_exit + 1,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "min_count": self.min_count,
            "max_count": self.max_count,
            "extremal_cap": self.extremal_cap,
            "extremals": [list(c) for c in self.extremals],
            "scanned": self.scanned,
            "notes": self.notes,
        }

    @classmethod
    def from_payload(cls, data: dict, wall_time: float = 0.0) -> "CensusReport":
        return cls(space=data["space"], mode=data["mode"], early_exit=data["early_exit"],
                   histogram={int(k): int(v) for k, v in data["histogram"].items()},
                   extremals=[tuple(c) for c in data["extremals"]],
                   scanned=int(data["scanned"]), wall_time=wall_time,
                   extremal_cap=int(data.get("extremal_cap", EXTREMAL_CAP)),
                   notes=data.get("notes", {}))

    def same_result(self, other: "CensusReport") -> bool:
        return self.payload() == other.payload()


def _empty_report(space: SearchSpace, mode: str, early_exit, cap) -> CensusReport:
    return CensusReport(space.descriptor(), mode, early_exit, {}, [], 0, extremal_cap=cap)


def _merge_extremals(items: Iterable[tuple[int, list]], cap: int | None) -> tuple[int | None, list]:
    best, pool = None, []
    for mn, ext in items:
        if mn is None:
            continue
        if best is None or mn < best:
            best, pool = mn, list(ext)
        elif mn == best:
            pool.extend(ext)
    pool = sorted(set(map(tuple, pool)))
    return best, pool if cap is None else pool[:cap]


def _combine(reports: Sequence[CensusReport], descriptor: dict, mode: str,
             early_exit, cap) -> CensusReport:
    hist: dict[int, int] = {}
    for r in reports:
        for k, v in r.histogram.items():
            hist[k] = hist.get(k, 0) + v
    _, ext = _merge_extremals(((r.min_count, r.extremals) for r in reports), cap)
    return CensusReport(descriptor, mode, early_exit, hist, ext,
                        sum(r.scanned for r in reports),
                        sum(r.wall_time for r in reports), cap)


def merge_reports(a: CensusReport, b: CensusReport) -> CensusReport:
    if a.space != b.space or a.mode != b.mode or a.early_exit != b.early_exit:
        raise ValueError("cannot merge reports of different searches")
    cap = min(a.extremal_cap, b.extremal_cap)
    out = _combine([a, b], a.space, a.mode, a.early_exit, cap)
    out.notes = {**a.notes, **b.notes}
    return out


def _partial_report(space: SearchSpace, kernel: Kernel, mode: str, early_exit,
                    cap, start: int, stop: int) -> CensusReport:
    counts = kernel.counts_range(start, stop)
    return _report_from_counts(space, mode, early_exit, cap, counts,
                               lambda pos: np.arange(start, stop)[pos])


def _report_from_counts(space, mode, early_exit, cap, counts, index_of_pos) -> CensusReport:
    if early_exit is not None:
        counts = np.minimum(counts, early_exit + 1)
    report = _empty_report(space, mode, early_exit, cap)
    report.scanned = len(counts)
    if not len(counts):
        return report
    binc = np.bincount(counts)
    report.histogram = {int(k): int(v) for k, v in enumerate(binc) if v}
    mn = int(counts.min())
    pos = np.flatnonzero(counts == mn)
    indices = index_of_pos(pos)
    report.extremals = _lex_smallest(space, indices, cap)
    return report


def _lex_smallest(space: SearchSpace, indices: np.ndarray, cap: int | None) -> list[tuple[int, ...]]:
    """The ``cap`` lexicographically least coefficient vectors among ``indices``."""
    q = space.field.q
    un = space.unpinned
    indices = np.asarray(indices, dtype=np.int64)
    if cap is not None and len(indices) > cap:
        # lex rank: slot order most significant first (reverse of the index radix)
        exact = q ** len(un) < 2 ** 62
        rank = np.zeros(len(indices), dtype=np.int64 if exact else object)
        rem = indices.copy()
        digits = []
        for _ in un:
            rem, d = np.divmod(rem, q)
            digits.append(d)
        for d in digits:
            rank = rank * q + d
        keep = np.argpartition(rank, cap - 1)[:cap]
        indices = indices[keep]
    coeffs = sorted(space.coefficients(int(i)) for i in indices)
    return coeffs if cap is None else coeffs[:cap]


# ---------------------------------------------------------------------------
# driver

@lru_cache(maxsize=16)
def _kernel(space: SearchSpace, mode: str) -> Kernel:
    tuples, starts = point_set(space.family, space.field, mode)
    return Kernel(space, tuples, starts)


def _worker(args) -> CensusReport:
    space, mode, early_exit, cap, start, stop = args
    return _partial_report(space, _kernel(space, mode), mode, early_exit, cap, start, stop)


def _split(start: int, stop: int, parts: int) -> list[tuple[int, int]]:
    step = -(-(stop - start) // parts)
    return [(lo, min(stop, lo + step)) for lo in range(start, stop, step)]


def _write_checkpoint(path: str, space: SearchSpace, mode, early_exit, cap,
                      next_index: int, report: CensusReport) -> None:
    data = {
        "version": CHECKPOINT_VERSION,
        "space_hash": space.digest(),
        "mode": mode,
        "early_exit": early_exit,
        "extremal_cap": cap,
        "next_index": next_index,
        "histogram": {str(k): v for k, v in sorted(report.histogram.items())},
        "extremals": [list(c) for c in report.extremals],
        "scanned": report.scanned,
    }
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def load_checkpoint(path: str, space: SearchSpace, mode: str, early_exit, cap) -> tuple[int, CensusReport]:
    try:
        with open(path) as fh:
            data = json.load(fh)
        if data.get("version") != CHECKPOINT_VERSION:
            raise CheckpointMismatch(f"unsupported checkpoint version {data.get('version')}")
        if data["space_hash"] != space.digest():
            raise CheckpointMismatch("checkpoint belongs to a different search space")
        if (data["mode"], data["early_exit"], data["extremal_cap"]) != (mode, early_exit, cap):
            raise CheckpointMismatch("checkpoint was written with different settings")
        report = CensusReport(space.descriptor(), mode, early_exit,
                              {int(k): int(v) for k, v in data["histogram"].items()},
                              [tuple(c) for c in data["extremals"]],
                              int(data["scanned"]), extremal_cap=cap)
        return int(data["next_index"]), report
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointMismatch(f"corrupt checkpoint {path}: {exc}") from exc


def run_census(space: SearchSpace, mode: str = "projective", early_exit: int | None = None,
               workers: int = 1, checkpoint: str | None = None,
               extremal_cap: int | None = EXTREMAL_CAP,
               chunk: int = CHECKPOINT_CHUNK, budget: int | None = None) -> CensusReport:
    """Point-count histogram over every surface of ``space``."""
    t0 = time.perf_counter()
    total = space.size
    budget = search_budget() if budget is None else budget
    if total > budget:
        raise BudgetExceeded(f"search space has {total} surfaces, budget is {budget}")
    cap = extremal_cap
    start = 0
    done = _empty_report(space, mode, early_exit, cap)
    if checkpoint and os.path.exists(checkpoint):
        start, done = load_checkpoint(checkpoint, space, mode, early_exit, cap)
        log.info("resuming %s at index %d of %d", space.family.id, start, total)
    workers = max(1, int(workers))
    round_size = chunk * workers if checkpoint else max(total - start, 1)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        pos = start
        while pos < total:
            end = min(total, pos + round_size)
            jobs = [(space, mode, early_exit, cap, lo, hi) for lo, hi in _split(pos, end, workers)]
            parts = list(pool.map(_worker, jobs)) if pool else [_worker(j) for j in jobs]
            done = _combine([done] + parts, done.space, mode, early_exit, cap)
            pos = end
            if checkpoint:
                _write_checkpoint(checkpoint, space, mode, early_exit, cap, pos, done)
    finally:
        if pool:
            pool.shutdown()
    done.wall_time = time.perf_counter() - t0
    return done


def scan_range(space: SearchSpace, start: int, stop: int, mode: str = "projective",
               early_exit: int | None = None, extremal_cap: int | None = EXTREMAL_CAP) -> CensusReport:
    """Partial report over ``[start, stop)``; merging the pieces of a split gives the full report."""
    return _partial_report(space, _kernel(space, mode), mode, early_exit, extremal_cap, start, stop)


def counts_array(space: SearchSpace, mode: str = "projective") -> np.ndarray:
    """Point count of every surface of ``space`` in index order."""
    return _kernel(space, mode).counts_range(0, space.size)


# ---------------------------------------------------------------------------
# two-phase search

@dataclass(frozen=True)
class LocusFilter:
    """A locus to test first: substituted coordinates plus ranges for the rest.

    ``substitution`` maps a variable (index or name) to a value; ``ranges``
    maps a kept variable to ``"nonzero"`` or an explicit list of values;
    ``excluded`` lists full ambient tuples to ignore (known base points).
    """
    substitution: tuple[tuple[int | str, int], ...] = ()
    ranges: tuple[tuple[int | str, object], ...] = ()
    excluded: tuple[tuple[int, ...], ...] = ()

    def __init__(self, substitution=(), ranges=(), excluded=()):
        sub = substitution.items() if isinstance(substitution, Mapping) else substitution
        rng = ranges.items() if isinstance(ranges, Mapping) else ranges
        object.__setattr__(self, "substitution", tuple(sub))
        object.__setattr__(self, "ranges", tuple((k, v if isinstance(v, str) else tuple(v))
                                                 for k, v in rng))
        object.__setattr__(self, "excluded", tuple(tuple(t) for t in excluded))

    def describe(self, family: FamilySpec) -> dict:
        name = lambda v: v if isinstance(v, str) else family.variables[v]
        return {
            "substitution": {name(k): v for k, v in self.substitution},
            "ranges": {name(k): v if isinstance(v, str) else list(v) for k, v in self.ranges},
            "excluded": [list(t) for t in self.excluded],
        }


def locus_tuples(family: FamilySpec, field: FieldSpec, flt: LocusFilter) -> np.ndarray:
    n = len(family.ambient)
    idx = lambda v: family.variables.index(v) if isinstance(v, str) else int(v)
    allowed = [list(range(field.q)) for _ in range(n)]
    for var, val in flt.substitution:
        allowed[idx(var)] = [int(val)]
    for var, rng in flt.ranges:
        allowed[idx(var)] = list(range(1, field.q)) if rng == "nonzero" else [int(v) for v in rng]
    grids = np.stack(np.meshgrid(*allowed, indexing="ij"), axis=-1).reshape(-1, n)
    keep = grids.any(axis=1)
    for t in flt.excluded:
        keep &= ~(grids == np.asarray(t)).all(axis=1)
    return grids[keep].astype(np.int64)


def filter_slots(space: SearchSpace, flt: LocusFilter) -> list[int]:
    """Unpinned slots whose monomial is not identically zero on the locus."""
    tuples = locus_tuples(space.family, space.field, flt)
    vals = monomial_values(space.family.free, tuples, space.field)
    return [s for s in space.unpinned if vals[:, s].any()]


def phase1_survivors(space: SearchSpace, flt: LocusFilter) -> list[dict[int, int]]:
    """Assignments of the locus slots for which the locus carries no solution."""
    tuples = locus_tuples(space.family, space.field, flt)
    slots = filter_slots(space, flt)
    kernel = Kernel(space, tuples, slots=slots)
    counts = kernel.counts_range(0, space.field.q ** len(slots))
    q = space.field.q
    out = []
    for idx in np.flatnonzero(counts == 0):
        idx = int(idx)
        assign = {}
        for s in slots:
            idx, assign[s] = divmod(idx, q)
        out.append(assign)
    return sorted(out, key=lambda a: [a[s] for s in slots])


def two_phase_census(space: SearchSpace, flt: LocusFilter, mode: str = "projective",
                     early_exit: int | None = None, workers: int = 1,
                     checkpoint: str | None = None,
                     extremal_cap: int | None = EXTREMAL_CAP,
                     assignments: Sequence[Mapping[int, int]] | None = None) -> CensusReport:
    """Census over the surfaces extending a phase-1 survivor.

    ``assignments`` replaces the computed survivor list by an explicit one
    (for instance a published list); the computed survivors are still
    recorded in the notes.
    """
    t0 = time.perf_counter()
    slots = filter_slots(space, flt)
    survivors = phase1_survivors(space, flt)
    scanned = survivors if assignments is None else [dict(a) for a in assignments]
    parts = []
    for i, assign in enumerate(scanned):
        ck = f"{checkpoint}.{i}" if checkpoint else None
        parts.append(run_census(space.with_pins(assign), mode, early_exit, workers, ck, extremal_cap))
    descriptor = {**space.descriptor(), "locus": flt.describe(space.family)}
    report = _combine(parts, descriptor, mode, early_exit, extremal_cap)
    f = space.field
    n_assign = f.q ** len(slots)
    report.notes = {
        "phase1_slots": [monomial_key(space.family.free[s]) for s in slots],
        "survivors": [{monomial_key(space.family.free[s]): format_element(v, f)
                       for s, v in a.items()} for a in survivors],
        "scanned_assignments": [{monomial_key(space.family.free[s]): format_element(v, f)
                                 for s, v in sorted(a.items())} for a in scanned],
        "non_survivors": n_assign - len(survivors),
        "certificate": (f"all {n_assign - len(survivors)} non-survivor assignments have at least "
                        "one solution on the locus outside the excluded base set"),
    }
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# sampling

def random_sample_census(family: FamilySpec, field: FieldSpec, samples: int, seed: int,
                         smooth: int | None = None, mode: str = "projective",
                         early_exit: int | None = None,
                         extremal_cap: int | None = EXTREMAL_CAP) -> CensusReport:
    """Histogram over ``samples`` seeded random members of ``family``.

    With ``smooth=B`` only surfaces certified smooth up to extension degree
    B are kept; draws continue until ``samples`` surfaces are accepted.
    """
    from .smooth import SmoothnessChecker

    t0 = time.perf_counter()
    space = SearchSpace(family, field)
    rng = np.random.default_rng(seed)
    kernel = _kernel(space, mode)
    checker = SmoothnessChecker(family, field, smooth) if smooth else None
    accepted: list[np.ndarray] = []
    n_acc = rejected = 0
    while n_acc < samples:
        draw = rng.integers(0, field.q, size=(max(64, samples - n_acc), family.n_slots))
        for row in draw:
            if n_acc >= samples:
                break
            if checker is not None and not checker.is_smooth(tuple(int(c) for c in row)):
                rejected += 1
                continue
            accepted.append(row)
            n_acc += 1
    rows = np.array(accepted, dtype=np.int64).reshape(-1, family.n_slots)
    counts = kernel.counts_for(rows) if len(rows) else np.zeros(0, dtype=np.int64)
    if early_exit is not None:
        counts = np.minimum(counts, early_exit + 1)
    report = _empty_report(space, mode, early_exit, extremal_cap)
    report.space = {**space.descriptor(), "sampled": {"seed": seed, "samples": samples,
                                                      "smooth_up_to": smooth}}
    report.scanned = len(rows)
    if len(rows):
        binc = np.bincount(counts)
        report.histogram = {int(k): int(v) for k, v in enumerate(binc) if v}
        mn = counts.min()
        ext = sorted({tuple(int(c) for c in r) for r in rows[counts == mn]})
        report.extremals = ext if extremal_cap is None else ext[:extremal_cap]
    report.notes = {"rejected_nonsmooth": rejected}
    report.wall_time = time.perf_counter() - t0
    return report


def verify_claim(claim_id: str):
    from .claims import verify_claim as _verify
    return _verify(claim_id)
