"""Exhaustive enumeration of numerical sets and semigroups, and censuses of
associated-semigroup shapes.

A numerical set with Frobenius number ``f`` is encoded by an integer
``idx < 2**(f-1)`` whose bit ``i`` says whether ``i + 1`` is an element.
Sweeps split the index range into contiguous blocks, classify each block with
vectorized bit operations and add the per-block counts together, so the
result does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .analysis import Shape, atom_profile, complement
from .core import NumericalSet, associated_semigroup, atoms, format_set, is_semigroup
from .young import c1, diagram_of

DEFAULT_BUDGET_F = 26
BLOCK_BITS = 18
_MAX_VECTOR_F = 31


class BudgetError(RuntimeError):
    """A sweep larger than the default budget was requested without opt-in."""


def default_workers() -> int:
    env = os.environ.get("NUMSET_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def set_from_index(f: int, idx: int) -> NumericalSet:
    return NumericalSet.from_mask((idx << 1) | 1, f)


def iter_numerical_sets(f: int) -> Iterator[NumericalSet]:
    """All 2**(f-1) numerical sets with Frobenius number f."""
    if f < 1:
        raise ValueError("Frobenius number must be at least 1")
    for idx in range(1 << (f - 1)):
        yield set_from_index(f, idx)


def iter_all_sets(max_f: int, include_naturals: bool = False) -> Iterator[NumericalSet]:
    if include_naturals:
        yield NumericalSet.naturals()
    for f in range(1, max_f + 1):
        yield from iter_numerical_sets(f)


def _children(S: NumericalSet, max_f: Optional[int] = None) -> list[NumericalSet]:
    # removing a generator larger than F(S) keeps a semigroup, with Frobenius number = that generator
    f = S.frobenius
    out = []
    for a in atoms(S):
        if a > f and (max_f is None or a <= max_f):
            out.append(NumericalSet(S.gaps + (a,)))
    return out


def iter_semigroups_genus(g: int) -> Iterator[NumericalSet]:
    """Numerical semigroups of genus g, by walking the semigroup tree."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    level = [NumericalSet.naturals()]
    for _ in range(g):
        level = [child for S in level for child in _children(S)]
    yield from level


def iter_semigroups_upto(max_f: int) -> Iterator[NumericalSet]:
    """Semigroups with 1 <= F(S) <= max_f, depth first through the tree."""
    stack = _children(NumericalSet.naturals(), max_f)
    while stack:
        S = stack.pop()
        yield S
        stack.extend(_children(S, max_f))


def iter_semigroups_frobenius(f: int) -> Iterator[NumericalSet]:
    if f < 1:
        raise ValueError("Frobenius number must be at least 1")
    for S in iter_semigroups_upto(f):
        if S.frobenius == f:
            yield S


# shape census


@dataclass
class SweepResult:
    frobenius: int
    total_sets: int
    counts: dict[str, int]
    by_l: dict[int, int] = field(default_factory=dict)
    by_m: dict[int, int] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ratio_gamma(self) -> float:
        return self.counts[Shape.NO_SMALL.value] / self.total_sets

    def same_counts(self, other: "SweepResult") -> bool:
        return (
            self.frobenius == other.frobenius
            and self.total_sets == other.total_sets
            and self.counts == other.counts
            and self.by_l == other.by_l
            and self.by_m == other.by_m
        )

    def to_json(self) -> str:
        d = asdict(self)
        d["ratio_gamma"] = self.ratio_gamma
        return json.dumps(d, indent=2)


def _small_patterns(f: int) -> np.ndarray:
    """pat[m] = bits of the multiples of m in [1, f-1], or 0 when m | f."""
    pat = np.zeros(65, dtype=np.uint64)
    for m in range(1, f):
        if f % m:
            pat[m] = sum(1 << k for k in range(m, f, m))
    return pat


def _absorbing_bits(masks: np.ndarray, f: int) -> np.ndarray:
    """Vectorized small part of A(S): bits s in [1, f-1] with s + S ⊆ S."""
    full = np.uint64((1 << (f + 1)) - 1)
    missing = ~masks & full
    out = np.zeros_like(masks)
    one = np.uint64(1)
    for s in range(1, f):
        sh = np.uint64(s)
        closed = ((masks << sh) & missing) == 0
        member = (masks >> sh) & one
        out |= (member & closed.astype(np.uint64)) << sh
    return out


def _census_block(f: int, lo: int, hi: int, pat: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    idx = np.arange(lo, hi, dtype=np.uint64)
    masks = (idx << np.uint64(1)) | np.uint64(1)
    small = _absorbing_bits(masks, f)
    pc = np.bitwise_count(small)
    low = small & (~small + np.uint64(1))
    lowidx = np.where(small > 0, np.bitwise_count(low - np.uint64(1)), 0).astype(np.int64)

    no_small = pc == 0
    one_el = pc == 1
    one_atom = (pc >= 2) & (small == pat[lowidx])
    counts = np.array(
        [no_small.sum(), one_el.sum(), one_atom.sum(), 0], dtype=np.int64
    )
    counts[3] = (hi - lo) - counts[:3].sum()
    by_l = np.bincount(f - lowidx[one_el], minlength=f + 1)
    by_m = np.bincount(lowidx[one_atom], minlength=f + 1)
    return counts, by_l, by_m


_CLASS_ORDER = (Shape.NO_SMALL, Shape.ONE_SMALL_ELEMENT, Shape.ONE_SMALL_ATOM, Shape.OTHER)


def shape_census(f: int, workers: Optional[int] = None) -> SweepResult:
    """Classify every numerical set with Frobenius number f by the shape of A(S).

    Classes are disjoint: no small elements; exactly one small element
    (A(S) = {0, f-l, f+1->}, bucketed by l); one small atom with at least two
    small elements (A(S) = mN ∪ {f+1->}, bucketed by m); other.
    """
    if f < 1:
        raise ValueError("Frobenius number must be at least 1")
    if f > _MAX_VECTOR_F:
        raise BudgetError(f"f={f} exceeds the 64-bit sweep kernel")
    workers = workers or default_workers()
    start = time.perf_counter()
    total = 1 << (f - 1)
    step = 1 << BLOCK_BITS
    blocks = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    pat = _small_patterns(f)

    if workers == 1 or len(blocks) == 1:
        parts = [_census_block(f, lo, hi, pat) for lo, hi in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _census_block(f, b[0], b[1], pat), blocks))

    counts = sum(p[0] for p in parts)
    by_l = sum(p[1] for p in parts)
    by_m = sum(p[2] for p in parts)
    result = SweepResult(
        frobenius=f,
        total_sets=total,
        counts={cls.value: int(c) for cls, c in zip(_CLASS_ORDER, counts)},
        by_l={l: int(c) for l, c in enumerate(by_l) if c},
        by_m={m: int(c) for m, c in enumerate(by_m) if c},
        wall_time=time.perf_counter() - start,
    )
    if sum(result.counts.values()) != total:
        result.counterexamples.append("class counts do not sum to 2^(f-1)")
    return result


def shape_census_reference(f: int) -> SweepResult:
    """Same census computed one set at a time through the core definitions."""
    start = time.perf_counter()
    counts: Counter = Counter({cls.value: 0 for cls in _CLASS_ORDER})
    by_l: Counter = Counter()
    by_m: Counter = Counter()
    total = 0
    for S in iter_numerical_sets(f):
        total += 1
        A = associated_semigroup(S)
        prof = atom_profile(A)
        counts[prof.shape.value] += 1
        if prof.shape is Shape.ONE_SMALL_ELEMENT:
            by_l[f - A.small_elements()[0]] += 1
        elif prof.shape is Shape.ONE_SMALL_ATOM:
            by_m[A.multiplicity] += 1
    return SweepResult(
        frobenius=f,
        total_sets=total,
        counts=dict(counts),
        by_l=dict(sorted(by_l.items())),
        by_m=dict(sorted(by_m.items())),
        wall_time=time.perf_counter() - start,
    )


# density tables


@dataclass(frozen=True)
class DensityRow:
    f: int
    total: int
    count_gamma: int
    count_l: tuple[int, ...]  # l = 1 .. l_max

    @property
    def ratio_gamma(self) -> Fraction:
        return Fraction(self.count_gamma, self.total)

    def ratio_l(self, l: int) -> Fraction:
        if l == 0:
            return self.ratio_gamma
        return Fraction(self.count_l[l - 1], self.total)


@dataclass
class DensityTable:
    l_max: int
    rows: list[DensityRow]

    def deltas(self) -> list[Optional[float]]:
        """Change of ratio_gamma from the previous row."""
        out: list[Optional[float]] = [None]
        for a, b in zip(self.rows, self.rows[1:]):
            out.append(float(b.ratio_gamma - a.ratio_gamma))
        return out[: len(self.rows)]

    def header(self) -> list[str]:
        cols = ["f", "total", "count_gamma", "ratio_gamma"]
        for l in range(1, self.l_max + 1):
            cols += [f"count_l{l}", f"ratio_l{l}"]
        return cols

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header())
        for r in self.rows:
            line = [r.f, r.total, r.count_gamma, repr(float(r.ratio_gamma))]
            for l in range(1, self.l_max + 1):
                line += [r.count_l[l - 1], repr(float(r.ratio_l(l)))]
            w.writerow(line)
        return buf.getvalue()


def density_table(
    f_min: int,
    f_max: int,
    l_max: int = 3,
    workers: Optional[int] = None,
    allow_large: bool = False,
) -> DensityTable:
    if not 1 <= f_min <= f_max:
        raise ValueError("need 1 <= f_min <= f_max")
    if f_max > DEFAULT_BUDGET_F and not allow_large:
        raise BudgetError(
            f"f_max={f_max} sweeps 2^{f_max - 1} sets; pass allow_large to go past "
            f"f={DEFAULT_BUDGET_F}"
        )
    rows = []
    for f in range(f_min, f_max + 1):
        res = shape_census(f, workers)
        rows.append(
            DensityRow(
                f=f,
                total=res.total_sets,
                count_gamma=res.counts[Shape.NO_SMALL.value],
                count_l=tuple(res.by_l.get(l, 0) for l in range(1, l_max + 1)),
            )
        )
    return DensityTable(l_max, rows)


# experiments around the open questions on iterated complements


def complement_power(S: NumericalSet, n: int) -> Optional[NumericalSet]:
    """S^(n), or None if the complement sequence reaches N earlier."""
    for _ in range(n):
        if S.is_naturals():
            return None
        S = complement(S)
    return S


def profiles_when_power_is_semigroup(n: int, max_f: int) -> Counter:
    """Tally (shape of A(S), small-atom count) over sets S with F(S) <= max_f
    whose n-th complement exists and is a numerical semigroup."""
    tally: Counter = Counter()
    for S in iter_all_sets(max_f):
        if c1(diagram_of(S)) < n:
            continue
        Sn = complement_power(S, n)
        if Sn is not None and is_semigroup(Sn):
            prof = atom_profile(associated_semigroup(S))
            tally[(prof.shape.value, prof.small_atom_count)] += 1
    return tally


def semigroups_reached(n: int, max_f: int) -> Counter:
    """Semigroups S (element notation) with S = T^(n) for a semigroup T, F(T) <= max_f."""
    hits: Counter = Counter()
    for T in iter_semigroups_upto(max_f):
        Tn = complement_power(T, n)
        if Tn is not None and is_semigroup(Tn):
            hits[format_set(Tn)] += 1
    return hits


def semigroup_complement_images(max_f: int) -> dict[NumericalSet, int]:
    """Map each complement of a semigroup with F <= max_f to the smallest such F."""
    images: dict[NumericalSet, int] = {}
    for S in iter_semigroups_upto(max_f):
        T = complement(S)
        if T not in images or S.frobenius < images[T]:
            images[T] = S.frobenius
    return images


__all__ = [
    "BudgetError",
    "DensityRow",
    "DensityTable",
    "SweepResult",
    "complement_power",
    "density_table",
    "iter_all_sets",
    "iter_numerical_sets",
    "iter_semigroups_frobenius",
    "iter_semigroups_genus",
    "iter_semigroups_upto",
    "profiles_when_power_is_semigroup",
    "semigroup_complement_images",
    "semigroups_reached",
    "set_from_index",
    "shape_census",
    "shape_census_reference",
]
