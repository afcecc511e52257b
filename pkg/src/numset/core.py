"""Numerical sets and their semigroup machinery.

A numerical set is a cofinite subset of the naturals that contains 0.  It is
stored by its (finite) gap set; everything else is derived.  Internally most
operations work on an integer bitmask ``mask`` whose bit ``i`` is set iff
``i`` belongs to the set, for ``0 <= i <= F``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional


class DomainError(ValueError):
    """An operation was applied outside the domain where it is defined."""


class NotASemigroupError(DomainError):
    pass


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class NumericalSet:
    """Cofinite subset of N containing 0, identified by its gaps.

    >>> S = parse_set("0,2,4,7,8,10,12->")
    >>> S.gaps
    (1, 3, 5, 6, 9, 11)
    >>> 7 in S, 9 in S, 100 in S
    (True, False, True)
    """

    gaps: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        gaps = tuple(int(g) for g in self.gaps)
        object.__setattr__(self, "gaps", gaps)
        prev = 0
        for g in gaps:
            if g <= prev:
                raise ValueError(
                    f"gaps must be strictly increasing positive integers, got {gaps}"
                )
            prev = g

    # construction helpers

    @classmethod
    def naturals(cls) -> "NumericalSet":
        return cls(())

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSet":
        return cls(tuple(sorted(set(gaps))))

    @classmethod
    def from_mask(cls, mask: int, frobenius: int) -> "NumericalSet":
        """Build from a membership bitmask over ``[0, frobenius]``.

        Bit ``frobenius`` must be clear and bit 0 set (unless frobenius == -1).
        """
        if frobenius < 0:
            return cls(())
        if not mask & 1 or mask >> frobenius & 1:
            raise ValueError("mask must contain 0 and exclude the Frobenius number")
        return cls(tuple(i for i in range(1, frobenius + 1) if not mask >> i & 1))

    @classmethod
    def from_elements_below(cls, elements: Iterable[int], conductor: int) -> "NumericalSet":
        """The set ``elements ∪ [conductor, ∞)``; 0 must be among the elements."""
        present = {e for e in elements if e < conductor}
        if 0 not in present and conductor > 0:
            raise ValueError("a numerical set must contain 0")
        return cls(tuple(i for i in range(1, conductor) if i not in present))

    # basic queries

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self.mask >> n & 1)

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def mask(self) -> int:
        f = self.frobenius
        if f < 0:
            return 1
        m = (1 << (f + 1)) - 1
        for g in self.gaps:
            m &= ~(1 << g)
        return m

    @cached_property
    def multiplicity(self) -> int:
        return next(n for n in range(1, self.frobenius + 3) if n in self)

    @property
    def base(self) -> Optional[int]:
        """Largest element below the Frobenius number; None when F(S) < 1."""
        f = self.frobenius
        if f < 1:
            return None
        return (self.mask & ((1 << f) - 1)).bit_length() - 1

    def is_naturals(self) -> bool:
        return not self.gaps

    def elements_upto(self, n: int) -> list[int]:
        return [i for i in range(n + 1) if i in self]

    def small_elements(self) -> list[int]:
        return [i for i in range(1, self.frobenius) if self.mask >> i & 1]

    def __iter__(self):
        raise TypeError("a numerical set is infinite; use elements_upto()")

    def __str__(self) -> str:
        return format_set(self)

    def __repr__(self) -> str:
        return f"NumericalSet({format_set(self)!r})"


@dataclass(frozen=True)
class SetScalars:
    frobenius: int
    genus: int
    multiplicity: int
    base: Optional[int] = field(default=None)

    def to_dict(self) -> dict:
        d = {
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
        }
        if self.base is not None:
            d["base"] = self.base
        return d


def scalars(S: NumericalSet) -> SetScalars:
    return SetScalars(S.frobenius, S.genus, S.multiplicity, S.base)


# text formats

_ARROW = re.compile(r"\s*(->|→)\s*$")


def parse_set(text: str) -> NumericalSet:
    """Parse element notation ``"0,2,4,7->"`` or gap notation ``"gaps:1,3"``.

    Element notation lists every element up to the conductor ``F + 1`` and
    ends with an arrow; the last listed element must be the conductor.
    """
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1].strip()
    if text.lower().startswith("gaps:"):
        body = text[5:].strip()
        gaps = _parse_ints(body) if body else []
        if any(g <= 0 for g in gaps):
            raise ParseError("gaps must be positive")
        _check_increasing(gaps)
        return NumericalSet(tuple(gaps))

    m = _ARROW.search(text)
    if m is None:
        raise ParseError(f"element notation needs a trailing '->': {text!r}")
    elements = _parse_ints(text[: m.start()].rstrip(","))
    if not elements:
        raise ParseError("no elements listed")
    if elements[0] != 0:
        raise ParseError("a numerical set must contain 0")
    _check_increasing(elements)
    conductor = elements[-1]
    if conductor > 0 and elements[-2] == conductor - 1:
        raise ParseError(
            f"last listed element must be F(S)+1; {conductor - 1} is already in the set"
        )
    return NumericalSet.from_elements_below(elements, conductor)


def _parse_ints(body: str) -> list[int]:
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"cannot parse integer list {body!r}") from exc


def _check_increasing(seq: list[int]) -> None:
    for a, b in zip(seq, seq[1:]):
        if b <= a:
            raise ParseError(f"sequence must be strictly increasing: {seq}")


def format_set(S: NumericalSet, notation: str = "elements") -> str:
    """Inverse of :func:`parse_set`."""
    if notation == "gaps":
        return "gaps:" + ",".join(map(str, S.gaps))
    if notation != "elements":
        raise ValueError(f"unknown notation {notation!r}")
    return ",".join(map(str, S.elements_upto(S.conductor))) + "->"


# semigroup machinery


def _absorbing_mask(mask: int, f: int) -> int:
    """Bits ``s`` in ``[1, f]`` of the set with ``s + S ⊆ S``."""
    full = (1 << (f + 1)) - 1
    out = 0
    notm = ~mask
    for s in range(1, f + 1):
        if mask >> s & 1 and not (mask << s) & full & notm:
            out |= 1 << s
    return out


def is_semigroup(S: NumericalSet) -> bool:
    f = S.frobenius
    if f < 1:
        return True
    mask = S.mask
    full = (1 << (f + 1)) - 1
    notm = ~mask
    for s in range(1, f):
        if mask >> s & 1 and (mask << s) & full & notm:
            return False
    return True


def associated_semigroup(S: NumericalSet) -> NumericalSet:
    """A(S) = {s in S : s + S ⊆ S}."""
    f = S.frobenius
    if f < 1:
        return S
    return NumericalSet.from_mask(_absorbing_mask(S.mask, f) | 1, f)


def _require_semigroup(S: NumericalSet) -> None:
    if not is_semigroup(S):
        raise NotASemigroupError(f"{format_set(S)} is not a numerical semigroup")


def atoms(S: NumericalSet) -> list[int]:
    """Minimal generators of a numerical semigroup, ascending."""
    _require_semigroup(S)
    limit = max(S.frobenius + S.multiplicity, 1)
    ext = 0
    for i in range(1, limit + 1):
        if i in S:
            ext |= 1 << i
    sums = 0
    rest = ext
    while rest:
        low = rest & -rest
        sums |= ext * low  # ext shifted by the element's position
        rest ^= low
    gens = ext & ~sums
    return [i for i in range(1, limit + 1) if gens >> i & 1]


def embedding_dimension(S: NumericalSet) -> int:
    return len(atoms(S))


def small_elements(S: NumericalSet) -> list[int]:
    return S.small_elements()


def small_atoms(S: NumericalSet) -> list[int]:
    f = S.frobenius
    return [a for a in atoms(S) if a < f]


def max_embedding_dimension(S: NumericalSet) -> bool:
    return embedding_dimension(S) == S.multiplicity


def shift_down(S: NumericalSet) -> NumericalSet:
    """{x - m(S) : x in S, x > 0}."""
    m = S.multiplicity
    return NumericalSet(tuple(g - m for g in S.gaps if g > m))
