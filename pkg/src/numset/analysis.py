"""The complement operation and checkable statements about it.

Every ``verify_*`` function returns ``True`` when the statement holds for the
given instance and raises :class:`~numset.core.DomainError` when the instance
is outside the statement's hypotheses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    DomainError,
    NotASemigroupError,
    NumericalSet,
    SetScalars,
    associated_semigroup,
    format_set,
    is_semigroup,
    max_embedding_dimension,
    scalars,
    small_atoms,
)
from .young import c1, complement_diagram, diagram_of, set_of


def complement(S: NumericalSet) -> NumericalSet:
    """{B - s : s in S, s <= B} ∪ [B, ∞) with B the base of S."""
    B = S.base
    if B is None:
        raise DomainError("the complement of N is undefined")
    return NumericalSet(tuple(B - g for g in reversed(S.gaps) if g < B))


def complement_via_diagram(S: NumericalSet) -> NumericalSet:
    """Same set as :func:`complement`, computed by rotating the Young diagram."""
    if S.is_naturals():
        raise DomainError("the complement of N is undefined")
    return set_of(complement_diagram(diagram_of(S)))


@dataclass(frozen=True)
class ComplementReport:
    original: NumericalSet
    complement: NumericalSet
    original_scalars: SetScalars
    complement_scalars: SetScalars
    delta_genus: int
    base_bound_tight: bool

    def failures(self) -> list[str]:
        """Clauses of the Frobenius/genus/base identities that do not hold."""
        s, t = self.original_scalars, self.complement_scalars
        one_missing = 1 not in self.original
        bad = []
        if not t.frobenius <= s.base - 1 <= s.frobenius - 2:
            bad.append("F(T) <= B(S)-1 <= F(S)-2")
        if self.base_bound_tight != one_missing:
            bad.append("F(T) = B(S)-1 iff 1 not in S")
        if t.genus != s.genus + s.base - s.frobenius:
            bad.append("g(T) = g(S)+B(S)-F(S)")
        if t.base is not None:
            bound = s.base - s.multiplicity
            if t.base > bound:
                bad.append("B(T) <= B(S)-m(S)")
            if (t.base == bound) != one_missing:
                bad.append("B(T) = B(S)-m(S) iff 1 not in S")
        return bad

    def to_dict(self) -> dict:
        return {
            "original": format_set(self.original),
            "complement": format_set(self.complement),
            "original_scalars": self.original_scalars.to_dict(),
            "complement_scalars": self.complement_scalars.to_dict(),
            "delta_genus": self.delta_genus,
            "base_bound_tight": self.base_bound_tight,
        }


def complement_report(S: NumericalSet, check: bool = True) -> ComplementReport:
    """Complement of S with the scalars of both; ``check`` asserts the identities."""
    T = complement(S)
    s, t = scalars(S), scalars(T)
    rep = ComplementReport(
        original=S,
        complement=T,
        original_scalars=s,
        complement_scalars=t,
        delta_genus=t.genus - s.genus,
        base_bound_tight=t.frobenius == s.base - 1,
    )
    if check:
        bad = rep.failures()
        if bad:
            raise AssertionError(f"{format_set(S)}: {', '.join(bad)}")
    return rep


def verify_prop23(S: NumericalSet) -> bool:
    return not complement_report(S, check=False).failures()


# complements of semigroups


def _require_not_naturals(S: NumericalSet) -> None:
    if S.is_naturals():
        raise DomainError("statement is not defined for N")


def is_semigroup_complement(T: NumericalSet) -> bool:
    """Whether T is the complement of some numerical semigroup.

    Tested intrinsically: F(T) is not a sum of two elements of T, and every
    pair x, y in T ∩ [0, F(T)] with x + y > F(T) has x + y - F(T) - 1 in T.
    """
    _require_not_naturals(T)
    f = T.frobenius
    elems = T.elements_upto(f)
    members = set(elems)
    for x in elems:
        if f - x in members:
            return False
    for i, x in enumerate(elems):
        for y in elems[i:]:
            if x + y > f and x + y - f - 1 not in T:
                return False
    return True


def witness_semigroup(T: NumericalSet) -> NumericalSet:
    """A numerical semigroup whose complement is T."""
    if T.is_naturals() or not is_semigroup_complement(T):
        raise DomainError(f"{format_set(T)} is not the complement of a semigroup")
    f = T.frobenius
    S = NumericalSet.from_elements_below(
        [f + 1 - x for x in T.elements_upto(f + 1)] + [f + 3], f + 3
    )
    assert is_semigroup(S)
    assert S.frobenius == f + 2 and S.base == f + 1
    assert complement(S) == T
    return S


# associated-semigroup shapes


class Shape(enum.Enum):
    NO_SMALL = "no_small"
    ONE_SMALL_ELEMENT = "one_small_element"
    ONE_SMALL_ATOM = "one_small_atom"
    OTHER = "other"


@dataclass(frozen=True)
class AtomProfile:
    small_atom_count: int
    small_element_count: int
    shape: Shape


def atom_profile(A: NumericalSet) -> AtomProfile:
    """Classify a numerical semigroup by its small elements and small atoms.

    The shapes are disjoint: a single small element is always a small atom,
    so ONE_SMALL_ATOM is reserved for two or more small elements.
    """
    n_el = len(A.small_elements())
    n_at = len(small_atoms(A))
    if n_el == 0:
        shape = Shape.NO_SMALL
    elif n_el == 1:
        shape = Shape.ONE_SMALL_ELEMENT
    elif n_at == 1:
        shape = Shape.ONE_SMALL_ATOM
    else:
        shape = Shape.OTHER
    return AtomProfile(n_at, n_el, shape)


def verify_thm3(S: NumericalSet) -> bool:
    """For a semigroup S: A(~S) has at most one small atom, none if S has two or more."""
    _require_not_naturals(S)
    if not is_semigroup(S):
        raise NotASemigroupError(format_set(S))
    n = len(small_atoms(associated_semigroup(complement(S))))
    if n > 1:
        return False
    return n == 0 or len(small_atoms(S)) <= 1


def verify_thm4(S: NumericalSet) -> bool:
    """For S whose complement is a semigroup: A(S) has at most one small atom,
    and if S itself is not a semigroup, A(S) is {0, F+1->} or {0, B, F+1->}
    according to whether S meets [1, F-B]."""
    _require_not_naturals(S)
    if not is_semigroup(complement(S)):
        raise DomainError(f"complement of {format_set(S)} is not a semigroup")
    A = associated_semigroup(S)
    if len(small_atoms(A)) > 1:
        return False
    if is_semigroup(S):
        return True
    if len(A.small_elements()) > 1:
        return False
    f, B = S.frobenius, S.base
    meets = any(x in S for x in range(1, f - B + 1))
    if meets:
        expected = NumericalSet.from_elements_below([0], f + 1)
    else:
        expected = NumericalSet.from_elements_below([0, B], f + 1)
    return A == expected


def verify_cor42(S: NumericalSet) -> bool:
    _require_not_naturals(S)
    if not is_semigroup(S):
        raise NotASemigroupError(format_set(S))
    return is_semigroup(complement(S)) == (len(small_atoms(S)) <= 1)


# complement sequences


@dataclass(frozen=True)
class ComplementSequence:
    terms: tuple[NumericalSet, ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, i: int) -> NumericalSet:
        return self.terms[i]


def iterate_complement(S: NumericalSet) -> ComplementSequence:
    terms = [S]
    while not terms[-1].is_naturals():
        terms.append(complement(terms[-1]))
    return ComplementSequence(tuple(terms))


def verify_prop51(S: NumericalSet) -> bool:
    """c1 drops by exactly one at every complement step."""
    _require_not_naturals(S)
    return c1(diagram_of(complement(S))) == c1(diagram_of(S)) - 1


def verify_cor52(S: NumericalSet) -> bool:
    return iterate_complement(S).length == c1(diagram_of(S))


def complement_sequence(S: NumericalSet) -> ComplementSequence:
    """S, ~S, ~~S, ... down to N, with the c1 bookkeeping asserted."""
    seq = iterate_complement(S)
    counts = [c1(diagram_of(T)) for T in seq.terms]
    if any(b != a - 1 for a, b in zip(counts, counts[1:])):
        raise AssertionError(f"c1 does not decrease by one along {format_set(S)}: {counts}")
    if seq.length != counts[0]:
        raise AssertionError(f"sequence length {seq.length} != c1 = {counts[0]}")
    return seq


def second_complement(S: NumericalSet) -> NumericalSet:
    if c1(diagram_of(S)) < 2:
        raise DomainError(f"S^(2) does not exist for {format_set(S)}")
    return complement(complement(S))


def _contained(A: NumericalSet, B: NumericalSet) -> bool:
    """A ⊆ B for numerical sets."""
    return set(B.gaps) <= set(A.gaps)


def verify_prop53(S: NumericalSet) -> bool:
    S2 = second_complement(S)
    return _contained(associated_semigroup(S), associated_semigroup(S2))


def fill_from_base(S: NumericalSet) -> NumericalSet:
    """S ∪ [B(S), ∞)."""
    B = S.base
    if B is None:
        return S
    return NumericalSet(tuple(g for g in S.gaps if g < B))


def verify_prop55(S: NumericalSet) -> bool:
    """For a semigroup S: S^(2) is a semigroup iff S ∪ [B, ∞) has max embedding dimension."""
    if not is_semigroup(S):
        raise NotASemigroupError(format_set(S))
    S2 = second_complement(S)
    return is_semigroup(S2) == max_embedding_dimension(fill_from_base(S))


def verify_cor56(S: NumericalSet) -> bool:
    if not is_semigroup(S) or not max_embedding_dimension(S):
        raise DomainError(f"{format_set(S)} is not a max embedding dimension semigroup")
    return is_semigroup(second_complement(S))


# lifting


def lift_once(S: NumericalSet) -> NumericalSet:
    """T = {0} ∪ (m + S) minus {F + 2m}; a semigroup with T^(2) = S."""
    _require_not_naturals(S)
    if not is_semigroup(S):
        raise NotASemigroupError(format_set(S))
    m, f = S.multiplicity, S.frobenius
    gaps = list(range(1, m)) + [g + m for g in S.gaps] + [f + 2 * m]
    T = NumericalSet(tuple(gaps))
    assert T.multiplicity == m and T.frobenius == f + 2 * m and T.base == f + 2 * m - 1
    return T


def lift(S: NumericalSet, n: int = 1) -> NumericalSet:
    """A numerical semigroup T with T^(2n) = S."""
    if n < 1:
        raise ValueError("n must be positive")
    T = S
    for _ in range(n):
        T = lift_once(T)
    seq = complement_sequence(T)
    if not is_semigroup(T) or seq.length < 2 * n or seq[2 * n] != S:
        raise AssertionError(f"lift of {format_set(S)} failed its round trip")
    return T


def verify_prop57(S: NumericalSet, n: int) -> bool:
    try:
        T = lift(S, n)
    except AssertionError:
        return False
    return is_semigroup(T) and iterate_complement(T)[2 * n] == S
