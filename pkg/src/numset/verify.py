"""Exhaustive sweeps checking each statement over a bounded domain."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import analysis as an
from .core import (
    NumericalSet,
    associated_semigroup,
    format_set,
    is_semigroup,
    max_embedding_dimension,
    shift_down,
)
from .enumeration import iter_all_sets, iter_semigroups_upto, semigroup_complement_images
from .young import c1, diagram_of, hook_set


@dataclass
class VerificationReport:
    statement: str
    domain_bound: int
    instances_checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "domain_bound": self.domain_bound,
            "instances_checked": self.instances_checked,
            "counterexamples": self.counterexamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class Statement:
    name: str
    description: str
    domain: Callable[[int], Iterable]
    check: Callable[..., bool]


def _c1(S: NumericalSet) -> int:
    return c1(diagram_of(S))


def _sets(max_f: int) -> Iterator[NumericalSet]:
    return iter_all_sets(max_f)


def _semigroups(max_f: int) -> Iterator[NumericalSet]:
    return iter_semigroups_upto(max_f)


def _hookgap(S: NumericalSet) -> bool:
    return hook_set(diagram_of(S)) == frozenset(associated_semigroup(S).gaps)


def _dual_path(S: NumericalSet) -> bool:
    return an.complement(S) == an.complement_via_diagram(S)


def _lemma54(S: NumericalSet) -> bool:
    return max_embedding_dimension(S) == is_semigroup(shift_down(S))


def _prop24_domain(max_f: int):
    images = semigroup_complement_images(max_f + 2)
    for T in iter_all_sets(max_f):
        yield T, images


def _prop24(T: NumericalSet, images: dict) -> bool:
    exists = T in images and images[T] <= T.frobenius + 2
    if an.is_semigroup_complement(T) != exists:
        return False
    if exists:
        W = an.witness_semigroup(T)
        return is_semigroup(W) and an.complement(W) == T
    return True


def _thm4_domain(max_f: int):
    for S in iter_all_sets(max_f):
        if is_semigroup(an.complement(S)):
            yield S


def _prop57_domain(max_f: int):
    for S in iter_semigroups_upto(max_f):
        for n in (1, 2):
            yield S, n


STATEMENTS: dict[str, Statement] = {
    s.name: s
    for s in [
        Statement("thm22", "complement formula equals diagram rotation", _sets, _dual_path),
        Statement("prop23", "Frobenius, genus and base identities of the complement", _sets, an.verify_prop23),
        Statement("prop24", "intrinsic test for complements of semigroups vs search", _prop24_domain, _prop24),
        Statement("hookgap", "hook lengths = gaps of A(S)", _sets, _hookgap),
        Statement("thm3", "A(~S) has <= 1 small atom for semigroups S", _semigroups, an.verify_thm3),
        Statement("thm4", "A(S) shapes when ~S is a semigroup", _thm4_domain, an.verify_thm4),
        Statement("cor42", "~S is a semigroup iff S has <= 1 small atom", _semigroups, an.verify_cor42),
        Statement("prop51", "c1(~S) = c1(S) - 1", _sets, an.verify_prop51),
        Statement("cor52", "complement sequence length = c1(S)", _sets, an.verify_cor52),
        Statement(
            "prop53",
            "A(S) ⊆ A(S^(2))",
            lambda n: (S for S in _sets(n) if _c1(S) >= 2),
            an.verify_prop53,
        ),
        Statement("lemma54", "max embedding dimension iff shifted set is a semigroup", _semigroups, _lemma54),
        Statement(
            "prop55",
            "S^(2) semigroup iff S ∪ [B,∞) has max embedding dimension",
            lambda n: (S for S in _semigroups(n) if _c1(S) >= 2),
            an.verify_prop55,
        ),
        Statement(
            "cor56",
            "max embedding dimension semigroups have semigroup S^(2)",
            lambda n: (
                S for S in _semigroups(n) if _c1(S) >= 2 and max_embedding_dimension(S)
            ),
            an.verify_cor56,
        ),
        Statement("prop57", "lift T satisfies T^(2n) = S, n in {1,2}", _prop57_domain, an.verify_prop57),
    ]
}


def run_statement(name: str, max_f: int) -> VerificationReport:
    """Check statement ``name`` on every instance of its domain with F <= max_f."""
    try:
        st = STATEMENTS[name]
    except KeyError:
        raise KeyError(f"unknown statement {name!r}; choose from {sorted(STATEMENTS)}") from None
    report = VerificationReport(name, max_f)
    start = time.perf_counter()
    for inst in st.domain(max_f):
        args = inst if isinstance(inst, tuple) else (inst,)
        report.instances_checked += 1
        try:
            ok = st.check(*args)
        except AssertionError:
            ok = False
        if not ok:
            label = format_set(args[0])
            if name == "prop57":
                label += f" (n={args[1]})"
            report.counterexamples.append(label)
    report.wall_time = time.perf_counter() - start
    return report
