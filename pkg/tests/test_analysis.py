import pytest
from hypothesis import given

from numset import (
    DomainError,
    NotASemigroupError,
    NumericalSet,
    Shape,
    associated_semigroup,
    atom_profile,
    c1,
    complement,
    complement_report,
    complement_sequence,
    complement_via_diagram,
    diagram_of,
    is_semigroup,
    is_semigroup_complement,
    lift,
    parse_set,
    witness_semigroup,
)
from numset import analysis as an
from numset.enumeration import iter_all_sets, iter_semigroups_upto

from . import oracles
from .conftest import numerical_sets

P = parse_set


class TestComplement:
    def test_worked_example(self, example):
        assert complement(example) == P("0,2,3,6,8,10->")

    def test_small_cases(self):
        assert complement(P("gaps:1")) == NumericalSet()
        for f in range(1, 8):
            assert complement(NumericalSet(tuple(range(1, f + 1)))) == NumericalSet()

    def test_naturals_is_error(self):
        with pytest.raises(DomainError):
            complement(NumericalSet())
        with pytest.raises(DomainError):
            complement_via_diagram(NumericalSet())

    @given(numerical_sets())
    def test_formula_matches_oracle(self, S):
        if S.is_naturals():
            return
        assert frozenset(complement(S).gaps) == oracles.formula_complement_gaps(S.gaps)
        assert complement(S) == complement_via_diagram(S)

    def test_not_an_involution(self, example):
        assert complement(complement(example)) != example


class TestReport:
    def test_example(self, example):
        rep = complement_report(example)
        t = rep.complement_scalars
        assert t.frobenius == 9 and rep.base_bound_tight
        assert t.genus == 5 == 6 + 10 - 11
        assert t.base == 8 == 10 - 2
        assert rep.delta_genus == -1
        assert rep.failures() == []

    def test_one_in_set(self):
        rep = complement_report(P("0,1,3->"))
        assert rep.complement == NumericalSet()
        assert rep.complement_scalars.frobenius == -1
        assert not rep.base_bound_tight
        assert rep.failures() == []

    def test_single_gap(self):
        rep = complement_report(P("gaps:1"))
        assert rep.complement_scalars.genus == 0 == 1 + 0 - 1
        assert rep.failures() == []

    def test_detects_broken_identity(self, example):
        rep = complement_report(example)
        bad = an.ComplementReport(
            rep.original, rep.original, rep.original_scalars, rep.original_scalars, 0, False
        )
        assert bad.failures()

    def test_json_shape(self, example):
        d = complement_report(example).to_dict()
        assert d["complement"] == "0,2,3,6,8,10->"
        assert d["complement_scalars"]["base"] == 8


class TestSemigroupComplements:
    def test_example_fails_condition_a(self):
        # 3 + 6 = 9 = F(T)
        assert not is_semigroup_complement(P("0,2,3,6,8,10->"))

    def test_positive_with_witness(self):
        T = P("0,2->")
        assert is_semigroup_complement(T)
        W = witness_semigroup(T)
        assert W == P("0,2,4->")
        assert complement(W) == T

    def test_sum_hits_frobenius(self):
        assert not is_semigroup_complement(P("0,1,2,4->"))

    def test_witness_gate(self):
        with pytest.raises(DomainError):
            witness_semigroup(NumericalSet())
        with pytest.raises(DomainError):
            witness_semigroup(P("0,2,3,6,8,10->"))

    def test_complements_of_semigroups_pass(self):
        for S in iter_semigroups_upto(14):
            T = complement(S)
            if not T.is_naturals():
                assert is_semigroup_complement(T)
                assert complement(witness_semigroup(T)) == T

    def test_matches_search(self):
        found = {}
        for S in iter_semigroups_upto(10):
            found.setdefault(complement(S), []).append(S.frobenius)
        positives = 0
        for T in iter_all_sets(8):
            exists = any(F <= T.frobenius + 2 for F in found.get(T, []))
            assert is_semigroup_complement(T) == exists
            positives += exists
        assert positives > 20


class TestTheorems:
    def test_thm3_examples(self):
        assert an.verify_thm3(P("gaps:1,3"))
        assert complement(P("gaps:1,3")) == P("0,2->")
        assert an.verify_thm3(P("gaps:1,2,3,4,5"))
        with pytest.raises(NotASemigroupError):
            an.verify_thm3(P("0,2,4,7,8,10,12->"))

    def test_thm3_two_small_atoms(self):
        # <3,4> has small atoms 3,4 (F = 5); A(~S) must have no small atoms
        S = P("gaps:1,2,5")
        T = complement(S)
        assert an.verify_thm3(S)
        assert associated_semigroup(T).small_elements() == []

    def test_thm4_gate(self, example):
        assert not is_semigroup(complement(example))
        with pytest.raises(DomainError):
            an.verify_thm4(example)

    def test_thm4_non_semigroup_shapes(self):
        seen = set()
        for S in iter_all_sets(12):
            if is_semigroup(complement(S)) and not is_semigroup(S):
                assert an.verify_thm4(S)
                A = associated_semigroup(S)
                seen.add(len(A.small_elements()))
        assert seen == {0, 1}

    def test_cor42(self):
        assert an.verify_cor42(P("gaps:1,3"))
        assert an.verify_cor42(P("gaps:1,2,5"))
        assert not is_semigroup(complement(P("gaps:1,2,5")))
        assert an.verify_cor42(P("gaps:1,2,3,4"))


class TestSequences:
    def test_example_sequence(self, example):
        seq = complement_sequence(example)
        assert seq.length == 5
        assert seq[1] == P("0,2,3,6,8,10->")
        assert seq[-1] == NumericalSet()
        genera = [T.genus for T in seq.terms]
        assert all(a > b for a, b in zip(genera, genera[1:]))

    def test_trivial_sequences(self):
        assert complement_sequence(NumericalSet()).length == 0
        assert complement_sequence(P("gaps:1")).length == 1

    @given(numerical_sets(20))
    def test_length_is_c1(self, S):
        seq = complement_sequence(S)
        assert seq.length == c1(diagram_of(S))
        for a, b in zip(seq.terms, seq.terms[1:]):
            assert b == complement(a)

    def test_prop53_example(self, example):
        assert an.verify_prop53(example)
        S2 = complement(complement(example))
        assert set(associated_semigroup(S2).gaps) <= set(associated_semigroup(example).gaps)

    def test_prop53_gate(self):
        with pytest.raises(DomainError):
            an.verify_prop53(P("gaps:1"))

    def test_prop55_family(self):
        # <2, 2k+1>
        for k in range(1, 8):
            S = NumericalSet(tuple(range(1, 2 * k, 2)))
            if c1(diagram_of(S)) >= 2:
                assert an.verify_prop55(S)

    def test_fill_from_base(self):
        assert an.fill_from_base(P("0,3,4,6->")) == P("0,3->")


class TestLift:
    def test_example(self):
        S = P("gaps:1,3")
        T = lift(S, 1)
        assert T == P("0,2,4,6,8->")
        assert complement(complement(T)) == S
        assert T.frobenius == S.frobenius + 2 * S.multiplicity

    def test_two_steps(self):
        S = P("gaps:1,2,5")
        T = lift(S, 2)
        assert complement_sequence(T)[4] == S
        assert is_semigroup(T)

    def test_gates(self):
        with pytest.raises(NotASemigroupError):
            lift(P("0,2,4,7,8,10,12->"))
        with pytest.raises(DomainError):
            lift(NumericalSet())
        with pytest.raises(ValueError):
            lift(P("gaps:1"), 0)


def test_atom_profile_shapes():
    assert atom_profile(P("gaps:1,2,3")).shape is Shape.NO_SMALL
    assert atom_profile(P("0,2,4->")).shape is Shape.ONE_SMALL_ELEMENT
    assert atom_profile(P("0,3,6,9,11->")).shape is Shape.ONE_SMALL_ATOM
    prof = atom_profile(P("0,8,10,12->"))
    assert prof.shape is Shape.OTHER and prof.small_atom_count == 2
