import json

import pytest

from numset import NumericalSet, is_semigroup, parse_set
from numset.enumeration import (
    BudgetError,
    density_table,
    iter_numerical_sets,
    iter_semigroups_frobenius,
    iter_semigroups_genus,
    profiles_when_power_is_semigroup,
    semigroups_reached,
    shape_census,
    shape_census_reference,
)

from . import oracles

# frozen from tests/oracles.py: definitional A(S) over every gap set
ORACLE_CENSUS = {
    4: ({"no_small": 6, "one_small_element": 2, "one_small_atom": 0, "other": 0}, {1: 2}, {}),
    8: (
        {"no_small": 74, "one_small_element": 34, "one_small_atom": 2, "other": 18},
        {1: 18, 2: 10, 3: 6},
        {3: 2},
    ),
    10: (
        {"no_small": 280, "one_small_element": 134, "one_small_atom": 6, "other": 92},
        {1: 60, 2: 40, 3: 18, 4: 16},
        {3: 2, 4: 4},
    ),
}


def test_iter_small():
    assert list(iter_numerical_sets(1)) == [parse_set("gaps:1")]
    sets3 = list(iter_numerical_sets(3))
    assert set(sets3) == {
        parse_set("gaps:3"),
        parse_set("gaps:1,3"),
        parse_set("gaps:2,3"),
        parse_set("gaps:1,2,3"),
    }
    assert len(list(iter_numerical_sets(5))) == 16
    with pytest.raises(ValueError):
        list(iter_numerical_sets(0))


def test_iter_matches_oracle_sets():
    for f in range(1, 11):
        assert {frozenset(S.gaps) for S in iter_numerical_sets(f)} == set(oracles.all_gapsets(f))


def test_semigroups_small():
    assert set(iter_semigroups_frobenius(3)) == {parse_set("gaps:1,3"), parse_set("gaps:1,2,3")}
    assert list(iter_semigroups_genus(0)) == [NumericalSet()]
    for S in iter_semigroups_genus(7):
        assert is_semigroup(S) and S.genus == 7


def test_genus_four_against_filter():
    by_filter = set()
    for f in range(1, 8):
        for S in iter_numerical_sets(f):
            if S.genus == 4 and oracles.is_closed(S.gaps):
                by_filter.add(S)
    assert set(iter_semigroups_genus(4)) == by_filter
    assert len(by_filter) == 7


@pytest.mark.parametrize("f", [1, 4, 8, 10])
def test_census_matches_oracle(f):
    counts, by_l, by_m = ORACLE_CENSUS.get(f, ({"no_small": 1, "one_small_element": 0, "one_small_atom": 0, "other": 0}, {}, {}))
    res = shape_census(f)
    assert res.counts == counts
    assert res.by_l == by_l and res.by_m == by_m
    assert res.total_sets == 2 ** (f - 1) == sum(res.counts.values())


@pytest.mark.parametrize("f", range(1, 14))
def test_vector_census_matches_per_set(f):
    assert shape_census(f).same_counts(shape_census_reference(f))


def test_census_partition_independent():
    a = shape_census(20, workers=1)
    b = shape_census(20, workers=3)
    assert a.same_counts(b)


def test_census_json():
    d = json.loads(shape_census(6).to_json())
    assert d["frobenius"] == 6 and d["total_sets"] == 32
    assert set(d) >= {"counts", "by_l", "by_m", "counterexamples", "wall_time", "ratio_gamma"}


def test_density_table():
    t = density_table(1, 10, l_max=2)
    assert [r.f for r in t.rows] == list(range(1, 11))
    first = t.rows[0]
    assert first.ratio_gamma == 1
    last = t.rows[-1]
    assert (last.count_gamma, last.count_l) == (280, (60, 40))
    assert last.ratio_l(0) == last.ratio_gamma
    for r in t.rows:
        assert 0 <= r.ratio_gamma <= 1
    lines = t.to_csv().splitlines()
    assert lines[0] == "f,total,count_gamma,ratio_gamma,count_l1,ratio_l1,count_l2,ratio_l2"
    assert lines[-1].startswith("10,512,280,0.546875,60,")
    assert t.deltas()[0] is None and len(t.deltas()) == 10


def test_density_gamma_only():
    assert density_table(1, 1, l_max=0).to_csv() == "f,total,count_gamma,ratio_gamma\n1,1,1,1.0\n"


def test_density_budget():
    with pytest.raises(BudgetError):
        density_table(27, 27)
    with pytest.raises(ValueError):
        density_table(5, 3)


def test_open_question_tabulations():
    tally = profiles_when_power_is_semigroup(2, 8)
    assert sum(tally.values()) > 0
    reached = semigroups_reached(3, 10)
    for text in reached:
        assert is_semigroup(parse_set(text))
