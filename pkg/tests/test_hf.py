import json
import random

import pytest
from hypothesis import given, strategies as st

from bhnotation.checks import HF_TABLE, random_delta0, random_hf
from bhnotation.errors import IllFormed, QuantifierEscape, ResourceError
from bhnotation.hf import (EMPTY, HFSet, definable_subset, eval_formula, hf_from_nat,
                           set_rank, transitive_closure, v_stage)
from bhnotation.rsyntax import (BAll, BEx, Ex, In, NotIn, Or, PAll, PEx, UBar, Var,
                                equals, negate)
from bhnotation.syntax import parse_hf

ONE, TWO = hf_from_nat(1), hf_from_nat(2)
x = Var("x")


@st.composite
def hf_sets(draw, depth=3):
    if depth == 0:
        return EMPTY
    kids = draw(st.lists(hf_sets(depth=depth - 1), max_size=3))
    return HFSet(kids)


def test_canonical_printing():
    assert str(EMPTY) == "{}"
    assert str(ONE) == "{{}}"
    assert str(HFSet([ONE, EMPTY])) == "{{},{{}}}" == str(TWO)
    assert HFSet([EMPTY, EMPTY]) == ONE


@given(hf_sets())
def test_print_parse_round_trip(s):
    assert parse_hf(str(s)) == s
    assert str(parse_hf(str(s))) == str(s)


def test_transitive_closure_examples():
    assert list(transitive_closure(EMPTY)) == [EMPTY]
    assert set(transitive_closure(TWO)) == {TWO, EMPTY, ONE}


@pytest.mark.parametrize("lit,rank,tc", HF_TABLE)
def test_rank_table(lit, rank, tc):
    s = parse_hf(lit)
    assert set_rank(s) == rank
    assert len(transitive_closure(s)) == tc


@given(hf_sets())
def test_rank_properties(s):
    m = transitive_closure(s)
    assert len(m) >= set_rank(s) + 1
    for y in m:
        if y != s:
            assert set_rank(y) < set_rank(s)
        for c in y.elements:
            assert c in m


def test_closure_cap():
    with pytest.raises(ResourceError):
        transitive_closure(hf_from_nat(30), cap=10)


def test_v_stage_sizes():
    sizes = [len(v_stage(EMPTY, a)) for a in range(5)]
    assert sizes == [1, 2, 4, 16, 65536]
    for a in range(4):
        assert sizes[a + 1] == 2 ** sizes[a]


def test_v_stage_over_nonempty_base():
    assert len(v_stage(ONE, 1)) == 4        # TC({1}) = {0, 1} has 4 subsets
    with pytest.raises(ResourceError, match="2\\^65536"):
        v_stage(EMPTY, 5)


def test_cumulative_flag_coincides():
    # over the transitive base TC({x}) every stage already contains the previous one
    for base in (EMPTY, ONE, TWO):
        for a in range(3):
            lit = v_stage(base, a)
            cum = v_stage(base, a, cumulative=True)
            assert set(lit) == set(cum)
            if a:
                assert set(v_stage(base, a - 1)) <= set(lit)


def test_eval_examples():
    m = transitive_closure(ONE)
    assert eval_formula(m, In(UBar(EMPTY), UBar(ONE)))
    assert eval_formula(m, BAll("x", UBar(EMPTY), In(x, x)))
    v2 = v_stage(EMPTY, 2)
    assert eval_formula(v2, PEx("x", UBar(EMPTY), equals(x, UBar(EMPTY))))
    assert eval_formula(v2, PAll("x", UBar(ONE), BAll("y", x, In(Var("y"), UBar(ONE)))))


def test_eval_errors():
    m = transitive_closure(ONE)
    with pytest.raises(QuantifierEscape):
        eval_formula(m, PAll("x", UBar(TWO), In(x, x)))
    with pytest.raises(IllFormed):
        eval_formula(m, Ex("x", In(x, x)))
    with pytest.raises(IllFormed):
        eval_formula(m, In(x, UBar(ONE)))


def test_eval_with_assignment():
    m = transitive_closure(TWO)
    a = BEx("y", x, In(Var("y"), UBar(ONE)))
    assert eval_formula(m, a, {"x": TWO})
    assert not eval_formula(m, a, {"x": EMPTY})


def test_negation_coherence_sampled():
    rng = random.Random(5)
    for _ in range(300):
        s = random_hf(rng)
        m = transitive_closure(s)
        assert len(m) <= 30
        a = random_delta0(rng, list(m), 3)
        assert eval_formula(m, a) != eval_formula(m, negate(a))


def test_definable_subset():
    m = transitive_closure(ONE)
    assert definable_subset(m, In(x, UBar(ONE)), "x") == ONE
    assert definable_subset(m, In(x, x), "x") == EMPTY
    assert definable_subset(m, equals(x, x), "x") == HFSet(m)
    p = definable_subset(transitive_closure(TWO), In(x, Var("p")), "x", {"p": TWO})
    assert p == TWO


@given(hf_sets())
def test_definable_subset_inside_universe(s):
    m = transitive_closure(s)
    d = definable_subset(m, Or(In(x, UBar(s)), NotIn(x, x)), "x")
    assert set(d.elements) <= set(m)


def test_universe_json():
    m = transitive_closure(TWO)
    doc = json.loads(m.dumps())
    assert doc["nodes"] == {"0": "{}", "1": "{{}}", "2": "{{},{{}}}"}
    assert doc["edges"] == {"0": [], "1": [0], "2": [0, 1]}
