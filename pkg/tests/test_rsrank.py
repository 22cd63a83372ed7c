import pytest
from hypothesis import given, settings, strategies as st

from bhnotation.arith import add, natural_sum, numeral, veblen
from bhnotation.errors import IllFormed, NonDecomposable
from bhnotation.hf import EMPTY, HFSet, hf_from_nat
from bhnotation.rsrank import (EMPTY_BAR, GAMMA_THETA_SUCC, FormulaGenerator, check_term,
                               decompose, k_of_formula, level, make_sep, norm, norm_sequent,
                               omega_multiple_offset, rank_L, rank_P)
from bhnotation.rsyntax import (All, And, BAll, BEx, Ex, FreeVar, In, LStage, NotIn, Or, PAll,
                                PEx, UBar, Var, VStage, equals, free_vars, is_delta0,
                                is_delta0P, is_pi, is_piP, is_sigma, is_sigmaP, negate,
                                relativise, substitute, subterms)
from bhnotation.terms import OMEGA, ONE, ZERO, BaseOrder, Gamma, Phi, Psi, Sum, _cmp, max_term

W = Phi(ZERO, ONE)
ONE_BAR = UBar(hf_from_nat(1))
TWO_BAR = UBar(hf_from_nat(2))
L0, L1, L2 = LStage(ZERO), LStage(ONE), LStage(numeral(2))
x, y = Var("x"), Var("y")
BASE = BaseOrder.finite(2)


# -- levels and k --------------------------------------------------------------------

def test_levels():
    assert GAMMA_THETA_SUCC == Psi(ZERO)
    assert level(EMPTY_BAR) == Gamma(0)
    assert level(TWO_BAR) == Gamma(2)
    assert level(L2) == Sum((Psi(ZERO), ONE, ONE))
    s = make_sep(L2, "x", In(x, TWO_BAR), BASE)
    assert level(s) == level(L2)
    assert level(VStage(ONE)) == level(FreeVar(ONE, 3)) == Sum((Psi(ZERO), ONE))


def test_level_respects_theta():
    with pytest.raises(IllFormed):
        level(TWO_BAR, BaseOrder.finite(1))


def test_k_of_formula():
    assert k_of_formula(In(EMPTY_BAR, EMPTY_BAR)) == {Gamma(0)}
    assert k_of_formula(Ex("x", In(x, L0))) == {Psi(ZERO), OMEGA}
    s = make_sep(L1, "x", In(x, TWO_BAR), BASE)
    a = BAll("y", s, In(y, ONE_BAR))
    assert k_of_formula(a) == {level(s), Gamma(2), Gamma(1)}
    assert OMEGA not in k_of_formula(a)


# -- ranks ----------------------------------------------------------------------------

def test_rank_L_stage():
    assert rank_L(L0) == Psi(ZERO)
    assert rank_L(L2) == Sum((Psi(ZERO), W, W))
    assert rank_L(LStage(W)) == Sum((Psi(ZERO), Phi(ZERO, numeral(2))))


def test_rank_L_atom():
    assert rank_L(In(EMPTY_BAR, EMPTY_BAR)) == add(Gamma(0), numeral(6))
    assert rank_L(In(EMPTY_BAR, L1)) == add(rank_L(L1), ONE)
    assert rank_L(NotIn(L1, TWO_BAR)) == add(rank_L(L1), numeral(6))


def test_rank_L_unbounded():
    assert rank_L(Ex("x", In(x, L0))) == OMEGA
    inner = Ex("y", In(y, x))
    assert rank_L(All("x", inner)) == add(OMEGA, ONE)


def test_rank_L_bounded():
    a = BEx("x", ONE_BAR, In(x, TWO_BAR))
    # max(Gamma_1 + 3, rk(0bar in 2bar) + 2) = Gamma_2 + 3
    assert rank_L(a) == add(Gamma(2), numeral(3))
    b = BEx("x", L1, In(x, TWO_BAR))
    assert rank_L(b) == rank_L(L1)
    assert rank_L(And(a, b)) == add(rank_L(b), ONE)


def test_rank_L_comprehension():
    s = make_sep(L1, "x", In(x, TWO_BAR), BASE)
    assert rank_L(s) == add(rank_L(L1), ONE)
    t = make_sep(L1, "x", In(x, L1), BASE)
    # rk(0bar in L1) + 2 = rk(L1) + 3
    assert rank_L(t) == add(rank_L(L1), numeral(3))


def test_rank_P():
    assert rank_P(VStage(numeral(2))) == Sum((Psi(ZERO), W, W))
    assert rank_P(In(EMPTY_BAR, VStage(ZERO))) == add(Psi(ZERO), ONE)
    a, b = In(EMPTY_BAR, VStage(ZERO)), In(EMPTY_BAR, EMPTY_BAR)
    assert rank_P(And(a, b)) == add(max_term([rank_P(a), rank_P(b)]), ONE)
    assert rank_P(Ex("x", In(x, VStage(ZERO)))) == OMEGA
    assert rank_P(Ex("x", Ex("y", In(x, y)))) == add(OMEGA, numeral(2))
    p = PAll("x", VStage(ONE), In(x, VStage(ONE)))
    assert rank_P(p) == add(rank_P(VStage(ONE)), numeral(3))


def test_rank_P_atoms_use_levels():
    # the L-system atom clause uses ranks: they differ on stages above 0
    a = In(EMPTY_BAR, LStage(ONE))
    assert rank_L(a) == add(Sum((Psi(ZERO), W)), ONE)
    assert rank_P(In(EMPTY_BAR, VStage(ONE))) == add(Sum((Psi(ZERO), ONE)), ONE)


def test_rank_system_mismatch():
    with pytest.raises(IllFormed):
        rank_L(VStage(ZERO))
    with pytest.raises(IllFormed):
        rank_P(LStage(ZERO))
    with pytest.raises(IllFormed):
        rank_L(PAll("x", EMPTY_BAR, In(x, x)))
    with pytest.raises(IllFormed):
        rank_L(In(x, EMPTY_BAR))


def test_norms():
    a = In(EMPTY_BAR, EMPTY_BAR)
    assert norm(a) == Phi(ZERO, add(Gamma(0), numeral(6)))
    assert norm_sequent([]) == ZERO
    assert norm_sequent([a, a]) == natural_sum(norm(a), norm(a))
    assert norm(Ex("x", In(x, L0))) == veblen(ZERO, OMEGA) == OMEGA


# -- rank = omega * level + n ----------------------------------------------

def test_omega_multiple_offset():
    assert omega_multiple_offset(Sum((Psi(ZERO), W, ONE, ONE)), Sum((Psi(ZERO), ONE))) == 2
    assert omega_multiple_offset(Psi(ZERO), Sum((Psi(ZERO), ONE))) is None
    assert omega_multiple_offset(add(OMEGA, numeral(3)), OMEGA) == 3


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_rank_offset_on_generated(seed):
    g = FormulaGenerator(seed=seed, pool_size=20)
    for t in g.pool:
        for s in subterms(t):
            assert omega_multiple_offset(rank_L(s), level(s)) is not None
    for _ in range(30):
        a = g.formula()
        r = rank_L(a)
        assert omega_multiple_offset(r, max_term(k_of_formula(a))) is not None
        assert (_cmp(r, OMEGA) < 0) == is_delta0(a)


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_substitution_invariance_on_generated(seed):
    g = FormulaGenerator(seed=seed, pool_size=20)
    for _ in range(30):
        b = g.formula(free=("x",))
        s = g.term()
        bs = substitute(b, "x", s)
        if _cmp(level(s), max_term(k_of_formula(bs))) < 0:
            assert rank_L(bs) == rank_L(substitute(b, "x", EMPTY_BAR))


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_decomposition_rank_decrease_on_generated(seed):
    g = FormulaGenerator(seed=seed, pool_size=20)
    for _ in range(20):
        a = g.formula()
        try:
            comps = decompose(a, g.pool)
        except NonDecomposable:
            continue
        r = rank_L(a)
        for _, c in comps:
            assert _cmp(rank_L(c), r) < 0


# -- decomposition ------------------------------------------------------------------------

def test_decompose_bounded_over_stage():
    b = In(x, TWO_BAR)
    a = BEx("x", L1, b)
    s = make_sep(L0, "z", In(Var("z"), ONE_BAR), BASE)
    pool = [EMPTY_BAR, L0, s, L1, L2]
    comps = decompose(a, pool)
    assert [i for i, _ in comps] == [EMPTY_BAR, L0, s]
    assert all(c == substitute(b, "x", i) for i, c in comps)


def test_decompose_membership_in_ubar():
    r = L0
    comps = decompose(In(r, TWO_BAR), [EMPTY_BAR, ONE_BAR, TWO_BAR, L0])
    assert [i for i, _ in comps] == [EMPTY_BAR, ONE_BAR]
    i, c = comps[1]
    assert c == And(In(ONE_BAR, TWO_BAR), equals(r, ONE_BAR))


def test_decompose_membership_in_comprehension():
    s = make_sep(L1, "z", In(Var("z"), TWO_BAR), BASE)
    comps = decompose(In(L0, s), [EMPTY_BAR, L0, L1])
    assert [i for i, _ in comps] == [EMPTY_BAR, L0]
    assert comps[0][1] == And(In(EMPTY_BAR, TWO_BAR), equals(L0, EMPTY_BAR))


def test_decompose_disjunction_and_duals():
    b0, b1 = In(L0, EMPTY_BAR), In(EMPTY_BAR, L0)
    assert decompose(Or(b0, b1), []) == [(0, b0), (1, b1)]
    assert decompose(And(negate(b0), negate(b1)), []) == [(0, negate(b0)), (1, negate(b1))]
    a = BAll("x", L1, In(x, TWO_BAR))
    comps = decompose(a, [EMPTY_BAR, L1])
    assert comps == [(EMPTY_BAR, In(EMPTY_BAR, TWO_BAR))]


def test_decompose_unbounded_uses_whole_pool():
    a = Ex("x", In(x, L1))
    pool = [EMPTY_BAR, L2]
    assert decompose(a, pool) == [(EMPTY_BAR, In(EMPTY_BAR, L1)), (L2, In(L2, L1))]


def test_decompose_basic_rejected():
    with pytest.raises(NonDecomposable):
        decompose(In(EMPTY_BAR, ONE_BAR), [EMPTY_BAR])
    with pytest.raises(NonDecomposable):
        decompose(NotIn(EMPTY_BAR, ONE_BAR), [EMPTY_BAR])


def test_decomposition_rank_decrease_worked_case():
    # r in ubar with r not a constant: rank rk(r)+6, components rk(r)+5
    a = In(L1, TWO_BAR)
    comps = decompose(a, [EMPTY_BAR, ONE_BAR])
    assert rank_L(a) == add(rank_L(L1), numeral(6))
    for _, c in comps:
        assert rank_L(c) == add(rank_L(L1), numeral(5))


# -- comprehension side conditions ---------------------------------------------------------

def test_make_sep_relativises():
    s = make_sep(L1, "x", Ex("y", In(y, x)), BASE)
    assert s.body == BEx("y", L1, In(y, x))


def test_make_sep_parameter_level():
    with pytest.raises(IllFormed, match="level"):
        make_sep(L1, "x", In(x, L2), BASE)
    with pytest.raises(IllFormed):
        make_sep(L1, "x", In(x, VStage(ZERO)), BASE)
    # V-comprehensions have unconstrained parameters but Delta0^P bodies
    make_sep(VStage(ONE), "x", In(x, VStage(numeral(5))), BASE)
    with pytest.raises(IllFormed):
        make_sep(VStage(ONE), "x", Ex("y", In(y, x)), BASE)


def test_check_term_stage_below_omega():
    with pytest.raises(IllFormed):
        check_term(LStage(OMEGA), BASE)
    with pytest.raises(IllFormed):
        check_term(make_sep(L1, "x", In(x, y), BASE, check=False), BASE)


# -- formula classes ---------------------------------------------------------------------

def test_classes():
    d0 = BAll("x", L1, In(x, TWO_BAR))
    assert is_delta0(d0) and is_sigma(d0) and is_pi(d0)
    s = Ex("y", d0)
    assert is_sigma(s) and not is_pi(s) and is_pi(negate(s))
    p = PAll("x", VStage(ONE), In(x, VStage(ONE)))
    assert is_delta0P(p) and not is_delta0(p)
    assert is_delta0P(PEx("x", VStage(ONE), p))
    assert is_sigmaP(Ex("z", p)) and not is_piP(Ex("z", p))


def test_negation_involution():
    g = FormulaGenerator(seed=3)
    for _ in range(200):
        a = g.formula(free=("x",))
        assert negate(negate(a)) == a
        assert is_sigma(a) == is_pi(negate(a))
        assert free_vars(negate(a)) == free_vars(a)


def test_relativise_is_delta0():
    a = Ex("x", All("y", In(y, x)))
    assert is_delta0(relativise(a, L1))


def test_generator_is_deterministic():
    a = [str(FormulaGenerator(seed=11).formula()) for _ in range(3)]
    b = [str(FormulaGenerator(seed=11).formula()) for _ in range(3)]
    assert a == b
    g = FormulaGenerator(seed=11)
    assert len(g.pool) == 40
    for t in g.pool:
        check_term(t, g.base)
