"""Levels, ranks and norms for RS(X) and RS^P(X) syntax.

Gamma_{theta+1} is represented by the term psi(0): it is the least strongly
critical ordinal above every Gamma_k with k <= theta, so all levels and ranks
stay inside T(theta) without extending the Gamma index range.

The two systems use different atom clauses.  The L-system takes the ranks of
both sides of an atom; the P-system takes their levels.  Likewise the
unbounded-quantifier clause adds 1 in the L-system and 2 in the P-system.
Both are implemented exactly as given.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .arith import add, natural_sum, numeral, omega_times, veblen
from .errors import IllFormed, NonDecomposable
from .hf import EMPTY, HFSet, transitive_closure
from .rsyntax import (ATOMS, BOUNDED, L_SYSTEM, P_SYSTEM, SUBSET_BOUNDED, UNBOUNDED,
                      All, And, BAll, BEx, Ex, FreeVar, In, LStage, NotIn, Or, PAll,
                      PEx, Sep, UBar, Var, VStage, equals, has_unbounded, is_basic,
                      is_delta0, negate, operands, relativise, substitute, terms_of)
from .terms import (OMEGA, ONE, ZERO, BaseOrder, Gamma, Psi, Term, _cmp, ensure_valid,
                    format_term, max_term, parts)

__all__ = ["GAMMA_THETA_SUCC", "EMPTY_BAR", "level", "level_set", "k_of_formula",
           "rank_L", "rank_P", "norm", "norm_sequent", "decompose", "make_sep",
           "check_term", "FormulaGenerator", "omega_multiple_offset"]

GAMMA_THETA_SUCC = Psi(ZERO)
EMPTY_BAR = UBar(EMPTY)


@functools.lru_cache(maxsize=1 << 16)
def _plus(a: Term, n: int) -> Term:
    return add(a, numeral(n))


def _max(*ts: Term) -> Term:
    return max_term(ts)


# -- levels -------------------------------------------------------------------------

def level(t, base: Optional[BaseOrder] = None) -> Term:
    """The ordinal level |t| of an RS term."""
    if isinstance(t, UBar):
        k = t.u.rank
        if base is not None and not base.admits(k):
            raise IllFormed(f"rank({t.u}) = {k} exceeds theta = {base}")
        return Gamma(k)
    if isinstance(t, (LStage, VStage, FreeVar, Sep)):
        return add(GAMMA_THETA_SUCC, t.alpha)
    if isinstance(t, Var):
        raise IllFormed(f"variable {t.name} has no level")
    raise IllFormed(f"not an RS term: {t!r}")


def level_set(a) -> list:
    """Levels of the terms directly occurring in a formula (|F(s1..sn)|)."""
    seen = []
    for x in operands(a):
        if not isinstance(x, Var):
            lv = level(x)
            if lv not in seen:
                seen.append(lv)
    return seen


def k_of_formula(a) -> frozenset:
    """Levels of all terms and subterms of ``a``, plus Omega if ``a`` has an
    unbounded quantifier."""
    out = {level(t) for t in terms_of(a)}
    if has_unbounded(a):
        out.add(OMEGA)
    return frozenset(out)


# -- well-formedness --------------------------------------------------------------------

def _check_stage(alpha: Term, base: BaseOrder):
    ensure_valid(alpha, base)
    if _cmp(alpha, OMEGA) >= 0:
        raise IllFormed(f"stage {format_term(alpha)} is not below Omega")


def make_sep(stage, var: str, body, base: BaseOrder = BaseOrder(), check: bool = True) -> Sep:
    """Build a comprehension term.

    For an L-stage the body is relativised to the stage and every parameter
    must have level below the comprehension; for a V-stage the body must be
    Delta0^P and parameters are unconstrained.
    """
    if isinstance(stage, LStage):
        body = relativise(body, stage)
    elif not isinstance(stage, VStage):
        raise IllFormed(f"comprehension over {stage} (need L[...] or V[...])")
    s = Sep(stage, var, body)
    if check:
        check_term(s, base)
    return s


def check_term(t, base: BaseOrder = BaseOrder()):
    """Raise IllFormed unless ``t`` satisfies the side conditions on RS terms."""
    if isinstance(t, UBar):
        level(t, base)
    elif isinstance(t, (LStage, VStage)):
        _check_stage(t.alpha, base)
    elif isinstance(t, FreeVar):
        _check_stage(t.alpha, base)
        if t.index < 0:
            raise IllFormed("free variable index must be natural")
    elif isinstance(t, Sep):
        _check_stage(t.alpha, base)
        from .rsyntax import free_vars, is_delta0P
        extra = free_vars(t.body) - {t.var}
        if extra:
            raise IllFormed(f"comprehension body has free variables {sorted(extra)}")
        lv = level(t)
        for x in operands(t.body):
            if isinstance(x, Var):
                continue
            check_term(x, base)
            if isinstance(t.stage, LStage):
                if isinstance(x, (VStage, FreeVar)) or (isinstance(x, Sep) and isinstance(x.stage, VStage)):
                    raise IllFormed("P-system term inside an L-comprehension")
                if x != t.stage and _cmp(level(x), lv) >= 0:
                    raise IllFormed(
                        f"parameter {x} has level {format_term(level(x))} "
                        f"not below {format_term(lv)}")
        if isinstance(t.stage, LStage):
            if has_unbounded(t.body):
                raise IllFormed("L-comprehension body must be relativised")
        elif not is_delta0P(t.body):
            raise IllFormed("V-comprehension body must be Delta0^P")
    elif isinstance(t, Var):
        raise IllFormed(f"free variable {t.name} where a closed term is required")
    else:
        raise IllFormed(f"not an RS term: {t!r}")
    return t


# -- ranks ---------------------------------------------------------------------------

def _closed(x):
    if isinstance(x, Var):
        raise IllFormed(f"rank of an open expression (free variable {x.name})")
    return x


def rank_L(x) -> Term:
    """Rank of an L-system term or closed formula."""
    if isinstance(x, (UBar, LStage, Sep)):
        return _rank_L_term(x)
    return _rank_L(x)


@functools.lru_cache(maxsize=1 << 14)
def _rank_L_term(x) -> Term:
    return _rank_L(x)


def _rank_L(x) -> Term:
    if isinstance(x, UBar):
        return Gamma(x.u.rank)
    if isinstance(x, LStage):
        return add(GAMMA_THETA_SUCC, omega_times(x.alpha))
    if isinstance(x, Sep):
        if not isinstance(x.stage, LStage):
            raise IllFormed("V-comprehension in the L-system")
        body0 = substitute(x.body, x.var, EMPTY_BAR)
        return _max(_plus(rank_L(x.stage), 1), _plus(rank_L(body0), 2))
    if isinstance(x, (VStage, FreeVar)):
        raise IllFormed(f"{x} is not an L-system term")
    if isinstance(x, ATOMS):
        s, t = _closed(x.s), _closed(x.t)
        return _max(_plus(rank_L(t), 1), _plus(rank_L(s), 6))
    if isinstance(x, (And, Or)):
        return _plus(_max(rank_L(x.a), rank_L(x.b)), 1)
    if isinstance(x, BOUNDED):
        t = _closed(x.bound)
        body0 = rank_L(substitute(x.body, x.var, EMPTY_BAR))
        if isinstance(t, UBar):
            return _max(_plus(rank_L(t), 3), _plus(body0, 2))
        return _max(rank_L(t), _plus(body0, 2))
    if isinstance(x, UNBOUNDED):
        body0 = rank_L(substitute(x.body, x.var, EMPTY_BAR))
        return _max(OMEGA, _plus(body0, 1))
    if isinstance(x, SUBSET_BOUNDED):
        raise IllFormed("subset-bounded quantifier in the L-system")
    raise IllFormed(f"cannot rank {x!r}")


def rank_P(x) -> Term:
    """Rank of a P-system term or closed formula."""
    if isinstance(x, UBar):
        return Gamma(x.u.rank)
    if isinstance(x, (VStage, FreeVar)):
        # free variables sit at the level of their stage and are ranked like it
        return add(GAMMA_THETA_SUCC, omega_times(x.alpha))
    if isinstance(x, Sep):
        if not isinstance(x.stage, VStage):
            raise IllFormed("L-comprehension in the P-system")
        body0 = substitute(x.body, x.var, EMPTY_BAR)
        return _max(_plus(rank_P(x.stage), 1), _plus(rank_P(body0), 2))
    if isinstance(x, LStage):
        raise IllFormed(f"{x} is not a P-system term")
    if isinstance(x, ATOMS):
        s, t = _closed(x.s), _closed(x.t)
        return _max(_plus(level(s), 6), _plus(level(t), 1))
    if isinstance(x, (And, Or)):
        return _plus(_max(rank_P(x.a), rank_P(x.b)), 1)
    if isinstance(x, BOUNDED + SUBSET_BOUNDED):
        t = _closed(x.bound)
        body0 = rank_P(substitute(x.body, x.var, EMPTY_BAR))
        return _max(_plus(rank_P(t), 3), _plus(body0, 2))
    if isinstance(x, UNBOUNDED):
        body0 = rank_P(substitute(x.body, x.var, EMPTY_BAR))
        return _max(OMEGA, _plus(body0, 2))
    raise IllFormed(f"cannot rank {x!r}")


def norm(a) -> Term:
    """omega^rk(A)."""
    return veblen(ZERO, rank_L(a))


def norm_sequent(gamma: Iterable) -> Term:
    out = ZERO
    for a in gamma:
        out = natural_sum(out, norm(a))
    return out


def omega_multiple_offset(r: Term, base_level: Term) -> Optional[int]:
    """n if r = omega * base_level + n for a natural n, else None."""
    target = list(parts(omega_times(base_level)))
    pr = list(parts(r))
    if pr[:len(target)] != target:
        return None
    rest = pr[len(target):]
    if any(p != ONE for p in rest):
        return None
    return len(rest)


# -- decomposition -----------------------------------------------------------------------

def _dot_in(s, t, other, conj: bool = True):
    """``s in-dot t  (and|or)  other`` with the case split on the form of t."""
    join = And if conj else Or
    if isinstance(t, UBar):
        first = In(s, t) if conj else NotIn(s, t)
        return join(first, other)
    if isinstance(t, LStage):
        return other
    if isinstance(t, Sep):
        first = substitute(t.body, t.var, s)
        return join(first if conj else negate(first), other)
    raise IllFormed(f"membership over {t} is not decomposable in the L-system")


def _admissible(pool: Sequence, t) -> list:
    lt_ = level(t)
    return [s for s in pool if _cmp(level(s), lt_) < 0]


def _disjuncts(a, pool: Sequence) -> Tuple[list, list]:
    """Components of a formula of disjunctive form 1-4: (index terms, components)."""
    if isinstance(a, In):
        if is_basic(a):
            raise NonDecomposable(f"{a} is basic")
        r, t = _closed(a.s), _closed(a.t)
        idx = _admissible(pool, t)
        return idx, [_dot_in(s, t, equals(r, s)) for s in idx]
    if isinstance(a, BEx):
        t = _closed(a.bound)
        idx = _admissible(pool, t)
        return idx, [_dot_in(s, t, substitute(a.body, a.var, s)) for s in idx]
    if isinstance(a, Ex):
        idx = list(pool)
        return idx, [substitute(a.body, a.var, s) for s in idx]
    if isinstance(a, Or):
        return [0, 1], [a.a, a.b]
    raise NonDecomposable(f"{a} is not of disjunctive form")


def decompose(a, pool: Sequence) -> List[Tuple[object, object]]:
    """Pool-restricted components of the infinitary disjunction or conjunction
    assigned to a non-basic L-system formula.

    The true index sets are infinite; only pool members satisfying the
    level constraint of the clause are used.
    """
    if isinstance(a, (In, BEx, Ex, Or)):
        idx, comps = _disjuncts(a, pool)
        return list(zip(idx, comps))
    if isinstance(a, (NotIn, BAll, All, And)):
        if is_basic(a):
            raise NonDecomposable(f"{a} is basic")
        idx, comps = _disjuncts(negate(a), pool)
        return [(i, negate(c)) for i, c in zip(idx, comps)]
    raise NonDecomposable(f"{a} is not decomposable in the L-system")


# -- random generation ----------------------------------------------------------------

def _small_stages() -> list:
    from .terms import OMEGA_SMALL, Phi
    return [ZERO, ONE, numeral(2), OMEGA_SMALL, add(OMEGA_SMALL, ONE),
            GAMMA_THETA_SUCC, Phi(ONE, ZERO)]


@dataclass
class FormulaGenerator:
    """Seeded random L-system terms and formulas over a small term pool."""

    seed: int = 0
    x: HFSet = None
    max_depth: int = 4
    pool_size: int = 40

    def __post_init__(self):
        self.rng = random.Random(self.seed)
        if self.x is None:
            from .hf import hf_from_nat
            self.x = hf_from_nat(2)
        self.base = BaseOrder.finite(self.x.rank)
        self.pool = self._build_pool()

    def _build_pool(self) -> list:
        pool = [UBar(u) for u in transitive_closure(self.x)]
        stages = [LStage(a) for a in _small_stages()]
        pool += stages
        while len(pool) < self.pool_size:
            st = self.rng.choice(stages)
            lower = [p for p in pool if _cmp(level(p), level(st)) < 0]
            body = self._formula(2, ["v"], lower + [st], allow_unbounded=True)
            pool.append(make_sep(st, "v", body, self.base))
        return pool[:max(self.pool_size, len(pool))]

    def _operand(self, terms, vars_):
        if vars_ and self.rng.random() < 0.5:
            return Var(self.rng.choice(vars_))
        return self.rng.choice(terms)

    def _formula(self, depth, vars_, terms, allow_unbounded=True):
        r = self.rng.random()
        if depth <= 0 or r < 0.25:
            cls = self.rng.choice((In, NotIn))
            return cls(self._operand(terms, vars_), self._operand(terms, vars_))
        if r < 0.45:
            cls = self.rng.choice((And, Or))
            return cls(self._formula(depth - 1, vars_, terms, allow_unbounded),
                       self._formula(depth - 1, vars_, terms, allow_unbounded))
        v = f"x{len(vars_)}"
        if r < 0.6 and allow_unbounded:
            cls = self.rng.choice((All, Ex))
            return cls(v, self._formula(depth - 1, vars_ + [v], terms, allow_unbounded))
        cls = self.rng.choice((BAll, BEx))
        bound = self._operand(terms, vars_)
        return cls(v, bound, self._formula(depth - 1, vars_ + [v], terms, allow_unbounded))

    def formula(self, free: Sequence[str] = (), delta0: bool = False):
        """A random formula whose free variables are among ``free``."""
        return self._formula(self.rng.randint(1, self.max_depth), list(free), self.pool,
                             allow_unbounded=not delta0)

    def term(self):
        return self.rng.choice(self.pool)
