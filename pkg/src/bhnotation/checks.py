"""Property suites over enumerated and generated pools.

Each suite returns a :class:`Report`.  Counterexamples are minimised by
keeping the smallest failing instances (by a size measure) seen during the
run; inputs are drawn in a deterministic order from the seed, so reports are
reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

from . import arith, fgh, hf, rsrank, rsyntax
from .errors import NonDecomposable, NotRepresentable, ResourceError
from .rsyntax import BAll, BEx, And, In, NotIn, Or, UBar, Var
from .terms import (OMEGA, ONE, ZERO, BaseOrder, Gamma, Phi, Psi, Sum, Term, _cmp,
                    complexity, enumerate_terms, format_term, in_B, k_set, max_term,
                    parts, psi_witness, sort_terms, validate)

SUITES = ("order", "psi", "veblen", "arith-oracle", "rank", "fgh", "hf")
MAX_EXAMPLES = 3


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    failures: int = 0
    counterexamples: List[tuple] = field(default_factory=list)

    def record(self, ok: bool, example: Callable[[], str] = None, size: int = 0):
        self.trials += 1
        if ok:
            return
        self.failures += 1
        text = example() if example else ""
        self.counterexamples.append((size, text))
        self.counterexamples.sort()
        del self.counterexamples[MAX_EXAMPLES:]

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"name": self.name, "trials": self.trials, "failures": self.failures,
                "counterexamples": [t for _, t in self.counterexamples]}


@dataclass
class Report:
    suite: str
    results: List[PropertyResult] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def prop(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        r = PropertyResult(name)
        self.results.append(r)
        return r

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "info": self.info,
                "properties": [r.to_json() for r in self.results]}

    def lines(self) -> List[str]:
        out = [f"suite {self.suite}: {'ok' if self.ok else 'FAILED'}"]
        for k, v in self.info.items():
            out.append(f"  {k}: {v}")
        for r in self.results:
            out.append(f"  {r.name}: {r.trials} trials, {r.failures} failures")
            for _, ex in r.counterexamples:
                out.append(f"    counterexample: {ex}")
        return out


def _f(*ts) -> str:
    return ", ".join(format_term(t) for t in ts)


def _g(*ts) -> int:
    return sum(complexity(t) for t in ts)


# -- pools -----------------------------------------------------------------------------

class PoolSampler:
    """Draws members of the pool ``enumerate_terms(base, max_g, max_gamma)``
    without enumerating it.

    Every term of complexity max_g is a sum, phi or psi whose immediate parts
    lie in the complexity max_g - 1 pool; the sampler builds such candidates
    from that smaller pool and keeps the ones that validate.
    """

    def __init__(self, base: BaseOrder, max_g: int, max_gamma: int,
                 max_sum_len: int = 3, max_pool: int = 10**6):
        self.base = base
        self.max_sum_len = max_sum_len
        if max_g == 0:
            self.lower = enumerate_terms(base, 0, max_gamma, max_sum_len=max_sum_len)
            self.top = False
        else:
            self.lower = enumerate_terms(base, max_g - 1, max_gamma,
                                         max_sum_len=max_sum_len, max_pool=max_pool)
            self.top = True
        self.principal = [t for t in self.lower if not isinstance(t, (Sum,)) and t != ZERO]

    def draw(self, rng: random.Random) -> Term:
        if not self.top:
            return rng.choice(self.lower)
        while True:
            r = rng.random()
            if r < 0.15:
                return rng.choice(self.lower)
            if r < 0.6:
                t = Phi(rng.choice(self.lower), rng.choice(self.lower))
            elif r < 0.75:
                t = Psi(rng.choice(self.lower))
            else:
                n = rng.randint(2, self.max_sum_len)
                ps = sort_terms(rng.choice(self.principal) for _ in range(n))
                t = Sum(tuple(reversed(ps)))
            if isinstance(validate(t, self.base), Term):
                return t

    def psi_terms(self) -> List[Term]:
        """All psi-terms of the pool (exact: their arguments lie in the lower pool)."""
        if not self.top:
            return [t for t in self.lower if isinstance(t, Psi)]
        return [Psi(a) for a in self.lower if psi_witness(a) is None]


# -- order ------------------------------------------------------------------------------

def order_suite(base: BaseOrder, max_g: int, max_gamma: int, seed: int = 0,
                triples: int = 10**5, max_sum_len: int = 3, max_pool: int = 10**6) -> Report:
    pool = enumerate_terms(base, max_g, max_gamma, max_sum_len=max_sum_len, max_pool=max_pool)
    rep = Report("order", info={"pool_size": len(pool), "max_g": max_g,
                                "max_gamma": max_gamma, "seed": seed})
    irr = rep.prop("irreflexivity")
    for a in pool:
        irr.record(_cmp(a, a) == 0 and not a < a, lambda: _f(a), _g(a))
    tri = rep.prop("trichotomy")
    for i, a in enumerate(pool):
        for b in pool[i + 1:]:
            c1, c2 = _cmp(a, b), _cmp(b, a)
            tri.record(c1 != 0 and c1 == -c2, lambda: _f(a, b), _g(a, b))
    inc = rep.prop("sorted-strictly-increasing")
    for a, b in zip(pool, pool[1:]):
        inc.record(_cmp(a, b) < 0, lambda: _f(a, b), _g(a, b))
    rng = random.Random(seed)
    tr = rep.prop("transitivity")
    for _ in range(triples if len(pool) > 1 else 0):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        ok = True
        for x, y, z in itertools.permutations((a, b, c)):
            if _cmp(x, y) < 0 and _cmp(y, z) < 0 and not _cmp(x, z) < 0:
                ok = False
        tr.record(ok, lambda: _f(a, b, c), _g(a, b, c))
    return rep


# -- psi / K / B ------------------------------------------------------------------------

def psi_suite(base: BaseOrder, max_g: int, max_gamma: int, seed: int = 0,
              samples: int = 10**4, max_sum_len: int = 3, max_pool: int = 10**6) -> Report:
    sampler = PoolSampler(base, max_g, max_gamma, max_sum_len, max_pool)
    psis = sampler.psi_terms()
    rep = Report("psi", info={"psi_terms": len(psis), "max_g": max_g,
                              "max_gamma": max_gamma, "seed": seed})
    coh = rep.prop("psi-coherence")
    for x in psis:
        for y in psis:
            coh.record(_cmp(x, y) == _cmp(x.arg, y.arg), lambda: _f(x, y), _g(x, y))
    kb = rep.prop("k-bound")
    for x in psis:
        kb.record(all(_cmp(xi, x.arg) < 0 for xi in k_set(x.arg)), lambda: _f(x), _g(x))
    floor = rep.prop("gamma-floor")
    indices = range(max_gamma + 1) if base.theta is None else range(base.theta + 1)
    for x in psis:
        floor.record(all(_cmp(Gamma(i), x) < 0 for i in indices), lambda: _f(x), _g(x))
    kc = rep.prop("k-complexity")
    rng = random.Random(seed)
    mono = rep.prop("b-monotonicity")
    for _ in range(samples):
        a = sampler.draw(rng)
        g, d = sampler.draw(rng), sampler.draw(rng)
        if _cmp(d, g) < 0:
            g, d = d, g
        mono.record(not in_B(a, g) or in_B(a, d), lambda: _f(a, g, d), _g(a, g, d))
        kc.record(all(complexity(xi) < complexity(a) for xi in k_set(a)),
                  lambda: _f(a), _g(a))
    return rep


# -- veblen -----------------------------------------------------------------------------

def _veblen(a, b):
    try:
        return arith.veblen(a, b)
    except NotRepresentable:
        return None


def veblen_suite(base: BaseOrder, max_g: int, max_gamma: int, seed: int = 0,
                 samples: Optional[int] = None, max_sum_len: int = 3,
                 max_pool: int = 10**6, max_triples: int = 10**7) -> Report:
    """Veblen laws on all pool triples (``samples=None``) or on sampled triples."""
    pool = enumerate_terms(base, max_g, max_gamma, max_sum_len=max_sum_len, max_pool=max_pool)
    rep = Report("veblen", info={"pool_size": len(pool), "max_g": max_g,
                                 "max_gamma": max_gamma, "seed": seed,
                                 "mode": "all triples" if samples is None else "sampled"})
    if samples is None:
        n3 = len(pool) ** 3
        if n3 > max_triples:
            raise ResourceError(f"{len(pool)}^3 = {n3} triples exceeds max_triples={max_triples}")
        triples = itertools.product(pool, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(pool), rng.choice(pool), rng.choice(pool)) for _ in range(samples))
    valid = rep.prop("output-validates")
    fix = rep.prop("fixed-point")
    mono = rep.prop("monotone-second-argument")
    pair_cache = {}

    def v(a, b):
        key = (a, b)
        if key not in pair_cache:
            pair_cache[key] = _veblen(a, b)
        return pair_cache[key]

    for a, b, c in triples:
        bc = v(b, c)
        if bc is not None:
            valid.record(isinstance(validate(bc, base), Term), lambda: _f(b, c), _g(b, c))
        if _cmp(a, b) < 0 and bc is not None:
            abc = v(a, bc)
            if abc is not None:
                fix.record(abc == bc, lambda: _f(a, b, c), _g(a, b, c))
        if _cmp(b, c) < 0:
            x, y = v(a, b), v(a, c)
            if x is not None and y is not None:
                mono.record(_cmp(x, y) < 0, lambda: _f(a, b, c), _g(a, b, c))
    return rep


# -- arithmetic oracle -------------------------------------------------------------------
#
# Ordinals below w^w^w as nested lists: an ordinal is the descending list of
# its Cantor exponents, each exponent (below w^w) the descending list of
# naturals in its own Cantor form.  Python list comparison is then exactly
# the ordinal order.

def oracle_add(a: list, b: list) -> list:
    if not b:
        return list(a)
    head = b[0]
    keep = list(a)
    while keep and keep[-1] < head:
        keep.pop()
    return keep + list(b)


def oracle_natsum(a: list, b: list) -> list:
    return sorted(a + b, reverse=True)


def _nat_of(t: Term) -> int:
    # t = w^0 + ... + w^0 (n times) or 0
    ps = parts(t)
    if any(p != ONE for p in ps):
        raise ValueError(f"{format_term(t)} is not a natural")
    return len(ps)


def to_oracle(t: Term) -> list:
    out = []
    for p in parts(t):
        if not (isinstance(p, Phi) and p.left == ZERO):
            raise ValueError(f"{format_term(t)} is outside the w^w^w fragment")
        out.append([_nat_of(q.right) for q in parts(p.right)
                    if isinstance(q, Phi) and q.left == ZERO] if parts(p.right) else [])
        if len(out[-1]) != len(parts(p.right)):
            raise ValueError(f"{format_term(t)} is outside the w^w^w fragment")
    return out


def from_oracle(xs: list) -> Term:
    def nat(n):
        return arith.numeral(n)

    def w(x):
        return Phi(ZERO, x)

    return arith.from_cnf(w(arith.from_cnf(w(nat(n)) for n in e)) for e in xs)


def fragment_pool(max_nat: int = 2, max_exp_len: int = 2, max_len: int = 3) -> List[Term]:
    """Terms below w^w^w built from 0, + and w^: every CNF with at most
    ``max_len`` parts whose exponents have at most ``max_exp_len`` parts
    w^n with n <= max_nat."""
    exps = []
    for k in range(max_exp_len + 1):
        exps += [list(c) for c in itertools.combinations_with_replacement(range(max_nat, -1, -1), k)]
    exps.sort(reverse=True)
    out = []
    for k in range(max_len + 1):
        for c in itertools.combinations_with_replacement(range(len(exps)), k):
            out.append(from_oracle([exps[i] for i in c]))
    return sort_terms(out)


def arith_oracle_suite(seed: int = 0, max_nat: int = 2, max_exp_len: int = 2,
                       max_len: int = 3) -> Report:
    pool = fragment_pool(max_nat, max_exp_len, max_len)
    lists = [to_oracle(t) for t in pool]
    rep = Report("arith-oracle", info={"pool_size": len(pool), "max_nat": max_nat,
                                       "max_exp_len": max_exp_len, "max_len": max_len})
    rt = rep.prop("oracle-round-trip")
    for t, xs in zip(pool, lists):
        rt.record(from_oracle(xs) == t, lambda: _f(t), _g(t))
    add = rep.prop("add-agrees")
    nat = rep.prop("natural-sum-agrees")
    cmp_ = rep.prop("compare-agrees")
    for a, xa in zip(pool, lists):
        for b, xb in zip(pool, lists):
            add.record(to_oracle(arith.add(a, b)) == oracle_add(xa, xb),
                       lambda: _f(a, b), _g(a, b))
            nat.record(to_oracle(arith.natural_sum(a, b)) == oracle_natsum(xa, xb),
                       lambda: _f(a, b), _g(a, b))
            want = (xa > xb) - (xa < xb)
            cmp_.record(_cmp(a, b) == want, lambda: _f(a, b), _g(a, b))
    return rep


# -- rank ---------------------------------------------------------------------------------

def rank_suite(seed: int = 0, formulas: int = 10**4, theta: int = 2) -> Report:
    from .hf import hf_from_nat
    gen = rsrank.FormulaGenerator(seed=seed, x=hf_from_nat(theta))
    rep = Report("rank", info={"formulas": formulas, "seed": seed, "pool": len(gen.pool)})
    obs_t = rep.prop("rank-offset-terms")
    for t in gen.pool:
        for s in rsyntax.subterms(t):
            obs_t.record(rsrank.omega_multiple_offset(rsrank.rank_L(s), rsrank.level(s)) is not None,
                         lambda: str(s), len(str(s)))
    obs_ii = rep.prop("rank-offset-formulas")
    obs_iii = rep.prop("rank-below-omega-iff-delta0")
    sub = rep.prop("substitution-invariance")
    dec = rep.prop("decomposition-rank-decrease")
    inv = rep.prop("negation-involution")
    dual = rep.prop("sigma-pi-duality")
    for _ in range(formulas):
        a = gen.formula()
        size = rsyntax.formula_size(a)
        r = rsrank.rank_L(a)
        mk = max_term(rsrank.k_of_formula(a))
        obs_ii.record(rsrank.omega_multiple_offset(r, mk) is not None, lambda: str(a), size)
        obs_iii.record((_cmp(r, OMEGA) < 0) == rsyntax.is_delta0(a), lambda: str(a), size)
        na = rsyntax.negate(a)
        inv.record(rsyntax.negate(na) == a, lambda: str(a), size)
        dual.record(rsyntax.is_sigma(a) == rsyntax.is_pi(na), lambda: str(a), size)

        b = gen.formula(free=("x",))
        s = gen.term()
        bs = rsyntax.substitute(b, "x", s)
        if _cmp(rsrank.level(s), max_term(rsrank.k_of_formula(bs))) < 0:
            b0 = rsyntax.substitute(b, "x", rsrank.EMPTY_BAR)
            sub.record(rsrank.rank_L(bs) == rsrank.rank_L(b0),
                       lambda: f"A(x) = {b}; s = {s}", rsyntax.formula_size(b))
        try:
            comps = rsrank.decompose(a, gen.pool)
        except NonDecomposable:
            continue
        for i, c in comps:
            dec.record(_cmp(rsrank.rank_L(c), r) < 0,
                       lambda: f"A = {a}; component {c}", size)
    return rep


# -- fgh ----------------------------------------------------------------------------------

def _w(x: Term) -> Term:
    return Phi(ZERO, x)


FGH_EXACT = [  # (alpha, n, F_alpha(n))
    (ZERO, 3, 4),
    (ONE, 3, 7),
    (arith.numeral(2), 2, 23),
    (arith.numeral(3), 1, 2047),
    (_w(ONE), 2, 23),
]

FGH_GROWTH = [ZERO, ONE, arith.numeral(2), arith.numeral(3), _w(ONE),
              Sum((_w(ONE), ONE)), Sum((_w(ONE), _w(ONE))), _w(arith.numeral(2))]


def _try_fgh(alpha, n, budget):
    try:
        return fgh.fgh_eval(alpha, n, budget)
    except fgh.BudgetExceeded:
        return None


def fgh_suite(seed: int = 0, budget: fgh.Budget = fgh.Budget(10**5, 10**4)) -> Report:
    rep = Report("fgh", info={"budget_steps": budget.max_steps,
                              "budget_bits": budget.max_value_bits})
    exact = rep.prop("exact-values")
    for alpha, n, want in FGH_EXACT:
        exact.record(fgh.fgh_eval(alpha, n) == want,
                     lambda: f"F_{format_term(alpha, sugar=True)}({n})", n)
    inc = rep.prop("increasing-in-n")
    step = rep.prop("successor-dominates")
    for alpha in FGH_GROWTH:
        vals = [_try_fgh(alpha, n, budget) for n in range(5)]
        done = [(n, v) for n, v in enumerate(vals) if v is not None]
        for (n1, v1), (n2, v2) in zip(done, done[1:]):
            inc.record(v1 < v2, lambda: f"F_{format_term(alpha, sugar=True)} at {n1},{n2}", n2)
        succ = arith.add(alpha, ONE)
        for n in range(5):
            a, b = vals[n], _try_fgh(succ, n, budget)
            if a is not None and b is not None:
                step.record(b >= a and (n == 0 or b > a),
                            lambda: f"F_{format_term(succ, sugar=True)}({n})", n)
    fs = rep.prop("fundamental-sequence")
    for alpha in FGH_GROWTH:
        if not fgh.is_limit(alpha):
            continue
        seq = [fgh.fundamental_sequence(alpha, n) for n in range(6)]
        for n, x in enumerate(seq):
            fs.record(_cmp(x, alpha) < 0, lambda: f"{format_term(alpha)}[{n}]", n)
        for n, (x, y) in enumerate(zip(seq, seq[1:])):
            fs.record(_cmp(x, y) < 0, lambda: f"{format_term(alpha)}[{n}] vs [{n+1}]", n)
        below = [b for b in FGH_GROWTH if _cmp(b, alpha) < 0]
        for b in below:
            fs.record(any(_cmp(b, x) < 0 for x in seq),
                      lambda: f"{format_term(alpha)} sequence stays below {format_term(b)}", 0)
    mono = rep.prop("budget-monotonicity")
    big = fgh.Budget(budget.max_steps * 4, budget.max_value_bits * 4)
    for alpha in FGH_GROWTH:
        for n in range(4):
            v = _try_fgh(alpha, n, budget)
            if v is not None:
                mono.record(_try_fgh(alpha, n, big) == v,
                            lambda: f"F_{format_term(alpha, sugar=True)}({n})", n)
    return rep


# -- hf ----------------------------------------------------------------------------------

HF_TABLE = [  # (literal, rank, |TC({x})|), derived by hand
    ("{}", 0, 1),
    ("{{}}", 1, 2),
    ("{{},{{}}}", 2, 3),
    ("{{},{{}},{{},{{}}}}", 3, 4),
    ("{{},{{}},{{},{{}}},{{},{{}},{{},{{}}}}}", 4, 5),
    ("{{{}}}", 2, 3),
    ("{{{{}}}}", 3, 4),
    ("{{},{{{}}}}", 3, 4),
    ("{{{}},{{{}}}}", 3, 4),
    ("{{{},{{}}}}", 3, 4),
    ("{{{{{}}}}}", 4, 5),
    ("{{},{{{}}},{{{{}}}}}", 4, 5),
    ("{{{}},{{},{{}}}}", 3, 4),
    ("{{},{{},{{}}}}", 3, 4),
    ("{{{{}}},{{},{{}}}}", 3, 5),
    ("{{{},{{}},{{},{{}}}}}", 4, 5),
    ("{{},{{}},{{},{{}}},{{},{{}},{{},{{}}}},{{},{{}},{{},{{}}},{{},{{}},{{},{{}}}}}}", 5, 6),
    ("{{{{{}}}},{{},{{}},{{},{{}}}}}", 4, 7),
    ("{{{},{{{}}}}}", 4, 5),
    ("{{{}},{{{}}},{{},{{}}}}", 3, 5),
]


def random_hf(rng: random.Random, max_tc: int = 30, steps: int = 12) -> hf.HFSet:
    """A random HF set with |TC({x})| <= max_tc, grown from the empty set."""
    known = [hf.EMPTY]
    x = hf.EMPTY
    for _ in range(steps):
        k = rng.randint(1, min(3, len(known)))
        y = hf.HFSet(rng.sample(known, k))
        if len(hf.transitive_closure(hf.HFSet([x, y]))) > max_tc:
            break
        x = hf.HFSet(set(x.elements) | {y}) if rng.random() < 0.5 else hf.HFSet([x, y])
        known = list(hf.transitive_closure(x))
    return x


def random_delta0(rng: random.Random, consts: Sequence, depth: int, vars_=()):
    def operand():
        if vars_ and rng.random() < 0.5:
            return Var(rng.choice(vars_))
        return UBar(rng.choice(consts))

    r = rng.random()
    if depth <= 0 or r < 0.3:
        return (In if rng.random() < 0.5 else NotIn)(operand(), operand())
    if r < 0.6:
        cls = And if rng.random() < 0.5 else Or
        return cls(random_delta0(rng, consts, depth - 1, vars_),
                   random_delta0(rng, consts, depth - 1, vars_))
    v = f"y{len(vars_)}"
    cls = BAll if rng.random() < 0.5 else BEx
    return cls(v, operand(), random_delta0(rng, consts, depth - 1, tuple(vars_) + (v,)))


def hf_suite(seed: int = 0, formulas: int = 10**3, max_tc: int = 30) -> Report:
    rep = Report("hf", info={"seed": seed, "formulas": formulas, "max_tc": max_tc})
    vs = rep.prop("v-stage-sizes")
    prev = None
    for alpha in range(5):
        size = len(hf.v_stage(hf.EMPTY, alpha))
        if prev is not None:
            vs.record(size == 2 ** prev, lambda: f"|V_{alpha}| = {size}", alpha)
        prev = size
    from .syntax import parse_hf
    tab = rep.prop("rank-and-closure-table")
    for lit, rank, tc in HF_TABLE:
        x = parse_hf(lit)
        tab.record(hf.set_rank(x) == rank and len(hf.transitive_closure(x)) == tc,
                   lambda: f"{lit}: rank {x.rank}, |TC| {len(hf.transitive_closure(x))}",
                   len(lit))
    rng = random.Random(seed)
    neg = rep.prop("negation-coherence")
    rk = rep.prop("rank-decreases-in-closure")
    for _ in range(formulas):
        x = random_hf(rng, max_tc)
        m = hf.transitive_closure(x)
        a = random_delta0(rng, list(m), 3)
        neg.record(hf.eval_formula(m, a) != hf.eval_formula(m, rsyntax.negate(a)),
                   lambda: f"{a} over TC({x})", rsyntax.formula_size(a))
        y = rng.choice(list(m))
        rk.record(y == x or y.rank < x.rank, lambda: f"{y} in TC({x})", len(m))
    return rep


# -- dispatch ---------------------------------------------------------------------------

def run_suite(name: str, base: BaseOrder = BaseOrder(), max_g: int = 2, max_gamma: Optional[int] = None,
              seed: int = 0, budget: Optional[fgh.Budget] = None, samples: Optional[int] = None) -> List[Report]:
    if max_gamma is None:
        max_gamma = base.theta if base.theta is not None else 2
    if name == "all":
        out = []
        for s in SUITES:
            out += run_suite(s, base, max_g, max_gamma, seed, budget, samples)
        return out
    if name == "order":
        return [order_suite(base, max_g, max_gamma, seed, triples=samples or 10**5)]
    if name == "psi":
        return [psi_suite(base, max_g, max_gamma, seed, samples=samples or 10**4)]
    if name == "veblen":
        return [veblen_suite(base, max_g, max_gamma, seed, samples=samples or 10**5)]
    if name == "arith-oracle":
        return [arith_oracle_suite(seed)]
    if name == "rank":
        theta = base.theta if base.theta is not None else 2
        return [rank_suite(seed, formulas=samples or 10**4, theta=theta)]
    if name == "fgh":
        return [fgh_suite(seed, budget or fgh.Budget(10**5, 10**4))]
    if name == "hf":
        return [hf_suite(seed, formulas=samples or 10**3)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
