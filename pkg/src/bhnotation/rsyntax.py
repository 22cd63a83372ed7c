"""Terms and formulas of the infinitary systems RS(X) and RS^P(X).

Formulas are kept in negation normal form.  Bound variables are plain
:class:`Var` nodes; every closed term is one of :class:`UBar`,
:class:`LStage`, :class:`VStage`, :class:`Sep` or :class:`FreeVar`.
Comprehension terms are closed: their body mentions only the comprehension
variable, parameters being substituted in as terms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import IllFormed
from .terms import Term, format_term

L_SYSTEM = "L"
P_SYSTEM = "P"


# -- terms --------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class UBar:
    """The constant naming a set u of TC({X})."""
    u: "object"  # HFSet

    def __str__(self):
        return f"ubar{self.u}"


@dataclass(frozen=True)
class LStage:
    alpha: Term

    def __str__(self):
        return f"L[{format_term(self.alpha)}]"


@dataclass(frozen=True)
class VStage:
    alpha: Term

    def __str__(self):
        return f"V[{format_term(self.alpha)}]"


@dataclass(frozen=True)
class FreeVar:
    alpha: Term
    index: int

    def __str__(self):
        return f"fv[{format_term(self.alpha)}, {self.index}]"


@dataclass(frozen=True)
class Sep:
    """``[var in stage | body]`` where ``stage`` is an LStage or VStage."""
    stage: Union[LStage, VStage]
    var: str
    body: "Formula"

    def __str__(self):
        return f"sep({self.stage}, {self.var}, {self.body})"

    @property
    def alpha(self) -> Term:
        return self.stage.alpha


RsTerm = Union[UBar, LStage, VStage, FreeVar, Sep]
Operand = Union[RsTerm, Var]


# -- formulas -----------------------------------------------------------------

@dataclass(frozen=True)
class In:
    s: Operand
    t: Operand

    def __str__(self):
        return f"in({self.s}, {self.t})"


@dataclass(frozen=True)
class NotIn:
    s: Operand
    t: Operand

    def __str__(self):
        return f"notin({self.s}, {self.t})"


@dataclass(frozen=True)
class And:
    a: "Formula"
    b: "Formula"

    def __str__(self):
        return f"and({self.a}, {self.b})"


@dataclass(frozen=True)
class Or:
    a: "Formula"
    b: "Formula"

    def __str__(self):
        return f"or({self.a}, {self.b})"


@dataclass(frozen=True)
class BAll:
    var: str
    bound: Operand
    body: "Formula"

    def __str__(self):
        return f"ball({self.var}, {self.bound}, {self.body})"


@dataclass(frozen=True)
class BEx:
    var: str
    bound: Operand
    body: "Formula"

    def __str__(self):
        return f"bex({self.var}, {self.bound}, {self.body})"


@dataclass(frozen=True)
class PAll:
    """Subset-bounded universal quantifier (P-system only)."""
    var: str
    bound: Operand
    body: "Formula"

    def __str__(self):
        return f"pball({self.var}, {self.bound}, {self.body})"


@dataclass(frozen=True)
class PEx:
    var: str
    bound: Operand
    body: "Formula"

    def __str__(self):
        return f"pbex({self.var}, {self.bound}, {self.body})"


@dataclass(frozen=True)
class All:
    var: str
    body: "Formula"

    def __str__(self):
        return f"all({self.var}, {self.body})"


@dataclass(frozen=True)
class Ex:
    var: str
    body: "Formula"

    def __str__(self):
        return f"ex({self.var}, {self.body})"


Formula = Union[In, NotIn, And, Or, BAll, BEx, PAll, PEx, All, Ex]
ATOMS = (In, NotIn)
BOUNDED = (BAll, BEx)
SUBSET_BOUNDED = (PAll, PEx)
UNBOUNDED = (All, Ex)
QUANTIFIERS = BOUNDED + SUBSET_BOUNDED + UNBOUNDED

_DUAL = {In: NotIn, NotIn: In, And: Or, Or: And, BAll: BEx, BEx: BAll,
         PAll: PEx, PEx: PAll, All: Ex, Ex: All}


def negate(a: Formula) -> Formula:
    """Syntactic negation: swap each connective, quantifier and atom with its dual."""
    cls = _DUAL[type(a)]
    if isinstance(a, ATOMS):
        return cls(a.s, a.t)
    if isinstance(a, (And, Or)):
        return cls(negate(a.a), negate(a.b))
    if isinstance(a, UNBOUNDED):
        return cls(a.var, negate(a.body))
    return cls(a.var, a.bound, negate(a.body))


def fresh_var(*avoid: Operand) -> str:
    taken = {x.name for x in avoid if isinstance(x, Var)}
    for i in itertools.count():
        name = f"z{i}"
        if name not in taken:
            return name


def equals(s: Operand, t: Operand) -> Formula:
    """``s = t`` as the conjunction of the two bounded inclusions."""
    x = fresh_var(s, t)
    return And(BAll(x, s, In(Var(x), t)), BAll(x, t, In(Var(x), s)))


def subset(s: Operand, t: Operand) -> Formula:
    x = fresh_var(s, t)
    return BAll(x, s, In(Var(x), t))


# -- traversal ------------------------------------------------------------------

def substitute(a: Formula, name: str, term: Operand) -> Formula:
    """Replace free occurrences of variable ``name`` by ``term``."""

    def op(x):
        return term if isinstance(x, Var) and x.name == name else x

    if isinstance(a, ATOMS):
        return type(a)(op(a.s), op(a.t))
    if isinstance(a, (And, Or)):
        return type(a)(substitute(a.a, name, term), substitute(a.b, name, term))
    if isinstance(a, UNBOUNDED):
        if a.var == name:
            return a
        return type(a)(a.var, substitute(a.body, name, term))
    bound = op(a.bound)
    if a.var == name:
        return type(a)(a.var, bound, a.body)
    return type(a)(a.var, bound, substitute(a.body, name, term))


def operands(a: Formula) -> Iterator[Operand]:
    """Operands directly occurring in ``a`` (not descending into Sep bodies)."""
    if isinstance(a, ATOMS):
        yield a.s
        yield a.t
    elif isinstance(a, (And, Or)):
        yield from operands(a.a)
        yield from operands(a.b)
    elif isinstance(a, UNBOUNDED):
        yield from operands(a.body)
    else:
        yield a.bound
        yield from operands(a.body)


def subterms(t: Operand) -> Iterator[RsTerm]:
    """``t`` and all terms occurring inside it."""
    if isinstance(t, Var):
        return
    yield t
    if isinstance(t, Sep):
        yield t.stage
        for x in operands(t.body):
            yield from subterms(x)


def terms_of(a: Formula) -> Iterator[RsTerm]:
    for x in operands(a):
        yield from subterms(x)


def free_vars(a: Formula) -> frozenset:
    if isinstance(a, ATOMS):
        return frozenset(x.name for x in (a.s, a.t) if isinstance(x, Var))
    if isinstance(a, (And, Or)):
        return free_vars(a.a) | free_vars(a.b)
    if isinstance(a, UNBOUNDED):
        return free_vars(a.body) - {a.var}
    fv = free_vars(a.body) - {a.var}
    if isinstance(a.bound, Var):
        fv |= {a.bound.name}
    return fv


def has_unbounded(a: Formula) -> bool:
    if isinstance(a, ATOMS):
        return False
    if isinstance(a, (And, Or)):
        return has_unbounded(a.a) or has_unbounded(a.b)
    if isinstance(a, UNBOUNDED):
        return True
    return has_unbounded(a.body)


def _only(a: Formula, allowed_unbounded, allow_subset: bool) -> bool:
    if isinstance(a, ATOMS):
        return True
    if isinstance(a, (And, Or)):
        return _only(a.a, allowed_unbounded, allow_subset) and _only(a.b, allowed_unbounded, allow_subset)
    if isinstance(a, UNBOUNDED) and not isinstance(a, allowed_unbounded):
        return False
    if isinstance(a, SUBSET_BOUNDED) and not allow_subset:
        return False
    return _only(a.body, allowed_unbounded, allow_subset)


def is_delta0(a: Formula) -> bool:
    return _only(a, (), False)


def is_sigma(a: Formula) -> bool:
    return _only(a, (Ex,), False)


def is_pi(a: Formula) -> bool:
    return _only(a, (All,), False)


def is_delta0P(a: Formula) -> bool:
    return _only(a, (), True)


def _in_class_P(a: Formula, unbounded, subset_ok) -> bool:
    """Membership in the closure of Delta0^P under and/or, bounded quantifiers,
    the subset quantifiers in ``subset_ok`` and the unbounded ones in ``unbounded``."""
    if is_delta0P(a):
        return True
    if isinstance(a, ATOMS):
        return True
    if isinstance(a, (And, Or)):
        return _in_class_P(a.a, unbounded, subset_ok) and _in_class_P(a.b, unbounded, subset_ok)
    if isinstance(a, BOUNDED) or isinstance(a, subset_ok) or isinstance(a, unbounded):
        return _in_class_P(a.body, unbounded, subset_ok)
    return False


def is_sigmaP(a: Formula) -> bool:
    return _in_class_P(a, (Ex,), (PAll,))


def is_piP(a: Formula) -> bool:
    return _in_class_P(a, (All,), (PAll,))


def relativise(a: Formula, stage: Operand) -> Formula:
    """Bound every unbounded quantifier of ``a`` by ``stage``."""
    if isinstance(a, ATOMS):
        return a
    if isinstance(a, (And, Or)):
        return type(a)(relativise(a.a, stage), relativise(a.b, stage))
    if isinstance(a, All):
        return BAll(a.var, stage, relativise(a.body, stage))
    if isinstance(a, Ex):
        return BEx(a.var, stage, relativise(a.body, stage))
    return type(a)(a.var, a.bound, relativise(a.body, stage))


def system_of_term(t: RsTerm) -> set:
    """Systems a term may belong to (subset of {"L", "P"})."""
    if isinstance(t, UBar):
        return {L_SYSTEM, P_SYSTEM}
    if isinstance(t, (LStage,)):
        return {L_SYSTEM}
    if isinstance(t, (VStage, FreeVar)):
        return {P_SYSTEM}
    if isinstance(t, Sep):
        s = {L_SYSTEM} if isinstance(t.stage, LStage) else {P_SYSTEM}
        for x in operands(t.body):
            if not isinstance(x, Var):
                s &= system_of_term(x)
        return s
    raise IllFormed(f"not an RS term: {t!r}")


def system_of(a: Formula) -> set:
    s = {L_SYSTEM, P_SYSTEM}
    for x in operands(a):
        if not isinstance(x, Var):
            s &= system_of_term(x)
    if _has_subset_quantifier(a):
        s.discard(L_SYSTEM)
    return s


def _has_subset_quantifier(a: Formula) -> bool:
    if isinstance(a, ATOMS):
        return False
    if isinstance(a, (And, Or)):
        return _has_subset_quantifier(a.a) or _has_subset_quantifier(a.b)
    if isinstance(a, SUBSET_BOUNDED):
        return True
    return _has_subset_quantifier(a.body)


def is_basic(a: Formula) -> bool:
    return isinstance(a, ATOMS) and isinstance(a.s, UBar) and isinstance(a.t, UBar)


def formula_size(a: Formula) -> int:
    if isinstance(a, ATOMS):
        return 1
    if isinstance(a, (And, Or)):
        return 1 + formula_size(a.a) + formula_size(a.b)
    return 1 + formula_size(a.body)
