"""Ordinal terms of the relativised notation system T(theta).

Terms are immutable trees over ``0``, ``Omega``, ``Gamma_k``, ``+``, binary
``phi`` and ``psi``.  A term is in normal form when it passes
:func:`validate`; every other function in this module assumes normal-form
input.  Gamma indices live in a :class:`BaseOrder`, which plays the part of
the ordering on the ordinals up to theta.

Comparison is decided by case analysis on head constructors:

=========  =======  ======  =========  ===========  ===========  ==========
a \\ b     Zero     Omega   Gamma      Psi          Phi          Sum
=========  =======  ======  =========  ===========  ===========  ==========
Zero       =        <       <          <            <            <
Omega      >        =       >          >            SC-vs-phi    lex
Gamma      >        <       index      <            SC-vs-phi    lex
Psi        >        <       >          argument     SC-vs-phi    lex
Phi        >        phi-SC  phi-SC     phi-SC       veblen       lex
Sum        >        lex     lex        lex          lex          lex
=========  =======  ======  =========  ===========  ===========  ==========

``lex`` compares the additive parts lexicographically, a proper prefix being
smaller.  ``SC-vs-phi``: ``phi(b, c) < x`` for strongly critical ``x`` iff
both ``b < x`` and ``c < x``.  ``veblen``: ``phi(a1, b1) < phi(a2, b2)`` iff
``a1 < a2`` and ``b1 < phi(a2, b2)``, or ``a1 = a2`` and ``b1 < b2``, or
``a2 < a1`` and ``phi(a1, b1) < b2``.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .errors import InvalidTerm, ResourceError

__all__ = [
    "Term", "Zero", "Omega", "Gamma", "Sum", "Phi", "Psi",
    "ZERO", "OMEGA", "ONE", "OMEGA_SMALL",
    "BaseOrder", "Ordering", "Diagnostic",
    "validate", "ensure_valid", "complexity", "compare", "lt", "le", "max_term",
    "k_set", "in_B", "in_H_eta", "sc_below_omega", "is_strongly_critical",
    "parts", "from_parts", "enumerate_terms", "format_term", "sort_terms",
]


class Term:
    """Base class for ordinal terms."""

    __slots__ = ()

    def __str__(self):
        return format_term(self)

    def __lt__(self, other):
        return compare(self, other) is Ordering.LESS

    def __le__(self, other):
        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other):
        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other):
        return compare(self, other) is not Ordering.LESS


def _cache_hash(obj, *fields):
    object.__setattr__(obj, "_hash", hash((type(obj).__name__,) + fields))


@dataclass(frozen=True, eq=True, repr=False)
class Zero(Term):
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        _cache_hash(self)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Zero()"


@dataclass(frozen=True, eq=True, repr=False)
class Omega(Term):
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        _cache_hash(self)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Omega()"


@dataclass(frozen=True, eq=True)
class Gamma(Term):
    index: int
    _hash: int = field(init=False, compare=False, repr=False, default=0)

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"Gamma index must be a natural number, got {self.index!r}")
        _cache_hash(self, self.index)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Sum(Term):
    parts: tuple
    _hash: int = field(init=False, compare=False, repr=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        _cache_hash(self, self.parts)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Phi(Term):
    left: Term
    right: Term
    _hash: int = field(init=False, compare=False, repr=False, default=0)

    def __post_init__(self):
        _cache_hash(self, self.left, self.right)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Psi(Term):
    arg: Term
    _hash: int = field(init=False, compare=False, repr=False, default=0)

    def __post_init__(self):
        _cache_hash(self, self.arg)

    def __hash__(self):
        return self._hash


ZERO = Zero()
OMEGA = Omega()
ONE = Phi(ZERO, ZERO)
OMEGA_SMALL = Phi(ZERO, ONE)


@dataclass(frozen=True)
class BaseOrder:
    """Admissible Gamma indices: ``0..theta`` for a finite base, all naturals otherwise."""

    theta: Optional[int] = 0

    @classmethod
    def finite(cls, n: int) -> "BaseOrder":
        if n < 0:
            raise ValueError("theta must be a natural number")
        return cls(n)

    @classmethod
    def omega(cls) -> "BaseOrder":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.theta is not None

    def admits(self, index: int) -> bool:
        return index >= 0 and (self.theta is None or index <= self.theta)

    def compare_indices(self, i: int, j: int) -> int:
        return (i > j) - (i < j)

    def __str__(self):
        return "omega" if self.theta is None else str(self.theta)


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self):
        return self.value

    @classmethod
    def from_int(cls, c: int) -> "Ordering":
        return _ORDERINGS[c]


_ORDERINGS = {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}


@dataclass(frozen=True)
class Diagnostic:
    rule: str
    message: str
    subterm: Term

    def __str__(self):
        return f"{self.rule}: {self.message} in {format_term(self.subterm)}"


# -- printing ---------------------------------------------------------------

def format_term(t: Term, sugar: bool = False) -> str:
    """Concrete syntax.  ``sugar`` prints numerals and ``w^a`` forms."""
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Omega):
        return "W"
    if isinstance(t, Gamma):
        return f"G[{t.index}]"
    if isinstance(t, Sum):
        if not sugar:
            return " + ".join(format_term(p) for p in t.parts)
        out = []
        ones = 0
        for p in t.parts:
            if p == ONE:
                ones += 1
                continue
            if ones:
                out.append(str(ones))
                ones = 0
            out.append(format_term(p, True))
        if ones:
            out.append(str(ones))
        return " + ".join(out)
    if isinstance(t, Phi):
        if sugar and isinstance(t.left, Zero):
            if isinstance(t.right, Zero):
                return "1"
            if t.right == ONE:
                return "w"
            inner = format_term(t.right, True)
            return f"w^({inner})" if " " in inner else f"w^{inner}"
        return f"phi({format_term(t.left, sugar)}, {format_term(t.right, sugar)})"
    if isinstance(t, Psi):
        return f"psi({format_term(t.arg, sugar)})"
    raise TypeError(f"not a term: {t!r}")


# -- structure --------------------------------------------------------------

def parts(t: Term) -> tuple:
    """Additive parts: () for zero, (t,) for additive principal t."""
    if isinstance(t, Zero):
        return ()
    if isinstance(t, Sum):
        return t.parts
    return (t,)


def from_parts(ps: Iterable[Term]) -> Term:
    ps = tuple(ps)
    if not ps:
        return ZERO
    if len(ps) == 1:
        return ps[0]
    return Sum(ps)


def is_strongly_critical(t: Term) -> bool:
    return isinstance(t, (Omega, Gamma, Psi))


def _flatten(t: Term) -> Term:
    if isinstance(t, Sum):
        flat = []
        for p in t.parts:
            p = _flatten(p)
            if isinstance(p, Sum):
                flat.extend(p.parts)
            else:
                flat.append(p)
        return Sum(tuple(flat))
    if isinstance(t, Phi):
        return Phi(_flatten(t.left), _flatten(t.right))
    if isinstance(t, Psi):
        return Psi(_flatten(t.arg))
    return t


# -- comparison -------------------------------------------------------------

@functools.lru_cache(maxsize=1 << 18)
def _cmp(a: Term, b: Term) -> int:
    if a == b:
        return 0
    if isinstance(a, Zero):
        return -1
    if isinstance(b, Zero):
        return 1
    if isinstance(a, Sum) or isinstance(b, Sum):
        pa, pb = parts(a), parts(b)
        for x, y in zip(pa, pb):
            c = _cmp(x, y)
            if c:
                return c
        return (len(pa) > len(pb)) - (len(pa) < len(pb))
    sa, sb = is_strongly_critical(a), is_strongly_critical(b)
    if sa and sb:
        return _cmp_sc(a, b)
    if sb:
        # phi(b1, c1) < x iff b1 < x and c1 < x
        below = _cmp(a.left, b) < 0 and _cmp(a.right, b) < 0
        return -1 if below else 1
    if sa:
        below = _cmp(b.left, a) < 0 and _cmp(b.right, a) < 0
        return 1 if below else -1
    return _cmp_phi(a, b)


_SC_RANK = {Gamma: 0, Psi: 1, Omega: 2}


def _cmp_sc(a: Term, b: Term) -> int:
    ra, rb = _SC_RANK[type(a)], _SC_RANK[type(b)]
    if ra != rb:
        return (ra > rb) - (ra < rb)
    if isinstance(a, Gamma):
        return (a.index > b.index) - (a.index < b.index)
    if isinstance(a, Psi):
        return _cmp(a.arg, b.arg)
    return 0


def _cmp_phi(a: Phi, b: Phi) -> int:
    c = _cmp(a.left, b.left)
    if c < 0:
        return -1 if _cmp(a.right, b) < 0 else 1
    if c == 0:
        return _cmp(a.right, b.right)
    return 1 if _cmp(a, b.right) >= 0 else -1


def compare(a: Term, b: Term) -> Ordering:
    """Decide the ordering of two normal-form terms."""
    return _ORDERINGS[_cmp(a, b)]


def lt(a: Term, b: Term) -> bool:
    return _cmp(a, b) < 0


def le(a: Term, b: Term) -> bool:
    return _cmp(a, b) <= 0


def max_term(ts: Iterable[Term]) -> Term:
    best = None
    for t in ts:
        if best is None or _cmp(best, t) < 0:
            best = t
    if best is None:
        raise ValueError("max of empty collection")
    return best


def sort_terms(ts: Iterable[Term]) -> list:
    return sorted(ts, key=functools.cmp_to_key(_cmp))


# -- complexity and K ---------------------------------------------------------

@functools.lru_cache(maxsize=1 << 16)
def complexity(t: Term) -> int:
    if isinstance(t, (Zero, Omega, Gamma)):
        return 0
    if isinstance(t, Sum):
        return 1 + max(complexity(p) for p in t.parts)
    if isinstance(t, Phi):
        return 1 + max(complexity(t.left), complexity(t.right))
    if isinstance(t, Psi):
        return 1 + complexity(t.arg)
    raise TypeError(f"not a term: {t!r}")


@functools.lru_cache(maxsize=1 << 16)
def k_set(t: Term) -> frozenset:
    """The psi-arguments occurring in ``t``."""
    if isinstance(t, (Zero, Omega, Gamma)):
        return frozenset()
    if isinstance(t, Sum):
        return frozenset().union(*(k_set(p) for p in t.parts))
    if isinstance(t, Phi):
        return k_set(t.left) | k_set(t.right)
    if isinstance(t, Psi):
        return frozenset((t.arg,)) | k_set(t.arg)
    raise TypeError(f"not a term: {t!r}")


def in_B(a: Term, eta: Term) -> bool:
    """Membership of ``a`` in the closure set B(eta)."""
    return all(_cmp(x, eta) < 0 for x in k_set(a))


def in_H_eta(a: Term, eta: Term) -> bool:
    """Membership of ``a`` in H_eta of the empty set, i.e. B(eta + 1)."""
    return all(_cmp(x, eta) <= 0 for x in k_set(a))


def psi_witness(a: Term) -> Optional[Term]:
    """The largest element of K(a) not below ``a``, or None if psi(a) is normal."""
    bad = [x for x in k_set(a) if _cmp(x, a) >= 0]
    return max_term(bad) if bad else None


def sc_below_omega(t: Term) -> frozenset:
    """Strongly critical subterms below Omega used to build ``t``."""
    if isinstance(t, (Zero, Omega)):
        return frozenset()
    if isinstance(t, (Gamma, Psi)):
        return frozenset((t,))
    if isinstance(t, Sum):
        return frozenset().union(*(sc_below_omega(p) for p in t.parts))
    if isinstance(t, Phi):
        return sc_below_omega(t.left) | sc_below_omega(t.right)
    raise TypeError(f"not a term: {t!r}")


# -- validation ---------------------------------------------------------------

def phi_shape_error(a: Term, b: Term) -> Optional[str]:
    """Why ``phi(a, b)`` is not a normal form (None if it is).  Assumes a, b normal."""
    if _cmp(a, OMEGA) >= 0:
        return "first argument must be below Omega"
    if _cmp(b, OMEGA) >= 0:
        if not isinstance(a, Zero):
            return "second argument >= Omega requires first argument 0"
        if isinstance(b, Omega):
            return "phi(0, W) is W itself"
        return None
    if isinstance(b, Zero):
        if is_strongly_critical(a):
            return "phi(x, 0) is x itself for strongly critical x"
        return None
    if is_strongly_critical(b):
        if _cmp(a, b) < 0:
            return "second argument is a fixed point of the first"
        return None
    if isinstance(b, Phi):
        if _cmp(a, b.left) < 0:
            return "second argument is a fixed point of the first"
        return None
    return None


def _validate(t: Term, base: BaseOrder) -> Optional[Diagnostic]:
    if isinstance(t, (Zero, Omega)):
        return None
    if isinstance(t, Gamma):
        if not base.admits(t.index):
            return Diagnostic("gamma index out of base",
                              f"index {t.index} exceeds theta = {base}", t)
        return None
    if isinstance(t, Sum):
        if len(t.parts) < 2:
            return Diagnostic("sum-order violation", "a sum needs at least two parts", t)
        for p in t.parts:
            d = _validate(p, base)
            if d:
                return d
        for p in t.parts:
            if isinstance(p, Zero):
                return Diagnostic("sum-order violation",
                                  "summand 0 is not additive principal", t)
        for x, y in zip(t.parts, t.parts[1:]):
            if _cmp(x, y) < 0:
                return Diagnostic("sum-order violation",
                                  f"{format_term(x)} < {format_term(y)}", t)
        return None
    if isinstance(t, Phi):
        d = _validate(t.left, base) or _validate(t.right, base)
        if d:
            return d
        why = phi_shape_error(t.left, t.right)
        if why:
            return Diagnostic("phi-shape violation", why, t)
        return None
    if isinstance(t, Psi):
        d = _validate(t.arg, base)
        if d:
            return d
        w = psi_witness(t.arg)
        if w is not None:
            return Diagnostic("psi condition",
                              f"{format_term(w)} in K is not below the argument", t)
        return None
    raise TypeError(f"not a term: {t!r}")


def validate(raw: Term, base: BaseOrder = BaseOrder()) -> Union[Term, Diagnostic]:
    """Return the (sum-flattened) term if it is a normal form, else a Diagnostic.

    Never raises for well-shaped trees.
    """
    t = _flatten(raw)
    d = _validate(t, base)
    return d if d is not None else t


def ensure_valid(raw: Term, base: BaseOrder = BaseOrder()) -> Term:
    r = validate(raw, base)
    if isinstance(r, Diagnostic):
        raise InvalidTerm(r)
    return r


# -- enumeration --------------------------------------------------------------

def enumerate_terms(base: BaseOrder, max_complexity: int, max_gamma_index: int, *,
                    max_sum_len: int = 3, max_pool: int = 10**6) -> list:
    """All normal forms with complexity <= max_complexity, sorted by compare.

    Gamma indices are limited to ``max_gamma_index`` (and to the base),
    sums to ``max_sum_len`` parts.  Raises ResourceError once more than
    ``max_pool`` terms have been produced.
    """
    count = 0

    def bump(n=1):
        nonlocal count
        count += n
        if count > max_pool:
            raise ResourceError(
                f"term pool exceeds max_pool={max_pool} at complexity <= {max_complexity}")

    levels = [[ZERO, OMEGA] + [Gamma(i) for i in range(max_gamma_index + 1) if base.admits(i)]]
    bump(len(levels[0]))
    for g in range(1, max_complexity + 1):
        prev = levels[g - 1]
        lower = [t for lvl in levels for t in lvl]
        new = []
        for a in prev:
            if psi_witness(a) is None:
                bump()
                new.append(Psi(a))
        prev_set = set(prev)
        for a in lower:
            for b in lower:
                if a not in prev_set and b not in prev_set:
                    continue
                if phi_shape_error(a, b) is None:
                    bump()
                    new.append(Phi(a, b))
        principal = sort_terms(t for t in lower if not isinstance(t, (Zero, Sum)))
        principal.reverse()
        for n in range(2, max_sum_len + 1):
            for combo in itertools.combinations_with_replacement(principal, n):
                if any(p in prev_set for p in combo):
                    bump()
                    new.append(Sum(combo))
        levels.append(new)
    return sort_terms(t for lvl in levels for t in lvl)
