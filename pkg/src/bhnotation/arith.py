"""Arithmetic on normal-form terms."""

from __future__ import annotations

import heapq
import functools

from .errors import NotRepresentable, PsiUndefined, ResourceError
from .terms import (OMEGA, ONE, ZERO, Omega, Phi, Psi, Sum, Term, Zero, _cmp,
                    format_term, from_parts, is_strongly_critical, parts, psi_witness)

__all__ = ["cnf", "from_cnf", "add", "natural_sum", "veblen", "psi", "e_index",
           "numeral", "omega_power", "omega_times", "exponent"]

MAX_E_INDEX = 8


def cnf(a: Term) -> list:
    """Additive-principal parts of ``a`` in weakly decreasing order."""
    return list(parts(a))


def from_cnf(ps) -> Term:
    return from_parts(ps)


def numeral(n: int) -> Term:
    if n < 0:
        raise ValueError("numerals are natural numbers")
    return from_parts([ONE] * n)


def add(a: Term, b: Term) -> Term:
    """Ordinal sum: parts of ``a`` below the head of ``b`` are absorbed."""
    pb = parts(b)
    if not pb:
        return a
    pa = list(parts(a))
    head = pb[0]
    while pa and _cmp(pa[-1], head) < 0:
        pa.pop()
    return from_parts(pa + list(pb))


def natural_sum(a: Term, b: Term) -> Term:
    """Hessenberg sum: merge the parts without absorption."""
    key = functools.cmp_to_key(lambda x, y: _cmp(y, x))
    merged = heapq.merge(parts(a), parts(b), key=key)
    return from_parts(merged)


def veblen(a: Term, b: Term) -> Term:
    """The normal form of phi(a, b).

    Raises NotRepresentable when the value has no normal form in the system,
    which happens exactly when ``a`` is at least Omega and nonzero, or when
    ``a`` is nonzero and ``b`` lies above Omega.
    """
    if _cmp(a, OMEGA) >= 0:
        raise NotRepresentable(
            f"phi({format_term(a)}, {format_term(b)}): first argument >= Omega")
    if isinstance(b, Omega):
        return OMEGA
    if _cmp(b, OMEGA) > 0:
        if isinstance(a, Zero):
            return Phi(ZERO, b)
        raise NotRepresentable(
            f"phi({format_term(a)}, {format_term(b)}): second argument above Omega "
            "needs first argument 0")
    if isinstance(b, Zero):
        return a if is_strongly_critical(a) else Phi(a, ZERO)
    if is_strongly_critical(b):
        return b if _cmp(a, b) < 0 else Phi(a, b)
    if isinstance(b, Phi):
        return b if _cmp(a, b.left) < 0 else Phi(a, b)
    return Phi(a, b)


def omega_power(a: Term) -> Term:
    return veblen(ZERO, a)


def psi(a: Term) -> Term:
    """psi(a) if it is a normal form; otherwise PsiUndefined with a witness from K(a)."""
    w = psi_witness(a)
    if w is not None:
        raise PsiUndefined(a, w)
    return Psi(a)


def exponent(p: Term) -> Term:
    """The x with p = omega^x, for additive principal p."""
    if isinstance(p, Phi) and isinstance(p.left, Zero):
        return p.right
    if isinstance(p, (Zero, Sum)):
        raise ValueError(f"{format_term(p)} is not additive principal")
    return p


def omega_times(a: Term) -> Term:
    """omega * a, by raising each Cantor exponent x to 1 + x."""
    return from_parts(veblen(ZERO, add(ONE, exponent(p))) for p in parts(a))


def e_index(n: int, cap: int = MAX_E_INDEX) -> Term:
    """e_0 = Omega + 1, e_{k+1} = omega^(e_k)."""
    if n < 0:
        raise ValueError("index must be a natural number")
    if n > cap:
        raise ResourceError(f"e_{n} exceeds the size cap (n <= {cap})")
    t = Sum((OMEGA, ONE))
    for _ in range(n):
        t = veblen(ZERO, t)
    return t
