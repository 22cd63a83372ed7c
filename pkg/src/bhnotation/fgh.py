"""Fundamental sequences below epsilon_0 and the fast-growing hierarchy.

Fundamental sequences follow the Wainer assignment::

    (g + l)[n]     = g + l[n]
    w^(b+1)[n]     = w^b * n        (n-fold sum; 0 when n = 0)
    w^l[n]         = w^(l[n])       for limit l
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, NotALimit, NotInFragment
from .terms import ONE, ZERO, Phi, Sum, Term, Zero, format_term, from_parts, parts

__all__ = ["Budget", "is_eps0", "check_eps0", "is_limit", "predecessor",
           "fundamental_sequence", "fgh_eval"]


@dataclass(frozen=True)
class Budget:
    max_steps: int = 10**7
    max_value_bits: int = 10**6

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_value_bits <= 0:
            raise ValueError("budget limits must be positive")


def is_eps0(t: Term) -> bool:
    """True for terms built from 0, + and phi(0, .) only."""
    if isinstance(t, Zero):
        return True
    if isinstance(t, Sum):
        return all(is_eps0(p) for p in t.parts)
    if isinstance(t, Phi):
        return isinstance(t.left, Zero) and is_eps0(t.right)
    return False


def check_eps0(t: Term) -> Term:
    if not is_eps0(t):
        raise NotInFragment(f"{format_term(t)} is not below epsilon_0 in 0/+/w^ form")
    return t


def is_limit(t: Term) -> bool:
    ps = parts(t)
    return bool(ps) and ps[-1] != ONE


def predecessor(t: Term) -> Term:
    ps = parts(t)
    if not ps or ps[-1] != ONE:
        raise ValueError(f"{format_term(t)} is not a successor")
    return from_parts(ps[:-1])


def fundamental_sequence(alpha: Term, n: int) -> Term:
    """The n-th element of the fundamental sequence of a limit term."""
    check_eps0(alpha)
    if n < 0:
        raise ValueError("n must be a natural number")
    if not is_limit(alpha):
        raise NotALimit(f"{format_term(alpha)} is zero or a successor")
    return _fs(alpha, n)


def _fs(alpha: Term, n: int) -> Term:
    ps = parts(alpha)
    head, last = list(ps[:-1]), ps[-1]
    x = last.right
    if is_limit(x):
        tail = [Phi(ZERO, _fs(x, n))]
    else:
        tail = [Phi(ZERO, predecessor(x))] * n
    return from_parts(head + tail)


def fgh_eval(alpha: Term, n: int, budget: Budget = Budget()) -> int:
    """F_alpha(n), evaluated with an explicit work stack.

    Stack entries ``(beta, k)`` mean "apply F_beta k more times to the
    current value".
    """
    check_eps0(alpha)
    if n < 0:
        raise ValueError("n must be a natural number")
    value = n
    stack = [(alpha, 1)]
    steps = 0
    while stack:
        beta, k = stack.pop()
        if k == 0:
            continue
        steps += 1
        if steps > budget.max_steps:
            raise BudgetExceeded("steps", len(stack),
                                 f"max_steps={budget.max_steps}")
        if isinstance(beta, Zero):
            value += k
        elif is_limit(beta):
            stack.append((beta, k - 1))
            stack.append((_fs(beta, value), 1))
        else:
            stack.append((beta, k - 1))
            stack.append((predecessor(beta), value + 1))
        if value.bit_length() > budget.max_value_bits:
            raise BudgetExceeded("bits", len(stack),
                                 f"max_value_bits={budget.max_value_bits}")
    return value
