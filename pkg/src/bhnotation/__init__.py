"""Symbolic workbench for the relativised Bachmann-Howard notation system T(theta).

Modules: :mod:`terms` (term algebra and comparison), :mod:`arith`
(normal-form arithmetic), :mod:`fgh` (fast-growing hierarchy), :mod:`rsyntax`
and :mod:`rsrank` (infinitary-system syntax, levels and ranks), :mod:`hf`
(hereditarily finite sets), :mod:`syntax` (parsers and printers),
:mod:`checks` (property suites) and :mod:`cli`.
"""

from .arith import add, cnf, e_index, natural_sum, psi, veblen
from .errors import (BudgetExceeded, DomainError, IllFormed, InvalidTerm, NonDecomposable,
                     NotALimit, NotRepresentable, ParseError, PsiUndefined, ResourceError)
from .fgh import Budget, fgh_eval, fundamental_sequence
from .hf import HFSet, set_rank, transitive_closure, v_stage
from .syntax import parse_formula, parse_hf, parse_operand, parse_term
from .terms import (OMEGA, ONE, ZERO, BaseOrder, Gamma, Omega, Ordering, Phi, Psi, Sum,
                    Term, Zero, compare, complexity, enumerate_terms, format_term, in_B,
                    in_H_eta, k_set, sc_below_omega, validate)

__version__ = "0.1.0"
