"""Table of F_alpha(n) for small alpha and n within a budget.

Entries that blow the budget print as '-' with the limit that was hit.

    python3 scripts/fgh_table.py --n 5 --steps 100000 --bits 10000
"""

import argparse

from bhnotation.errors import BudgetExceeded
from bhnotation.fgh import Budget, fgh_eval
from bhnotation.syntax import parse_term
from bhnotation.terms import format_term, validate

ALPHAS = ["0", "1", "2", "3", "w", "w + 1", "w + w", "w^2", "w^w"]


def cell(alpha, n, budget):
    try:
        v = fgh_eval(alpha, n, budget)
    except BudgetExceeded as e:
        return f"-({e.limit})"
    s = str(v)
    return s if len(s) <= 12 else f"~10^{len(s) - 1}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--steps", type=int, default=10**5)
    ap.add_argument("--bits", type=int, default=10**4)
    args = ap.parse_args()
    budget = Budget(args.steps, args.bits)
    print("alpha".ljust(10) + "".join(f"n={n}".rjust(14) for n in range(args.n)))
    for text in ALPHAS:
        alpha = validate(parse_term(text))
        row = [cell(alpha, n, budget) for n in range(args.n)]
        print(format_term(alpha, sugar=True).ljust(10) + "".join(c.rjust(14) for c in row))


if __name__ == "__main__":
    main()
