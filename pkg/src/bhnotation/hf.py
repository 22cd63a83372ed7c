"""Hereditarily finite sets.

Grounds the base set X: transitive closure, membership rank, tiny stages of
the relativised von Neumann hierarchy, and Tarskian evaluation of bounded
formulas over finite universes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import IllFormed, QuantifierEscape, ResourceError
from .rsyntax import ATOMS, All, And, BAll, BEx, Ex, Formula, In, Or, PAll, UBar, Var

DEFAULT_CAP = 10**5


class HFSet:
    """An immutable hereditarily finite set.

    Equality is extensional; ``str`` gives the canonical literal with
    children sorted by (rank, size, children).
    """

    __slots__ = ("elements", "rank", "_hash", "_key")

    def __init__(self, elements: Iterable["HFSet"] = ()):
        els = frozenset(elements)
        for e in els:
            if not isinstance(e, HFSet):
                raise TypeError(f"HFSet elements must be HFSets, got {e!r}")
        self.elements = els
        self.rank = 1 + max(e.rank for e in els) if els else 0
        self._hash = hash(els)
        self._key = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, HFSet):
            return NotImplemented
        return self._hash == other._hash and self.elements == other.elements

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted_elements())

    def __contains__(self, item):
        return item in self.elements

    def issubset(self, other: "HFSet") -> bool:
        return self.elements <= other.elements

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.rank, len(self.elements),
                         tuple(sorted(e.key for e in self.elements)))
        return self._key

    def sorted_elements(self) -> list:
        return sorted(self.elements, key=lambda e: e.key)

    def __str__(self):
        return "{" + ",".join(str(e) for e in self.sorted_elements()) + "}"

    def __repr__(self):
        return f"HFSet({self})"

    def __lt__(self, other):
        return self.key < other.key


EMPTY = HFSet()


def hf_from_nat(n: int) -> HFSet:
    """The von Neumann numeral n."""
    s = EMPTY
    for _ in range(n):
        s = HFSet(s.elements | {s})
    return s


def set_rank(x: HFSet) -> int:
    return x.rank


@dataclass(frozen=True)
class FiniteUniverse:
    """A finite collection of HF sets with true membership."""

    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._members

    def __iter__(self):
        return iter(self.elements)

    def adjacency(self) -> dict:
        """Element id -> ids of its members inside the universe."""
        ids = {e: i for i, e in enumerate(self.elements)}
        return {i: sorted(ids[c] for c in e.elements if c in ids)
                for i, e in enumerate(self.elements)}

    def to_json(self) -> dict:
        return {
            "nodes": {str(i): str(e) for i, e in enumerate(self.elements)},
            "edges": {str(i): cs for i, cs in self.adjacency().items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def universe(sets: Iterable[HFSet]) -> FiniteUniverse:
    return FiniteUniverse(tuple(sorted(set(sets), key=lambda e: e.key)))


def transitive_closure(x: HFSet, cap: int = DEFAULT_CAP) -> FiniteUniverse:
    """TC({x}): x together with everything below it."""
    seen = {x}
    todo = [x]
    while todo:
        y = todo.pop()
        for c in y.elements:
            if c not in seen:
                seen.add(c)
                if len(seen) > cap:
                    raise ResourceError(f"transitive closure exceeds cap {cap}")
                todo.append(c)
    return universe(seen)


def _powerset(xs: list) -> list:
    subsets = [frozenset()]
    for e in xs:
        subsets += [s | {e} for s in subsets]
    return [HFSet(s) for s in subsets]


def v_stage(x: HFSet, alpha: int, cap: int = DEFAULT_CAP,
            cumulative: bool = False) -> FiniteUniverse:
    """V_alpha(x): V_0 = TC({x}) and each successor stage is the full powerset.

    With ``cumulative`` each stage also keeps the previous one; over the
    transitive base TC({x}) both readings give the same sets.
    """
    if alpha < 0:
        raise ValueError("stage must be a natural number")
    current = list(transitive_closure(x, cap))
    size = len(current)
    for step in range(alpha):
        if size >= 64 or 2 ** size > cap:
            predicted = f"2^{size}"
            raise ResourceError(
                f"V_{step + 1} would have {predicted} elements, above cap {cap}")
        nxt = _powerset(current)
        if cumulative:
            nxt = list(set(nxt) | set(current))
        current = nxt
        size = len(current)
    return universe(current)


# -- evaluation -----------------------------------------------------------------

def _value(x, env: Mapping[str, HFSet]) -> HFSet:
    if isinstance(x, Var):
        try:
            return env[x.name]
        except KeyError:
            raise IllFormed(f"unassigned variable {x.name}") from None
    if isinstance(x, UBar):
        return x.u
    if isinstance(x, HFSet):
        return x
    raise IllFormed(f"cannot evaluate term {x} over a finite universe")


def eval_formula(m: FiniteUniverse, a: Formula,
                 env: Optional[Mapping[str, HFSet]] = None) -> bool:
    """Truth of a bounded formula over ``m`` with true membership.

    Bounded quantifiers range over the true members of their bound;
    subset-bounded quantifiers range over its subsets, all of which must lie
    in ``m``.
    """
    env = dict(env or {})
    return _eval(m, a, env)


def _eval(m: FiniteUniverse, a: Formula, env: dict) -> bool:
    if isinstance(a, ATOMS):
        r = _value(a.s, env) in _value(a.t, env).elements
        return r if isinstance(a, In) else not r
    if isinstance(a, And):
        return _eval(m, a.a, env) and _eval(m, a.b, env)
    if isinstance(a, Or):
        return _eval(m, a.a, env) or _eval(m, a.b, env)
    if isinstance(a, (All, Ex)):
        raise IllFormed("unbounded quantifier: only bounded formulas can be evaluated")
    bound = _value(a.bound, env)
    if isinstance(a, (BAll, BEx)):
        rng = bound.sorted_elements()
    else:
        rng = _powerset(bound.sorted_elements())
        missing = [s for s in rng if s not in m]
        if missing:
            raise QuantifierEscape(
                f"subset {missing[0]} of {bound} is not in the universe")
    want_all = isinstance(a, (BAll, PAll))
    saved = env.get(a.var)
    try:
        for v in rng:
            env[a.var] = v
            if _eval(m, a.body, env) != want_all:
                return not want_all
        return want_all
    finally:
        if saved is None:
            env.pop(a.var, None)
        else:
            env[a.var] = saved


def definable_subset(m: FiniteUniverse, a: Formula, var: str,
                     params: Optional[Mapping[str, HFSet]] = None) -> HFSet:
    """{e in m : a[var := e]} for a bounded formula with one free slot."""
    env = dict(params or {})
    out = []
    for e in m:
        env[var] = e
        if _eval(m, a, env):
            out.append(e)
    return HFSet(out)
