"""Equations over a meet-semilattice and their solution sets.

An equation compares two meet-terms.  A term is a meet of distinct
variables and at most one constant; because ``meet(top, x) == x``, a term
with no constant is stored with its constant set to top.  First-kind
equations equate two terms; second-kind equations pin a term to a
constant.  Equations are enumerated as ordered pairs, so ``t = s`` and
``s = t`` count separately.

The one-variable first-kind equations satisfied by a fixed element s
correspond to the pairs (a, b) with ``meet(s, a) == meet(s, b)``; the
second-kind ones correspond to the graph pairs (a, meet(s, a)).  Both
views drive the per-element statistics used elsewhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .core import OrderTooSmall, Semilattice, bits

MAX_VARS = 6


class MTooLarge(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Term:
    """Meet of the variables in vars_mask and one constant element.

    A constant equal to top is the identity for meet, which is how terms
    without a constant are represented.
    """

    vars_mask: int
    const: int


@dataclass(frozen=True)
class Equation:
    kind: str      # "first" | "second"
    left: Term
    right: object  # Term for first kind, element index for second


@dataclass(frozen=True)
class SolutionSet:
    count: int
    mask: int | None  # element mask when the equation has one variable


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"need at least one variable, got m={m}")
    if m > MAX_VARS:
        raise MTooLarge(f"m={m} exceeds the supported maximum {MAX_VARS}")


def equation_count(n: int, m: int) -> int:
    """How many equations enumerate_equations yields: 2^m * n^2 * (2^m - 1)."""
    _check_m(m)
    subsets = (1 << m) - 1
    return subsets * subsets * n * n + subsets * n * n


def enumerate_equations(s: Semilattice, m: int):
    """Yield all equations in at most m variables, in a fixed order."""
    _check_m(m)
    n = s.n
    subsets = range(1, 1 << m)
    for left_vars in subsets:
        for left_const in range(n):
            left = Term(left_vars, left_const)
            for right_vars in subsets:
                for right_const in range(n):
                    yield Equation("first", left, Term(right_vars, right_const))
    for left_vars in subsets:
        for left_const in range(n):
            left = Term(left_vars, left_const)
            for rhs in range(n):
                yield Equation("second", left, rhs)


def eval_term(s: Semilattice, term: Term, assignment) -> int:
    meet = s.meet
    acc = term.const
    for v in bits(term.vars_mask):
        acc = meet[acc][assignment[v]]
    return acc


def equation_holds(s: Semilattice, eq: Equation, assignment) -> bool:
    left = eval_term(s, eq.left, assignment)
    if eq.kind == "first":
        return left == eval_term(s, eq.right, assignment)
    return left == eq.right


def solution_set(s: Semilattice, eq: Equation, m: int) -> SolutionSet:
    _check_m(m)
    count = 0
    mask = 0 if m == 1 else None
    for assignment in product(range(s.n), repeat=m):
        if equation_holds(s, eq, assignment):
            count += 1
            if m == 1:
                mask |= 1 << assignment[0]
    return SolutionSet(count=count, mask=mask)


def solution_count(s: Semilattice, eq: Equation, m: int) -> int:
    return solution_set(s, eq, m).count


def is_consistent(s: Semilattice, eq: Equation, m: int) -> bool:
    _check_m(m)
    return any(
        equation_holds(s, eq, a) for a in product(range(s.n), repeat=m)
    )


def inconsistent_count(s: Semilattice, m: int) -> int:
    """Number of equations in at most m variables with no solution."""
    return sum(
        1 for eq in enumerate_equations(s, m) if not is_consistent(s, eq, m)
    )


def second_kind_pairs(s: Semilattice, elem: int) -> frozenset:
    """Graph of meet-with-elem: the one-variable second-kind view of elem."""
    meet_row = s.meet[elem]
    return frozenset((a, meet_row[a]) for a in range(s.n))


def first_kind_pairs(s: Semilattice, elem: int) -> frozenset:
    """Pairs (a, b) with meet(elem, a) == meet(elem, b), by brute force."""
    meet_row = s.meet[elem]
    n = s.n
    return frozenset(
        (a, b) for a in range(n) for b in range(n)
        if meet_row[a] == meet_row[b]
    )


def first_kind_count(s: Semilattice, elem: int) -> int:
    """len(first_kind_pairs) without materializing: meet-with-elem is a
    function, and agreements group by its value multiplicities."""
    counts = Counter(s.meet[elem])
    return sum(c * c for c in counts.values())


def first_kind_pairs_by_covers(s: Semilattice) -> list:
    """first_kind_pairs for every element, via the lower-cover recurrence.

    Walk any linear extension upward from bottom; an element with lower
    covers c1..ck (k >= 2) keeps exactly the pairs shared by every ci,
    while an element covering a single p keeps the pairs of p whose two
    members agree about being above it.
    """
    n = s.n
    order = sorted(range(n), key=lambda e: s.heights[e])
    out: list = [None] * n
    full = frozenset((a, b) for a in range(n) for b in range(n))
    for elem in order:
        covers = list(bits(s.lower_covers(elem)))
        if not covers:
            out[elem] = full
        elif len(covers) == 1:
            up = s.up_set(elem)
            out[elem] = frozenset(
                (a, b) for a, b in out[covers[0]]
                if (up >> a & 1) == (up >> b & 1)
            )
        else:
            acc = set(out[covers[0]])
            for c in covers[1:]:
                acc &= out[c]
            out[elem] = frozenset(acc)
    return out


def first_kind_pairs_rec(s: Semilattice, elem: int) -> frozenset:
    return first_kind_pairs_by_covers(s)[elem]


def chain_first_kind_count(n: int, i: int) -> int:
    """Closed form for the chain 0 < 1 < ... < n-1: (n - i)^2 + i."""
    if n < 2:
        raise OrderTooSmall(f"chain needs order >= 2, got {n}")
    if not 0 <= i < n:
        raise IndexOutOfRange(f"element {i} out of range for order {n}")
    return (n - i) * (n - i) + i


def fan_first_kind_count(n: int, i: int) -> int:
    """Closed form for a middle element of the fan: (n - 2)^2 + 4."""
    if n < 4:
        raise OrderTooSmall(f"fan closed form needs order >= 4, got {n}")
    if not 1 <= i <= n - 2:
        raise IndexOutOfRange(f"element {i} is not a middle element")
    return (n - 2) * (n - 2) + 4


def total_first_kind(s: Semilattice) -> int:
    """Sum of solution counts over all one-variable first-kind equations."""
    return sum(first_kind_count(s, e) for e in range(s.n))


def total_solutions(s: Semilattice) -> int:
    """Sum of solution counts over all one-variable equations.

    The second-kind equations contribute exactly n per element (the graph
    of a function), hence the n*n shift against total_first_kind.
    """
    return total_first_kind(s) + s.n * s.n


def solution_histogram(s: Semilattice) -> dict:
    """Bucket the 2*n^2 one-variable equations by their solution set.

    Keys are element masks (0 is the empty set), values are how many
    equations have exactly that solution set.
    """
    hist: dict = {}
    for eq in enumerate_equations(s, 1):
        mask = solution_set(s, eq, 1).mask
        hist[mask] = hist.get(mask, 0) + 1
    return hist
