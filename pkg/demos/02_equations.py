"""Equations over a structure: enumeration, solving, and agreement sets.

A term meets some variables with at most one constant; equations compare
two terms (first kind) or a term and a constant (second kind).
"""

from semlat import (
    Equation,
    Term,
    chain_first_kind_count,
    enumerate_equations,
    equation_count,
    fan_first_kind_count,
    first_kind_count,
    first_kind_pairs,
    first_kind_pairs_by_covers,
    inconsistent_count,
    is_consistent,
    make_chain,
    make_fan,
    solution_count,
    solution_histogram,
    solution_set,
)

chain = make_chain(5)

# The enumeration size is pinned by a closed form.
for m in (1, 2, 3):
    total = sum(1 for _ in enumerate_equations(chain, m))
    print(f"m={m}: {total} equations (closed form {equation_count(5, m)})")

# x meet 2 == 2 holds exactly on the up-set of 2.
eq = Equation("second", Term(0b1, 2), 2)
sol = solution_set(chain, eq, 1)
print(f"x meet 2 == 2 on the chain: count={sol.count} mask={sol.mask:05b}")

# x meet 1 == 3 asks a meet to climb, so it has no solutions.
bad = Equation("second", Term(0b1, 1), 3)
print("x meet 1 == 3 consistent?", is_consistent(chain, bad, 1))
print("inconsistent equations at m=1:",
      inconsistent_count(chain, 1), "on the chain,",
      inconsistent_count(make_fan(5), 1), "on the fan")

# Two-variable equations work the same way.
two = Equation("first", Term(0b11, chain.top), Term(0b1, 0))
print("x0 meet x1 == x0 meet bottom has", solution_count(chain, two, 2),
      "solutions out of 25")

# Agreement pairs: the one-variable first-kind equations an element
# satisfies, computable by brute force or by the cover recurrence.
fan = make_fan(5)
rec = first_kind_pairs_by_covers(fan)
for e in range(fan.n):
    assert rec[e] == first_kind_pairs(fan, e)
print("fan5 per-element counts:", [first_kind_count(fan, e) for e in range(5)])
print("chain closed form at n=8:", [chain_first_kind_count(8, i) for i in range(8)])
print("fan middle closed form at n=8:", fan_first_kind_count(8, 1))

# Bucket one-variable equations by their exact solution set.
hist = solution_histogram(fan)
print(f"fan5 realizes {len(hist)} distinct solution sets;"
      f" empty bucket {hist.get(0, 0)}, largest {max(hist.values())}")
