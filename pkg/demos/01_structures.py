"""Building and inspecting meet-semilattices.

Every structure is just a meet table over elements 0..n-1; the partial
order and all cover structure fall out of it.  Run me directly.
"""

from semlat import (
    NotAssociative,
    Semilattice,
    bits,
    make_chain,
    make_fan,
    validate_meet_table,
)
from semlat.landmarks import spire5


def show(name, latt):
    print(f"{name}: n={latt.n} bottom={latt.bottom} top={latt.top}")
    print(f"  atoms {list(bits(latt.atoms()))} coatoms {list(bits(latt.coatoms()))}")
    print(f"  heights {latt.heights}")
    for e in range(latt.n):
        covers = list(bits(latt.lower_covers(e)))
        if covers:
            print(f"  {e} covers {covers}")


# A hand-written table: the diamond 0 < {1, 2} < 3.
diamond = validate_meet_table([
    [0, 0, 0, 0],
    [0, 1, 0, 1],
    [0, 0, 2, 2],
    [0, 1, 2, 3],
])
show("diamond", diamond)

# Validation pinpoints the first broken axiom.
try:
    Semilattice([[0, 0, 0, 0], [0, 1, 3, 1], [0, 3, 2, 2], [0, 1, 2, 3]])
except NotAssociative as exc:
    print(f"rejected: {exc} (triple {exc.triple})")

# Builders: total orders, flat fans, and the order-5 spire.
show("chain4", make_chain(4))
show("fan5", make_fan(5))
show("spire5", spire5())

# Order queries: up-sets, annihilators, relative annihilators.
f = make_fan(5)
print("fan5 up-set of 1:", list(bits(f.up_set(1))))
print("fan5 annihilator of 1:", list(bits(f.perp(1))))
print("fan5 join(1, 2):", f.join(1, 2))
s = spire5()
print("spire5 {t : meet(t, 3) == 1}:", list(bits(s.perp_relative(1, 3))))
