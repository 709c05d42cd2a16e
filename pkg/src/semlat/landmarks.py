"""Two order-5 reference structures used as an end-to-end self-check.

The chain 0 < 1 < 2 < 3 < 4 maximizes how unevenly one-variable
first-kind solutions can pile up, while the "spire" (a diamond with one
extra element adjoined on top, the unique order-5 structure with exactly
one coatom strictly below a further top) undercuts the chain's solution
total.  Their per-element counts are frozen here and recomputed through
the equation engine on demand, so any regression in the engine makes the
report fail.
"""

from __future__ import annotations

from . import equations
from .canon import canonical_form
from .core import Semilattice, adjoin_top, bits, make_chain, make_fan

CHAIN5_VECTOR = (25, 17, 11, 7, 5)
SPIRE5_VECTOR = (25, 13, 13, 7, 5)


def spire5() -> Semilattice:
    """Diamond (bottom, two middles, top) with one more element above."""
    return adjoin_top(make_fan(4))


def _cover_lines(latt: Semilattice) -> list:
    out = []
    for e in range(latt.n):
        covers = list(bits(latt.lower_covers(e)))
        if covers:
            out.append(f"  {e} covers {' '.join(str(c) for c in covers)}")
    return out


def landmark_report():
    """Render the comparison; returns (lines, ok)."""
    lines: list = []
    ok = True
    totals = {}
    for name, latt, expected in (
        ("chain5", make_chain(5), CHAIN5_VECTOR),
        ("spire5", spire5(), SPIRE5_VECTOR),
    ):
        form = canonical_form(latt)
        canon = form.lattice
        vector = tuple(
            len(equations.first_kind_pairs(canon, e)) for e in range(canon.n)
        )
        total = sum(vector)
        totals[name] = total
        coatoms = canon.coatoms().bit_count()
        lines.append(f"{name}: n=5 coatoms={coatoms}")
        lines.extend(_cover_lines(canon))
        lines.append(
            f"  per-element first-kind counts: {' '.join(map(str, vector))}"
            f"  total {total}"
        )
        if vector != expected:
            ok = False
            lines.append(
                f"  MISMATCH: expected {' '.join(map(str, expected))}"
            )
    chain_total, spire_total = totals["chain5"], totals["spire5"]
    relation = ">" if chain_total > spire_total else "<="
    lines.append(f"total(chain5) = {chain_total} {relation} {spire_total} = total(spire5)")
    if not (chain_total > spire_total):
        ok = False
    if canonical_form(spire5()).lattice.coatoms().bit_count() != 1:
        ok = False
        lines.append("MISMATCH: spire5 should have exactly one coatom")
    return lines, ok
