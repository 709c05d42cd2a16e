"""Finite meet-semilattices with bottom and top.

Elements are the integers ``0 .. n-1``.  A structure is given entirely by
its meet table; the partial order (``s <= t`` iff ``meet(s, t) == s``),
covers, atoms, coatoms and annihilators are all derived from it.  Element
subsets are n-bit integer masks throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

MAX_ORDER = 12


def bits(mask: int):
    """Yield the element indices contained in a bit mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class InvalidMeetTable(ValueError):
    """The table violates one of the meet-semilattice axioms."""


class NotIdempotent(InvalidMeetTable):
    def __init__(self, s: int, value: int):
        self.element = s
        super().__init__(f"meet({s},{s}) = {value}, expected {s}")


class NotCommutative(InvalidMeetTable):
    def __init__(self, s: int, t: int, st: int, ts: int):
        self.pair = (s, t)
        super().__init__(f"meet({s},{t}) = {st} but meet({t},{s}) = {ts}")


class NotAssociative(InvalidMeetTable):
    def __init__(self, s: int, t: int, u: int, left: int, right: int):
        self.triple = (s, t, u)
        super().__init__(
            f"meet(meet({s},{t}),{u}) = {left} "
            f"but meet({s},meet({t},{u})) = {right}"
        )


class NoBottom(InvalidMeetTable):
    def __init__(self):
        super().__init__("no element b with meet(b, s) = b for every s")


class NoTop(InvalidMeetTable):
    def __init__(self):
        super().__init__("no element t with meet(t, s) = s for every s")


class OrderTooSmall(ValueError):
    pass


class OrderTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ElementView:
    """Derived per-element structure; all sets are bit masks."""

    element: int
    up_set: int        # {t : t >= s}
    perp_set: int      # {t : meet(t, s) == bottom}
    lower_covers: int  # {t : t < s with nothing strictly between}
    is_atom: bool
    is_coatom: bool


class Semilattice:
    """A validated meet-semilattice, immutable once constructed.

    The constructor checks the axioms in a fixed order (entry range,
    idempotency, commutativity, bottom, top, associativity) and raises the
    matching :class:`InvalidMeetTable` subclass naming the first violation
    found, so error messages are deterministic.
    """

    def __init__(self, table):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n < 2:
            raise OrderTooSmall(f"order {n} < 2")
        if n > MAX_ORDER:
            raise OrderTooLarge(f"order {n} > {MAX_ORDER}")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(f"meet({i},{j}) = {v} is out of range")
        for s in range(n):
            if rows[s][s] != s:
                raise NotIdempotent(s, rows[s][s])
        for s in range(n):
            for t in range(s + 1, n):
                if rows[s][t] != rows[t][s]:
                    raise NotCommutative(s, t, rows[s][t], rows[t][s])
        bottom = next((s for s in range(n) if all(v == s for v in rows[s])), None)
        if bottom is None:
            raise NoBottom()
        top = next((s for s in range(n) if rows[s] == tuple(range(n))), None)
        if top is None:
            raise NoTop()
        for s in range(n):
            row_s = rows[s]
            for t in range(n):
                st = row_s[t]
                row_st = rows[st]
                row_t = rows[t]
                for u in range(n):
                    if row_st[u] != row_s[row_t[u]]:
                        raise NotAssociative(s, t, u, row_st[u], row_s[row_t[u]])
        self.n = n
        self.meet = rows
        self.bottom = bottom
        self.top = top

    @classmethod
    def from_flat(cls, n: int, flat) -> "Semilattice":
        """Build from a row-major sequence of n*n entries."""
        flat = tuple(flat)
        if len(flat) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(flat)}")
        return cls(tuple(flat[i * n:(i + 1) * n] for i in range(n)))

    def flat(self) -> tuple:
        return tuple(v for row in self.meet for v in row)

    def meet_of(self, s: int, t: int) -> int:
        return self.meet[s][t]

    def leq(self, s: int, t: int) -> bool:
        """s <= t in the derived order."""
        return self.meet[s][t] == s

    def join(self, s: int, t: int) -> int:
        """Least upper bound; always exists because a top is required."""
        ubs = self._up[s] & self._up[t]
        g = self.top
        for u in bits(ubs):
            g = self.meet[g][u]
        return g

    @cached_property
    def _down(self) -> tuple:
        n, meet = self.n, self.meet
        return tuple(
            sum(1 << j for j in range(n) if meet[i][j] == j) for i in range(n)
        )

    @cached_property
    def _up(self) -> tuple:
        n, meet = self.n, self.meet
        return tuple(
            sum(1 << j for j in range(n) if meet[i][j] == i) for i in range(n)
        )

    @cached_property
    def _perp(self) -> tuple:
        n, meet, b = self.n, self.meet, self.bottom
        return tuple(
            sum(1 << j for j in range(n) if meet[i][j] == b) for i in range(n)
        )

    def up_set(self, s: int) -> int:
        return self._up[s]

    def down_set(self, s: int) -> int:
        return self._down[s]

    def perp(self, s: int) -> int:
        """Annihilator of s: everything meeting s at bottom."""
        return self._perp[s]

    def perp_relative(self, a: int, s: int) -> int:
        """{t : meet(t, s) == a}; with a == bottom this is perp(s)."""
        n, meet = self.n, self.meet
        return sum(1 << t for t in range(n) if meet[t][s] == a)

    @cached_property
    def _lower_covers(self) -> tuple:
        n, down, up = self.n, self._down, self._up
        out = []
        for s in range(n):
            strict = down[s] & ~(1 << s)
            out.append(
                sum(1 << j for j in bits(strict) if up[j] & strict == 1 << j)
            )
        return tuple(out)

    @cached_property
    def _upper_covers(self) -> tuple:
        n, down, up = self.n, self._down, self._up
        out = []
        for s in range(n):
            strict = up[s] & ~(1 << s)
            out.append(
                sum(1 << j for j in bits(strict) if down[j] & strict == 1 << j)
            )
        return tuple(out)

    def lower_covers(self, s: int) -> int:
        return self._lower_covers[s]

    def upper_covers(self, s: int) -> int:
        return self._upper_covers[s]

    @cached_property
    def heights(self) -> tuple:
        """Length of a longest chain from bottom up to each element."""
        n, down = self.n, self._down
        order = sorted(range(n), key=lambda i: down[i].bit_count())
        h = [0] * n
        for i in order:
            strict = down[i] & ~(1 << i)
            h[i] = max((h[j] + 1 for j in bits(strict)), default=0)
        return tuple(h)

    def atoms(self) -> int:
        n, down, b = self.n, self._down, self.bottom
        return sum(
            1 << s for s in range(n)
            if s != b and down[s] == (1 << s) | (1 << b)
        )

    def coatoms(self) -> int:
        n, up, t = self.n, self._up, self.top
        return sum(
            1 << s for s in range(n)
            if s != t and up[s] == (1 << s) | (1 << t)
        )

    def element_view(self, s: int) -> ElementView:
        if not 0 <= s < self.n:
            raise IndexError(f"element {s} out of range for order {self.n}")
        return ElementView(
            element=s,
            up_set=self._up[s],
            perp_set=self._perp[s],
            lower_covers=self._lower_covers[s],
            is_atom=bool(self.atoms() >> s & 1),
            is_coatom=bool(self.coatoms() >> s & 1),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Semilattice) and self.meet == other.meet

    def __hash__(self) -> int:
        return hash(self.meet)

    def __repr__(self) -> str:
        digits = "".join(format(v, "x") for row in self.meet for v in row)
        return f"<Semilattice n={self.n} table={digits}>"


def validate_meet_table(table) -> Semilattice:
    """Check all axioms and wrap the table; raises InvalidMeetTable subclasses."""
    return Semilattice(table)


def make_chain(n: int) -> Semilattice:
    """Total order 0 < 1 < ... < n-1; meet is min."""
    if n < 2:
        raise OrderTooSmall(f"chain needs order >= 2, got {n}")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} > {MAX_ORDER}")
    return Semilattice(tuple(tuple(min(i, j) for j in range(n)) for i in range(n)))


def make_fan(n: int) -> Semilattice:
    """Bottom 0, top n-1, and n-2 pairwise-incomparable middle elements."""
    if n < 3:
        raise OrderTooSmall(f"fan needs order >= 3, got {n}")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} > {MAX_ORDER}")
    top = n - 1
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j or j == top:
                row.append(i)
            elif i == top:
                row.append(j)
            else:
                row.append(0)
        rows.append(tuple(row))
    return Semilattice(tuple(rows))


def adjoin_top(s: Semilattice) -> Semilattice:
    """Add a new greatest element above everything in s."""
    n = s.n
    if n + 1 > MAX_ORDER:
        raise OrderTooLarge(f"order {n + 1} > {MAX_ORDER}")
    rows = [row + (i,) for i, row in enumerate(s.meet)]
    rows.append(tuple(range(n + 1)))
    return Semilattice(tuple(rows))
