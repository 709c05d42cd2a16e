"""Isomorph-free catalogs of meet-semilattices with bottom and top.

Having a top makes every pair of elements join as well as meet, so an
order-n structure is exactly an order-(n-1) meet-closed bottomed structure
with a new greatest element adjoined.  The generator therefore runs a
breadth-first search over canonical meet-closed bottomed structures,
growing them one maximal element at a time: a new element z is attached to
a nonempty antichain C of existing elements (its lower covers), which is
admissible exactly when, for every existing x, the set {meet(c, x) : c in C}
has a greatest member (that member becomes meet(z, x)).  Candidate
antichains are enumerated per interchangeability class, children are
deduplicated by canonical key, and the final top-adjoining step is a
bijection on isomorphism classes.

``generate_catalog_naive`` is an independent cross-check that enumerates
order relations on the middle elements directly and deduplicates by brute
permutation search; it shares no code with the breadth-first generator.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from math import isqrt

from . import canon
from ._par import pmap
from .core import (
    MAX_ORDER,
    OrderTooLarge,
    OrderTooSmall,
    Semilattice,
)
from .canon import CanonicalForm, key_hex

DEFAULT_MAX_CATALOG = 10

_HEX = "0123456789abcdef"
_HEADER_RE = re.compile(r"^SLX1 n=(\d+) count=(\d+)$")


@dataclass(frozen=True)
class CatalogEntry:
    index: int
    n: int
    canonical: CanonicalForm

    @property
    def lattice(self) -> Semilattice:
        return self.canonical.lattice

    @property
    def key(self) -> bytes:
        return self.canonical.key

    @property
    def hex_key(self) -> str:
        return key_hex(self.canonical.key)


@dataclass(frozen=True)
class Catalog:
    """Entries are canonical forms sorted by key; complete means exhaustive."""

    n: int
    entries: tuple
    complete: bool = True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @cached_property
    def _by_key(self) -> dict:
        return {e.key: e for e in self.entries}

    def find(self, key: bytes):
        return self._by_key.get(key)


def _max_order() -> int:
    raw = os.environ.get("SEMLAT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_CATALOG
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SEMLAT_MAX_N must be an integer, got {raw!r}") from None
    return max(2, min(MAX_ORDER, value))


# Canonical flat tables of meet-closed bottomed structures, keyed by order.
_LEVELS: dict = {1: [(0,)]}
_CATALOGS: dict = {}


def _reset_caches() -> None:
    _LEVELS.clear()
    _LEVELS[1] = [(0,)]
    _CATALOGS.clear()


def _children_flat(m: int, flat) -> list:
    """All one-element extensions of an order-m structure, as raw tables."""
    rows = [list(flat[i * m:(i + 1) * m]) for i in range(m)]
    down = canon._down_masks(m, rows)
    colors = canon._refine(m, rows)
    twin = canon._twin_classes(m, rows, colors)
    grouped: dict = {}
    for i in range(m):
        grouped.setdefault(twin[i], []).append(i)
    cls = sorted(grouped.values())
    k = len(cls)
    reps = [c[0] for c in cls]
    comp = [[False] * k for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            u, v = reps[a], reps[b]
            c = bool(down[v] >> u & 1) or bool(down[u] >> v & 1)
            comp[a][b] = comp[b][a] = c
    out = []
    chosen: list = []

    def build() -> None:
        covers = [x for ci, cnt in chosen for x in cls[ci][:cnt]]
        new_row = []
        for x in range(m):
            vals = {rows[c][x] for c in covers}
            if len(vals) == 1:
                g = vals.pop()
            else:
                vmask = 0
                for v in vals:
                    vmask |= 1 << v
                g = next((v for v in vals if down[v] & vmask == vmask), None)
                if g is None:
                    return
            new_row.append(g)
        out.append([rows[i] + [new_row[i]] for i in range(m)]
                   + [new_row + [m]])

    def sel(start: int) -> None:
        for ci in range(start, k):
            if any(comp[ci][cj] for cj, _ in chosen):
                continue
            for cnt in range(1, len(cls[ci]) + 1):
                chosen.append((ci, cnt))
                build()
                sel(ci + 1)
                chosen.pop()

    sel(0)
    return out


def _extend_canon(args) -> list:
    m, flat = args
    out = []
    for child in _children_flat(m, flat):
        _, canon_rows = canon._canonical(m + 1, child)
        out.append(tuple(v for row in canon_rows for v in row))
    return out


def _ensure_levels(order: int, jobs: int = 1) -> None:
    m = max(_LEVELS)
    while m < order:
        seen = set()
        for found in pmap(_extend_canon, [(m, f) for f in _LEVELS[m]], jobs):
            seen.update(found)
        _LEVELS[m + 1] = sorted(seen)
        m += 1


def _adjoin_top_canon(args) -> tuple:
    m, flat = args
    rows = [list(flat[i * m:(i + 1) * m]) + [i] for i in range(m)]
    rows.append(list(range(m + 1)))
    _, canon_rows = canon._canonical(m + 1, rows)
    return tuple(v for row in canon_rows for v in row)


def _entries_from_flats(n: int, flats) -> tuple:
    entries = []
    for i, flat in enumerate(sorted(flats)):
        latt = Semilattice.from_flat(n, flat)
        form = CanonicalForm(lattice=latt, key=bytes(flat), perm=tuple(range(n)))
        entries.append(CatalogEntry(index=i, n=n, canonical=form))
    return tuple(entries)


def generate_catalog(n: int, jobs: int = 1) -> Catalog:
    """Every order-n structure up to isomorphism, sorted by canonical key.

    Orders above the default limit of 10 must be unlocked with the
    SEMLAT_MAX_N environment variable; the hard cap is 12.
    """
    if n < 2:
        raise OrderTooSmall(f"catalogs start at order 2, got {n}")
    limit = _max_order()
    if n > limit:
        raise OrderTooLarge(
            f"order {n} exceeds the limit {limit}"
            f" (set SEMLAT_MAX_N to unlock up to {MAX_ORDER})"
        )
    cached = _CATALOGS.get(n)
    if cached is not None:
        return cached
    _ensure_levels(n - 1, jobs)
    flats = pmap(_adjoin_top_canon, [(n - 1, f) for f in _LEVELS[n - 1]], jobs)
    # Adjoining a top is a bijection on isomorphism classes, so keys
    # must come out pairwise distinct.
    if len(set(flats)) != len(flats):
        raise AssertionError("duplicate canonical keys after top adjunction")
    result = Catalog(n=n, entries=_entries_from_flats(n, flats))
    _CATALOGS[n] = result
    return result


def generate_catalog_naive(n: int) -> Catalog:
    """Independent order-relation enumeration; cross-check for small n.

    Fixes bottom = 0 and top = n-1, tries every combination of
    below/above/incomparable for the middle pairs, keeps the transitively
    closed ones where every pair has a greatest lower bound, and
    deduplicates by minimizing over all permutations of the middles.
    """
    if n < 2:
        raise OrderTooSmall(f"catalogs start at order 2, got {n}")
    if n > 6:
        raise OrderTooLarge("naive enumeration is limited to order 6")
    mids = list(range(1, n - 1))
    pairs = [(i, j) for a, i in enumerate(mids) for j in mids[a + 1:]]
    found: dict = {}
    for combo in product((0, 1, 2), repeat=len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for i in range(n):
            leq[0][i] = True
            leq[i][n - 1] = True
        for (i, j), rel in zip(pairs, combo):
            if rel == 1:
                leq[i][j] = True
            elif rel == 2:
                leq[j][i] = True
        if any(
            leq[a][b] and leq[b][c] and not leq[a][c]
            for a in range(n) for b in range(n) for c in range(n)
        ):
            continue
        table = [[0] * n for _ in range(n)]
        valid = True
        for a in range(n):
            for b in range(a, n):
                lows = [x for x in range(n) if leq[x][a] and leq[x][b]]
                g = next((x for x in lows if all(leq[y][x] for y in lows)), None)
                if g is None:
                    valid = False
                    break
                table[a][b] = table[b][a] = g
            if not valid:
                break
        if not valid:
            continue
        best = None
        for sigma in permutations(mids):
            perm = list(range(n))
            for src, dst in zip(mids, sigma):
                perm[src] = dst
            relab = [[0] * n for _ in range(n)]
            for a in range(n):
                for b in range(n):
                    relab[perm[a]][perm[b]] = perm[table[a][b]]
            flat = tuple(v for row in relab for v in row)
            if best is None or flat < best:
                best = flat
        if best not in found:
            found[best] = table
    flats = []
    for table in found.values():
        form = canon.canonical_form(Semilattice(table))
        flats.append(tuple(form.key))
    if len(set(flats)) != len(flats):
        raise AssertionError("naive deduplication disagrees with canonical keys")
    return Catalog(n=n, entries=_entries_from_flats(n, flats))


class FormatError(ValueError):
    """Catalog file problem; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _render(cat: Catalog) -> str:
    lines = [f"SLX1 n={cat.n} count={len(cat.entries)}"]
    lines.extend(entry.hex_key for entry in cat.entries)
    return "\n".join(lines) + "\n"


def save_catalog(cat: Catalog, dest) -> None:
    """Write the text format: a header line, then one record per line."""
    text = _render(cat)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="ascii") as fh:
            fh.write(text)


def lattice_from_hex(digits: str) -> Semilattice:
    """Decode one record: n*n base-16 digits, row-major."""
    n = isqrt(len(digits))
    if n * n != len(digits):
        raise ValueError(f"record length {len(digits)} is not a perfect square")
    vals = []
    for ch in digits:
        v = _HEX.find(ch)
        if v < 0 or v >= n:
            raise ValueError(f"invalid digit {ch!r} for order {n}")
        vals.append(v)
    return Semilattice.from_flat(n, vals)


def load_catalog(src) -> Catalog:
    """Parse the text format; raises FormatError with a line number."""
    if hasattr(src, "read"):
        text = src.read()
    else:
        with open(src, "r", encoding="ascii") as fh:
            text = fh.read()
    lines = text.splitlines()
    if not lines:
        raise FormatError(1, "missing header")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise FormatError(1, f"bad header {lines[0]!r}")
    n = int(header.group(1))
    count = int(header.group(2))
    if not 2 <= n <= MAX_ORDER:
        raise FormatError(1, f"order {n} out of range 2..{MAX_ORDER}")
    lattices = []
    for lineno, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if len(stripped) != n * n:
            raise FormatError(
                lineno, f"record has {len(stripped)} digits, expected {n * n}"
            )
        try:
            lattices.append(lattice_from_hex(stripped))
        except ValueError as exc:
            raise FormatError(lineno, str(exc)) from None
    if len(lattices) != count:
        raise FormatError(
            len(lines), f"header declares {count} records, found {len(lattices)}"
        )
    entries = tuple(
        CatalogEntry(
            index=i,
            n=n,
            canonical=CanonicalForm(
                lattice=latt, key=bytes(latt.flat()), perm=tuple(range(n))
            ),
        )
        for i, latt in enumerate(lattices)
    )
    return Catalog(n=n, entries=entries)
