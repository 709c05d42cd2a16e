"""Canonical labeling for meet-semilattices.

Two structures get the same canonical key exactly when they are
isomorphic.  The canonical labeling always puts bottom at index 0 and top
at index n-1, orders elements by an isomorphism-invariant partition
(height first, then iterated neighborhood signatures), and breaks the
remaining ties by searching for the labeling whose meet table is least in
a fixed row-by-row order.  The search prunes interchangeable elements:
whenever swapping two elements is an automorphism, only one of them is
tried at each position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Semilattice, bits

_HEX = "0123456789abcdef"


@dataclass(frozen=True)
class CanonicalForm:
    """A relabeled copy, its key, and the relabeling that produced it."""

    lattice: Semilattice
    key: bytes              # row-major meet table of the relabeled copy
    perm: tuple             # perm[old_index] = new_index


def key_hex(key: bytes) -> str:
    """Render a canonical key as base-16 digits, one per table entry."""
    return "".join(_HEX[v] for v in key)


def _down_masks(n: int, rows) -> list:
    return [
        sum(1 << j for j in range(n) if rows[i][j] == j) for i in range(n)
    ]


def _up_masks(n: int, rows) -> list:
    return [
        sum(1 << j for j in range(n) if rows[i][j] == i) for i in range(n)
    ]


def _dense(sigs: list) -> list:
    index = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [index[s] for s in sigs]


def _refine(n: int, rows) -> list:
    """Invariant element coloring; colors ascend with height.

    Starts from (height, |up-set|, |down-set|, |annihilator|) and refines
    with signatures built from the colors of meets until stable.  Keeping
    the previous color as the leading signature component means each round
    only splits classes, so height stays the primary sort key.
    """
    down = _down_masks(n, rows)
    up = _up_masks(n, rows)
    bottom = next(i for i in range(n) if down[i] == 1 << i)
    height = [0] * n
    for i in sorted(range(n), key=lambda i: down[i].bit_count()):
        strict = down[i] & ~(1 << i)
        height[i] = max((height[j] + 1 for j in bits(strict)), default=0)
    perp_count = [
        sum(1 for j in range(n) if rows[i][j] == bottom) for i in range(n)
    ]
    colors = _dense([
        (height[i], up[i].bit_count(), down[i].bit_count(), perp_count[i])
        for i in range(n)
    ])
    while True:
        classes = len(set(colors))
        if classes == n:
            return colors
        sigs = [
            (
                colors[i],
                tuple(sorted(
                    (colors[j], colors[rows[i][j]]) for j in range(n)
                )),
            )
            for i in range(n)
        ]
        new = _dense(sigs)
        if len(set(new)) == classes:
            return new
        colors = new


def _is_swap_automorphism(n: int, rows, u: int, v: int) -> bool:
    """Does exchanging u and v (fixing everything else) preserve meets?"""
    def sw(x):
        return v if x == u else u if x == v else x

    for i in range(n):
        r_si = rows[sw(i)]
        r_i = rows[i]
        for j in range(i, n):
            if r_si[sw(j)] != sw(r_i[j]):
                return False
    return True


def _twin_classes(n: int, rows, colors) -> list:
    """Union elements whose transposition is an automorphism.

    Swap-automorphic pairs always share a color, so only same-color pairs
    are tested.  The relation is transitive on same-color classes (conjugating
    one swap by another yields the third), so union-find is sound.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_color: dict = {}
    for i in range(n):
        by_color.setdefault(colors[i], []).append(i)
    for group in by_color.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                u, v = group[a], group[b]
                if find(u) == find(v):
                    continue
                if _is_swap_automorphism(n, rows, u, v):
                    parent[find(v)] = find(u)
    return [find(i) for i in range(n)]


def _canonical(n: int, rows):
    """Return (perm, canon_rows) with perm[old] = new."""
    colors = _refine(n, rows)
    order = sorted(range(n), key=lambda i: (colors[i], i))
    if len(set(colors)) == n:
        perm = [0] * n
        for new, old in enumerate(order):
            perm[old] = new
        return perm, _apply(n, rows, perm)

    cells = []
    for old in order:
        if cells and colors[cells[-1][0]] == colors[old]:
            cells[-1].append(old)
        else:
            cells.append([old])
    cell_of = []
    for ci, cell in enumerate(cells):
        cell_of.extend([ci] * len(cell))
    twin = _twin_classes(n, rows, colors)

    pos = [-1] * n
    seq = []

    def rec(k):
        if k == n:
            return [], ()
        cands = [e for e in cells[cell_of[k]] if pos[e] < 0]
        picked = []
        seen = set()
        for e in cands:
            if twin[e] not in seen:
                seen.add(twin[e])
                picked.append(e)
        scored = []
        for e in picked:
            row_e = rows[e]
            scored.append((tuple(pos[row_e[seq[j]]] for j in range(k)), e))
        row_min = min(r for r, _ in scored)
        best_rows = None
        best_seq = None
        for r, e in scored:
            if r != row_min:
                continue
            pos[e] = k
            seq.append(e)
            sub_rows, sub_seq = rec(k + 1)
            pos[e] = -1
            seq.pop()
            if best_rows is None or sub_rows < best_rows:
                best_rows = sub_rows
                best_seq = (e,) + sub_seq
        return [row_min] + best_rows, best_seq

    # Meets of already-placed elements always land on already-placed
    # elements (the cells form a linear extension), so comparing partial
    # rows decides the full key and non-minimal candidates can be dropped.
    _, chosen = rec(0)
    perm = [0] * n
    for new, old in enumerate(chosen):
        perm[old] = new
    return perm, _apply(n, rows, perm)


def _apply(n: int, rows, perm) -> list:
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row_i = rows[i]
        pi = perm[i]
        row_out = out[pi]
        for j in range(n):
            row_out[perm[j]] = perm[row_i[j]]
    return out


def canonical_form(s: Semilattice) -> CanonicalForm:
    perm, canon_rows = _canonical(s.n, s.meet)
    lattice = Semilattice(canon_rows)
    key = bytes(v for row in canon_rows for v in row)
    return CanonicalForm(lattice=lattice, key=key, perm=tuple(perm))


def canonical_key(s: Semilattice) -> bytes:
    perm, canon_rows = _canonical(s.n, s.meet)
    return bytes(v for row in canon_rows for v in row)


def isomorphic(a: Semilattice, b: Semilattice) -> bool:
    if a.n != b.n:
        return False
    return canonical_key(a) == canonical_key(b)
