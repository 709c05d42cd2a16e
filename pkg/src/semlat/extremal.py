"""Per-structure statistics and exhaustive verification sweeps.

Each verifier walks complete catalogs for a range of orders, recomputes
the quantity in question from the equation engine, and reports one of
three statuses: Verified, CounterexampleFound, or Skipped (when the claim
does not apply at that order).  Witness records carry canonical keys so
any reported structure can be reconstructed exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import equations
from ._par import pmap
from .canon import canonical_form, key_hex
from .catalog import Catalog, generate_catalog
from .core import Semilattice, bits, make_fan

VERIFIED = "Verified"
COUNTEREXAMPLE = "CounterexampleFound"
SKIPPED = "Skipped"


class UnknownMetric(ValueError):
    pass


@dataclass(frozen=True)
class HistogramSummary:
    empty_bucket_size: int
    max_bucket_size: int
    num_realized_solution_sets: int


@dataclass(frozen=True)
class StatsRecord:
    """Equation statistics of one structure, in canonical labeling.

    cov1_vector[s] counts the one-variable first-kind equations s
    satisfies; sigma_cov1 is its sum, and sigma additionally counts the
    second-kind ones (n per element).  inconsistent_count holds
    (m, count) pairs for the requested numbers of variables.
    """

    canonical_key: str
    n: int
    inconsistent_count: tuple
    cov1_vector: tuple
    sigma_cov1: int
    sigma: int
    histogram_summary: HistogramSummary
    coatom_count: int
    atom_count: int


@dataclass
class VerificationReport:
    claim: str
    n_range: tuple
    status: str
    witnesses: list
    elapsed: float
    details: list


def _histogram_summary(latt: Semilattice) -> HistogramSummary:
    hist = equations.solution_histogram(latt)
    return HistogramSummary(
        empty_bucket_size=hist.get(0, 0),
        max_bucket_size=max(hist.values()),
        num_realized_solution_sets=len(hist),
    )


def profile(s: Semilattice, ms=(1, 2)) -> StatsRecord:
    """Statistics for one structure; element order follows its canonical form."""
    form = canonical_form(s)
    latt = form.lattice
    vector = tuple(equations.first_kind_count(latt, e) for e in range(latt.n))
    sigma_cov1 = sum(vector)
    return StatsRecord(
        canonical_key=key_hex(form.key),
        n=latt.n,
        inconsistent_count=tuple(
            (m, equations.inconsistent_count(latt, m)) for m in ms
        ),
        cov1_vector=vector,
        sigma_cov1=sigma_cov1,
        sigma=sigma_cov1 + latt.n * latt.n,
        histogram_summary=_histogram_summary(latt),
        coatom_count=latt.coatoms().bit_count(),
        atom_count=latt.atoms().bit_count(),
    )


def _profile_worker(args) -> StatsRecord:
    n, flat, ms = args
    return profile(Semilattice.from_flat(n, flat), ms)


def profile_catalog(cat: Catalog, ms=(1, 2), jobs: int = 1) -> list:
    """A StatsRecord per entry, in catalog order."""
    return pmap(
        _profile_worker,
        [(cat.n, e.lattice.flat(), tuple(ms)) for e in cat.entries],
        jobs,
    )


def _inconsistent_worker(args) -> int:
    n, flat, m = args
    return equations.inconsistent_count(Semilattice.from_flat(n, flat), m)


def _range_list(n_range) -> list:
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty order range {n_range}")
    return list(range(lo, hi + 1))


def verify_inconsistent_bounds(n_range, m: int = 1, jobs: int = 1) -> VerificationReport:
    """Chain and fan pin the extreme numbers of unsolvable equations.

    For every order in the range, each catalog entry's count of
    inconsistent equations in at most m variables must lie between the
    chain's count, (2^m - 1) * n(n-1)/2, and the fan's,
    (2^m - 1) * (n^2 - 3n + 3), with both endpoints attained.
    """
    t0 = time.perf_counter()
    witnesses: list = []
    details: list = []
    factor = (1 << m) - 1
    for n in _range_list(n_range):
        cat = generate_catalog(n, jobs)
        counts = pmap(
            _inconsistent_worker,
            [(n, e.lattice.flat(), m) for e in cat.entries],
            jobs,
        )
        chain_expected = factor * n * (n - 1) // 2
        fan_expected = factor * (n * n - 3 * n + 3)
        low, high = min(counts), max(counts)
        ok = low == chain_expected and high == fan_expected
        for entry, count in zip(cat.entries, counts):
            if not chain_expected <= count <= fan_expected:
                ok = False
                witnesses.append({
                    "n": n,
                    "key": entry.hex_key,
                    "inconsistent": count,
                    "bounds": (chain_expected, fan_expected),
                })
        if low != chain_expected or high != fan_expected:
            witnesses.append({
                "n": n,
                "observedRange": (low, high),
                "expectedRange": (chain_expected, fan_expected),
            })
        details.append(
            f"n={n} m={m}: catalog={len(cat)} observed [{low},{high}]"
            f" expected [{chain_expected},{fan_expected}]"
            f" {'ok' if ok else 'VIOLATION'}"
        )
    status = COUNTEREXAMPLE if witnesses else VERIFIED
    return VerificationReport(
        claim="t1",
        n_range=tuple(n_range),
        status=status,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def verify_first_kind_max(n_range, jobs: int = 1) -> VerificationReport:
    """The fan maximizes the one-variable first-kind solution total.

    For n >= 4 the maximum of sigma_cov1 over the catalog must equal
    n^2 + n + (n - 2) * ((n - 2)^2 + 4) and be attained by the fan.
    """
    t0 = time.perf_counter()
    witnesses: list = []
    details: list = []
    any_checked = False
    for n in _range_list(n_range):
        if n < 4:
            details.append(f"n={n}: skipped (needs order >= 4)")
            continue
        any_checked = True
        cat = generate_catalog(n, jobs)
        values = [equations.total_first_kind(e.lattice) for e in cat.entries]
        expected = n * n + n + (n - 2) * ((n - 2) ** 2 + 4)
        high = max(values)
        fan_key = canonical_form(make_fan(n)).key
        argmax = [
            e.hex_key for e, v in zip(cat.entries, values) if v == high
        ]
        ok = high == expected and key_hex(fan_key) in argmax
        if not ok:
            witnesses.append({
                "n": n,
                "observedMax": high,
                "expectedMax": expected,
                "argmax": argmax,
            })
        details.append(
            f"n={n}: max sigmaCov1 {high} expected {expected}"
            f" attained by {len(argmax)} entries"
            f" {'ok' if ok else 'VIOLATION'}"
        )
    status = (
        COUNTEREXAMPLE if witnesses
        else VERIFIED if any_checked
        else SKIPPED
    )
    return VerificationReport(
        claim="t2",
        n_range=tuple(n_range),
        status=status,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def _empty_dominance_worker(args) -> bool:
    n, flat = args
    hist = equations.solution_histogram(Semilattice.from_flat(n, flat))
    return hist.get(0, 0) >= max(hist.values())


def verify_empty_bucket_dominance(n_range, jobs: int = 1) -> VerificationReport:
    """No solution set is shared by more equations than the empty set.

    Buckets the one-variable equations by solution set; for n >= 6 the
    empty bucket must be weakly largest.  Smaller orders are reported as
    skipped (the claim is not asserted there).
    """
    t0 = time.perf_counter()
    witnesses: list = []
    details: list = []
    any_checked = False
    for n in _range_list(n_range):
        if n < 6:
            details.append(f"n={n}: skipped (asserted for order >= 6 only)")
            continue
        any_checked = True
        cat = generate_catalog(n, jobs)
        flags = pmap(
            _empty_dominance_worker,
            [(n, e.lattice.flat()) for e in cat.entries],
            jobs,
        )
        bad = [e.hex_key for e, f in zip(cat.entries, flags) if not f]
        for key in bad:
            witnesses.append({"n": n, "key": key})
        details.append(
            f"n={n}: catalog={len(cat)}"
            f" {'ok' if not bad else f'{len(bad)} VIOLATIONS'}"
        )
    status = (
        COUNTEREXAMPLE if witnesses
        else VERIFIED if any_checked
        else SKIPPED
    )
    return VerificationReport(
        claim="t4",
        n_range=tuple(n_range),
        status=status,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def verify_unique_coatom_minimum(n_range, jobs: int = 1) -> VerificationReport:
    """Some minimizer of the solution total has exactly one coatom.

    For each order, finds the minimum of sigma over the catalog and
    checks that at least one attaining structure has a single coatom.
    All minimizers are recorded as witnesses with both totals.
    """
    t0 = time.perf_counter()
    witnesses: list = []
    details: list = []
    ok_all = True
    for n in _range_list(n_range):
        cat = generate_catalog(n, jobs)
        values = [equations.total_solutions(e.lattice) for e in cat.entries]
        low = min(values)
        minimizers = [e for e, v in zip(cat.entries, values) if v == low]
        coatoms = [e.lattice.coatoms().bit_count() for e in minimizers]
        ok = 1 in coatoms
        ok_all = ok_all and ok
        for entry, c in zip(minimizers, coatoms):
            witnesses.append({
                "n": n,
                "key": entry.hex_key,
                "sigma": low,
                "sigmaCov1": low - n * n,
                "coatomCount": c,
            })
        details.append(
            f"n={n}: min sigma {low} over {len(cat)} entries,"
            f" {len(minimizers)} minimizer(s), coatom counts {sorted(set(coatoms))}"
            f" {'ok' if ok else 'VIOLATION'}"
        )
    status = VERIFIED if ok_all else COUNTEREXAMPLE
    return VerificationReport(
        claim="conjecture",
        n_range=tuple(n_range),
        status=status,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def verify_cover_bounds(n_range, jobs: int = 1) -> VerificationReport:
    """Structural per-element bounds behind the first-kind maximum.

    With at least two atoms, every element other than bottom and top
    satisfies cov1 <= (n-2)^2 + 4.  With a unique atom a, cov1(a) equals
    (n-1)^2 + 1, every other element except bottom satisfies
    cov1 <= (n-2)^2 + 2, and when a has k >= 2 upper covers u, both
    |up(u)| and |{t : meet(t, u) == a}| lie in [2, n-3] and sum to at
    most n - 1.
    """
    t0 = time.perf_counter()
    witnesses: list = []
    details: list = []
    for n in _range_list(n_range):
        cat = generate_catalog(n, jobs)
        checked = 0
        for entry in cat.entries:
            latt = entry.lattice
            vec = [equations.first_kind_count(latt, e) for e in range(n)]
            atom_mask = latt.atoms()
            skip = {latt.bottom, latt.top}
            if atom_mask.bit_count() >= 2:
                bound = (n - 2) ** 2 + 4
                for e in range(n):
                    if e in skip:
                        continue
                    checked += 1
                    if vec[e] > bound:
                        witnesses.append({
                            "n": n, "key": entry.hex_key, "element": e,
                            "cov1": vec[e], "bound": bound, "case": "multi-atom",
                        })
            else:
                atom = next(bits(atom_mask))
                checked += 1
                if vec[atom] != (n - 1) ** 2 + 1:
                    witnesses.append({
                        "n": n, "key": entry.hex_key, "element": atom,
                        "cov1": vec[atom], "expected": (n - 1) ** 2 + 1,
                        "case": "unique-atom value",
                    })
                bound = (n - 2) ** 2 + 2
                for e in range(n):
                    if e == latt.bottom or e == atom:
                        continue
                    checked += 1
                    if vec[e] > bound:
                        witnesses.append({
                            "n": n, "key": entry.hex_key, "element": e,
                            "cov1": vec[e], "bound": bound, "case": "unique-atom",
                        })
                above = list(bits(latt.upper_covers(atom)))
                if len(above) >= 2:
                    for u in above:
                        up_size = latt.up_set(u).bit_count()
                        rel = latt.perp_relative(atom, u).bit_count()
                        checked += 1
                        if not (
                            2 <= up_size <= n - 3
                            and 2 <= rel <= n - 3
                            and up_size + rel <= n - 1
                        ):
                            witnesses.append({
                                "n": n, "key": entry.hex_key, "element": u,
                                "upSize": up_size, "relSize": rel,
                                "case": "cover-window",
                            })
        details.append(
            f"n={n}: catalog={len(cat)} checks={checked}"
            f" {'ok' if not any(w['n'] == n for w in witnesses) else 'VIOLATION'}"
        )
    status = COUNTEREXAMPLE if witnesses else VERIFIED
    return VerificationReport(
        claim="bounds",
        n_range=tuple(n_range),
        status=status,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


_METRICS = {
    "sigma": lambda latt, m: equations.total_solutions(latt),
    "sigmaCov1": lambda latt, m: equations.total_first_kind(latt),
    "inconsistent": lambda latt, m: equations.inconsistent_count(latt, m),
}


def find_extremal(n: int, metric: str, direction: str, m: int = 1, jobs: int = 1):
    """Extremal value of a metric over the order-n catalog.

    Returns (value, entries) with every attaining entry, in key order.
    Metrics: sigma, sigmaCov1, inconsistent (the last uses m).
    """
    fn = _METRICS.get(metric)
    if fn is None:
        raise UnknownMetric(
            f"unknown metric {metric!r}; expected one of {sorted(_METRICS)}"
        )
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    cat = generate_catalog(n, jobs)
    values = [fn(e.lattice, m) for e in cat.entries]
    target = min(values) if direction == "min" else max(values)
    entries = tuple(e for e, v in zip(cat.entries, values) if v == target)
    return target, entries
