"""Equation enumeration, evaluation, consistency, and the per-element
agreement machinery with its closed forms."""

import pytest

from semlat import (
    Equation,
    IndexOutOfRange,
    MTooLarge,
    OrderTooSmall,
    Term,
    chain_first_kind_count,
    enumerate_equations,
    equation_count,
    eval_term,
    fan_first_kind_count,
    first_kind_count,
    first_kind_pairs,
    first_kind_pairs_by_covers,
    first_kind_pairs_rec,
    generate_catalog,
    inconsistent_count,
    is_consistent,
    make_chain,
    make_fan,
    second_kind_pairs,
    solution_count,
    solution_histogram,
    solution_set,
    total_first_kind,
    total_solutions,
)
from semlat.landmarks import spire5


def test_equation_count_closed_form():
    for n in range(2, 7):
        for m in (1, 2, 3):
            assert equation_count(n, m) == (1 << m) * n * n * ((1 << m) - 1)


def test_enumeration_matches_count_and_is_duplicate_free():
    for n, m, expected in ((2, 1, 8), (5, 2, 300), (4, 3, 896)):
        eqs = list(enumerate_equations(make_chain(n), m))
        assert len(eqs) == expected == equation_count(n, m)
        assert len(set(eqs)) == len(eqs)


def test_m_guards():
    c = make_chain(3)
    with pytest.raises(MTooLarge):
        next(enumerate_equations(c, 7))
    with pytest.raises(ValueError):
        next(enumerate_equations(c, 0))
    with pytest.raises(MTooLarge):
        equation_count(3, 9)


def test_eval_term():
    c = make_chain(5)
    # x0 meet constant 2, at x0 = 4
    assert eval_term(c, Term(0b1, 2), (4,)) == 2
    # a constant equal to top means "no constant"
    assert eval_term(c, Term(0b1, c.top), (3,)) == 3
    f = make_fan(5)
    assert eval_term(f, Term(0b11, f.top), (1, 2)) == 0


def test_solution_set_and_count():
    c = make_chain(5)
    # x meet 2 == 2 exactly on the up-set of 2
    eq = Equation("second", Term(0b1, 2), 2)
    sol = solution_set(c, eq, 1)
    assert sol.count == 3
    assert sol.mask == 0b11100
    assert solution_count(c, eq, 1) == 3
    # two variables: x0 meet x1 == 0 on a chain forces min == 0
    eq2 = Equation("second", Term(0b11, c.top), 0)
    assert solution_count(c, eq2, 2) == 9


def test_inconsistent_example():
    c = make_chain(5)
    # x meet 1 can never reach 3
    assert not is_consistent(c, Equation("second", Term(0b1, 1), 3), 1)
    assert is_consistent(c, Equation("second", Term(0b1, 3), 1), 1)


def test_first_kind_equations_always_consistent():
    for n in range(2, 5):
        for entry in generate_catalog(n):
            latt = entry.lattice
            for eq in enumerate_equations(latt, 2):
                if eq.kind == "first":
                    assert is_consistent(latt, eq, 2)


def test_inconsistent_count_landmarks():
    assert inconsistent_count(make_chain(5), 1) == 10
    assert inconsistent_count(make_fan(5), 1) == 13
    assert inconsistent_count(spire5(), 1) == 11
    assert inconsistent_count(make_chain(4), 2) == 18
    assert inconsistent_count(make_fan(4), 2) == 21


def test_second_kind_pairs_is_meet_graph():
    c = make_chain(3)
    assert second_kind_pairs(c, 1) == {(0, 0), (1, 1), (2, 1)}
    for n in range(2, 7):
        for entry in generate_catalog(n):
            latt = entry.lattice
            for s in range(n):
                assert len(second_kind_pairs(latt, s)) == n


def test_first_kind_pairs_extremes():
    c = make_chain(3)
    full = {(a, b) for a in range(3) for b in range(3)}
    assert first_kind_pairs(c, 0) == full
    assert first_kind_pairs(c, 2) == {(0, 0), (1, 1), (2, 2)}


def test_recurrence_matches_brute_small():
    for n in range(2, 7):
        for entry in generate_catalog(n):
            latt = entry.lattice
            rec = first_kind_pairs_by_covers(latt)
            for s in range(n):
                brute = first_kind_pairs(latt, s)
                assert rec[s] == brute
                assert first_kind_pairs_rec(latt, s) == brute
                assert first_kind_count(latt, s) == len(brute)


def test_pairs_shrink_going_up():
    for n in range(2, 6):
        for entry in generate_catalog(n):
            latt = entry.lattice
            pairs = [first_kind_pairs(latt, s) for s in range(n)]
            for s in range(n):
                for t in range(n):
                    if latt.leq(s, t):
                        assert pairs[t] <= pairs[s]


def test_atom_count_formula_small():
    # for an atom the meet map hits only itself and bottom
    from semlat import bits
    for n in range(2, 7):
        for entry in generate_catalog(n):
            latt = entry.lattice
            for a in bits(latt.atoms()):
                up = latt.up_set(a).bit_count()
                perp = latt.perp(a).bit_count()
                assert perp == n - up
                assert first_kind_count(latt, a) == up * up + perp * perp


def test_chain_closed_form():
    for n in range(4, 9):
        c = make_chain(n)
        for i in range(n):
            assert chain_first_kind_count(n, i) == first_kind_count(c, i)
    assert chain_first_kind_count(5, 0) == 25
    with pytest.raises(IndexOutOfRange):
        chain_first_kind_count(5, 5)
    with pytest.raises(OrderTooSmall):
        chain_first_kind_count(1, 0)


def test_fan_closed_form():
    for n in range(4, 9):
        f = make_fan(n)
        for i in range(1, n - 1):
            assert fan_first_kind_count(n, i) == first_kind_count(f, i)
    with pytest.raises(IndexOutOfRange):
        fan_first_kind_count(5, 0)
    with pytest.raises(IndexOutOfRange):
        fan_first_kind_count(5, 4)
    with pytest.raises(OrderTooSmall):
        fan_first_kind_count(3, 1)


def test_totals_landmarks():
    assert total_first_kind(make_chain(5)) == 65
    assert total_first_kind(spire5()) == 63
    assert total_first_kind(make_fan(5)) == 69
    assert total_solutions(make_chain(5)) == 90
    assert total_solutions(spire5()) == 88


def test_total_solutions_is_sum_over_one_variable_equations():
    for latt in (make_chain(4), make_fan(5), spire5()):
        direct = sum(
            solution_set(latt, eq, 1).count
            for eq in enumerate_equations(latt, 1)
        )
        assert direct == total_solutions(latt)


def test_histogram_accounting():
    for latt in (make_chain(4), make_fan(5), spire5()):
        n = latt.n
        hist = solution_histogram(latt)
        assert sum(hist.values()) == 2 * n * n
        # x meet top == x meet top and friends are satisfied by everything
        assert hist.get((1 << n) - 1, 0) >= n
        # x meet bottom == anything-but-bottom has no solutions
        assert hist.get(0, 0) >= 1
        total = sum(m.bit_count() * c for m, c in hist.items())
        assert total == total_solutions(latt)
