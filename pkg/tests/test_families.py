from collections import Counter
from itertools import permutations
from math import factorial

import pytest

from bperm.identities.families import (
    CapExceeded,
    d_closed_form,
    derangement_alternating_sum,
    derangement_numbers,
    derangement_positive_sum,
    dnb_recurrence,
    dnb_two_term,
    enum_counts,
    enum_polynomial,
    fix_closed_form,
    fix_exponential_form,
    length_closed_form,
)
from bperm.perm import stat_profile
from bperm.qalgebra import ONE, Y0, Y1, Z, q

import oracles

D_SEQ = [1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496]


def test_derangement_numbers():
    assert derangement_numbers(9) == D_SEQ
    assert [derangement_alternating_sum(n) for n in range(10)] == D_SEQ
    assert [derangement_positive_sum(n) for n in range(10)] == D_SEQ
    assert derangement_positive_sum(4) == 2 * 4 + 1
    assert [oracles.derangement_count(n) for n in range(8)] == D_SEQ[:8]


def test_small_polynomials():
    for family in ("FIX", "PIX", "PIX_L", "FLAG", "A", "D", "K", "DnB", "KnB"):
        assert enum_polynomial(0, family) == ONE
    assert enum_polynomial(1, "FIX") == Y0 + Y1 * Z


@pytest.mark.parametrize("n", range(6))
def test_b_bundles_against_profiles(n):
    # slow path through stat_profile versus the inlined single pass
    fix, pixl, flag = Counter(), Counter(), Counter()
    for x in oracles.all_signed(n):
        p = stat_profile(x)
        fix[(0, 0, p.fix_plus, p.fix_minus, p.neg)] += 1
        pixl[(0, p.length, p.pix_plus, p.pix_minus, p.neg)] += 1
        flag[(p.fdes, p.fmaj, p.fix_plus, p.fix_minus, p.neg)] += 1
    assert enum_counts(n, "FIX") == fix
    assert enum_counts(n, "PIX_L") == pixl
    assert enum_counts(n, "FLAG") == flag


@pytest.mark.parametrize("n", range(7))
def test_s_bundles_against_definitions(n):
    a, inv_a, d = Counter(), Counter(), Counter()
    for x in permutations(range(1, n + 1)):
        desc = oracles.descents(x)
        fix = sum(1 for i, v in enumerate(x, 1) if v == i)
        a[(0, sum(desc), fix, 0, 0)] += 1
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if x[i] > x[j])
        pix = len(oracles.pixed(x)[1])
        inv_a[(0, inv, pix, 0, 0)] += 1
        if not fix:
            d[(0, sum(desc), 0, 0, 0)] += 1
    assert enum_counts(n, "A") == a
    assert enum_counts(n, "INV_A") == inv_a
    assert enum_counts(n, "D") == d


@pytest.mark.parametrize("n", range(8))
def test_group_order(n):
    assert enum_polynomial(n, "FIX").evaluate({"Y0": 1, "Y1": 1, "Z": 1}) == 2 ** n * factorial(n)


@pytest.mark.parametrize("n", range(6))
def test_closed_forms(n):
    assert fix_closed_form(n) == enum_polynomial(n, "FIX")
    assert fix_exponential_form(n) == enum_polynomial(n, "FIX")
    assert length_closed_form(n) == enum_polynomial(n, "PIX_L")
    assert length_closed_form(n).substitute({"q": 1}) == fix_closed_form(n)


def test_closed_form_small_values():
    assert fix_closed_form(1) == Y0 + Y1 * Z
    assert d_closed_form(2) == q
    assert d_closed_form(3) == q + q ** 2
    assert d_closed_form(0) == ONE and d_closed_form(1).is_zero()


@pytest.mark.parametrize("n", range(9))
def test_derangement_closed_form(n):
    assert d_closed_form(n) == enum_polynomial(n, "D") == enum_polynomial(n, "K")


def test_signed_derangement_recurrences():
    first = dnb_recurrence(6)
    second = dnb_two_term(6)
    for n in range(7):
        assert first[n] == second[n] == enum_polynomial(n, "DnB")
    assert second[1] == q * Z


def test_dnb_at_z_one():
    # signed derangements by fmaj alone
    values = [enum_polynomial(n, "DnB").substitute({"Z": 1}).evaluate({"q": 1}) for n in range(5)]
    assert values == [1, 1, 5, 29, 233]


def test_cap(monkeypatch):
    monkeypatch.setenv("BPERM_NMAX_CAP", "3")
    with pytest.raises(CapExceeded):
        enum_polynomial(4, "FIX")
    # the cap is on enumeration size, so S_4 (24 words) is still allowed under |B_3| = 48
    assert enum_polynomial(4, "A").evaluate({"q": 1, "Y0": 1}) == 24


def test_unknown_family():
    with pytest.raises(KeyError):
        enum_polynomial(2, "nope")
