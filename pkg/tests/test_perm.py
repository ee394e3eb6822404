from itertools import permutations
from math import factorial

import pytest
from hypothesis import given

from bperm.perm import (
    MalformedPrefix,
    NotPlain,
    OutOfRange,
    RepeatedAbsoluteValue,
    SignedPermutation,
    SubsetClass,
    ZeroLetter,
    bar,
    des,
    enumerate_class,
    fdes,
    fix_sets,
    fmaj,
    in_class,
    inv,
    is_desarrangement,
    length,
    ligne_stats,
    maj,
    neg,
    pix_sets,
    pixed_factorization,
    signed_words,
    stat_profile,
    validate,
)

import oracles
from conftest import signed_perms


# -- validation ----------------------------------------------------------------

def test_validate_accepts_signed_word():
    w = validate([3, -2, 1])
    assert w.n == 3 and str(w) == "3,-2,1"


def test_validate_accepts_empty_word():
    assert validate([]).n == 0
    assert SignedPermutation.parse("").letters == ()


def test_repeated_absolute_value_names_index():
    with pytest.raises(RepeatedAbsoluteValue) as err:
        validate([1, 1])
    assert err.value.index == 2
    with pytest.raises(RepeatedAbsoluteValue):
        validate([2, -2])


def test_zero_and_out_of_range_letters():
    with pytest.raises(ZeroLetter) as err:
        validate([1, 0])
    assert err.value.index == 2
    with pytest.raises(OutOfRange) as err:
        validate([4, 1, 2])
    assert err.value.index == 1


def test_parse_reports_bad_token():
    with pytest.raises(ValueError, match="'x'"):
        SignedPermutation.parse("1,x")


def test_inverse_round_trip():
    w = SignedPermutation.parse("3,-2,8,4,5,-1,9,-6,7")
    assert w.inverse().inverse() == w
    assert w.inverse()[2] == 1  # position 3 holds 8, so 8 maps back to 3


# -- statistics ----------------------------------------------------------------

def test_profile_of_worked_word():
    p = stat_profile(SignedPermutation.parse("3,-2,8,4,5,-1,9,-6,7"))
    assert p.fix_plus_set == {4, 5}
    assert p.fix_minus_set == {-2}
    assert p.neg == 3


def test_profile_of_identity():
    p = stat_profile(SignedPermutation.identity(5))
    assert (p.inv, p.length, p.des, p.fdes, p.fmaj, p.fix_plus, p.neg) == (0, 0, 0, 0, 0, 5, 0)


def test_profile_of_flag_example():
    p = stat_profile(SignedPermutation.parse("-4,-3,-2,1,5,6,8,9,-10,-7"))
    assert (p.des, p.fdes, p.maj, p.neg, p.fmaj) == (1, 3, 8, 5, 21)


def test_profile_of_empty_word():
    p = stat_profile(())
    assert all(v == 0 or v == frozenset() for v in p.__dict__.values())


@given(signed_perms())
def test_profile_relations(x):
    p = stat_profile(x)
    assert p.fdes == 2 * p.des + (1 if x and x[0] < 0 else 0)
    assert p.fmaj == 2 * p.maj + p.neg
    assert p.length == p.inv + sum(-v for v in x if v < 0)
    assert p.fix_minus_set <= p.neg_set
    assert p.pix_minus_set <= p.neg_set


@given(signed_perms())
def test_statistics_match_definitions(x):
    d = oracles.descents(x)
    assert des(x) == len(d) and maj(x) == sum(d)
    assert inv(x) == sum(1 for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] > x[j])


@pytest.mark.parametrize("n", range(5))
def test_length_is_coxeter_length(n):
    dist = oracles.coxeter_lengths(n)
    assert len(dist) == 2 ** n * factorial(n)
    for w, d in dist.items():
        assert length(w) == d


# -- desarrangements and the pixed factorization ------------------------------

def test_desarrangement_conventions():
    assert is_desarrangement(())
    assert not any(is_desarrangement((v,)) for v in (-3, 1, 5))
    assert is_desarrangement((8, 5, 4, 3, 6, 2, 7, 9, 1))
    assert is_desarrangement((4, 3, 2, 1))  # whole word one even run
    assert not is_desarrangement((3, 2, 1))


@pytest.mark.parametrize("n", range(8))
def test_desarrangement_matches_trough_oracle(n):
    for x in permutations(range(1, n + 1)):
        assert is_desarrangement(x) == oracles.is_desarrangement(x)


@pytest.mark.parametrize(
    "word, expected",
    [
        ("-5,-2,-3,-4,1", "-5,-2 | e | -3,-4,1"),
        ("-5,-2,-3,1,-4", "-5 | e | -2,-3,1,-4"),
        ("-5,-3,-2,1,4", "-5,-3,-2 | 1,4 | e"),
        ("-5,-3,1,4,2", "-5,-3 | 1 | 4,2"),
        ("-5,-3,4,1,2", "-5,-3 | e | 4,1,2"),
    ],
)
def test_pixed_factorization_examples(word, expected):
    assert str(pixed_factorization(SignedPermutation.parse(word))) == expected


@pytest.mark.parametrize("n", range(7))
def test_pixed_factorization_matches_suffix_scan(n):
    for x in signed_words(n):
        f = pixed_factorization(x)
        assert f.word() == x
        assert (f.w_minus, f.w_plus, f.w_d) == oracles.pixed(x)


def test_malformed_prefix_needs_a_repeated_letter():
    # words with distinct letters always split cleanly; a repeat trips the guard
    with pytest.raises(MalformedPrefix):
        pixed_factorization((1, 1))


# -- enumeration ----------------------------------------------------------------

def test_enumerate_small_cases():
    assert [w.letters for w in enumerate_class(1, "B")] == [(-1,), (1,)]
    assert [w.letters for w in enumerate_class(3, "D")] == [(2, 3, 1), (3, 1, 2)]
    assert sum(1 for _ in enumerate_class(2, "KB")) == 5


@pytest.mark.parametrize("n", range(6))
def test_enumeration_counts_and_order(n):
    words = [w.letters for w in enumerate_class(n, SubsetClass.B)]
    assert len(words) == 2 ** n * factorial(n)
    assert words == sorted(words)
    assert len(set(words)) == len(words)
    d = sum(1 for _ in enumerate_class(n, "D"))
    assert d == oracles.inclusion_exclusion(n) == oracles.derangement_count(n)
    assert sum(1 for _ in enumerate_class(n, "K")) == d


@pytest.mark.parametrize("n", range(5))
def test_signed_classes_by_filter(n):
    every = list(oracles.all_signed(n))
    db = sorted(x for x in every if not fix_sets(x)[0])
    kb = sorted(x for x in every if not oracles.pixed(x)[1])
    assert [w.letters for w in enumerate_class(n, "DB")] == db
    assert [w.letters for w in enumerate_class(n, "KB")] == kb


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        list(enumerate_class(-1))


# -- plain permutations ---------------------------------------------------------

def test_ligne_examples():
    assert ligne_stats((1, 2, 3)).ligne == frozenset() and ligne_stats((1, 2, 3)).imaj == 0
    s = ligne_stats((3, 1, 2))
    assert s.ligne == {1} and s.iligne == {2} and s.imaj == 2
    s = ligne_stats((2, 3, 1))
    assert s.ligne == {2} and s.iligne == {1}


def test_ligne_rejects_signed_word():
    with pytest.raises(NotPlain):
        ligne_stats((1, -2))


@pytest.mark.parametrize("n", range(6))
def test_iligne_is_ligne_of_inverse(n):
    for x in permutations(range(1, n + 1)):
        inverse = tuple(sorted(range(1, n + 1), key=lambda i: x[i - 1]))
        assert ligne_stats(x).iligne == ligne_stats(inverse).ligne


# -- negating letters -------------------------------------------------------------

def test_bar_examples():
    assert bar((1, 2)).letters == (-1, -2)
    assert fmaj((1, 2)) == 0 and fmaj((-1, -2)) == 4
    assert bar((-3, 1, -2)).letters == (3, -1, 2)
    w = (3, -2, 8, 4, 5, -1, 9, -6, 7)
    assert len(fix_sets(w)[0]) == len(fix_sets(bar(w))[1]) == 2


@given(signed_perms())
def test_bar_properties(x):
    n = len(x)
    y = bar(x).letters
    assert bar(y).letters == x
    assert fmaj(x) + fmaj(y) == n * n
    assert neg(x) + neg(y) == n
    assert len(fix_sets(x)[0]) == len(fix_sets(y)[1])
    assert len(fix_sets(x)[1]) == len(fix_sets(y)[0])


@given(signed_perms())
def test_in_class_agrees_with_sets(x):
    assert in_class(x, "DB") == (not fix_sets(x)[0])
    assert in_class(x, "KB") == (not pix_sets(x)[0])
    plain = all(v > 0 for v in x)
    assert in_class(x, "D") == (plain and not fix_sets(x)[0])
    assert in_class(x, "K") == (plain and not pix_sets(x)[0])
    assert fdes(x) >= 0
