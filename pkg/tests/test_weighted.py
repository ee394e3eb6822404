from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bperm.perm import SignedPermutation, enumerate_class, fdes, fmaj, neg
from bperm.qalgebra import ONE, ZERO, Z, q
from bperm.weighted import (
    InsertionConflict,
    NegativeBLetter,
    WeightedSignedPermutation,
    WspDecomposition,
    WspViolation,
    decomposition_equalities,
    enumerate_wsp,
    fdes_pairing,
    fdes_pairing_inverse,
    macmahon_from_word,
    macmahon_to_word,
    validate_wsp,
    wsp_decompose,
    wsp_insertion_steps,
    wsp_recompose,
)
from bperm.words import IntWord, niw

BIG = "c=10,10,9,7,7,7,4,4,4,3,2,2,1;w=1,2,-7,-6,-5,-4,3,8,9,-10,12,13,-11"


def pair(text):
    return WeightedSignedPermutation.parse(text)


def test_validate_worked_pair():
    p = pair(BIG)
    assert p.n == 13 and str(p) == BIG


def test_validate_reports_condition():
    with pytest.raises(WspViolation) as err:
        validate_wsp((2, 2), (2, 1))
    assert err.value.condition == 3
    with pytest.raises(WspViolation) as err:
        validate_wsp((1,), (1,))
    assert err.value.condition == 4
    with pytest.raises(WspViolation) as err:
        validate_wsp((0, 2), (1, 2))
    assert err.value.condition == 1


def test_decompose_worked_pair():
    d = wsp_decompose(pair(BIG))
    assert str(d.v_e) == "10,10,4,4" and str(d.v_o) == "7,3"
    assert str(d.core.c) == "9,7,7,4,2,2,1"
    assert str(d.core.w) == "-4,-3,-2,1,6,7,-5"
    assert (d.i, d.j, d.k) == (7, 4, 2)
    assert all(decomposition_equalities(pair(BIG), d).values())


def test_insertion_intermediates():
    steps = [str(p) for _, _, p in wsp_insertion_steps(wsp_decompose(pair(BIG)))]
    assert steps[0] == "c=10,10,9,7,7,4,2,2,1;w=1,2,-6,-5,-4,3,8,9,-7"
    assert steps[1] == "c=10,10,9,7,7,7,4,2,2,1;w=1,2,-7,-6,-5,-4,3,9,10,-8"
    assert steps[2] == "c=10,10,9,7,7,7,4,4,4,2,2,1;w=1,2,-7,-6,-5,-4,3,8,9,11,12,-10"
    assert steps[-1] == BIG


def test_insertion_rejects_bad_words():
    core = pair("c=1,0;w=-2,1")
    with pytest.raises(InsertionConflict):
        wsp_recompose(WspDecomposition(core, IntWord((3,)), IntWord(())))
    with pytest.raises(InsertionConflict):
        wsp_recompose(WspDecomposition(core, IntWord(()), IntWord((3, 3))))


def test_macmahon_worked_pair():
    p = pair("c=10,9,7,4,4,2,2,1,1;w=1,-4,-3,2,5,6,8,-9,-7")
    d = macmahon_to_word(p)
    assert str(d) == "10,4,7,9,4,2,1,2,1"
    assert macmahon_from_word(d, 10) == p
    zero = macmahon_to_word(pair("c=0,0,0;w=1,2,3"))
    assert zero.letters == (0, 0, 0)


def test_macmahon_cube_round_trip():
    seen = 0
    for d in product(range(3), repeat=3):
        assert macmahon_to_word(macmahon_from_word(d, 2)).letters == d
        seen += 1
    assert seen == 27


def test_pairing_worked_pair():
    p = pair("c=9,7,7,4,4,4,2,2,1,1;w=-4,-3,-2,1,5,6,8,9,-10,-7")
    b, w = fdes_pairing(p)
    assert str(b) == "3,2,2,1,1,1,0,0,0,0"
    assert 2 * b.tot + fmaj(w) == 41 == p.c.tot
    assert 2 * b[0] + fdes(w) == p.c[0]
    assert fdes_pairing_inverse(b, w) == p


def test_pairing_negative_letter():
    with pytest.raises(NegativeBLetter):
        fdes_pairing(WeightedSignedPermutation(IntWord((0, 0)), SignedPermutation((2, 1))))


def test_enumerate_small():
    assert [str(p) for p in enumerate_wsp(1, 1)] == ["c=0;w=1", "c=1;w=-1"]
    assert [str(p) for p in enumerate_wsp(2, 0)] == ["c=0,0;w=1,2"]
    assert sum(1 for _ in enumerate_wsp(3, 2)) == 27


CELLS = [(n, s) for n in range(5) for s in range(5)]


@pytest.mark.parametrize("n,s", CELLS)
def test_round_trips_exhaustive(n, s):
    words = set()
    count = 0
    for p in enumerate_wsp(n, s):
        count += 1
        validate_wsp(p.c, p.w)
        d = wsp_decompose(p)
        assert all(decomposition_equalities(p, d).values())
        assert wsp_recompose(d) == p
        dw = macmahon_to_word(p)
        assert dw.tot == p.c.tot and dw.odd == neg(p.w)
        assert macmahon_from_word(dw, s) == p
        words.add(dw.letters)
    assert count == (s + 1) ** n == len(words)


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("s", range(6))
def test_tot_neg_polynomial(n, s):
    got = sum((q ** p.c.tot * Z ** neg(p.w) for p in enumerate_wsp(n, s)), ZERO)
    single = sum((q ** i * (Z if i % 2 else ONE) for i in range(s + 1)), ZERO)
    assert got == single ** n


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("s", range(5))
def test_pairing_image(n, s):
    produced = set()
    for p in enumerate_wsp(n, s):
        b, w = fdes_pairing(p, s)
        assert fdes_pairing_inverse(b, w) == p
        produced.add((b.letters, w.letters))
    target = {
        (b.letters, w.letters)
        for w in enumerate_class(n, "B")
        for b in niw(n, s)
        if (2 * b[0] if n else 0) + fdes(w) <= s
    }
    assert produced == target


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 12), st.data())
def test_random_macmahon_words(n, s, data):
    d = data.draw(st.lists(st.integers(0, s), min_size=n, max_size=n))
    p = macmahon_from_word(d, s)
    validate_wsp(p.c, p.w)
    assert macmahon_to_word(p).letters == tuple(d)
    assert wsp_recompose(wsp_decompose(p)) == p
    b, w = fdes_pairing(p)
    assert fdes_pairing_inverse(b, w) == p
