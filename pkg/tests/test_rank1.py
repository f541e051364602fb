from fractions import Fraction

import pytest

from nilcohom.errors import DegreeOutOfRange, DegreeTooHigh, UnknownDegree, ValidationError
from nilcohom.rank1 import (
    Rank1Params,
    confdim,
    filling_degree_table,
    induction_range,
    lp_vanishing_range,
    nk_closed_form,
    nk_rank1,
    pansu_bound,
    rank1_table,
    unitary_degrees,
)

GRID = [Rank1Params(f, n) for f in "RCH" for n in range(2, 9)]


def test_params():
    p = Rank1Params("c", 3)
    assert (p.field, p.d, p.delta, p.sqrt_neg_delta) == ("C", 2, Fraction(-1, 4), Fraction(1, 2))
    assert Rank1Params("R", 4).delta == -1
    with pytest.raises(UnknownDegree):
        Rank1Params("O", 2)
    with pytest.raises(ValidationError):
        Rank1Params("R", 1)


@pytest.mark.parametrize("field, n, expected", [("R", 2, 1), ("C", 3, 6), ("H", 2, 10)])
def test_confdim(field, n, expected):
    assert confdim(Rank1Params(field, n)) == expected


class TestFillingTable:
    def test_real(self):
        t = filling_degree_table(Rank1Params("R", 6))
        assert t.degrees == {2: 2, 3: Fraction(3, 2), 4: Fraction(4, 3), 5: Fraction(5, 4), 6: 1}
        assert t.exact

    def test_complex(self):
        t = filling_degree_table(Rank1Params("C", 3))
        assert t.degrees[3] == 2
        assert t.degrees == {2: 2, 3: 2, 4: Fraction(5, 4), 5: Fraction(6, 5), 6: 1}

    def test_quaternionic_gap(self):
        p = Rank1Params("H", 4)
        with pytest.raises(UnknownDegree):
            filling_degree_table(p, upto=6)
        assert set(filling_degree_table(p).degrees) == {2, 3, 16}


class TestNk:
    @pytest.mark.parametrize("field, n, k, expected", [("R", 8, 5, 5), ("C", 3, 4, 5), ("R", 8, 8, 7)])
    def test_examples(self, field, n, k, expected):
        assert nk_rank1(Rank1Params(field, n), k) == expected

    def test_product_matches_closed_forms(self):
        for p in GRID:
            for k in range(1, p.max_known_nk() + 1):
                assert nk_rank1(p, k) == nk_closed_form(p, k)

    def test_known_ranges(self):
        for n in range(2, 9):
            assert Rank1Params("R", n).max_known_nk() == n
            assert Rank1Params("C", n).max_known_nk() == 2 * n
            assert Rank1Params("H", n).max_known_nk() == max(n - 1, 1)

    def test_quaternionic_unknown(self):
        with pytest.raises(UnknownDegree):
            nk_rank1(Rank1Params("H", 4), 6)


class TestPansu:
    @pytest.mark.parametrize(
        "field, n, k, expected",
        [("R", 5, 2, 2), ("C", 3, 2, Fraction(7, 4)), ("H", 2, 1, 4)],
    )
    def test_examples(self, field, n, k, expected):
        assert pansu_bound(Rank1Params(field, n), k) == expected

    def test_too_high(self):
        with pytest.raises(DegreeTooHigh):
            pansu_bound(Rank1Params("R", 4), 3)


class TestVanishing:
    @pytest.mark.parametrize(
        "field, n, k, expected",
        [("R", 5, 2, 2), ("C", 3, 2, Fraction(7, 4)), ("H", 3, 2, Fraction(13, 4))],
    )
    def test_examples(self, field, n, k, expected):
        assert lp_vanishing_range(Rank1Params(field, n), k) == expected

    def test_closed_forms_and_inequality_on_grid(self):
        checked = 0
        for p in GRID:
            n = p.n
            for k in p.corollary_range():
                closed = {
                    "R": Fraction(n - 1, k),
                    "C": Fraction(2 * n + k - 1, 2 * k),
                    "H": Fraction(4 * n + k - 1, 2 * k),
                }[p.field]
                assert lp_vanishing_range(p, k) == closed
                assert Fraction(confdim(p)) / nk_rank1(p, k) >= pansu_bound(p, k)
                checked += 1
        assert checked > 50

    def test_out_of_range(self):
        with pytest.raises(DegreeOutOfRange):
            lp_vanishing_range(Rank1Params("R", 5), 4)
        with pytest.raises(DegreeOutOfRange):
            lp_vanishing_range(Rank1Params("C", 3), 4)


class TestInduction:
    @pytest.mark.parametrize(
        "field, n, k, expected",
        [("R", 6, 3, Fraction(5, 3)), ("C", 4, 2, 4), ("R", 4, 4, 1)],
    )
    def test_examples(self, field, n, k, expected):
        assert induction_range(Rank1Params(field, n), k) == expected


def test_unitary_windows():
    for p in GRID:
        n = p.n
        if p.field == "R":
            expected = [k for k in range(1, n + 1) if k < Fraction(n - 1, 2)]
        else:
            expected = [k for k in range(1, n)]
        assert unitary_degrees(p) == expected, p


def test_table_complex_3():
    rows = rank1_table(Rank1Params("C", 3))
    assert [r["k"] for r in rows] == [1, 2, 3, 4]
    assert [r["N_k"] for r in rows] == [1, 2, 4, 5]
    assert [r["status"] for r in rows][-1] == "outside corollary range"
    assert rows[-1]["vanishing"] is None


def test_table_quaternionic_marks_unknown():
    rows = rank1_table(Rank1Params("H", 4))
    assert rows[-1]["k"] == 4 and rows[-1]["N_k"] is None
