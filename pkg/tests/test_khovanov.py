import pytest

from weavekh.hecke import iter_coeffs
from weavekh.jones import jones_w3
from weavekh.khovanov import (
    KhovanovTable,
    betti_line,
    euler_characteristic_holds,
    kh_poly,
    kh_prime,
    khovanov_from_jones,
    khovanov_table,
    knight_move_divisible,
    rank_line,
    support_offsets,
    total_rank_line,
)
from weavekh.laurent import BiLaurentPoly, LaurentPoly

t = LaurentPoly.monomial(1, var="t")
W3_10_LINE = [1, 9, 36, 94, 196, 346, 529, 721, 879, 971, 970, 879, 721, 529, 346, 196, 94, 36, 9, 1]


def test_kh_prime():
    figure_eight = t**-2 - t**-1 + 1 - t + t**2
    assert kh_prime(figure_eight, 0) == BiLaurentPoly({(-2, -4): 1, (1, 2): 1})
    assert kh_prime(LaurentPoly.constant(1, "t"), 0).is_zero()


def test_kh_poly():
    khp = BiLaurentPoly({(-2, -4): 1, (1, 2): 1})
    assert kh_poly(khp, 0) == BiLaurentPoly(
        {(-2, -5): 1, (-1, -1): 1, (0, -1): 1, (0, 1): 1, (1, 1): 1, (2, 5): 1}
    )
    assert kh_poly(BiLaurentPoly({}), 0) == BiLaurentPoly({(0, -1): 1, (0, 1): 1})
    with pytest.raises(ValueError):
        kh_poly(BiLaurentPoly({(1, 2): -3}), 0)


def test_figure_eight_table():
    table = khovanov_table(2)
    assert str(table.kh_poly) == "t^-2*Q^-5 + t^-1*Q^-1 + Q^-1 + Q + t*Q + t^2*Q^5"
    assert betti_line(table) == [(-1, 1), (0, 1), (2, 1)]
    assert total_rank_line(table) == 3
    assert rank_line(table, -1) == [(-2, 1), (0, 1), (1, 1)]


def test_unknot_table():
    table = khovanov_table(1)
    assert table.betti_line == [(0, 1)]
    assert table.ranks == {(0, -1): 1, (0, 1): 1}


def test_w3_10(caplog):
    table = khovanov_table(10)
    assert table.betti_line == list(zip(range(-9, 11), W3_10_LINE))
    assert total_rank_line(table) == 7563
    assert table.h01 == 971
    assert table.rank(1, 3) == 970
    assert table.h01_paired == 970
    assert table.h01_flagged
    assert "rank at (0,1) is 971, larger than 970 at (1,3)" in caplog.text


def test_convention_flag_can_be_silenced(caplog):
    table = khovanov_table(10, flag_convention=False)
    assert table.h01_flagged
    assert "larger than" not in caplog.text


def test_convention_flag_of_huge_ranks(caplog):
    table = khovanov_table(329)
    assert len(str(table.h01)) > 100
    assert str(table.h01) not in caplog.text
    assert "e+135" in caplog.text


def test_table_integers():
    expected = {
        10: (7563, 970),
        11: (19801, 2431),
        13: (135721, 15418),
        14: (355323, 38983),
        16: (2435423, 250828),
        22: (784198803, 69337015),
        23: (2053059121, 177671734),
        46: (8430103512748703523, 520131503664409798),
        47: (22070297525055988321, 1347390412214087833),
    }
    for row in iter_coeffs(47):
        if row.n in expected:
            table = khovanov_table(row.n, row)
            assert (total_rank_line(table), table.h01_paired) == expected[row.n]
            assert table.h01 == table.h01_paired + 1 == table.rank(1, 3) + 1


def test_identities_for_computed_tables():
    for row in iter_coeffs(40):
        if row.n % 3 == 0:
            continue
        table = khovanov_table(row.n, row)
        assert euler_characteristic_holds(table)
        assert set(support_offsets(table)) <= {-1, 1}
        assert knight_move_divisible(table)
        assert all(rank > 0 for rank in table.ranks.values())
        assert total_rank_line(table) % 2 == 1


def test_from_jones_with_signature():
    # Right-handed trefoil: V = t + t^3 - t^4, signature -2.
    table = khovanov_from_jones(t + t**3 - t**4, -2)
    assert table.ranks == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
    assert euler_characteristic_holds(table)
    assert support_offsets(table) == [1, 3]


def test_exports():
    table = khovanov_table(2)
    frame = table.to_csv_frame()
    assert list(frame.columns) == ["i", "j", "rank"]
    assert len(frame) == 6
    assert frame["rank"].tolist() == ["1"] * 6
    payload = table.to_json()
    assert payload == {
        "n": 2,
        "sigma": 0,
        "betti_line": [[-1, "1"], [0, "1"], [2, "1"]],
        "total": "3",
        "h01": "1",
        "h01_paired": "0",
    }


def test_wrong_parameters():
    with pytest.raises(ValueError):
        khovanov_table(3)
    with pytest.raises(ValueError):
        kh_prime(t + 1, 0)
    with pytest.raises(ValueError):
        euler_characteristic_holds(KhovanovTable(0, BiLaurentPoly({(0, 1): 1})))
    assert jones_w3(4).is_knot
