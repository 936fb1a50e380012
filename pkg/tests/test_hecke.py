import pytest

from weavekh.hecke import (
    HeckeElementH3,
    coeffs,
    degree_bounds,
    hecke_element_of_word,
    hecke_mul,
    initial_coeffs,
    iter_coeffs,
    observed_degrees,
    oracle_element,
    step,
    verify_row,
)
from weavekh.laurent import LaurentPoly

q = LaurentPoly.monomial(1, var="q")
zero = LaurentPoly.zero("q")
one = LaurentPoly.constant(1, "q")


def test_initial_coeffs():
    row = initial_coeffs()
    assert row.n == 1
    assert row.as_tuple() == (zero, 1 - q, zero, one, zero, zero)
    assert row.c1.coefficient(0) + row.c1.coefficient(1) == 0


def test_second_row():
    row = step(initial_coeffs())
    assert row.n == 2
    assert row.c0 == q * (q - 1) ** 2
    assert row.c1 == (q - 1) ** 3
    assert row.c2 == -q * (q - 1)
    assert row.c12 == -((q - 1) ** 2)
    assert row.c21 == q
    assert row.c121.is_zero()
    assert coeffs(2) == row


def test_coeffs_agree_with_oracle():
    assert coeffs(1) == initial_coeffs()
    for n in (1, 2, 3, 10):
        assert verify_row(n)
    assert coeffs(3).to_element() == oracle_element().power(3)


def test_oracle_detects_wrong_row():
    row = coeffs(4)
    wrong = type(row)(row.n, row.c0 + 1, row.c1, row.c2, row.c12, row.c21, row.c121)
    assert not verify_row(4, wrong)


def test_hecke_mul():
    t1 = HeckeElementH3.generator(1)
    t2 = HeckeElementH3.generator(2)
    unit = HeckeElementH3.one()
    assert hecke_mul(t1, t1) == HeckeElementH3.from_words({(1,): q - 1, (): q})
    assert hecke_mul(unit, oracle_element()) == oracle_element()
    assert hecke_mul(oracle_element(), unit) == oracle_element()
    # T2 T1 T1 T2 = (q-1) T2 T1 T2 + q T2 T2
    expected = HeckeElementH3.from_words(
        {(1, 2, 1): q - 1, (2,): q * (q - 1), (): q * q}
    )
    assert hecke_mul(hecke_mul(t2, t1), hecke_mul(t1, t2)) == expected
    assert hecke_mul(hecke_mul(t2, t1), t2) == HeckeElementH3.from_words({(1, 2, 1): one})


def test_hecke_mul_is_associative():
    elements = [
        HeckeElementH3.generator(1),
        HeckeElementH3.generator(2),
        oracle_element(),
        HeckeElementH3.from_words({(2, 1): q, (1, 2, 1): 1 - q, (): one}),
    ]
    for a in elements:
        for b in elements:
            for c in elements:
                assert hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c))


def test_element_of_word():
    element, negatives = hecke_element_of_word([(1, 1), (2, -1)] * 3)
    assert negatives == 3
    assert element == coeffs(3).to_element()
    inverse_pair, k = hecke_element_of_word([(1, 1), (1, -1)])
    assert k == 1
    assert inverse_pair == HeckeElementH3.one().scale(q)


def test_recursion_facts_up_to_500():
    for row in iter_coeffs(500):
        n = row.n
        assert row.c121.is_zero()
        degrees = observed_degrees(row)
        for name, bound in degree_bounds(n).items():
            assert degrees[name] is None or degrees[name] <= bound
        if n >= 2:
            assert degrees["C0"] == 2 * n - 1
            assert degrees["C1"] == 2 * n - 1
            assert row.c0.coefficient(1) == (-1) ** (n - 2)
        assert row.c0.coefficient(0) == 0
        assert row.c1.coefficient(0) == (-1) ** (n - 1)
        assert row.c1.coefficient(2 * n - 1) + row.c12.coefficient(2 * n - 2) == 0


def test_recursion_matches_oracle_up_to_30():
    power = HeckeElementH3.one()
    for row in iter_coeffs(30):
        power = hecke_mul(power, oracle_element())
        assert row.to_element() == power


def test_iter_coeffs_resumes():
    rows = list(iter_coeffs(6))
    assert [row.n for row in rows] == [1, 2, 3, 4, 5, 6]
    resumed = list(iter_coeffs(6, start=rows[3]))
    assert resumed == rows[3:]
    assert list(iter_coeffs(0)) == []


def test_to_json():
    payload = coeffs(2).to_json()
    assert payload["n"] == 2
    assert list(payload) == ["n", "C0", "C1", "C2", "C12", "C21", "C121"]
    assert payload["C21"] == {"var": "q", "terms": [[1, "1"]]}
    assert payload["C121"] == {"var": "q", "terms": []}


def test_wrong_parameters():
    with pytest.raises(ValueError):
        coeffs(0)
    with pytest.raises(ValueError):
        HeckeElementH3.generator(3)
    with pytest.raises(ValueError):
        HeckeElementH3.from_words({(2, 1, 2): one})
    with pytest.raises(ValueError):
        oracle_element().power(-1)
