import pytest

from weavekh import (
    BraidWord,
    LaurentPoly,
    coeffs,
    fit_line,
    jones_w3,
    khovanov_table,
    signature_closed_form,
    weaving_braid,
)
from weavekh.exceptions import (
    DegenerateFitError,
    EmptyLineError,
    InvalidArgumentError,
    NegativeRankError,
    NonExactDivisionError,
    VariableMismatchError,
    WeaveKhError,
)
from weavekh.laurent import exact_div


def test_wrong_parameters():
    with pytest.raises(ValueError):
        coeffs(0)
    with pytest.raises(ValueError):
        jones_w3(-4)
    with pytest.raises(ValueError):
        khovanov_table(6)
    with pytest.raises(ValueError):
        weaving_braid(1, 3)
    with pytest.raises(ValueError):
        weaving_braid(3, 0)
    with pytest.raises(ValueError):
        signature_closed_form(2, 0)
    with pytest.raises(ValueError):
        BraidWord(3, ((3, 1),))
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))


def test_errors_are_value_errors():
    for error in (
        DegenerateFitError,
        EmptyLineError,
        InvalidArgumentError,
        NegativeRankError,
        NonExactDivisionError,
        VariableMismatchError,
    ):
        assert issubclass(error, WeaveKhError)
        assert issubclass(error, ValueError)


def test_contract_errors():
    q = LaurentPoly.monomial(1)
    with pytest.raises(NonExactDivisionError):
        exact_div(q + 2, q + 1)
    with pytest.raises(VariableMismatchError):
        q + LaurentPoly.monomial(1, var="t")
    with pytest.raises(EmptyLineError):
        fit_line([(0, 0), (1, 0)])
    with pytest.raises(NegativeRankError):
        fit_line([(0, 1), (1, -1)])
    with pytest.raises(DegenerateFitError):
        fit_line([(0, 1), (1, 2)])
