import os

import pandas as pd
import pytest

from weavekh.table import TABLE_COLUMNS, build_table, table_values
from weavekh.utils import format_scientific

PUBLISHED = pd.read_csv(
    os.path.join(os.path.dirname(__file__), "statistics_rows.csv"), dtype=str
)


@pytest.fixture(scope="module")
def computed():
    return {
        residue: build_table(residue, start, 100).set_index("n")
        for residue, start in ((1, 10), (2, 11))
    }


def matches_published(value: str, published: str) -> bool:
    if "e" in published:
        return format_scientific(int(value)) == published
    return value == published


@pytest.mark.parametrize(
    "published", PUBLISHED.to_dict(orient="records"), ids=lambda row: f"n{row['n']}"
)
def test_published_rows(computed, published):
    row = computed[int(published["residue"])].loc[published["n"]]
    assert matches_published(row["total_dimension"], published["total_dimension"])
    assert matches_published(row["dim_H01_paired"], published["dim_H01"])
    assert int(row["dim_H01"]) == int(row["dim_H01_paired"]) + 1
    assert float(row["sigma"]) == pytest.approx(float(published["sigma"]), rel=5e-3)
    assert float(row["l2_comparison"]) == pytest.approx(
        float(published["l2_comparison"]), abs=5e-3
    )
    assert float(row["l1_comparison"]) == pytest.approx(
        float(published["l1_comparison"]), abs=5e-3
    )


def test_columns(computed):
    frame = computed[1].reset_index()
    assert list(frame.columns) == TABLE_COLUMNS
    assert frame["n"].tolist() == [str(n) for n in range(10, 101, 3)]
    rows = frame.set_index("n")
    assert rows.loc["46", "total_dimension_sci"] == ""
    assert rows.loc["49", "total_dimension_sci"] == "1.51272e+20"
    assert rows.loc["100", "dim_H01_sci"] == "1.31840e+40"
    assert rows.loc["100", "dim_H01_paired_sci"] == "1.31840e+40"
    sigmas = frame["sigma"].astype(float).tolist()
    assert sigmas == sorted(sigmas)


def test_large_n():
    frame = build_table(1, 289, 289)
    row = frame.iloc[0]
    assert row["total_dimension_sci"] == "3.11764e+120"
    assert row["dim_H01_paired_sci"] == "7.72623e+118"
    assert float(row["sigma"]) == pytest.approx(13.3289, rel=5e-3)
    frame = build_table(2, 329, 329)
    row = frame.iloc[0]
    assert row["total_dimension_sci"] == "1.63244e+137"
    assert row["dim_H01_paired_sci"] == "3.79224e+135"
    assert float(row["sigma"]) == pytest.approx(14.2187, rel=5e-3)
    assert float(row["l2_comparison"]) == pytest.approx(0.021838, abs=5e-3)
    assert float(row["l1_comparison"]) == pytest.approx(0.181399, abs=5e-3)


def test_rows_without_a_fit(caplog):
    frame = build_table(1, 1, 10).set_index("n")
    assert frame.index.tolist() == ["1", "4", "7", "10"]
    assert frame.loc["1", "total_dimension"] == "1"
    assert frame.loc["1", ["sigma", "l2_comparison", "l1_comparison"]].tolist() == ["", "", ""]
    assert frame.loc["10", "dim_H01_paired"] == "970"
    assert float(frame.loc["10", "sigma"]) == pytest.approx(2.64088, rel=5e-3)
    assert "W(3,1): no normal fit" in caplog.text
    frame = build_table(2, 2, 11).set_index("n")
    assert frame.loc["2", "total_dimension"] == "3"
    assert frame.loc["2", "sigma"] == ""
    assert frame.loc["11", "dim_H01_paired"] == "2431"


def test_convention_flag_is_logged_once(caplog):
    build_table(1, 10, 22)
    messages = [record.getMessage() for record in caplog.records]
    assert sum("exceeds the rank at (1,3)" in message for message in messages) == 1
    assert not any("larger than" in message for message in messages)


def test_threads_do_not_change_the_table():
    sequential = build_table(2, 11, 29, threads=1)
    parallel = build_table(2, 11, 29, threads=4)
    assert sequential.equals(parallel)


def test_empty_range():
    frame = build_table(1, 10, 7)
    assert frame.empty
    assert list(frame.columns) == TABLE_COLUMNS


def test_wrong_parameters():
    with pytest.raises(ValueError):
        table_values(3, 10, 20)
    with pytest.raises(ValueError):
        table_values(1, 11, 20)
    with pytest.raises(ValueError):
        table_values(1, -2, 20)
    with pytest.raises(ValueError):
        build_table(1, 10, 13, threads=0)
