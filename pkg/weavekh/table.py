"""Rows of the Khovanov statistics table for one residue class of n modulo 3."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Tuple

import pandas as pd
from tqdm.auto import tqdm

from weavekh.exceptions import DegenerateFitError, InvalidArgumentError
from weavekh.gaussfit import fit_line
from weavekh.hecke import HeckeCoeffs, iter_coeffs
from weavekh.jones import jones_from_coeffs
from weavekh.khovanov import khovanov_table, total_rank_line
from weavekh.utils import format_scientific

logger = logging.getLogger(__name__)

TABLE_COLUMNS = [
    "n",
    "total_dimension",
    "dim_H01",
    "dim_H01_paired",
    "sigma",
    "l2_comparison",
    "l1_comparison",
    "total_dimension_sci",
    "dim_H01_sci",
    "dim_H01_paired_sci",
]

SCIENTIFIC_THRESHOLD_DIGITS = 19


def _scientific(value: int) -> str:
    """Scientific rendering for integers longer than the threshold, else empty."""
    if len(str(value)) > SCIENTIFIC_THRESHOLD_DIGITS:
        return format_scientific(value)
    return ""


def compute_row(
    row: HeckeCoeffs, intercept_convention: str = "total"
) -> Tuple[Dict[str, str], bool]:
    """Return the table row of W(3, n), every field as text, and its H01 convention flag.

    The fit columns are left empty when the Betti line admits no normal
    fit, as for n = 1 and n = 2.
    """
    n = row.n
    table = khovanov_table(n, jones=jones_from_coeffs(row), flag_convention=False)
    total = total_rank_line(table)
    values = {
        "n": str(n),
        "total_dimension": str(total),
        "dim_H01": str(table.h01),
        "dim_H01_paired": str(table.h01_paired),
        "sigma": "",
        "l2_comparison": "",
        "l1_comparison": "",
        "total_dimension_sci": _scientific(total),
        "dim_H01_sci": _scientific(table.h01),
        "dim_H01_paired_sci": _scientific(table.h01_paired),
    }
    try:
        fit = fit_line(table.betti_line, n, intercept_convention)
    except DegenerateFitError as error:
        logger.warning("W(3,%d): no normal fit, %s", n, error)
        return values, table.h01_flagged
    values["sigma"] = format(fit.sigma, ".6g")
    values["l2_comparison"] = format(fit.l2, ".6g")
    values["l1_comparison"] = format(fit.l1, ".6g")
    return values, table.h01_flagged


def table_values(residue: int, start: int, end: int) -> List[int]:
    """Return the values of n in the table, checking the range.

    Raises
    ------
    InvalidArgumentError
        If the residue is not 1 or 2, or start is not positive or not in
        the residue class.
    """
    if residue not in (1, 2):
        raise InvalidArgumentError(f"The residue class must be 1 or 2, got {residue}.")
    if start < 1:
        raise InvalidArgumentError(f"The first value of n must be positive, got {start}.")
    if start % 3 != residue:
        raise InvalidArgumentError(
            f"The first value {start} is not congruent to {residue} modulo 3."
        )
    return list(range(start, end + 1, 3))


def build_table(
    residue: int,
    start: int,
    end: int,
    threads: int = 1,
    intercept_convention: str = "total",
    verbose: bool = False,
) -> pd.DataFrame:
    """Return the statistics table for n = start, start + 3, ..., end.

    The coefficient rows are produced sequentially and handed to a pool of
    ``threads`` workers; rows are merged back in the order of n, so the
    result does not depend on the number of threads.

    The dim_H01 column is the rank at (0, 1) as computed, dim_H01_paired
    leaves out the generator of the unknot pair sitting there.

    Parameters
    ----------
    residue: int
        Residue class of n modulo 3, either 1 or 2.
    start: int
        First value of n.
    end: int
        Last value of n, an empty table being returned when it is below start.
    threads: int = 1
        Number of worker threads.
    intercept_convention: str = "total"
        Intercept convention of the quadratic fit.
    verbose: bool = False
        Whether to show a progress bar.
    """
    values = table_values(residue, start, end)
    if threads < 1:
        raise InvalidArgumentError(f"The number of threads must be positive, got {threads}.")
    if not values:
        return pd.DataFrame(columns=TABLE_COLUMNS)
    wanted = set(values)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [
            executor.submit(compute_row, row, intercept_convention)
            for row in tqdm(
                iter_coeffs(values[-1]),
                desc="Computing coefficient rows",
                total=values[-1],
                dynamic_ncols=True,
                leave=False,
                disable=not verbose,
            )
            if row.n in wanted
        ]
        results = [future.result() for future in futures]
    flagged = [int(row["n"]) for row, flag in results if flag]
    if flagged:
        logger.warning(
            "Rank at (0,1) exceeds the rank at (1,3) for %d of %d rows (n=%d..%d); "
            "dim_H01_paired leaves out the unknot pair",
            len(flagged),
            len(results),
            flagged[0],
            flagged[-1],
        )
    logger.info("Computed %d table rows for residue %d", len(results), residue)
    return pd.DataFrame([row for row, _ in results], columns=TABLE_COLUMNS)
