"""Normal-density fit of the normalized Betti numbers along a support line.

The logarithms of the normalized ranks are fitted by least squares with a
quadratic q_n(x) = -(alpha x^2 - beta x + delta), giving the density
rho_n(x) = A_n exp(q_n(x)) with mean beta / (2 alpha) and standard
deviation 1 / sqrt(2 alpha).
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy import integrate

from weavekh.exceptions import (
    DegenerateFitError,
    EmptyLineError,
    InvalidArgumentError,
    NegativeRankError,
)
from weavekh.utils import log_ratio

logger = logging.getLogger(__name__)

INTERCEPT_CONVENTIONS = ("total", "total_squared")
# Curvatures below this are rounding noise of a flat fit.
MINIMUM_ALPHA = 1e-12


@dataclass(frozen=True)
class NormalizedBetti:
    """Betti line divided by its exact total."""

    n: Optional[int]
    ranks: Tuple[Tuple[int, int], ...]
    points: Tuple[Tuple[int, float], ...]
    total: int

    def as_dict(self) -> Dict[int, float]:
        return dict(self.points)


@dataclass(frozen=True)
class GaussianFit:
    """Fitted quadratic, the density parameters and the deviations from the data."""

    n: Optional[int]
    alpha: float
    beta: float
    delta: float
    mu: float
    sigma: float
    a_n: float
    log_a_n: float
    fit_points: Tuple[Tuple[int, float], ...]
    intercept_convention: str = "total"
    l2: Optional[float] = None
    l1: Optional[float] = None

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "beta": self.beta,
            "delta": self.delta,
            "mu": self.mu,
            "sigma": self.sigma,
            "a_n": self.a_n,
            "l2": self.l2,
            "l1": self.l1,
            "intercept_convention": self.intercept_convention,
            "fit_points": [[i, value] for i, value in self.fit_points],
        }


def normalize(line: Sequence[Tuple[int, int]], n: Optional[int] = None) -> NormalizedBetti:
    """Divide every rank of the line by the total rank.

    Zero ranks are dropped. The quotients are correctly rounded whatever the
    size of the integers.

    Parameters
    ----------
    line: Sequence[Tuple[int, int]]
        Pairs (i, rank) with exact integer ranks.
    n: Optional[int] = None
        Label of the knot the line belongs to.

    Raises
    ------
    EmptyLineError
        If no rank is positive.
    NegativeRankError
        If a rank is negative.

    >>> normalize([(0, 1)]).points
    ((0, 1.0),)
    """
    for i, rank in line:
        if rank < 0:
            raise NegativeRankError(f"The rank at i={i} is negative: {rank}.")
    ranks = tuple(sorted((i, rank) for i, rank in line if rank > 0))
    if not ranks:
        raise EmptyLineError("The Betti line has no positive rank to normalize.")
    total = sum(rank for _, rank in ranks)
    return NormalizedBetti(
        n=n,
        ranks=ranks,
        points=tuple((i, rank / total) for i, rank in ranks),
        total=total,
    )


def fit_quadratic(nb: NormalizedBetti, intercept_convention: str = "total") -> GaussianFit:
    """Fit a quadratic to the logarithms of the normalized ranks.

    Parameters
    ----------
    nb: NormalizedBetti
        Normalized line with at least three points.
    intercept_convention: str = "total"
        With "total" the fitted values are ln(rank / total). With
        "total_squared" they are ln(rank / total^2), which only moves delta
        by ln(total); the density itself does not change.

    Raises
    ------
    DegenerateFitError
        If fewer than three points are given, the least-squares system is
        singular or the parabola does not open downwards.
    InvalidArgumentError
        If the intercept convention is unknown.
    """
    if intercept_convention not in INTERCEPT_CONVENTIONS:
        raise InvalidArgumentError(
            f"Unknown intercept convention {intercept_convention!r}, "
            f"use one of {', '.join(INTERCEPT_CONVENTIONS)}."
        )
    if len(nb.ranks) < 3:
        raise DegenerateFitError(
            f"A quadratic fit needs at least 3 points, got {len(nb.ranks)}."
        )
    extra = math.log(nb.total) if intercept_convention == "total_squared" else 0.0
    xs = np.array([i for i, _ in nb.ranks], dtype=float)
    ys = np.array([log_ratio(rank, nb.total) - extra for _, rank in nb.ranks])

    center = xs.mean()
    shifted = xs - center
    design = np.column_stack([np.ones_like(shifted), shifted, shifted**2])
    solution, _, rank, _ = np.linalg.lstsq(design, ys, rcond=None)
    if rank < 3:
        raise DegenerateFitError("The least-squares system of the quadratic fit is singular.")
    c0, c1, c2 = (float(value) for value in solution)

    alpha = -c2
    if not alpha > MINIMUM_ALPHA:
        raise DegenerateFitError(
            f"The fitted parabola does not open downwards (alpha={alpha})."
        )
    beta = c1 - 2 * c2 * center
    delta = -(c0 - c1 * center + c2 * center**2)
    log_a_n = -(beta**2 / (4 * alpha) - delta) + 0.5 * math.log(alpha / math.pi)
    mu = beta / (2 * alpha)
    if nb.n is not None and nb.n >= 10 and abs(mu - 0.5) > 1e-3:
        logger.warning("Fitted mean of W(3,%d) is %.6f, away from 1/2", nb.n, mu)
    return GaussianFit(
        n=nb.n,
        alpha=alpha,
        beta=beta,
        delta=delta,
        mu=mu,
        sigma=1 / math.sqrt(2 * alpha),
        a_n=math.exp(log_a_n) if log_a_n < 700 else math.inf,
        log_a_n=log_a_n,
        fit_points=tuple(zip((i for i, _ in nb.ranks), (float(y) for y in ys))),
        intercept_convention=intercept_convention,
    )


def density(fit: GaussianFit, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Return A_n exp(q_n(x)), computed in log space."""
    quadratic = -(fit.alpha * np.square(x) - fit.beta * np.asarray(x) + fit.delta)
    values = np.exp(fit.log_a_n + quadratic)
    return float(values) if np.ndim(values) == 0 else values


def deviations(fit: GaussianFit, nb: NormalizedBetti) -> Tuple[float, float]:
    """Return the L2 and L1 distances between the density and the data.

    Both sums run over the integers i = -2n, ..., 2n+1, the data being zero
    where no rank is stored.

    Raises
    ------
    InvalidArgumentError
        If neither the fit nor the data carries n.
    """
    n = nb.n if nb.n is not None else fit.n
    if n is None:
        raise InvalidArgumentError("The summation range needs the value of n.")
    positions = np.arange(-2 * n, 2 * n + 2)
    data = nb.as_dict()
    observed = np.array([data.get(int(i), 0.0) for i in positions])
    difference = density(fit, positions.astype(float)) - observed
    return float(np.sqrt(np.sum(difference**2))), float(np.sum(np.abs(difference)))


def integral(fit: GaussianFit) -> float:
    """Integrate the density over [mu - 12 sigma, mu + 12 sigma]."""
    value, _ = integrate.quad(
        lambda x: density(fit, x),
        fit.mu - 12 * fit.sigma,
        fit.mu + 12 * fit.sigma,
        epsabs=1e-13,
        epsrel=1e-12,
        limit=200,
    )
    return value


def density_curve(fit: GaussianFit, nb: NormalizedBetti, step: float = 0.1) -> pd.DataFrame:
    """Return the density sampled every ``step`` over [-2n, 2n+1].

    The normalized_rank column holds the data at integer abscissae and is
    empty elsewhere.
    """
    if step <= 0:
        raise InvalidArgumentError(f"The sampling step must be positive, got {step}.")
    n = nb.n if nb.n is not None else fit.n
    if n is None:
        raise InvalidArgumentError("The sampling range needs the value of n.")
    count = int(round((4 * n + 1) / step)) + 1
    xs = np.round(-2 * n + step * np.arange(count), 10)
    data = nb.as_dict()
    observed: List[float] = [
        data.get(int(round(x)), 0.0) if math.isclose(x, round(x), abs_tol=1e-9) else math.nan
        for x in xs
    ]
    return pd.DataFrame(
        {"x": xs, "density": density(fit, xs), "normalized_rank": observed},
        columns=["x", "density", "normalized_rank"],
    )


def fit_line(
    line: Sequence[Tuple[int, int]],
    n: Optional[int] = None,
    intercept_convention: str = "total",
) -> GaussianFit:
    """Normalize a Betti line, fit it and attach the L2 and L1 deviations."""
    nb = normalize(line, n)
    fit = fit_quadratic(nb, intercept_convention)
    if n is None:
        return fit
    l2, l1 = deviations(fit, nb)
    logger.debug("W(3,%d): sigma=%.6g l2=%.6g l1=%.6g", n, fit.sigma, l2, l1)
    return replace(fit, l2=l2, l1=l1)
