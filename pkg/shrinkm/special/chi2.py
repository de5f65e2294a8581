from __future__ import annotations

import math
from statistics import NormalDist
from typing import NamedTuple
from warnings import warn

from typing_extensions import Self

from shrinkm.base import DomainError

from .gamma import reg_lower_gamma, reg_upper_gamma

_PROB_TOL = 1e-13
_MAX_STEPS = 200


class ChiSquared(NamedTuple):
    """Chi-squared distribution with `dof` degrees of freedom."""

    dof: int

    @classmethod
    def of(cls, dof: int) -> Self:
        if (isinstance(dof, bool) or not math.isfinite(dof) or
                int(dof) != dof or dof < 1):
            raise DomainError(
                f"Chi-squared dof must be a positive integer: {dof}")
        return cls(int(dof))

    def _check_x(self, x: float) -> None:
        if not x >= 0:
            raise DomainError(f"Chi-squared argument must be >= 0: {x}")

    def cdf(self, x: float) -> float:
        self._check_x(x)
        return reg_lower_gamma(self.dof / 2, x / 2)

    def sf(self, x: float) -> float:
        self._check_x(x)
        return reg_upper_gamma(self.dof / 2, x / 2)

    def pdf(self, x: float) -> float:
        self._check_x(x)
        a = self.dof / 2
        if x == 0:
            return math.inf if a < 1 else (0.5 if a == 1 else 0.0)
        return math.exp((a - 1) * math.log(x) - x / 2 - a * math.log(2) -
                        math.lgamma(a))

    def quantile(self, q: float) -> float:
        """Inverse CDF at probability `q`.

        Safeguarded Newton iteration from the Wilson–Hilferty guess; any
        step leaving the current bracket is replaced by bisection.

        Raises:
            DomainError: If q is not in (0, 1).
        """
        if not 0 < q < 1:
            raise DomainError(f"Quantile level must lie in (0, 1): {q}")
        k = self.dof
        lo, hi = 0.0, k + 20 * math.sqrt(2 * k)
        while self.cdf(hi) < q:
            lo, hi = hi, 2 * hi

        h = 2 / (9 * k)
        z = NormalDist().inv_cdf(q)
        x = k * (1 - h + z * math.sqrt(h))**3
        if not lo < x < hi:
            x = 0.5 * (lo + hi)

        for _ in range(_MAX_STEPS):
            f = self.cdf(x) - q
            if abs(f) <= _PROB_TOL:
                return x
            if f < 0:
                lo = x
            else:
                hi = x
            if hi - lo <= 4 * math.ulp(hi):
                return x
            density = self.pdf(x)
            step = x - f / density if 0 < density < math.inf else math.nan
            x = step if lo < step < hi else 0.5 * (lo + hi)
        warn(f"Chi-squared quantile did not converge: dof={k}, q={q}")
        return x


def chi2_cdf(dof: int, x: float) -> float:
    return ChiSquared.of(dof).cdf(x)


def chi2_quantile(dof: int, q: float) -> float:
    return ChiSquared.of(dof).quantile(q)
