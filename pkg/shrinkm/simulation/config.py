from __future__ import annotations

import inspect
import json
from typing import Any, Iterable, Sequence

from typing_extensions import Self

from shrinkm.base import DomainError
from shrinkm.elliptical import EllipticalModel, Family
from shrinkm.estimators import Method
from shrinkm.utils import PathLike

DEFAULT_N_GRID = tuple(range(60, 281, 20))
DEFAULT_ESTIMATORS = tuple(Method)


class ExperimentConfig:
    """Monte-Carlo sweep over sample sizes for an AR(1) elliptical model.

    Attributes:
        p: dimension.
        rho: AR(1) correlation.
        eta: AR(1) scale tr(Λ)/p.
        family: sampling family (mvn or t(ν)).
        n_grid: sample sizes, each > p.
        trials: Monte-Carlo trials per sample size.
        estimators: estimators to run on every trial.
        huber_q: quantile level of the Huber threshold.
        root_seed: seed from which every trial stream is derived.
        workers: worker processes (1 runs serially).
    """

    def __init__(
        self,
        p: int,
        rho: float,
        eta: float,
        family: Family,
        n_grid: Sequence[int],
        trials: int,
        estimators: Sequence[Method],
        huber_q: float,
        root_seed: int,
        workers: int,
    ) -> None:
        if p < 2:
            raise DomainError(f"Experiments need p >= 2: p={p}")
        if not n_grid:
            raise DomainError("Sample-size grid is empty")
        small = [n for n in n_grid if n <= p]
        if small:
            raise DomainError(
                f"Every sample size must exceed p={p}: {small}")
        if trials < 1:
            raise DomainError(f"Need at least one trial: {trials}")
        if not estimators:
            raise DomainError("No estimators configured")
        if not 0 < huber_q < 1:
            raise DomainError(f"Huber quantile must lie in (0, 1): {huber_q}")
        if workers < 1:
            raise DomainError(f"Need at least one worker: {workers}")
        self.p = p
        self.rho = rho
        self.eta = eta
        self.family = family
        self.n_grid = tuple(int(n) for n in n_grid)
        self.trials = trials
        self.estimators = tuple(estimators)
        self.huber_q = huber_q
        self.root_seed = root_seed
        self.workers = workers

    @classmethod
    def of(
        cls,
        p: int = 40,
        rho: float = 0.6,
        eta: float = 10.0,
        family: Family | str = "mvn",
        nu: float | None = None,
        n_grid: Iterable[int] = DEFAULT_N_GRID,
        trials: int = 2000,
        estimators: Iterable[Method | str] = DEFAULT_ESTIMATORS,
        huber_q: float = 0.7,
        seed: int = 0,
        workers: int = 1,
    ) -> Self:
        if not isinstance(family, Family):
            family = Family.of(family, nu)
        return cls(p, rho, eta, family, tuple(n_grid), trials,
                   tuple(Method.of(e) for e in estimators), huber_q, seed,
                   workers)

    @classmethod
    def from_dict(cls, values: dict[str, Any], **overrides: Any) -> Self:
        """Builds a config from file keys; `None` overrides are ignored."""
        merged = {**values}
        merged.update({k: v for k, v in overrides.items() if v is not None})
        known = inspect.signature(cls.of).parameters
        unknown = sorted(set(merged) - set(known))
        if unknown:
            raise DomainError(f"Unknown config keys: {', '.join(unknown)}")
        return cls.of(**merged)

    @classmethod
    def from_file(cls, path: PathLike, **overrides: Any) -> Self:
        with open(path, encoding="utf-8") as f:
            try:
                values = json.load(f)
            except json.JSONDecodeError as e:
                raise DomainError(f"Config {path} is not valid JSON: {e}")
        if not isinstance(values, dict):
            raise DomainError(f"Config {path} must hold a JSON object")
        return cls.from_dict(values, **overrides)

    def model(self) -> EllipticalModel:
        return EllipticalModel.ar1(self.p, self.rho, self.eta, self.family)

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "rho": self.rho,
            "eta": self.eta,
            "family": self.family.kind.value,
            "nu": self.family.dof,
            "n_grid": list(self.n_grid),
            "trials": self.trials,
            "estimators": [m.value for m in self.estimators],
            "huber_q": self.huber_q,
            "seed": self.root_seed,
            "workers": self.workers,
        }

    def __repr__(self) -> str:
        return f"ExperimentConfig({self.to_dict()})"
