"""Dataset ingestion and synthetic data generation.

A dataset is n points in R^d with real targets. Points must be pairwise
distinct so that the Gram matrix stays positive definite and the
interpolant is unique; duplicates are rejected at ingestion with the
offending row numbers.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicatePointsError, IngestionError, InputError
from .kernels import KernelSpec, cross_gram

DISTRIBUTION_KINDS = ("uniform-hypercube", "isotropic-gaussian", "gaussian-mixture")
TARGET_RULES = ("random-rkhs-function", "linear", "noisy-sin")


@dataclass(frozen=True)
class SyntheticDistribution:
    """Sampling recipe for synthetic inputs; deterministic given a seed.

    parameters:
      uniform-hypercube:  side (default 1.0), cube [0, side]^d
      isotropic-gaussian: scale (default 1.0)
      gaussian-mixture:   centers (k x d list), scale (default 0.25)
    """

    kind: str = "uniform-hypercube"
    dimension: int = 3
    parameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in DISTRIBUTION_KINDS:
            raise InputError(
                f"unknown distribution kind {self.kind!r}; expected one of {DISTRIBUTION_KINDS}"
            )
        if self.dimension < 1:
            raise InputError("dimension must be >= 1")

    def sample(self, n: int, rng: np.random.Generator | None = None) -> np.ndarray:
        """Draw n points; uses a fresh seeded generator unless one is given."""
        if rng is None:
            rng = np.random.default_rng(self.seed)
        d = self.dimension
        if self.kind == "uniform-hypercube":
            side = float(self.parameters.get("side", 1.0))
            return rng.uniform(0.0, side, size=(n, d))
        if self.kind == "isotropic-gaussian":
            scale = float(self.parameters.get("scale", 1.0))
            return rng.normal(0.0, scale, size=(n, d))
        centers = np.asarray(
            self.parameters.get("centers", [[0.0] * d, [1.0] * d]), dtype=float
        )
        if centers.ndim != 2 or centers.shape[1] != d:
            raise InputError("gaussian-mixture centers must be a k x d array")
        scale = float(self.parameters.get("scale", 0.25))
        which = rng.integers(0, centers.shape[0], size=n)
        return centers[which] + rng.normal(0.0, scale, size=(n, d))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "dimension": self.dimension,
            "parameters": dict(self.parameters),
            "seed": self.seed,
        }

    @staticmethod
    def from_dict(d: dict) -> "SyntheticDistribution":
        return SyntheticDistribution(
            kind=d.get("kind", "uniform-hypercube"),
            dimension=int(d.get("dimension", 3)),
            parameters=dict(d.get("parameters", {})),
            seed=int(d.get("seed", 0)),
        )


@dataclass(frozen=True)
class Dataset:
    """Training sample: points (n x d), targets (n,), provenance tag."""

    points: np.ndarray
    targets: np.ndarray
    provenance: str

    def __post_init__(self):
        self.points.setflags(write=False)
        self.targets.setflags(write=False)
        if self.points.ndim != 2 or self.points.shape[0] < 1 or self.points.shape[1] < 1:
            raise InputError("points must be a nonempty n x d matrix")
        if self.targets.shape != (self.points.shape[0],):
            raise InputError("targets must be a vector of length n")

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]


def _check_distinct(points: np.ndarray) -> None:
    _, inverse, counts = np.unique(
        points, axis=0, return_inverse=True, return_counts=True
    )
    if np.any(counts > 1):
        dup_groups = np.flatnonzero(counts > 1)
        rows = [np.flatnonzero(inverse == g).tolist() for g in dup_groups[:5]]
        raise DuplicatePointsError(f"duplicate points at row groups {rows}")


def load_csv(path: str) -> Dataset:
    """Load a dataset from CSV: header row, feature columns, then a final
    column named "target"."""
    rows: list[list[float]] = []
    bad_rows: list[int] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise IngestionError(f"{path}: empty file") from None
        if len(header) < 2 or header[-1].strip() != "target":
            raise IngestionError(
                f"{path}: header must list feature columns then a final 'target' column"
            )
        width = len(header)
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != width:
                bad_rows.append(lineno)
                continue
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                bad_rows.append(lineno)
    if bad_rows:
        raise IngestionError(f"{path}: malformed rows at lines {bad_rows[:20]}")
    if not rows:
        raise IngestionError(f"{path}: no data rows")
    arr = np.asarray(rows, dtype=float)
    points, targets = arr[:, :-1], arr[:, -1]
    _check_distinct(points)
    return Dataset(points=points, targets=targets, provenance=f"file:{path}")


def generate(
    dist: SyntheticDistribution,
    n: int,
    target_rule: str = "random-rkhs-function",
    kernel: KernelSpec | None = None,
    anchors: int = 32,
    noise: float = 0.1,
) -> Dataset:
    """Generate a synthetic dataset; deterministic given dist.seed.

    random-rkhs-function draws `anchors` anchor points and coefficients and
    sets y_i = sum_a c_a k(x_i, z_a), so the targets are exact values of a
    known function in the kernel's space and interpolation is well posed.
    """
    if target_rule not in TARGET_RULES:
        raise InputError(
            f"unknown target rule {target_rule!r}; expected one of {TARGET_RULES}"
        )
    if n < 1:
        raise InputError("n must be >= 1")
    rng = np.random.default_rng(dist.seed)
    points = dist.sample(n, rng)
    _check_distinct(points)
    if target_rule == "random-rkhs-function":
        spec = kernel if kernel is not None else KernelSpec()
        z = dist.sample(anchors, rng)
        coeff = rng.standard_normal(anchors)
        targets = cross_gram(spec, points, z) @ coeff
    elif target_rule == "linear":
        w = rng.standard_normal(dist.dimension)
        targets = points @ w
    else:  # noisy-sin
        targets = np.sin(2.0 * np.pi * points.mean(axis=1))
        targets = targets + noise * rng.standard_normal(n)
    return Dataset(
        points=points, targets=targets, provenance=f"synthetic:{dist.kind}:seed={dist.seed}"
    )
