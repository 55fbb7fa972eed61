"""Threshold levels and the metrics they induce.

The construction has three stages.  First a descending sweep harvests a
finite sequence of thresholds from the kernel: each threshold is the
smallest affinity reachable in three hops inside the current level set,
so the level sets satisfy the nesting

    U(i) o U(i) o U(i)  is contained in  U(i - 1)

where U(i) = {(x, y) : K(x, y) >= lambda(i)} and lambda runs ascending.
Second, the level index of a pair converts to a dyadic quasi-metric
delta = 2 ** -index.  Third, chaining through intermediate vertices
tightens delta into a genuine pseudo-metric d that stays within constant
factors of delta and sandwiches the level sets between its dyadic balls.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InvalidParameterError,
    MatrixFormatError,
    NonMetrizableError,
    NumericError,
)
from .kernels import AffinityMatrix, validate_kernel
from .relations import BinaryRelation, level_set, power3

INVERSE_VARIANTS = ("script", "upper", "lower")

# Equivalence band for d against delta: delta / 4 < d <= 2 * delta.
EQUIVALENCE_LOWER = 0.125
EQUIVALENCE_UPPER = 2.0


@dataclass(frozen=True)
class LambdaSequence:
    """Strictly ascending thresholds lambda(0) .. lambda(k).

    lambda0_raw is the seed the sweep started from (the top threshold)
    and iterations counts the cube-and-rethreshold rounds performed.
    """

    values: np.ndarray
    lambda0_raw: float
    iterations: int

    @property
    def k(self) -> int:
        return int(self.values.size) - 1


@dataclass(frozen=True)
class QuasiMetricMatrix:
    """Dyadic quasi-metric 2 ** -index with zero diagonal."""

    n: int
    values: np.ndarray
    variant: str


@dataclass(frozen=True)
class PseudoMetricMatrix:
    """Chain pseudo-metric with the one-step weights it was built from."""

    n: int
    values: np.ndarray
    chain_weights: np.ndarray


@dataclass(frozen=True)
class SandwichReport:
    """Per-level inclusion results for the level sets against dyadic balls.

    For each interior index n the left check is U(n) inside {d < 2**-n};
    right_shift is the largest j - n such that {d < 2**-n} fits inside
    U(j).  tightest_shift is the minimum shift over the levels tested,
    None when the sequence has a single value and nothing is testable.
    """

    indices: tuple
    left_pass: tuple
    right_shift: tuple
    tightest_shift: int | None
    passed: bool


@dataclass(frozen=True)
class EquivalenceReport:
    """Extremes of d / delta over off-diagonal pairs."""

    c_lo: float
    c_hi: float
    pairs: int
    passed: bool


def _freeze(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=np.float64)
    out.setflags(write=False)
    return out


def compute_lambda_sequence(
    kernel: AffinityMatrix,
    diagonal_band: int = 3,
    lambda0_override: float | None = None,
) -> LambdaSequence:
    """Harvest the threshold sequence from a kernel by the descending sweep.

    The seed is the minimum affinity on the central diagonal band (width
    3 or 5).  Each round forms the level set at the current threshold,
    composes it with itself three times, and lowers the threshold to the
    minimum affinity the cube reaches.  The sweep stops when the
    threshold stalls or hits the kernel minimum; the harvested values are
    returned ascending, so values[-1] is the seed and values[0] is the
    kernel minimum.
    """
    report = validate_kernel(kernel)
    bad = [f for f in ("diag_dominant", "tridiagonal_positive") if f in report.failed_flags()]
    if bad:
        raise NonMetrizableError(f"kernel fails required flags: {', '.join(bad)}")
    if diagonal_band not in (3, 5):
        raise InvalidParameterError(f"diagonal_band must be 3 or 5, got {diagonal_band!r}")

    v = kernel.values
    n = kernel.n
    half = (diagonal_band - 1) // 2
    gaps = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    band_min = float(v[gaps <= half].min())
    if lambda0_override is None:
        seed = band_min
    else:
        seed = float(lambda0_override)
        if not (0.0 < seed <= band_min):
            raise InvalidParameterError(
                f"lambda0_override must lie in (0, {band_min!r}], got {lambda0_override!r}"
            )

    kernel_min = float(v.min())
    descending = [seed]
    iterations = 0
    cap = n * n
    while True:
        cube = power3(level_set(kernel, descending[-1], strict=False))
        next_value = float(v[cube.bits].min())
        iterations += 1
        if iterations > cap:
            raise NumericError(f"threshold sweep did not terminate within {cap} rounds")
        if next_value >= descending[-1]:
            break
        descending.append(next_value)
        if next_value <= kernel_min:
            break

    values = np.array(descending[::-1], dtype=np.float64)
    return LambdaSequence(values=_freeze(values), lambda0_raw=seed, iterations=iterations)


def level_relations(kernel: AffinityMatrix, seq: LambdaSequence) -> list[BinaryRelation]:
    """The nested level sets U(0) .. U(k) at the sequence thresholds."""
    return [level_set(kernel, float(t), strict=False) for t in seq.values]


def _inverse_indices(values: np.ndarray, t: np.ndarray, variant: str) -> np.ndarray:
    k = values.size - 1
    if variant == "script":
        return np.searchsorted(values, t, side="right")
    if variant == "upper":
        return np.minimum(np.searchsorted(values, t, side="left"), k)
    if variant == "lower":
        return np.clip(np.searchsorted(values, t, side="left") - 1, 0, max(k - 1, 0))
    raise InvalidParameterError(
        f"variant must be one of {INVERSE_VARIANTS}, got {variant!r}"
    )


def lambda_inverse(t: float, seq: LambdaSequence, variant: str = "script") -> int:
    """Step extension of the inverse threshold map to all t >= 0.

    script counts the thresholds at or below t, ranging 0..k+1.  upper
    is the smallest index whose threshold reaches t, clamped to k.
    lower is the largest index strictly under t, clamped to k-1.
    """
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t!r}")
    idx = _inverse_indices(seq.values, np.asarray([t], dtype=np.float64), variant)
    return int(idx[0])


def delta_matrix(
    kernel: AffinityMatrix, seq: LambdaSequence, variant: str = "script"
) -> QuasiMetricMatrix:
    """Dyadic quasi-metric 2 ** -inverse(K) with the diagonal forced to zero."""
    idx = _inverse_indices(seq.values, kernel.values.ravel(), variant)
    vals = np.power(2.0, -idx.astype(np.float64)).reshape(kernel.values.shape)
    np.fill_diagonal(vals, 0.0)
    return QuasiMetricMatrix(n=kernel.n, values=_freeze(vals), variant=variant)


def chain_metric(kernel: AffinityMatrix, seq: LambdaSequence) -> PseudoMetricMatrix:
    """Shortest-path pseudo-metric over one-step dyadic weights.

    A pair whose deepest containing level set is m gets one-step weight
    2 ** -(m + 1); d is the exact shortest path over those weights.  The
    half step is what makes every level set m sit strictly inside the
    radius 2 ** -m ball of d.  All weights and path sums are dyadic, so
    the relaxation below is exact, not approximate.
    """
    depth = np.searchsorted(seq.values, kernel.values.ravel(), side="right")
    weights = np.power(2.0, -depth.astype(np.float64)).reshape(kernel.values.shape)
    np.fill_diagonal(weights, 0.0)

    dist = weights.copy()
    for mid in range(kernel.n):
        np.minimum(dist, dist[:, mid][:, None] + dist[mid, :][None, :], out=dist)
    return PseudoMetricMatrix(n=kernel.n, values=_freeze(dist), chain_weights=_freeze(weights))


def verify_sandwich(
    kernel: AffinityMatrix, seq: LambdaSequence, metric: PseudoMetricMatrix
) -> SandwichReport:
    """Check the level sets against the dyadic balls of the chain metric.

    Passes when every interior level set U(n) sits inside {d < 2**-n}
    and every such ball sits inside a level set at most one index lower.
    """
    if kernel.n != metric.n:
        raise InvalidParameterError(f"sizes differ: kernel {kernel.n}, metric {metric.n}")
    levels = [rel.bits for rel in level_relations(kernel, seq)]
    d = metric.values
    indices = []
    left_pass = []
    right_shift = []
    for idx in range(1, seq.k + 1):
        ball = d < 2.0 ** -idx
        indices.append(idx)
        left_pass.append(bool((ball | ~levels[idx]).all()))
        best = -idx - 1
        for j in range(seq.k, -1, -1):
            if (levels[j] | ~ball).all():
                best = j
                break
        right_shift.append(best - idx)
    tightest = min(right_shift) if right_shift else None
    passed = all(left_pass) and (tightest is None or tightest >= -1)
    return SandwichReport(
        indices=tuple(indices),
        left_pass=tuple(left_pass),
        right_shift=tuple(right_shift),
        tightest_shift=tightest,
        passed=passed,
    )


def verify_equivalence(
    delta: QuasiMetricMatrix, metric: PseudoMetricMatrix
) -> EquivalenceReport:
    """Extremes of d / delta off the diagonal, tested against the dyadic band."""
    if delta.n != metric.n:
        raise InvalidParameterError(f"sizes differ: delta {delta.n}, metric {metric.n}")
    mask = metric.values > 0.0
    if not mask.any():
        return EquivalenceReport(c_lo=float("nan"), c_hi=float("nan"), pairs=0, passed=True)
    ratios = metric.values[mask] / delta.values[mask]
    c_lo = float(ratios.min())
    c_hi = float(ratios.max())
    passed = c_lo >= EQUIVALENCE_LOWER and c_hi <= EQUIVALENCE_UPPER
    return EquivalenceReport(c_lo=c_lo, c_hi=c_hi, pairs=int(mask.sum()), passed=passed)


def quasi_triangle_constant(delta: QuasiMetricMatrix) -> float:
    """Smallest C with delta(x, z) <= C * (delta(x, y) + delta(y, z)) everywhere.

    Needs at least 3 vertices; the sweep runs one middle vertex at a
    time so memory stays quadratic.
    """
    if delta.n < 3:
        raise DomainError(f"need at least 3 vertices, got {delta.n}")
    vals = delta.values
    worst = 0.0
    mask = ~np.eye(delta.n, dtype=bool)
    for mid in range(delta.n):
        denom = vals[:, mid][:, None] + vals[mid, :][None, :]
        keep = mask & (np.arange(delta.n)[:, None] != mid) & (np.arange(delta.n)[None, :] != mid)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(keep & (denom > 0), vals / np.where(denom > 0, denom, 1.0), 0.0)
        worst = max(worst, float(ratio.max()))
    return worst


def lambda_to_json(seq: LambdaSequence) -> str:
    payload = {"values": [float(x) for x in seq.values], "iterations": seq.iterations}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def lambda_from_json(text: str) -> LambdaSequence:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid threshold JSON: {exc}") from exc
    if not isinstance(payload, dict) or "values" not in payload:
        raise MatrixFormatError("threshold JSON must be an object with 'values'")
    values = np.array(payload["values"], dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise MatrixFormatError("threshold values must be a non-empty flat list")
    if not (np.diff(values) > 0).all():
        raise MatrixFormatError("threshold values must be strictly ascending")
    if values[0] <= 0:
        raise MatrixFormatError("threshold values must be positive")
    iterations = int(payload.get("iterations", 0))
    return LambdaSequence(
        values=_freeze(values), lambda0_raw=float(values[-1]), iterations=iterations
    )
