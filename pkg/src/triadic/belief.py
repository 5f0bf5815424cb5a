"""Categorical belief state with Dirichlet-likelihood Bayesian updates.

The belief is a probability vector over a finite hypothesis set.  A tool
query produces an observation on the same simplex, drawn from a Dirichlet
whose concentration is boosted on the true hypothesis' coordinate; the
update multiplies the prior by the Dirichlet density of the observation
under each candidate hypothesis and renormalizes.

Sampling and updating intentionally use different concentration scales.
The update likelihood has concentration ``base + sharpness * e_theta``;
observations are drawn with the same mean direction but ``reliability``
times the concentration.  The agent therefore updates conservatively
relative to the true channel: posteriors concentrate a little slower than
an exactly-specified filter, but their argmax tracks the true hypothesis
essentially always, which is what the benchmark environments require.
``reliability=1`` recovers the exactly-specified filter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .defaults import OBS_BASE, OBS_RELIABILITY

ENTROPY_EPS = 1e-12
SIMPLEX_ATOL = 1e-9


def _as_simplex(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError(f"{what} must be a 1-d vector with at least 2 entries")
    if np.any(arr < 0):
        raise ValueError(f"{what} entries must be nonnegative")
    if abs(float(arr.sum()) - 1.0) > SIMPLEX_ATOL:
        raise ValueError(f"{what} must sum to 1 (got {arr.sum():.12f})")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Belief:
    """Probability vector over the hypothesis set."""

    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", _as_simplex(self.probs, "belief"))

    def __len__(self) -> int:
        return self.probs.size

    @property
    def argmax(self) -> int:
        return int(np.argmax(self.probs))

    @staticmethod
    def uniform(n: int) -> "Belief":
        return Belief(np.full(n, 1.0 / n))

    @staticmethod
    def point_mass(index: int, n: int) -> "Belief":
        probs = np.zeros(n)
        probs[index] = 1.0
        return Belief(probs)


@dataclass(frozen=True)
class Observation:
    """One sampled simplex point returned by a tool query."""

    simplex_point: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "simplex_point", _as_simplex(self.simplex_point, "observation")
        )


@dataclass(frozen=True)
class ObservationModel:
    """Per-tool observation channel.

    sharpness : concentration boost on the true hypothesis' coordinate
        (zero means the channel carries no information).
    base : symmetric base concentration of the update likelihood.
    reliability : sampling-side concentration multiplier (>= 1).
    """

    sharpness: float
    base: float = OBS_BASE
    reliability: float = OBS_RELIABILITY

    def __post_init__(self):
        if self.sharpness < 0:
            raise ValueError("sharpness must be nonnegative")
        if self.base < 1:
            raise ValueError("base concentration must be >= 1")
        if self.reliability < 1:
            raise ValueError("reliability must be >= 1")


def entropy(b: Belief, eps: float = ENTROPY_EPS) -> float:
    """Shannon entropy of the belief in nats: -sum p * ln(p + eps)."""
    return float(row_entropies(b.probs[None, :], eps)[0])


def row_entropies(probs: np.ndarray, eps: float = ENTROPY_EPS) -> np.ndarray:
    """Entropy of each row of a (n, k) matrix of probability vectors."""
    if eps > 0:
        return -np.sum(probs * np.log(probs + eps), axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(probs > 0, probs * np.log(probs), 0.0)
    return -terms.sum(axis=1)


def sample_observations(
    model: ObservationModel,
    true_hypotheses: np.ndarray,
    n_hypotheses: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw one observation row per entry of ``true_hypotheses``.

    Rows follow Dir(reliability * (base * 1 + sharpness * e_truth)); the
    gamma construction keeps the draw count identical for every truth index.
    """
    truths = np.asarray(true_hypotheses, dtype=int)
    if truths.ndim != 1:
        raise ValueError("true_hypotheses must be a 1-d index array")
    if np.any(truths < 0) or np.any(truths >= n_hypotheses):
        raise ValueError("true hypothesis index out of range")
    alpha = np.full((truths.size, n_hypotheses), model.reliability * model.base)
    alpha[np.arange(truths.size), truths] += model.reliability * model.sharpness
    draws = rng.gamma(alpha)
    return draws / draws.sum(axis=1, keepdims=True)


def sample_observation(
    model: ObservationModel,
    true_hypothesis: int,
    n_hypotheses: int,
    rng: np.random.Generator,
) -> Observation:
    """Sample a single observation for the given true hypothesis."""
    row = sample_observations(model, np.array([true_hypothesis]), n_hypotheses, rng)[0]
    return Observation(row)


def _update_log_likelihoods(y: np.ndarray, model: ObservationModel) -> np.ndarray:
    """log Dirichlet density of y under concentration base*1 + sharpness*e_j,
    one entry per candidate hypothesis j."""
    k = y.size
    base, c = model.base, model.sharpness
    with np.errstate(divide="ignore"):
        log_y = np.log(y)
    log_norm = (
        gammaln(k * base + c) - (k - 1) * gammaln(base) - gammaln(base + c)
    )
    # 0 * log(0) terms are exponent-zero factors, not indeterminate forms.
    common = 0.0 if base == 1.0 else (base - 1.0) * log_y.sum()
    boost = np.zeros(k) if c == 0 else c * log_y
    return log_norm + common + boost


def bayes_update(b: Belief, obs: Observation, model: ObservationModel) -> Belief:
    """Posterior over hypotheses given one observation; the input is untouched."""
    y = obs.simplex_point
    if y.size != len(b):
        raise ValueError("observation and belief dimensions differ")
    with np.errstate(divide="ignore"):
        log_post = np.log(b.probs) + _update_log_likelihoods(y, model)
    peak = log_post.max()
    if not np.isfinite(peak):
        raise ValueError("degenerate likelihood: all posterior mass vanished")
    post = np.exp(log_post - peak)
    return Belief(post / post.sum())


def posterior_rows(
    b_probs: np.ndarray, observations: np.ndarray, model: ObservationModel
) -> np.ndarray:
    """Vectorized bayes_update: one posterior row per observation row.

    Row-wise identical to bayes_update; shared normalization terms drop out.
    """
    if model.sharpness == 0:
        return np.broadcast_to(b_probs, observations.shape).copy()
    with np.errstate(divide="ignore"):
        log_post = np.log(b_probs)[None, :] + model.sharpness * np.log(observations)
    peak = log_post.max(axis=1, keepdims=True)
    if not np.all(np.isfinite(peak)):
        raise ValueError("degenerate likelihood: all posterior mass vanished")
    post = np.exp(log_post - peak)
    return post / post.sum(axis=1, keepdims=True)
