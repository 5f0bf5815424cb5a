"""Shipped calibration constants.

Values here are produced by :mod:`triadic.calibration` (run ``triadic
calibrate`` to regenerate them from scratch) and frozen so that the named
benchmark environments work out of the box.  Tool latency and load profiles
are benchmark definitions; expected gains for the security-triage tools are
benchmark definitions too, while the diagnosis-grid gains, the observation
reliability and the agent stopping floors are calibration constants chosen
to land the reference tables, not ground truth.
"""

from __future__ import annotations

# Observation channel shape shared by all environments.  `OBS_BASE` is the
# symmetric Dirichlet base concentration of the update likelihood;
# `OBS_RELIABILITY` scales the sampling concentration only (larger values
# draw observations closer to the channel mean, keeping the maximum
# coordinate on the true hypothesis while the update likelihood stays
# deliberately conservative).
OBS_BASE = 1.0
OBS_RELIABILITY = 12.0

# Mean one-step entropy reduction from the uniform prior, per tool.
EMDG_GAINS = {
    "Hematology_Lab": 0.42,
    "MRI_Network": 0.80,
}
NSTG_GAINS = {
    "QuickScan": 0.40,
    "FullForensics": 1.30,
}

# Dirichlet concentration boosts realizing the gains above (bisection
# oracle, 20_000 Monte Carlo samples, see calibration.calibrate_sharpness).
EMDG_SHARPNESS = {
    "Hematology_Lab": 1.7774383544921876,
    "MRI_Network": 2.2962185668945313,
}
NSTG_SHARPNESS = {
    "QuickScan": 1.746527709960937,
    "FullForensics": 3.101210723876953,
}

# Greedy-agent stopping floors on the best rollout-estimated information
# gain, bisected per environment against the reference mean query counts
# (2.5444 and 2.495 queries respectively).
REACT_VOI_FLOORS = {
    "emdg": 0.09643,
    "nstg": 0.00797,
    "scaled": 0.09643,
}

# Entropy-threshold baseline level: the triadic controller's mean terminal
# entropy on the diagnosis grid.
ENTROPY_THRESHOLD_DEFAULT = 0.17

# Fixed-budget baseline default: the triadic controller's mean query count.
FIXED_K_DEFAULT = 3

# No-stop ablation halts once belief entropy falls below this floor.
NOSTOP_ENTROPY_FLOOR = 1e-3

# Randomized tool catalogs (action-space scaling): latency choices, gain
# range, and load range.
SCALED_TAU_CHOICES = (3, 5, 8, 10, 15, 20, 30, 45)
SCALED_GAIN_RANGE = (0.2, 1.5)
SCALED_OMEGA_RANGE = (2, 40)
