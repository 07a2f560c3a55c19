"""Dataclass configs and frozen experiment defaults.

Everything tunable lives here so runs are reproducible from a config hash.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class SimConfig:
    """Kinematic bicycle parameters. Speed is constant within an episode."""

    speed: float = 8.0          # m/s
    wheelbase: float = 2.5      # m
    dt: float = 0.05            # s
    theta_max_deg: float = 50.0 # physical wheel angle at |steer| = 1

    @property
    def theta_max_rad(self) -> float:
        return math.radians(self.theta_max_deg)


@dataclass(frozen=True)
class CarGeometry:
    """Wheel-contact rectangle; termination checks its four corners."""

    half_width: float = 0.9   # m
    half_length: float = 2.1  # m


# Lookahead distances (m) for the curvature preview in the observation.
LOOKAHEADS: tuple[float, ...] = (2.0, 5.0, 10.0, 20.0, 40.0)
OBS_DIM = len(LOOKAHEADS) + 2


@dataclass(frozen=True)
class ControlGains:
    """Centerline tracking law: steer = -k_p*err - k_d*heading_err + k_ff*kappa.

    k_ff ~ wheelbase / theta_max_rad makes the feedforward term the exact
    steady-state steer for a constant-curvature bend.
    """

    k_p: float = 0.4
    k_d: float = 1.2
    k_ff: float = 2.87


@dataclass(frozen=True)
class SwerveParams:
    """Sine-offset target on one side of the road; stays on-road by construction."""

    mid: float = 1.2     # m, mean offset from centerline
    amp: float = 0.8     # m, oscillation amplitude
    period: float = 8.0  # s


@dataclass(frozen=True)
class LaneChangeParams:
    """Cycle: ramp out, hold at side, ramp back, hold at center."""

    side_offset: float = 1.8  # m
    ramp_time: float = 2.0    # s
    hold_time: float = 4.0    # s

    @property
    def cycle_time(self) -> float:
        return 2.0 * (self.ramp_time + self.hold_time)


@dataclass(frozen=True)
class FeedbackParams:
    """Sign-rule feedback conversion; epsilon defaults to 5 degrees of wheel."""

    theta_max_deg: float = 50.0
    epsilon: float = 5.0 / 50.0


@dataclass(frozen=True)
class LossConfig:
    kind: str = "scalar"  # scalar | exponential | fnet | inverse | absolute | mse-positive
    threshold: bool = False
    alpha: float = 1.0
    delta_min: float = 1e-2  # clamp for the distance singularity at D=0
    d_max: float = 2.0       # max possible |theta - theta_hat| given the angle range
    continuity_lambda: float = 0.0

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError("alpha must be >= 0")
        if not (0 < self.delta_min < 1 < self.d_max):
            raise ValueError("need 0 < delta_min < 1 < d_max")
        if self.continuity_lambda < 0:
            raise ValueError("continuity_lambda must be >= 0")


@dataclass(frozen=True)
class TrainConfig:
    batch_size: int = 100
    epochs: int = 5
    learning_rate: float = 1e-6
    seed: int = 0
    loss: LossConfig = field(default_factory=LossConfig)
    shuffle: bool = True

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")


@dataclass(frozen=True)
class EvalConfig:
    trials: int = 8
    max_time: float = 180.0   # s, censoring cap per trial
    offset_jitter: float = 1.0    # m, uniform start-pose perturbation
    heading_jitter: float = 0.1   # rad

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


# Network head sizes (hidden layers; a tanh scalar head follows).
HIDDEN_SIZES: tuple[int, ...] = (100, 300, 20)

# Discrete action grid for feedback-net inference: 41 points, step 0.05.
ACTION_GRID: tuple[float, ...] = tuple(round(-1.0 + 0.05 * i, 2) for i in range(41))

# Collection budget: 20 min optimal plus 10 min for each suboptimal regime, 2 Hz.
SAMPLE_RATE_HZ = 2.0
OPTIMAL_MINUTES = 20.0
SUBOPTIMAL_MINUTES = 10.0

# Learning-rate sweep grid (default rate first).
SWEEP_LRS: tuple[float, ...] = (1e-6, 5e-6, 1e-5, 1.5e-5, 2e-5)

# Tuned learning rate for the desk-scale comparisons (frozen after sweeping
# on the default data budget; see scripts/run_lr_sweep.py).
TUNED_LR = 0.05

# Frozen seed matrix for the comparison experiments.
DATA_SEED = 20240
SPLIT_SEED = 7
RUN_SEEDS: tuple[int, ...] = (101, 202, 303)
EVAL_SEED = 55

# Published benchmark numbers from the original large-scale study (different
# simulator, sensor stack, and network; context only, never asserted).
REFERENCE_RESULTS = {
    "scalar_vs_cloning_runs3": {"scalar": 113.42, "behavioral_cloning": 72.33},
    "default_lr_single_run": {"scalar": 6.625, "exponential": 4.0, "fnet": 1.0},
    "best_lr": {"scalar": 1e-5, "behavioral_cloning": 1e-5},
    "best_lr_means": {"scalar": 128.0, "behavioral_cloning": 106.75},
}


def config_hash(*objs) -> str:
    """Stable short hash over dataclasses / plain values, for run directories."""

    def enc(o):
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return {"__class__": type(o).__name__, **dataclasses.asdict(o)}
        raise TypeError(f"unhashable config value: {o!r}")

    blob = json.dumps(objs, default=enc, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:12]
