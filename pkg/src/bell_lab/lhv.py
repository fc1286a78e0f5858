"""Local hidden-variable baselines: exact enumeration and Monte Carlo.

Deterministic strategies assign simultaneous +-1 values to every setting,
so the CHSH combination a*b + a'*b + a*b' - a'*b' is +-2 for each hidden
value and no average can exceed 2; the Mermin analog Im prod_j (a_j + i a_j')
is similarly capped (2 for n = 3).  Both maxima are computed by exhaustive
enumeration in exact integer arithmetic.

The stochastic side is a seeded Monte Carlo over response-function models;
the stock sign model reproduces the sawtooth correlation
E(a, b) = -1 + 2*d/pi (d = angular distance between the settings folded
to [0, pi]) whose CHSH value at (0, pi/2, pi/4, -pi/4) is exactly -2.
"""

from dataclasses import dataclass
from itertools import product
from typing import Callable

import numpy as np

from .chsh import ChshSettings
from .errors import NumericalCheckError

# Fixed, documented generator family: numpy's PCG64 behind Generator.
# Recorded in CLI metadata so seeded runs name their algorithm.
RNG_ALGORITHM = "pcg64"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class HiddenVariableModel:
    """Locality-by-construction response model.

    ``sample(rng, n)`` draws n hidden values; each response maps
    (setting, lambda array) -> +-1 array and may depend only on its own
    party's setting and lambda.
    """

    name: str
    sample: Callable[[np.random.Generator, int], np.ndarray]
    alice_response: Callable[[float, np.ndarray], np.ndarray]
    bob_response: Callable[[float, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class ChshEstimate:
    estimate: float
    stderr: float
    samples: int
    seed: int


def _pm_sign(x) -> np.ndarray:
    # sign with the 0 -> +1 convention so responses are always +-1
    return np.where(np.asarray(x) >= 0.0, 1, -1)


def sign_model() -> HiddenVariableModel:
    """lambda uniform on the circle; response sign(cos(setting - lambda)).

    Bob's response carries an extra minus sign so the model mimics
    anticorrelated pairs: E(a, a) = -1 exactly.
    """
    return HiddenVariableModel(
        name="sign",
        sample=lambda rng, n: rng.uniform(0.0, 2.0 * np.pi, size=n),
        alice_response=lambda angle, lam: _pm_sign(np.cos(angle - lam)),
        bob_response=lambda angle, lam: -_pm_sign(np.cos(angle - lam)),
    )


def sawtooth_correlation(a: float, b: float) -> float:
    """Analytic E(a, b) of the sign model: -1 + 2*d/pi, d folded to [0, pi]."""
    d = abs(a - b) % (2.0 * np.pi)
    d = min(d, 2.0 * np.pi - d)
    return -1.0 + 2.0 * d / np.pi


def chsh_deterministic_max() -> int:
    """Max of ab + a'b + ab' - a'b' over all 16 strategies; exactly 2."""
    return max(
        a * b + ap * b + a * bp - ap * bp
        for a, ap, b, bp in product((-1, 1), repeat=4)
    )


def mermin_deterministic_max(n: int) -> int:
    """Max of Im prod_j (a_j + i a_j') over all 2^(2n) strategies, 1 <= n <= 12.

    Enumerates in exact integer arithmetic: the running product is a
    Gaussian integer (re, im) updated per particle, vectorized over
    chunks of the assignment index space.
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= 12:
        raise ValueError(f"n must be an integer in [1, 12], got {n!r}")
    n = int(n)
    total = 1 << (2 * n)
    chunk = min(total, 1 << 20)
    best = None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        re = np.ones_like(idx)
        im = np.zeros_like(idx)
        for j in range(n):
            # bits 2j / 2j+1 of the index encode (a_j, a_j') in {-1, +1}
            a = 2 * ((idx >> (2 * j)) & 1) - 1
            ap = 2 * ((idx >> (2 * j + 1)) & 1) - 1
            re, im = re * a - im * ap, re * ap + im * a
        m = int(im.max())
        best = m if best is None else max(best, m)
    return best


def simulate_chsh_stats(
    model: HiddenVariableModel, settings: ChshSettings, samples: int, seed: int
) -> ChshEstimate:
    """Monte Carlo CHSH estimate with standard error; reproducible per seed.

    Every hidden value is used to evaluate all four correlations at once
    (the simultaneous-values assumption that defines this model class),
    so the per-sample combination is +-2 and is checked to be.
    """
    if not isinstance(samples, (int, np.integer)) or samples < 1:
        raise ValueError(f"samples must be a positive integer, got {samples!r}")
    rng = make_rng(seed)
    lam = model.sample(rng, int(samples))
    a = model.alice_response(settings.alpha, lam)
    ap = model.alice_response(settings.alpha_prime, lam)
    b = model.bob_response(settings.beta, lam)
    bp = model.bob_response(settings.beta_prime, lam)
    per_lambda = a * b + ap * b + a * bp - ap * bp
    if not np.all(np.abs(per_lambda) == 2):
        raise NumericalCheckError("per-lambda CHSH combination left {-2, +2}")
    est = float(np.mean(per_lambda))
    if samples > 1:
        stderr = float(np.std(per_lambda, ddof=1) / np.sqrt(samples))
    else:
        stderr = 0.0
    return ChshEstimate(estimate=est, stderr=stderr, samples=int(samples), seed=int(seed))


def simulate_chsh(
    model: HiddenVariableModel, settings: ChshSettings, samples: int, seed: int
) -> float:
    """The Monte Carlo S estimate alone; see simulate_chsh_stats."""
    return simulate_chsh_stats(model, settings, samples, seed).estimate
