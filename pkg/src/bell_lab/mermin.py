"""GHZ states and the n-particle Mermin parameter.

F_n = (1/2i) [ prod_j (A_j + i A_j') - prod_j (A_j - i A_j') ]

with per-particle two-outcome operators in the transverse (x-y) plane,
A(a) = cos(a)*sigma_x + sin(a)*sigma_y.  On the GHZ state
(|+...+> + i|-...->)/sqrt(2) the shared settings (a, a') = (0, pi/2)
attain the quantum bound |<F_n>| = 2^(n-1); any single plane containing
the z axis caps the GHZ expectation at the classical value instead, which
is why the transverse plane is the right home for these operators.

For the n = 3 operator the exact identity

    F^2 = 4I - [A1,A1'][A2,A2'] - [A2,A2'][A3,A3'] - [A3,A3'][A1,A1']

holds with each commutator acting on its own tensor slot.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .operators import (
    MeasurementOp,
    _SIGMA,
    _require_finite,
    commutator,
    dagger,
    expectation,
    ket,
)


@dataclass(frozen=True)
class GhzState:
    n: int
    ket: np.ndarray


def ghz(n: int) -> GhzState:
    """(|+...+> + i|-...->)/sqrt(2) on n qubits, 2 <= n <= 10."""
    if not isinstance(n, (int, np.integer)) or not 2 <= n <= 10:
        raise ValueError(f"n must be an integer in [2, 10], got {n!r}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    amps[-1] = 1.0j
    return GhzState(n=int(n), ket=ket(amps))


@dataclass(frozen=True)
class MerminSettings:
    """Per-particle angle pairs (a_j, a_j'), radians, transverse plane."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((float(a), float(ap)) for a, ap in self.pairs)
        if len(pairs) < 1:
            raise ValueError("need at least one angle pair")
        for a, ap in pairs:
            _require_finite("angle", a)
            _require_finite("angle", ap)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_shared(cls, n: int, a: float, a_prime: float) -> "MerminSettings":
        """The same (a, a') pair applied to all n particles."""
        return cls(pairs=((a, a_prime),) * n)

    @property
    def n(self) -> int:
        return len(self.pairs)


def transverse_spin_op(a: float) -> MeasurementOp:
    """cos(a)*sigma_x + sin(a)*sigma_y."""
    _require_finite("a", a)
    m = np.cos(a) * _SIGMA["x"] + np.sin(a) * _SIGMA["y"]
    return MeasurementOp(m, label=f"At({a:g})")


def _chain_kron(factors):
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def _slot_product(n, placed):
    """Tensor product with placed[j] on slot j (0-based) and identity elsewhere."""
    eye = np.eye(2, dtype=complex)
    return _chain_kron([placed.get(j, eye) for j in range(n)])


def mermin_operator(settings: MerminSettings) -> np.ndarray:
    """The 2^n x 2^n Hermitian Mermin operator for the given settings."""
    plus_factors = []
    for a, ap in settings.pairs:
        plus_factors.append(transverse_spin_op(a).matrix + 1.0j * transverse_spin_op(ap).matrix)
    m_plus = _chain_kron(plus_factors)
    return (m_plus - dagger(m_plus)) / 2.0j


def mermin_value(state: GhzState, settings: MerminSettings) -> float:
    """<F_n> on the given state; bounded by 2^(n-1) in magnitude."""
    if settings.n != state.n:
        raise ValueError(
            f"settings are for {settings.n} particles but the state has {state.n}"
        )
    return expectation(state.ket, mermin_operator(settings)).real


def mermin_square_residual(settings: MerminSettings) -> float:
    """Max-norm residual of the three-particle F^2 commutator identity."""
    if settings.n != 3:
        raise ValueError(f"the squared identity is for n = 3, got n = {settings.n}")
    f = mermin_operator(settings)
    comms = [
        commutator(transverse_spin_op(a).matrix, transverse_spin_op(ap).matrix)
        for a, ap in settings.pairs
    ]
    rhs = 4.0 * np.eye(8, dtype=complex)
    for j, k in ((0, 1), (1, 2), (2, 0)):
        rhs -= _slot_product(3, {j: comms[j]}) @ _slot_product(3, {k: comms[k]})
    return float(np.max(np.abs(f @ f - rhs)))


def ghz_expectation_shared(n: int, a, a_prime):
    """<F_n> on ghz(n) for shared settings, by the closed corner formula.

    Follows from the corner matrix elements of prod_j (A_j + i A_j') on the
    GHZ state:

        <F_n> = sum over odd k of (-1)^((k-1)/2) * C(n, k)
                * sin(k*a' + (n-k)*a)

    Broadcasts over numpy arrays of angles.
    """
    a = np.asarray(a, dtype=float)
    ap = np.asarray(a_prime, dtype=float)
    total = np.zeros(np.broadcast(a, ap).shape)
    for k in range(1, n + 1, 2):
        sign = -1.0 if (k - 1) // 2 % 2 else 1.0
        total = total + sign * comb(n, k) * np.sin(k * ap + (n - k) * a)
    return total if total.shape else float(total)


def mermin_shared_scan(n: int, grid_step: float = np.pi / 180.0):
    """Maximize |<F_n>| on ghz(n) over a shared (a, a') grid.

    The grid is all multiples of grid_step in [0, 2*pi); ties within 1e-12
    of the maximum resolve to the lexicographically smallest (a, a').
    Returns (value, settings) with value signed at the maximizer.
    """
    if not isinstance(n, (int, np.integer)) or not 2 <= n <= 10:
        raise ValueError(f"n must be an integer in [2, 10], got {n!r}")
    _require_finite("grid_step", grid_step)
    grid_step = float(grid_step)
    if not (0.0 < grid_step <= np.pi / 4.0):
        raise ValueError(f"grid_step must be in (0, pi/4], got {grid_step!r}")
    angles = np.arange(0.0, 2.0 * np.pi, grid_step)
    vals = ghz_expectation_shared(n, angles[:, None], angles[None, :])
    best = float(np.abs(vals).max())
    tol = 1e-12 * max(1.0, best)
    ia, iap = min((int(i), int(j)) for i, j in np.argwhere(np.abs(vals) >= best - tol))
    settings = MerminSettings.from_shared(n, float(angles[ia]), float(angles[iap]))
    return float(vals[ia, iap]), settings
