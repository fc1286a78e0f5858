"""CHSH/Bell parameter: operator identity, singlet values, angle scans.

The Bell combination used everywhere in this module is

    S = E(alpha, beta) + E(alpha', beta) + E(alpha, beta') - E(alpha', beta')

(the minus sign on the doubly-primed term), whose squared operator obeys
S^2 = 4*I - [A, A'] (x) [B, B'] identically.  On the singlet the spin
correlation is E(a, b) = -cos(a - b); S reaches +-2*sqrt(2) at e.g.
(0, pi/2, pi/4, -pi/4) for spin settings and (0, pi/4, -pi/8, pi/8) for
photon settings.
"""

from dataclasses import dataclass

import numpy as np

from .operators import (
    MeasurementOp,
    _require_finite,
    expectation,
    commutator,
    ket,
    pauli,
    photon_op,
    spin_op,
    tensor,
)

KINDS = ("spin_half", "photon")

TSIRELSON = 2.0 * np.sqrt(2.0)


@dataclass(frozen=True)
class ChshSettings:
    """Four analyzer angles (radians) plus the measurement convention."""

    alpha: float
    alpha_prime: float
    beta: float
    beta_prime: float
    kind: str = "spin_half"

    def __post_init__(self):
        for name in ("alpha", "alpha_prime", "beta", "beta_prime"):
            _require_finite(name, getattr(self, name))
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")

    @property
    def angles(self):
        return (self.alpha, self.alpha_prime, self.beta, self.beta_prime)


@dataclass(frozen=True)
class BellValue:
    """A Bell parameter S together with the settings that produced it."""

    s: float
    settings: ChshSettings


def party_op(angle: float, kind: str) -> MeasurementOp:
    """Single-party measurement operator for the given convention."""
    if kind == "spin_half":
        return spin_op(angle)
    if kind == "photon":
        return photon_op(angle)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def singlet() -> np.ndarray:
    """(|+-> - |-+>)/sqrt(2); spin correlation -cos(a - b)."""
    return ket([0.0, 1.0, -1.0, 0.0])


def photon_pair_state() -> np.ndarray:
    """(|xx> - |yy>)/sqrt(2); photon correlation +cos 2(t1 + t2).

    This is the polarization-entangled analog of the singlet for the
    doubled-angle analyzer convention: its photon_op correlations
    coincide with the coincidence-normalized correlation of the
    equal-split two-photon state in the Fock module.
    """
    return ket([1.0, 0.0, 0.0, -1.0])


def _check_state(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    if psi.size != 4:
        raise ValueError(f"need a two-qubit ket (dim 4), got dim {psi.size}")
    if abs(np.linalg.norm(psi) - 1.0) >= 1e-10:
        raise ValueError("state is not normalized to 1e-10")
    return psi


def correlation(psi, a: float, b: float, kind: str = "spin_half") -> float:
    """E(a, b) = <psi| Op(a) (x) Op(b) |psi> for the given convention."""
    psi = _check_state(psi)
    val = expectation(psi, tensor(party_op(a, kind), party_op(b, kind)))
    return val.real


def bell_operator(settings: ChshSettings) -> np.ndarray:
    """A(x)B + A'(x)B + A(x)B' - A'(x)B' as a 4x4 Hermitian matrix."""
    a = party_op(settings.alpha, settings.kind)
    ap = party_op(settings.alpha_prime, settings.kind)
    b = party_op(settings.beta, settings.kind)
    bp = party_op(settings.beta_prime, settings.kind)
    return tensor(a, b) + tensor(ap, b) + tensor(a, bp) - tensor(ap, bp)


def identity_residual(settings: ChshSettings) -> float:
    """Max-norm of S^2 - (4I - [A,A'] (x) [B,B']); exactly zero in theory."""
    a = party_op(settings.alpha, settings.kind).matrix
    ap = party_op(settings.alpha_prime, settings.kind).matrix
    b = party_op(settings.beta, settings.kind).matrix
    bp = party_op(settings.beta_prime, settings.kind).matrix
    s = bell_operator(settings)
    rhs = 4.0 * np.eye(4) - tensor(commutator(a, ap), commutator(b, bp))
    return float(np.max(np.abs(s @ s - rhs)))


def chsh_value(psi, settings: ChshSettings) -> BellValue:
    """S as the sum of four correlations; equals <psi|bell_operator|psi>."""
    k = settings.kind
    s = (
        correlation(psi, settings.alpha, settings.beta, k)
        + correlation(psi, settings.alpha_prime, settings.beta, k)
        + correlation(psi, settings.alpha, settings.beta_prime, k)
        - correlation(psi, settings.alpha_prime, settings.beta_prime, k)
    )
    return BellValue(s=s, settings=settings)


# axis pairs whose span contains every measurement direction of each kind;
# E(a, b) = u(a) . C u(b) with u the direction cosines on those axes
_AXES = {
    "spin_half": (("z", "y"), 1.0),
    "photon": (("z", "x"), 2.0),
}


def _correlation_matrix(psi, kind):
    (ax0, ax1), freq = _AXES[kind]
    c = np.empty((2, 2))
    for i, pa in enumerate((ax0, ax1)):
        for j, pb in enumerate((ax0, ax1)):
            c[i, j] = expectation(psi, tensor(pauli(pa), pauli(pb))).real
    return c, freq


def tsirelson_scan(kind: str = "spin_half", grid_step: float = np.pi / 180.0) -> BellValue:
    """Exhaustive |S| maximization over a 4-angle grid of spacing grid_step.

    The grid is all multiples of grid_step in [0, 2*pi); requires
    0 < grid_step <= pi/4.  The scan maximizes |chsh_value| on the singlet
    (spin) or the photon pair state (photon).  Values within 1e-12 of the
    maximum are treated as ties and resolved toward the lexicographically
    smallest (alpha, alpha_prime, beta, beta_prime) tuple, so the result
    is independent of evaluation order.
    """
    _require_finite("grid_step", grid_step)
    grid_step = float(grid_step)
    if not (0.0 < grid_step <= np.pi / 4.0):
        raise ValueError(f"grid_step must be in (0, pi/4], got {grid_step!r}")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")

    psi = singlet() if kind == "spin_half" else photon_pair_state()
    c, freq = _correlation_matrix(psi, kind)

    angles = np.arange(0.0, 2.0 * np.pi, grid_step)
    n = angles.size
    u = np.vstack([np.cos(freq * angles), np.sin(freq * angles)])
    e = u.T @ c @ u  # e[i, j] == correlation(psi, angles[i], angles[j], kind)

    # For fixed (alpha, alpha'), S(beta, beta') = f(beta) + g(beta') with
    # f = E(alpha, .) + E(alpha', .) and g = E(alpha, .) - E(alpha', .),
    # so the inner maximization separates.
    fmax = np.empty((n, n))
    fmin = np.empty((n, n))
    gmax = np.empty((n, n))
    gmin = np.empty((n, n))
    afmax = np.empty((n, n), dtype=np.intp)
    afmin = np.empty((n, n), dtype=np.intp)
    agmax = np.empty((n, n), dtype=np.intp)
    agmin = np.empty((n, n), dtype=np.intp)
    for ia in range(n):
        f = e[ia][None, :] + e  # rows: alpha' index, cols: beta
        g = e[ia][None, :] - e
        fmax[ia] = f.max(axis=1)
        fmin[ia] = f.min(axis=1)
        gmax[ia] = g.max(axis=1)
        gmin[ia] = g.min(axis=1)
        afmax[ia] = f.argmax(axis=1)  # first occurrence = smallest beta
        afmin[ia] = f.argmin(axis=1)
        agmax[ia] = g.argmax(axis=1)
        agmin[ia] = g.argmin(axis=1)

    s_hi = fmax + gmax  # largest S per (alpha, alpha')
    s_lo = fmin + gmin  # smallest S per (alpha, alpha')
    best = max(float(s_hi.max()), float(-s_lo.min()))
    tol = 1e-12 * max(1.0, best)

    candidates = []
    for ia, iap in np.argwhere(s_hi >= best - tol):
        candidates.append((ia, iap, afmax[ia, iap], agmax[ia, iap]))
    for ia, iap in np.argwhere(-s_lo >= best - tol):
        candidates.append((ia, iap, afmin[ia, iap], agmin[ia, iap]))
    ia, iap, ib, ibp = min(candidates)

    settings = ChshSettings(
        alpha=float(angles[ia]),
        alpha_prime=float(angles[iap]),
        beta=float(angles[ib]),
        beta_prime=float(angles[ibp]),
        kind=kind,
    )
    s = e[ia, ib] + e[iap, ib] + e[ia, ibp] - e[iap, ibp]
    return BellValue(s=float(s), settings=settings)
