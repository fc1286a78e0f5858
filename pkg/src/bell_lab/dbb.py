"""De Broglie-Bohm guidance for free Gaussian packets, one and two particles.

Everything is built on the exactly-evolved free Gaussian

    psi(x, t) = (2 pi s^2)^(-1/4) (1 + i tau)^(-1/2)
                * exp( -(x - xc)^2 / (4 s^2 (1 + i tau))
                       + i k (x - x0) - i hbar k^2 (t - t0) / (2 m) )

with tau = hbar (t - t0) / (2 m s^2) and xc = x0 + hbar k (t - t0) / m,
evaluated in log form so that far tails and near-node points stay
well-conditioned.  The guidance velocity is the probability-current form
v = (hbar/m) * Im(grad psi / psi); for the symmetrized two-particle
wavefunctions this makes v1 depend on x2 (and vice versa), which
cross_coupling quantifies as |dv1/dx2|.  Densities below 1e-300 are
treated as nodes and refused rather than extrapolated.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NodeSingularityError
from .operators import _require_finite

FORMS = ("product", "symmetric", "antisymmetric")

# densities below this are nodes for all practical purposes
_LOG_DENSITY_FLOOR = np.log(1e-300)


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.0
    mass: float = 1.0
    gyro: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "mass", "gyro"):
            _require_finite(name, getattr(self, name))
        if self.hbar <= 0.0 or self.mass <= 0.0:
            raise ValueError("hbar and mass must be positive")


@dataclass(frozen=True)
class WavePacket:
    """Initial Gaussian packet.

    width is the initial position standard deviation (|psi|^2 is a
    Gaussian of std ``width`` at ``start_time``); wavenumber is the
    carrier k, so the group velocity is hbar*k/m.
    """

    center: float
    width: float
    wavenumber: float
    start_time: float = 0.0

    def __post_init__(self):
        for name in ("center", "width", "wavenumber", "start_time"):
            _require_finite(name, getattr(self, name))
        if self.width <= 0.0:
            raise ValueError(f"width must be positive, got {self.width!r}")


@dataclass(frozen=True)
class TwoParticleWF:
    """Product or (anti)symmetrized pair of packets; one dimension each."""

    packet_a: WavePacket
    packet_b: WavePacket
    form: str = "product"

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}, got {self.form!r}")


def _check_time(wp: WavePacket, t: float):
    if t < wp.start_time:
        raise ValueError(f"t = {t!r} is before the packet's start_time {wp.start_time!r}")


def _log_psi(wp: WavePacket, c: PhysicalConstants, x, t: float):
    tau = c.hbar * (t - wp.start_time) / (2.0 * c.mass * wp.width**2)
    a = 1.0 + 1.0j * tau
    xc = wp.center + c.hbar * wp.wavenumber * (t - wp.start_time) / c.mass
    return (
        -0.25 * np.log(2.0 * np.pi * wp.width**2)
        - 0.5 * np.log(a)
        - (x - xc) ** 2 / (4.0 * wp.width**2 * a)
        + 1.0j * wp.wavenumber * (x - wp.center)
        - 0.5j * c.hbar * wp.wavenumber**2 * (t - wp.start_time) / c.mass
    )


def _dlog_psi(wp: WavePacket, c: PhysicalConstants, x, t: float):
    tau = c.hbar * (t - wp.start_time) / (2.0 * c.mass * wp.width**2)
    a = 1.0 + 1.0j * tau
    xc = wp.center + c.hbar * wp.wavenumber * (t - wp.start_time) / c.mass
    return -(x - xc) / (2.0 * wp.width**2 * a) + 1.0j * wp.wavenumber


def psi_eval(wp: WavePacket, c: PhysicalConstants, x, t: float):
    """Exact free evolution of the packet; broadcasts over x."""
    _require_finite("t", t)
    _check_time(wp, t)
    return np.exp(_log_psi(wp, c, x, t))


def velocity_1p(wp: WavePacket, c: PhysicalConstants, x: float, t: float) -> float:
    """Guidance velocity (hbar/m) Im(d log psi / dx) for one free packet."""
    _require_finite("x", x)
    _require_finite("t", t)
    _check_time(wp, t)
    if 2.0 * np.real(_log_psi(wp, c, x, t)) < _LOG_DENSITY_FLOOR:
        raise NodeSingularityError(f"density below 1e-300 at x={x!r}, t={t!r}")
    return float(c.hbar / c.mass * np.imag(_dlog_psi(wp, c, x, t)))


def packet_overlap(wp_a: WavePacket, wp_b: WavePacket, c: PhysicalConstants, t: float = None) -> complex:
    """<psi_a(t)|psi_b(t)> by the closed Gaussian integral.

    Free evolution makes this constant in t; the default evaluates at the
    later of the two start times.
    """
    if t is None:
        t = max(wp_a.start_time, wp_b.start_time)
    _require_finite("t", t)
    _check_time(wp_a, t)
    _check_time(wp_b, t)
    coeffs = []
    for wp in (wp_a, wp_b):
        tau = c.hbar * (t - wp.start_time) / (2.0 * c.mass * wp.width**2)
        a = 1.0 + 1.0j * tau
        xc = wp.center + c.hbar * wp.wavenumber * (t - wp.start_time) / c.mass
        qa = -1.0 / (4.0 * wp.width**2 * a)
        qb = xc / (2.0 * wp.width**2 * a) + 1.0j * wp.wavenumber
        qc = (
            -0.25 * np.log(2.0 * np.pi * wp.width**2)
            - 0.5 * np.log(a)
            - xc**2 / (4.0 * wp.width**2 * a)
            - 1.0j * wp.wavenumber * wp.center
            - 0.5j * c.hbar * wp.wavenumber**2 * (t - wp.start_time) / c.mass
        )
        coeffs.append((qa, qb, qc))
    (a1, b1, c1), (a2, b2, c2) = coeffs
    p = np.conj(a1) + a2  # Re(p) < 0 always
    q = np.conj(b1) + b2
    r = np.conj(c1) + c2
    return complex(np.exp(r - q * q / (4.0 * p)) * np.sqrt(np.pi / -p))


def _norm_factor(wf: TwoParticleWF, c: PhysicalConstants) -> float:
    """1/sqrt(2 +- 2|<a|b>|^2) for the symmetrized forms, 1 for product."""
    if wf.form == "product":
        return 1.0
    o2 = abs(packet_overlap(wf.packet_a, wf.packet_b, c)) ** 2
    if wf.form == "symmetric":
        return 1.0 / np.sqrt(2.0 + 2.0 * o2)
    denom = 2.0 - 2.0 * o2
    if denom <= 1e-14:
        raise ValueError("antisymmetric combination of (near-)identical packets vanishes")
    return 1.0 / np.sqrt(denom)


def psi2_eval(wf: TwoParticleWF, c: PhysicalConstants, x1, x2, t: float):
    """Two-particle wavefunction value; broadcasts over (x1, x2)."""
    la1 = _log_psi(wf.packet_a, c, x1, t)
    lb2 = _log_psi(wf.packet_b, c, x2, t)
    if wf.form == "product":
        return np.exp(la1 + lb2)
    sign = 1.0 if wf.form == "symmetric" else -1.0
    la2 = _log_psi(wf.packet_a, c, x2, t)
    lb1 = _log_psi(wf.packet_b, c, x1, t)
    l1 = la1 + lb2
    l2 = la2 + lb1
    lm = np.maximum(np.real(l1), np.real(l2))
    return _norm_factor(wf, c) * np.exp(lm) * (np.exp(l1 - lm) + sign * np.exp(l2 - lm))


def velocity_2p(wf: TwoParticleWF, c: PhysicalConstants, x1: float, x2: float, t: float):
    """(v1, v2) from per-coordinate j/rho on the two-particle wavefunction."""
    for name, v in (("x1", x1), ("x2", x2), ("t", t)):
        _require_finite(name, v)
    _check_time(wf.packet_a, t)
    _check_time(wf.packet_b, t)
    hm = c.hbar / c.mass
    if wf.form == "product":
        return (
            velocity_1p(wf.packet_a, c, x1, t),
            velocity_1p(wf.packet_b, c, x2, t),
        )
    sign = 1.0 if wf.form == "symmetric" else -1.0
    nf = _norm_factor(wf, c)
    l1 = _log_psi(wf.packet_a, c, x1, t) + _log_psi(wf.packet_b, c, x2, t)
    l2 = _log_psi(wf.packet_a, c, x2, t) + _log_psi(wf.packet_b, c, x1, t)
    lm = max(l1.real, l2.real)
    w1 = np.exp(l1 - lm)
    w2 = np.exp(l2 - lm)
    den = w1 + sign * w2
    if den == 0.0 or 2.0 * (lm + np.log(abs(den))) + 2.0 * np.log(nf) < _LOG_DENSITY_FLOOR:
        raise NodeSingularityError(f"density below 1e-300 at ({x1!r}, {x2!r}), t={t!r}")
    da1 = _dlog_psi(wf.packet_a, c, x1, t)
    db1 = _dlog_psi(wf.packet_b, c, x1, t)
    da2 = _dlog_psi(wf.packet_a, c, x2, t)
    db2 = _dlog_psi(wf.packet_b, c, x2, t)
    v1 = hm * np.imag((w1 * da1 + sign * w2 * db1) / den)
    v2 = hm * np.imag((w1 * db2 + sign * w2 * da2) / den)
    return (float(v1), float(v2))


def cross_coupling(wf: TwoParticleWF, c: PhysicalConstants, x1: float, x2: float, t: float) -> float:
    """|dv1/dx2| by central differences with one Richardson refinement.

    Step h = 1e-5 * the smaller packet width; the Richardson combination
    (4 D(h/2) - D(h)) / 3 removes the leading O(h^2) error.
    """
    h = 1e-5 * min(wf.packet_a.width, wf.packet_b.width)

    def d(step):
        vp = velocity_2p(wf, c, x1, x2 + step, t)[0]
        vm = velocity_2p(wf, c, x1, x2 - step, t)[0]
        return (vp - vm) / (2.0 * step)

    return float(abs((4.0 * d(h / 2.0) - d(h)) / 3.0))


@dataclass(frozen=True)
class Trajectory:
    """Times (strictly increasing) and positions, one row per step."""

    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        positions = np.asarray(self.positions, dtype=float)
        if times.ndim != 1 or positions.shape[0] != times.size:
            raise ValueError("times and positions must have matching leading length")
        if times.size > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("times must be strictly increasing")
        times.setflags(write=False)
        positions.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "positions", positions)


def integrate_trajectory(wf, c: PhysicalConstants, start, t0: float, t1: float, dt: float) -> Trajectory:
    """Classical RK4 integration of the guidance velocity field.

    ``wf`` is a WavePacket (scalar start) or TwoParticleWF (pair start).
    Steps of size dt, with one shorter final step to land on t1 exactly.
    Hitting a node halts integration: the raised NodeSingularityError
    carries the completed steps as ``partial_trajectory``.
    """
    for name, v in (("t0", t0), ("t1", t1), ("dt", dt)):
        _require_finite(name, v)
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if t1 <= t0:
        raise ValueError(f"need t1 > t0, got t0={t0!r}, t1={t1!r}")

    if isinstance(wf, WavePacket):
        def vel(x, t):
            return np.array([velocity_1p(wf, c, float(x[0]), t)])
        x = np.array([float(start)], dtype=float)
        scalar = True
    elif isinstance(wf, TwoParticleWF):
        def vel(x, t):
            return np.array(velocity_2p(wf, c, float(x[0]), float(x[1]), t))
        x = np.asarray(start, dtype=float).ravel()
        if x.size != 2:
            raise ValueError("two-particle start must be a pair (x1, x2)")
        scalar = False
    else:
        raise ValueError(f"wf must be a WavePacket or TwoParticleWF, got {type(wf)!r}")

    times = [t0]
    points = [x.copy()]
    t = t0
    eps = 1e-12 * max(1.0, abs(t1))
    try:
        while t < t1 - eps:
            step = min(dt, t1 - t)
            k1 = vel(x, t)
            k2 = vel(x + 0.5 * step * k1, t + 0.5 * step)
            k3 = vel(x + 0.5 * step * k2, t + 0.5 * step)
            k4 = vel(x + step * k3, t + step)
            x = x + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            t = t + step
            times.append(t)
            points.append(x.copy())
    except NodeSingularityError as err:
        pos = np.array(points)
        partial = Trajectory(times=np.array(times), positions=pos[:, 0] if scalar else pos)
        raise NodeSingularityError(str(err), partial_trajectory=partial) from None
    pos = np.array(points)
    return Trajectory(times=np.array(times), positions=pos[:, 0] if scalar else pos)


@dataclass(frozen=True)
class SpinState:
    s: tuple

    def __post_init__(self):
        s = tuple(float(v) for v in self.s)
        if len(s) != 3:
            raise ValueError("spin must be a 3-vector")
        _require_finite("s", np.array(s))
        if not np.linalg.norm(s) > 0.0:
            raise ValueError("spin vector must be nonzero")
        object.__setattr__(self, "s", s)


def _as_spin(s) -> np.ndarray:
    if isinstance(s, SpinState):
        return np.array(s.s, dtype=float)
    v = np.asarray(s, dtype=float).ravel()
    return np.array(SpinState(tuple(v)).s)  # reuse the validation


def spin_derivative(s, b_field, c: PhysicalConstants) -> np.ndarray:
    """Larmor torque ds/dt = gyro * (s x B)."""
    sv = _as_spin(s)
    b = np.asarray(b_field, dtype=float).ravel()
    if b.size != 3:
        raise ValueError("b_field must be a 3-vector")
    _require_finite("b_field", b)
    return c.gyro * np.cross(sv, b)


@dataclass(frozen=True)
class SpinTrajectory:
    times: np.ndarray
    spins: np.ndarray  # shape (len(times), 3)


def integrate_spin(s0, b_field, c: PhysicalConstants, t1: float, dt: float) -> SpinTrajectory:
    """RK4 precession from t = 0 to t1; |s| and s.B are conserved quantities."""
    for name, v in (("t1", t1), ("dt", dt)):
        _require_finite(name, v)
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if t1 <= 0.0:
        raise ValueError(f"need t1 > 0, got {t1!r}")
    s = _as_spin(s0)
    b = np.asarray(b_field, dtype=float).ravel()
    if b.size != 3:
        raise ValueError("b_field must be a 3-vector")
    _require_finite("b_field", b)
    g = c.gyro

    times = [0.0]
    spins = [s.copy()]
    t = 0.0
    eps = 1e-12 * max(1.0, abs(t1))
    while t < t1 - eps:
        step = min(dt, t1 - t)
        k1 = g * np.cross(s, b)
        k2 = g * np.cross(s + 0.5 * step * k1, b)
        k3 = g * np.cross(s + 0.5 * step * k2, b)
        k4 = g * np.cross(s + step * k3, b)
        s = s + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t = t + step
        times.append(t)
        spins.append(s.copy())
    return SpinTrajectory(times=np.array(times), spins=np.array(spins))
