"""Truncated four-mode bosonic Fock space for two-photon coincidences.

Modes are (detector, polarization) pairs in the canonical order
(1,x), (1,y), (2,x), (2,y); occupation states are 4-tuples with total
photon number <= 2, listed lexicographically (15 states).

The beam-splitter state

    |Psi> = sqrt(Tx*Ty)|x1 y2> + sqrt(Rx*Ry)|x2 y1>
            - i*sqrt(Ry*Tx)|x1 y1> + i*sqrt(Rx*Ty)|x2 y2>

factorizes exactly into one x-photon and one y-photon creation factor
(see product_state) and yields coincidence probability

    P(t1, t2) = (sqrt(Tx*Ty) cos t1 sin t2 + sqrt(Rx*Ry) sin t1 cos t2)^2.
"""

from dataclasses import dataclass
from itertools import product as _iproduct

import numpy as np

from .errors import UndefinedCorrelationError
from .operators import _require_finite, dagger

MODE_ORDER = ((1, "x"), (1, "y"), (2, "x"), (2, "y"))


@dataclass(frozen=True)
class ModeIndex:
    detector: int
    polarization: str

    def __post_init__(self):
        if (self.detector, self.polarization) not in MODE_ORDER:
            raise ValueError(
                f"mode must be one of {MODE_ORDER}, got "
                f"({self.detector!r}, {self.polarization!r})"
            )

    @property
    def slot(self) -> int:
        return MODE_ORDER.index((self.detector, self.polarization))


@dataclass(frozen=True)
class FockBasis:
    """Ordered occupation-number basis over the four detection modes."""

    n_max_total: int
    states: tuple

    def index(self, occ) -> int:
        return self.states.index(tuple(occ))


def standard_basis(n_max_total: int = 2) -> FockBasis:
    """All occupation 4-tuples with total <= n_max_total, lexicographic."""
    if n_max_total < 0:
        raise ValueError("n_max_total must be >= 0")
    states = tuple(
        occ
        for occ in _iproduct(range(n_max_total + 1), repeat=4)
        if sum(occ) <= n_max_total
    )
    return FockBasis(n_max_total=n_max_total, states=states)


@dataclass(frozen=True)
class FockState:
    basis: FockBasis
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        if amps.size != len(self.basis.states):
            raise ValueError(
                f"amplitude count {amps.size} != basis size {len(self.basis.states)}"
            )
        _require_finite("amplitudes", amps.view(np.float64))
        if abs(np.linalg.norm(amps) - 1.0) >= 1e-12:
            raise ValueError("Fock state must be normalized to 1e-12")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, basis: FockBasis, amplitudes) -> "FockState":
        """Normalizing constructor."""
        amps = np.asarray(amplitudes, dtype=complex).ravel()
        n = np.linalg.norm(amps)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(basis=basis, amplitudes=amps / n)

    def amplitude(self, occ) -> complex:
        return complex(self.amplitudes[self.basis.index(occ)])


@dataclass(frozen=True)
class BeamSplitterSpec:
    """Per-polarization transmission/reflection probabilities, T + R = 1."""

    t_x: float
    r_x: float
    t_y: float
    r_y: float

    def __post_init__(self):
        for name in ("t_x", "r_x", "t_y", "r_y"):
            v = getattr(self, name)
            _require_finite(name, v)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v!r}")
        if abs(self.t_x + self.r_x - 1.0) >= 1e-12 or abs(self.t_y + self.r_y - 1.0) >= 1e-12:
            raise ValueError("need t_x + r_x = 1 and t_y + r_y = 1 (within 1e-12)")

    @classmethod
    def equal_split(cls) -> "BeamSplitterSpec":
        return cls(0.5, 0.5, 0.5, 0.5)

    @classmethod
    def from_transmissions(cls, t_x: float, t_y: float) -> "BeamSplitterSpec":
        return cls(t_x, 1.0 - t_x, t_y, 1.0 - t_y)


def annihilation(mode: ModeIndex, basis: FockBasis) -> np.ndarray:
    """Ladder matrix with elements sqrt(n) lowering the given mode."""
    size = len(basis.states)
    index = {occ: i for i, occ in enumerate(basis.states)}
    a = np.zeros((size, size), dtype=complex)
    slot = mode.slot
    for i, occ in enumerate(basis.states):
        n = occ[slot]
        if n == 0:
            continue
        lowered = list(occ)
        lowered[slot] = n - 1
        a[index[tuple(lowered)], i] = np.sqrt(n)
    return a


def creation(mode: ModeIndex, basis: FockBasis) -> np.ndarray:
    return dagger(annihilation(mode, basis))


def vacuum(basis: FockBasis) -> np.ndarray:
    v = np.zeros(len(basis.states), dtype=complex)
    v[basis.index((0, 0, 0, 0))] = 1.0
    return v


def ou_mandel_state(bs: BeamSplitterSpec, basis: FockBasis = None) -> FockState:
    """The four-term two-photon state behind the beam splitter."""
    basis = basis or standard_basis()
    amps = np.zeros(len(basis.states), dtype=complex)
    amps[basis.index((1, 0, 0, 1))] = np.sqrt(bs.t_x * bs.t_y)  # |x1 y2>
    amps[basis.index((0, 1, 1, 0))] = np.sqrt(bs.r_x * bs.r_y)  # |x2 y1>
    amps[basis.index((1, 1, 0, 0))] = -1.0j * np.sqrt(bs.r_y * bs.t_x)  # |x1 y1>
    amps[basis.index((0, 0, 1, 1))] = 1.0j * np.sqrt(bs.r_x * bs.t_y)  # |x2 y2>
    return FockState(basis=basis, amplitudes=amps)


def product_state(bs: BeamSplitterSpec, basis: FockBasis = None) -> FockState:
    """[sqrt(Tx) a+(1,x) + i sqrt(Rx) a+(2,x)] [sqrt(Ty) a+(2,y) - i sqrt(Ry) a+(1,y)] |0>.

    Expands, term by term, to the same amplitudes as ou_mandel_state — the
    four-term state is a product of one x-photon factor and one y-photon
    factor, so it generates local trajectories despite its appearance.
    """
    basis = basis or standard_basis()
    op_x = np.sqrt(bs.t_x) * creation(ModeIndex(1, "x"), basis) + 1.0j * np.sqrt(
        bs.r_x
    ) * creation(ModeIndex(2, "x"), basis)
    op_y = np.sqrt(bs.t_y) * creation(ModeIndex(2, "y"), basis) - 1.0j * np.sqrt(
        bs.r_y
    ) * creation(ModeIndex(1, "y"), basis)
    return FockState(basis=basis, amplitudes=op_x @ (op_y @ vacuum(basis)))


def detector_amplitude_op(detector: int, theta: float, basis: FockBasis = None) -> np.ndarray:
    """cos(theta)*a(det, x) + sin(theta)*a(det, y): the analyzed field at a detector."""
    basis = basis or standard_basis()
    _require_finite("theta", theta)
    return np.cos(theta) * annihilation(ModeIndex(detector, "x"), basis) + np.sin(
        theta
    ) * annihilation(ModeIndex(detector, "y"), basis)


def coincidence_probability(state: FockState, theta1: float, theta2: float) -> float:
    """||D2(theta2) D1(theta1) |Psi>||^2 (normal-ordered expectation, K = 1)."""
    basis = state.basis
    d1 = detector_amplitude_op(1, theta1, basis)
    d2 = detector_amplitude_op(2, theta2, basis)
    out = d2 @ (d1 @ state.amplitudes)
    return float(np.real(np.vdot(out, out)))


def coincidence_closed_form(bs: BeamSplitterSpec, theta1: float, theta2: float) -> float:
    """(sqrt(Tx*Ty) cos t1 sin t2 + sqrt(Rx*Ry) sin t1 cos t2)^2."""
    amp = np.sqrt(bs.t_x * bs.t_y) * np.cos(theta1) * np.sin(theta2) + np.sqrt(
        bs.r_x * bs.r_y
    ) * np.sin(theta1) * np.cos(theta2)
    return float(amp * amp)


def coincidence_correlation(state: FockState, theta1: float, theta2: float) -> float:
    """Coincidence-normalized correlation of analyzer outcomes.

    Outcome labeling: at detector 1 the transmitted port (theta1) counts
    as +1; at detector 2 the reflected port (theta2 + pi/2) counts as +1.
    The pairs here are anticorrelated in the x/y basis (the equal-angle
    coincidence rate vanishes), so this is the labeling under which equal
    settings give E = +1:

        E = [P(t1, t2+) + P(t1+, t2) - P(t1, t2) - P(t1+, t2+)] / sum

    with + denoting the orthogonal port and the sum over all four.  For
    the equal-split state E = cos 2(theta1 + theta2).
    """
    t1p = theta1 + np.pi / 2.0
    t2p = theta2 + np.pi / 2.0
    p_ss = coincidence_probability(state, theta1, theta2)
    p_sp = coincidence_probability(state, theta1, t2p)
    p_ps = coincidence_probability(state, t1p, theta2)
    p_pp = coincidence_probability(state, t1p, t2p)
    total = p_ss + p_sp + p_ps + p_pp
    if total <= 0.0:
        raise UndefinedCorrelationError(
            "all four coincidence probabilities vanish; correlation undefined"
        )
    return (p_sp + p_ps - p_ss - p_pp) / total


def clock_angle(hour: float) -> float:
    """Clock-face hour -> cone angle in radians (3 o'clock = 0, counterclockwise negative)."""
    _require_finite("hour", hour)
    return np.pi / 2.0 - hour * np.pi / 6.0


@dataclass(frozen=True)
class PairProductState:
    """Down-conversion pair on opposite cone points, product form.

    signal and idler clock angles parameterize the two emission cones;
    momentum conservation pins idler_clock_angle = -signal_clock_angle.
    The pump momentum is carried as bookkeeping only.
    """

    signal_clock_angle: float
    idler_clock_angle: float
    pump_momentum: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        _require_finite("signal_clock_angle", self.signal_clock_angle)
        _require_finite("idler_clock_angle", self.idler_clock_angle)
        if abs(self.idler_clock_angle + self.signal_clock_angle) >= 1e-12:
            raise ValueError(
                "momentum conservation requires idler_clock_angle = -signal_clock_angle"
            )
        pm = tuple(float(v) for v in self.pump_momentum)
        if len(pm) != 3:
            raise ValueError("pump_momentum must be a 3-vector")
        _require_finite("pump_momentum", np.array(pm))
        object.__setattr__(self, "pump_momentum", pm)


def pair_product_amplitude(
    state: PairProductState,
    signal_test: float,
    idler_test: float,
    envelope_width: float = 1.0,
    delta_width: float = 0.01,
) -> complex:
    """phi_x(signal) * phi_y(idler) * delta~(signal + idler).

    The envelopes are Gaussians of width ``envelope_width`` centered on the
    state's nominal clock angles; the momentum delta is a normalized
    Gaussian of width ``delta_width``.  The product structure is the whole
    point: the amplitude factorizes, and no selection choice touches it.
    """
    _require_finite("signal_test", signal_test)
    _require_finite("idler_test", idler_test)
    if envelope_width <= 0.0 or delta_width <= 0.0:
        raise ValueError("envelope_width and delta_width must be positive")
    phi_x = np.exp(-((signal_test - state.signal_clock_angle) ** 2) / (2.0 * envelope_width**2))
    phi_y = np.exp(-((idler_test - state.idler_clock_angle) ** 2) / (2.0 * envelope_width**2))
    delta = np.exp(-((signal_test + idler_test) ** 2) / (2.0 * delta_width**2)) / (
        delta_width * np.sqrt(2.0 * np.pi)
    )
    return complex(phi_x * phi_y * delta)


@dataclass(frozen=True)
class SelectionSpec:
    """Accepted signal clock angles with a common acceptance half-width."""

    accepted: tuple
    half_width: float

    def __post_init__(self):
        _require_finite("half_width", self.half_width)
        if self.half_width <= 0.0:
            raise ValueError("half_width must be positive")
        acc = tuple(float(a) for a in self.accepted)
        for a in acc:
            _require_finite("accepted angle", a)
        object.__setattr__(self, "accepted", acc)


def apply_selection(selection: SelectionSpec, signal: float) -> bool:
    """True iff the signal angle lies within half_width of an accepted angle.

    Pure predicate: selection is a property of the detection arrangement,
    never of the pair state.
    """
    _require_finite("signal", signal)
    for a in selection.accepted:
        d = (signal - a + np.pi) % (2.0 * np.pi) - np.pi
        if abs(d) <= selection.half_width:
            return True
    return False
