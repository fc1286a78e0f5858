"""Dense complex operator algebra for two-outcome quantum measurements.

Conventions used throughout the package:

* states (kets) are 1-D ``complex128`` numpy arrays, operators are square
  2-D arrays; scalars are python complex numbers; angles are floats in
  radians,
* the qubit basis is ``|+> = (1, 0)``, ``|-> = (0, 1)``,
* ``tensor`` is the Kronecker product, so a composite basis index is
  ``i_a * dim_b + i_b`` (left factor = first particle),
* spin measurement axes live in the z-y plane:
  ``spin_op(a) = cos(a)*sigma_z + sin(a)*sigma_y``,
* photon analyzer operators are ``photon_op(t) = 2*P(t) - 1`` with the
  doubled-angle closed form ``cos(2t)*sigma_z + sin(2t)*sigma_x``.

The two families are unitarily equivalent at doubled angles:
``R @ photon_op(t) @ R.conj().T == spin_op(2t)`` for ``R = diag(1, i)``.
"""

from dataclasses import dataclass, field

import numpy as np

# construction-time invariant checks; derived-quantity tests use 1e-10
ATOL = 1e-12

_SIGMA = {
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def _require_finite(name, value):
    if not np.all(np.isfinite(value)):
        raise ValueError(f"{name} must be finite, got {value!r}")


def _frozen(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def ket(amplitudes) -> np.ndarray:
    """Normalizing ket constructor: complex vector scaled to unit norm."""
    v = np.asarray(amplitudes, dtype=complex).ravel()
    _require_finite("ket amplitudes", v.view(np.float64))
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return _frozen(v / n)


@dataclass(frozen=True)
class MeasurementOp:
    """Hermitian involutory operator (spectrum in {-1, +1}).

    Construction validates both properties to 1e-12, so any instance is a
    legal two-outcome measurement by the time you can touch it.
    """

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"measurement operator must be square, got shape {m.shape}")
        _require_finite("measurement operator", m.view(np.float64))
        if np.max(np.abs(m - m.conj().T)) >= ATOL:
            raise ValueError(f"not Hermitian to {ATOL}: {self.label or m}")
        eye = np.eye(m.shape[0])
        if np.max(np.abs(m @ m - eye)) >= ATOL:
            raise ValueError(f"not involutory to {ATOL}: {self.label or m}")
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        # lets numpy functions (kron, matmul, ...) consume the op directly
        if dtype is not None:
            return self.matrix.astype(dtype)
        return self.matrix


def _as_matrix(a) -> np.ndarray:
    if isinstance(a, MeasurementOp):
        return a.matrix
    return np.asarray(a, dtype=complex)


def pauli(axis: str) -> MeasurementOp:
    """The Pauli matrix for axis 'x', 'y' or 'z' as a MeasurementOp."""
    if axis not in _SIGMA:
        raise ValueError(f"axis must be one of x, y, z; got {axis!r}")
    return MeasurementOp(_SIGMA[axis], label=f"sigma_{axis}")


def spin_op(alpha: float) -> MeasurementOp:
    """Stern-Gerlach operator for a magnet at angle alpha in the z-y plane.

    cos(a)*sigma_z + sin(a)*sigma_y, so that
    [spin_op(a), spin_op(a')] = 2i*sin(a - a')*sigma_x.
    """
    _require_finite("alpha", alpha)
    m = np.cos(alpha) * _SIGMA["z"] + np.sin(alpha) * _SIGMA["y"]
    return MeasurementOp(m, label=f"A({alpha:g})")


def photon_projector(theta: float) -> np.ndarray:
    """Rank-1 projector onto linear polarization at analyzer angle theta."""
    _require_finite("theta", theta)
    c, s = np.cos(theta), np.sin(theta)
    e = np.array([c, s], dtype=complex)
    return _frozen(np.outer(e, e))


def photon_op(theta: float) -> MeasurementOp:
    """Analyzer measurement operator 2*P(theta) - 1 = cos(2t)*sigma_z + sin(2t)*sigma_x."""
    m = 2.0 * photon_projector(theta) - np.eye(2)
    return MeasurementOp(m, label=f"Aph({theta:g})")


def tensor(a, b) -> np.ndarray:
    """Kronecker product; composite index convention i_a*dim_b + i_b."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def commutator(a, b) -> np.ndarray:
    """ab - ba for equal-dimension square matrices."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"commutator needs square matrices, got shape {a.shape}")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch in commutator: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def expectation(psi, m) -> complex:
    """<psi|M|psi>; real to 1e-12 when M is Hermitian."""
    psi = np.asarray(psi, dtype=complex).ravel()
    m = _as_matrix(m)
    if m.shape != (psi.size, psi.size):
        raise ValueError(f"dimension mismatch: ket dim {psi.size}, operator shape {m.shape}")
    return complex(np.vdot(psi, m @ psi))


def jacobi_eigenvalues(m, sweep_tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Deterministic, dependency-free, accurate to ~1e-12 relative for the
    dimensions used here (<= 64).  Returns eigenvalues sorted ascending.
    """
    h = np.array(_as_matrix(m), dtype=complex)
    n = h.shape[0]
    if n == 1:
        return np.array([h[0, 0].real])
    scale = max(1.0, float(np.abs(h).max()))
    for _ in range(max_sweeps):
        off = np.abs(h - np.diag(np.diag(h))).max()
        if off <= sweep_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = h[p, q]
                # skip entries already far below the sweep threshold
                if abs(hpq) <= 0.1 * sweep_tol * scale:
                    continue
                app, aqq = h[p, p].real, h[q, q].real
                absq = abs(hpq)
                phase = hpq / absq
                tau = (aqq - app) / (2.0 * absq)
                # smaller-magnitude rotation root, for numerical stability
                if tau >= 0:
                    t = -1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = h[:, p].copy()
                colq = h[:, q].copy()
                h[:, p] = c * colp + s * np.conj(phase) * colq
                h[:, q] = -s * phase * colp + c * colq
                rowp = h[p, :].copy()
                rowq = h[q, :].copy()
                h[p, :] = c * rowp + s * phase * rowq
                h[q, :] = -s * np.conj(phase) * rowp + c * rowq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
    return np.sort(np.diag(h).real)


def hermitian_extremal_eigenvalue(m) -> float:
    """max |eigenvalue| of a Hermitian matrix (input checked to 1e-10)."""
    a = _as_matrix(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T)) >= 1e-10:
        raise ValueError("matrix is not Hermitian to 1e-10")
    w = jacobi_eigenvalues(a)
    return float(np.max(np.abs(w)))
