"""Constructors for common channel families and a seeded random channel.

``random_channel`` uses numpy's PCG64 generator (``default_rng``), so a given
seed produces the same channel on every platform and run.
"""

from __future__ import annotations

import warnings

import numpy as np

from .choi import ChoiMatrix, KrausSet, choi_from_kraus
from .errors import DomainError, ValidationError
from .linalg import HERMITICITY_TOL, hermiticity_defect, res

__all__ = [
    "NotCompletelyPositiveWarning",
    "validate_correlation",
    "unitary_channel",
    "schur_channel",
    "random_channel",
]


class NotCompletelyPositiveWarning(UserWarning):
    """The constructed map is valid but not completely positive."""


def unitary_channel(u) -> ChoiMatrix:
    """Choi matrix of x -> u x u^dag for a unitary u, via res(u) res(u)^dag."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {u.shape}")
    d = u.shape[0]
    defect = np.abs(u.conj().T @ u - np.eye(d)).max()
    if defect > HERMITICITY_TOL:
        raise ValidationError(f"matrix is not unitary (max |u^dag u - I| = {defect:.3e})")
    v = res(u)
    return ChoiMatrix(dx=d, dy=d, matrix=np.outer(v, v.conj()))


def validate_correlation(a, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Check that ``a`` is Hermitian with unit diagonal; return it as complex."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    defect = hermiticity_defect(a)
    if defect > tol:
        raise ValidationError(f"correlation matrix is not Hermitian (defect {defect:.3e})")
    diag_defect = np.abs(np.diag(a) - 1.0).max()
    if diag_defect > tol:
        raise ValidationError(
            f"correlation matrix does not have unit diagonal (defect {diag_defect:.3e})"
        )
    return a


def schur_channel(a, cp_tol: float = HERMITICITY_TOL) -> ChoiMatrix:
    """Choi matrix of the entrywise-product map y -> a .* y.

    ``a`` must be Hermitian with unit diagonal; the channel is then always
    trace preserving.  It is completely positive exactly when ``a`` is
    positive semidefinite; if the smallest eigenvalue of ``a`` is below
    ``-cp_tol`` the construction still succeeds but a
    ``NotCompletelyPositiveWarning`` is emitted.
    """
    a = validate_correlation(a)
    d = a.shape[0]
    min_eig = float(np.linalg.eigvalsh((a + a.conj().T) / 2)[0])
    if min_eig < -cp_tol:
        warnings.warn(
            f"correlation matrix has min eigenvalue {min_eig:.3e}; "
            "the resulting map is not completely positive",
            NotCompletelyPositiveWarning,
            stacklevel=2,
        )
    diag_idx = np.arange(d) * d + np.arange(d)
    j = np.zeros((d * d, d * d), dtype=complex)
    j[np.ix_(diag_idx, diag_idx)] = a
    return ChoiMatrix(dx=d, dy=d, matrix=j)


def random_channel(dx: int, dy: int, kraus_rank: int, seed: int) -> ChoiMatrix:
    """Seeded random CP+TP channel with the requested Kraus rank.

    Draws a (kraus_rank*dy) x dx standard complex Gaussian matrix,
    orthonormalizes its columns into an isometry (QR with the R diagonal
    phase-fixed to be real positive, for determinism), slices it into
    kraus_rank blocks of shape dy x dx and returns their Choi matrix.
    The isometry condition forces trace preservation.
    """
    if dx < 1 or dy < 1:
        raise DomainError(f"dimensions must be positive, got ({dx}, {dy})")
    if not 1 <= kraus_rank <= dx * dy:
        raise DomainError(
            f"kraus_rank must be in [1, {dx * dy}] for dims ({dx}, {dy}), got {kraus_rank}"
        )
    if kraus_rank * dy < dx:
        raise DomainError(
            f"kraus_rank {kraus_rank} is too small: a trace-preserving map needs "
            f"kraus_rank*dy >= dx (got {kraus_rank}*{dy} < {dx})"
        )
    rng = np.random.default_rng(seed)
    g = (
        rng.standard_normal((kraus_rank * dy, dx))
        + 1j * rng.standard_normal((kraus_rank * dy, dx))
    ) / np.sqrt(2)
    q, r = np.linalg.qr(g, mode="reduced")
    diag = np.diagonal(r).copy()
    phase = np.ones_like(diag)
    nz = np.abs(diag) > 0
    phase[nz] = diag[nz] / np.abs(diag[nz])
    isometry = q * phase[np.newaxis, :]
    kraus = isometry.reshape(kraus_rank, dy, dx)
    return choi_from_kraus(KrausSet(dx=dx, dy=dy, operators=kraus))
