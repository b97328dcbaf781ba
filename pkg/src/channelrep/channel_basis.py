"""Orthonormal basis of the smallest subspace containing all channel Choi matrices.

Choi matrices of trace-preserving maps satisfy Tr_Y J = I_X, so every channel
lives inside the real subspace

    S = { J Hermitian on Y (x) X : Tr_Y J = c I_X, c real },

whose dimension is dx^2 dy^2 - dx^2 + 1.  Its orthogonal complement is spanned
by I_Y (x) H with H traceless Hermitian (``sperp_basis``).  Expanding a Choi
matrix in an orthonormal basis of S therefore gives a minimal real coefficient
vector for the channel, and the expansion is exactly invertible (``represent``
and ``combine``).

The canonical basis built by ``channel_basis`` consists of, in order:

* index 0: the scaled identity ``I/sqrt(dx*dy)``;
* for each traceless diagonal profile over the output factor (k = 1..dy-1,
  same diagonal family as ``hermitian_basis``), its Kronecker product with
  each element of the projector/sym/antisym basis of the input factor
  (projectors |x><x| first, then input index pairs a < b, symmetric before
  antisymmetric);
* for each pair of output indices y1 < y2 and each input index pair (x1, x2),
  the symmetric and antisymmetric matrix-pair elements supported on the
  positions (y1*dx + x1, y2*dx + x2).

All entries are exact (combinatorial values and 1/sqrt(2) factors), each
element is Hermitian, traceless apart from index 0, orthogonal to all of
``sperp_basis``, and the whole set is orthonormal.  The element set is NOT
the set of Kronecker products of two canonical Hermitian bases: products of
traceless diagonals on both factors are replaced by the finer
diagonal-profile (x) projector family, and cross-block pair elements are
kept in positional form.  Every element is supported on a single pair of
input indices, so the coefficients of structured maps (unitary conjugations,
entrywise products) read off Choi-matrix entries directly instead of mixing
them.

The first coefficient of any CP+TP Choi matrix equals sqrt(dx/dy), and the
pairing <I/dx, J> (``order_unit_pairing``) equals 1 exactly on channels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .choi import ChoiMatrix
from .errors import DimensionError, DomainError, NotInSubspaceError, ValidationError
from .hermitian_basis import hermitian_basis
from .linalg import HERMITICITY_TOL, hermiticity_defect, kron, trace_norm

__all__ = [
    "MEMBERSHIP_TOL",
    "ChannelBasis",
    "CoefficientVector",
    "subspace_dimension",
    "sperp_basis",
    "channel_basis",
    "represent",
    "combine",
    "order_unit_pairing",
]

# Trace-norm threshold separating genuine non-membership in S (order-1
# residuals) from floating-point dust.
MEMBERSHIP_TOL = 1e-8

Label = tuple


def subspace_dimension(dx: int, dy: int) -> int:
    """Dimension of S: dx^2 dy^2 - dx^2 + 1."""
    if dx < 1 or dy < 1:
        raise DomainError(f"dimensions must be positive, got ({dx}, {dy})")
    return dx * dx * dy * dy - dx * dx + 1


@dataclass(frozen=True)
class ChannelBasis:
    """Ordered orthonormal basis of S for fixed (dx, dy).

    ``elements`` is a stack of shape (dim(S), dx*dy, dx*dy); ``labels`` is
    the parallel tuple of structural labels.  Immutable after construction
    and safe to share across threads; ``represent``/``combine`` are pure and
    may run concurrently over the same basis.
    """

    dx: int
    dy: int
    elements: np.ndarray
    labels: tuple[Label, ...]

    def __len__(self) -> int:
        return self.elements.shape[0]


@dataclass(frozen=True)
class CoefficientVector:
    """Real expansion coefficients of a Choi matrix in a ChannelBasis."""

    dx: int
    dy: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        expected = subspace_dimension(self.dx, self.dy)
        if vals.shape != (expected,):
            raise DimensionError(
                f"coefficient vector for dims ({self.dx}, {self.dy}) must have "
                f"length {expected}, got shape {vals.shape}"
            )
        if not np.isfinite(vals).all():
            raise ValueError("coefficient vector contains non-finite entries")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.shape[0]


def sperp_basis(dx: int, dy: int) -> np.ndarray:
    """Orthonormal basis of the complement of S: (I_Y/sqrt(dy)) (x) H.

    ``H`` runs over the traceless elements of ``hermitian_basis(dx)``; the
    result is a stack of exactly dx^2 - 1 Hermitian matrices (empty for
    dx = 1).  Tracing the output factor of any element yields a traceless
    matrix, never a multiple of the identity.
    """
    if dx < 1 or dy < 1:
        raise DomainError(f"dimensions must be positive, got ({dx}, {dy})")
    n = dx * dy
    traceless = hermitian_basis(dx).elements[1:]
    if traceless.shape[0] == 0:
        return np.zeros((0, n, n), dtype=complex)
    eye_y = np.eye(dy, dtype=complex) / np.sqrt(dy)
    stack = np.stack([kron(eye_y, h) for h in traceless])
    stack.setflags(write=False)
    return stack


def _diagonal_profiles(dy: int) -> list[np.ndarray]:
    """Traceless diagonal vectors (1,..,1,-k,0,..)/sqrt(k+k^2) for k=1..dy-1."""
    out = []
    for k in range(1, dy):
        v = np.zeros(dy)
        v[:k] = 1.0
        v[k] = -k
        out.append(v / np.sqrt(k + k * k))
    return out


def channel_basis(dx: int, dy: int) -> ChannelBasis:
    """Construct the canonical orthonormal basis of S for dims (dx, dy)."""
    if dx < 1 or dy < 1:
        raise DomainError(f"dimensions must be positive, got ({dx}, {dy})")
    n = dx * dy
    sqrt2 = np.sqrt(2)

    elements = [np.eye(n, dtype=complex) / np.sqrt(n)]
    labels: list[Label] = [("identity",)]

    for k, profile in enumerate(_diagonal_profiles(dy), start=1):
        d_y = np.diag(profile).astype(complex)
        for x in range(dx):
            proj = np.zeros((dx, dx), dtype=complex)
            proj[x, x] = 1.0
            elements.append(kron(d_y, proj))
            labels.append(("diag_proj", k, x))
        for a in range(dx):
            for b in range(a + 1, dx):
                sym = np.zeros((dx, dx), dtype=complex)
                sym[a, b] = sym[b, a] = 1.0 / sqrt2
                elements.append(kron(d_y, sym))
                labels.append(("diag_sym", k, a, b))
                antisym = np.zeros((dx, dx), dtype=complex)
                antisym[a, b] = 1j / sqrt2
                antisym[b, a] = -1j / sqrt2
                elements.append(kron(d_y, antisym))
                labels.append(("diag_antisym", k, a, b))

    for y1 in range(dy):
        for y2 in range(y1 + 1, dy):
            for x1 in range(dx):
                for x2 in range(dx):
                    p, q = y1 * dx + x1, y2 * dx + x2
                    sym = np.zeros((n, n), dtype=complex)
                    sym[p, q] = sym[q, p] = 1.0 / sqrt2
                    elements.append(sym)
                    labels.append(("pair_sym", y1, x1, y2, x2))
                    antisym = np.zeros((n, n), dtype=complex)
                    antisym[p, q] = 1j / sqrt2
                    antisym[q, p] = -1j / sqrt2
                    elements.append(antisym)
                    labels.append(("pair_antisym", y1, x1, y2, x2))

    stack = np.stack(elements)
    assert stack.shape[0] == subspace_dimension(dx, dy)
    stack.setflags(write=False)
    return ChannelBasis(dx=dx, dy=dy, elements=stack, labels=tuple(labels))


def _coerce_choi(basis: ChannelBasis, j) -> np.ndarray:
    if isinstance(j, ChoiMatrix):
        if (j.dx, j.dy) != (basis.dx, basis.dy):
            raise DimensionError(
                f"Choi dims ({j.dx}, {j.dy}) do not match basis dims "
                f"({basis.dx}, {basis.dy})"
            )
        return j.matrix
    m = np.asarray(j, dtype=complex)
    n = basis.dx * basis.dy
    if m.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix, got {m.shape}")
    return m


def represent(
    basis: ChannelBasis,
    j,
    membership_tol: float = MEMBERSHIP_TOL,
) -> CoefficientVector:
    """Expand a Choi matrix in the basis of S.

    Accepts a ``ChoiMatrix`` or a bare square array of side dx*dy.  The input
    must be Hermitian (max-abs defect below the standard tolerance) and must
    lie in S: the residual after projection is checked in trace norm against
    ``membership_tol`` and a ``NotInSubspaceError`` is raised beyond it.
    """
    m = _coerce_choi(basis, j)
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise ValidationError(
            f"matrix is not Hermitian (max defect {defect:.3e})"
        )
    coeffs = np.tensordot(basis.elements.conj(), m, axes=([1, 2], [0, 1]))
    max_imag = float(np.abs(coeffs.imag).max()) if coeffs.size else 0.0
    if max_imag > HERMITICITY_TOL:
        raise ValidationError(
            f"coefficients have non-negligible imaginary part ({max_imag:.3e})"
        )
    values = coeffs.real
    residual = m - np.tensordot(values, basis.elements, axes=1)
    resid_norm = trace_norm(residual)
    if resid_norm > membership_tol:
        raise NotInSubspaceError(resid_norm)
    return CoefficientVector(dx=basis.dx, dy=basis.dy, values=values)


def combine(basis: ChannelBasis, v) -> ChoiMatrix:
    """Reassemble the Choi matrix sum_k v[k] * basis.elements[k].

    Exact linear combination, no projection; inverse of ``represent`` on S.
    """
    if isinstance(v, CoefficientVector):
        if (v.dx, v.dy) != (basis.dx, basis.dy):
            raise DimensionError(
                f"vector dims ({v.dx}, {v.dy}) do not match basis dims "
                f"({basis.dx}, {basis.dy})"
            )
        values = v.values
    else:
        values = np.asarray(v, dtype=float)
        if values.shape != (len(basis),):
            raise DimensionError(
                f"expected {len(basis)} coefficients, got shape {values.shape}"
            )
    matrix = np.tensordot(values, basis.elements, axes=1)
    return ChoiMatrix(dx=basis.dx, dy=basis.dy, matrix=matrix)


def order_unit_pairing(j: ChoiMatrix) -> float:
    """Pairing <I/dx, J> = trace(J)/dx; equals 1 for every CP+TP Choi matrix.

    Scaling is linear: the pairing of t*J is t.  Together with positive
    semidefiniteness and membership in S, pairing 1 already forces trace
    preservation, so the channel set is exactly the unit-pairing slice of
    the positive cone in S.
    """
    defect = hermiticity_defect(j.matrix)
    if defect > HERMITICITY_TOL:
        raise ValidationError(f"matrix is not Hermitian (max defect {defect:.3e})")
    return float(np.trace(j.matrix).real) / j.dx
