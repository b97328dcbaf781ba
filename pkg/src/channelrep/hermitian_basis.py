"""Canonical orthonormal basis of the real space of d x d Hermitian matrices.

The basis contains d^2 matrices, constructed exactly (no orthogonalization):

* the scaled identity ``I/sqrt(d)``,
* for k = 1..d-1 the traceless diagonal matrix
  ``(|0><0| + ... + |k-1><k-1| - k |k><k|) / sqrt(k + k^2)``,
* for every index pair a < b the symmetric element
  ``(|a><b| + |b><a|) / sqrt(2)`` followed by the antisymmetric element
  ``(i|a><b| - i|b><a|) / sqrt(2)``.

Element 0 is always the scaled identity; ordering is fixed so that
coefficient vectors are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["HermitianBasis", "hermitian_basis"]

Label = tuple


@dataclass(frozen=True)
class HermitianBasis:
    """Ordered orthonormal basis of Herm(C^dim).

    ``elements`` is a stack of shape (dim^2, dim, dim); ``labels`` is the
    parallel tuple of structural labels.  Immutable and safe to share
    across threads.
    """

    dim: int
    elements: np.ndarray
    labels: tuple[Label, ...]

    def __len__(self) -> int:
        return self.elements.shape[0]


def _diagonal_element(d: int, k: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    m[np.arange(k), np.arange(k)] = 1.0
    m[k, k] = -k
    return m / np.sqrt(k + k * k)


def _sym_element(d: int, a: int, b: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    m[a, b] = m[b, a] = 1.0 / np.sqrt(2)
    return m


def _antisym_element(d: int, a: int, b: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    m[a, b] = 1j / np.sqrt(2)
    m[b, a] = -1j / np.sqrt(2)
    return m


def hermitian_basis(d: int) -> HermitianBasis:
    """Build the canonical orthonormal Hermitian basis for dimension ``d``.

    For d = 1 the basis degenerates to the single matrix [[1]].
    """
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    elements = [np.eye(d, dtype=complex) / np.sqrt(d)]
    labels: list[Label] = [("identity",)]
    for k in range(1, d):
        elements.append(_diagonal_element(d, k))
        labels.append(("diagonal", k))
    for a in range(d):
        for b in range(a + 1, d):
            elements.append(_sym_element(d, a, b))
            labels.append(("sym", a, b))
            elements.append(_antisym_element(d, a, b))
            labels.append(("antisym", a, b))
    stack = np.stack(elements)
    stack.setflags(write=False)
    return HermitianBasis(dim=d, elements=stack, labels=tuple(labels))
