import numpy as np
import pytest

from channelrep import DimensionError
from channelrep.linalg import (
    hermiticity_defect,
    hs_inner,
    is_hermitian,
    kron,
    min_eigenvalue_hermitian,
    partial_trace_first,
    res,
    trace_norm,
)

from fixtures import HADAMARD, HADAMARD_CHOI, ptrace_first_loop, rand_complex


def test_hs_inner_identity():
    assert hs_inner(np.eye(2), np.eye(2)) == pytest.approx(2 + 0j)


def test_hs_inner_normalized_diagonal():
    d = np.diag([1.0, -1.0]) / np.sqrt(2)
    assert hs_inner(d, d) == pytest.approx(1 + 0j)


def test_hs_inner_shape_mismatch():
    with pytest.raises(DimensionError):
        hs_inner(np.eye(2), np.eye(3))


def test_hs_inner_conjugate_symmetry():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = rand_complex(rng, (3, 3))
        b = rand_complex(rng, (3, 3))
        assert hs_inner(a, b) == pytest.approx(np.conj(hs_inner(b, a)))


def test_hs_inner_self_is_squared_frobenius():
    rng = np.random.default_rng(12)
    a = rand_complex(rng, (4, 4))
    v = hs_inner(a, a)
    assert abs(v.imag) < 1e-12
    assert v.real == pytest.approx(np.linalg.norm(a, "fro") ** 2)
    assert v.real >= 0


def test_hs_inner_linear_in_second_argument():
    rng = np.random.default_rng(13)
    a, b, c = (rand_complex(rng, (3, 3)) for _ in range(3))
    alpha = 0.7 - 1.3j
    lhs = hs_inner(a, alpha * b + c)
    rhs = alpha * hs_inner(a, b) + hs_inner(a, c)
    assert lhs == pytest.approx(rhs)


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_diagonal():
    got = kron(np.diag([1.0, -1.0]), np.eye(2))
    assert np.array_equal(got, np.diag([1.0, 1.0, -1.0, -1.0]))


def test_kron_single_entry():
    e01 = np.zeros((2, 2))
    e01[0, 1] = 1.0
    got = kron(e01, e01)
    expected = np.zeros((4, 4))
    expected[0, 3] = 1.0
    assert np.array_equal(got, expected)


def test_kron_index_formula():
    rng = np.random.default_rng(14)
    a = rand_complex(rng, (2, 3))
    b = rand_complex(rng, (3, 2))
    got = kron(a, b)
    for i in range(2):
        for j in range(3):
            for k in range(3):
                for l in range(2):
                    assert abs(got[i * 3 + k, j * 2 + l] - a[i, j] * b[k, l]) <= 1e-12


def test_partial_trace_identity():
    assert np.allclose(partial_trace_first(np.eye(4), 2, 2), 2 * np.eye(2))


def test_partial_trace_hadamard_choi_is_identity():
    got = partial_trace_first(HADAMARD_CHOI, 2, 2)
    assert np.abs(got - np.eye(2)).max() <= 1e-12


@pytest.mark.parametrize("da,db", [(2, 2), (3, 2), (2, 4), (4, 3)])
def test_partial_trace_of_kron(da, db):
    rng = np.random.default_rng(100 + da * 10 + db)
    a = rand_complex(rng, (da, da))
    b = rand_complex(rng, (db, db))
    got = partial_trace_first(kron(a, b), da, db)
    assert np.abs(got - np.trace(a) * b).max() <= 1e-12


def test_partial_trace_matches_loop():
    rng = np.random.default_rng(15)
    for d1, d2 in [(2, 3), (3, 3), (4, 2)]:
        m = rand_complex(rng, (d1 * d2, d1 * d2))
        assert np.abs(partial_trace_first(m, d1, d2) - ptrace_first_loop(m, d1, d2)).max() <= 1e-12


def test_partial_trace_preserves_trace():
    rng = np.random.default_rng(16)
    m = rand_complex(rng, (6, 6))
    assert abs(np.trace(partial_trace_first(m, 2, 3)) - np.trace(m)) <= 1e-12


def test_partial_trace_side_mismatch():
    with pytest.raises(DimensionError):
        partial_trace_first(np.eye(5), 2, 2)


def test_trace_norm_zero():
    assert trace_norm(np.zeros((4, 4))) == 0.0


def test_trace_norm_diagonal():
    assert trace_norm(np.diag([1.0, -2.0, 3.0])) == pytest.approx(6.0)


def test_trace_norm_hadamard_choi():
    assert trace_norm(HADAMARD_CHOI) == pytest.approx(2.0, abs=1e-12)


def test_trace_norm_triangle_inequality():
    rng = np.random.default_rng(17)
    for _ in range(20):
        a = rand_complex(rng, (4, 4))
        b = rand_complex(rng, (4, 4))
        assert trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10


def test_res_identity():
    assert np.array_equal(res(np.eye(2)), np.array([1, 0, 0, 1], dtype=complex))


def test_res_hadamard():
    expected = np.array([1, 1, 1, -1]) / np.sqrt(2)
    assert np.abs(res(HADAMARD) - expected).max() <= 1e-15


def test_res_outer_product_gives_choi():
    v = res(HADAMARD)
    assert np.abs(np.outer(v, v.conj()) - HADAMARD_CHOI).max() <= 1e-12


def test_res_row_major_order():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    assert np.array_equal(res(a), np.array([1, 2, 3, 4], dtype=complex))


def test_res_linear():
    rng = np.random.default_rng(18)
    a = rand_complex(rng, (3, 3))
    b = rand_complex(rng, (3, 3))
    alpha = 1.5 - 0.5j
    assert np.abs(res(alpha * a + b) - (alpha * res(a) + res(b))).max() <= 1e-12


def test_min_eigenvalue_identity():
    assert min_eigenvalue_hermitian(np.eye(3)) == pytest.approx(1.0)


def test_min_eigenvalue_diagonal():
    assert min_eigenvalue_hermitian(np.diag([0.5, -0.5])) == pytest.approx(-0.5)


def test_min_eigenvalue_hadamard_choi():
    assert abs(min_eigenvalue_hermitian(HADAMARD_CHOI)) <= 1e-12


def test_min_eigenvalue_non_square():
    with pytest.raises(DimensionError):
        min_eigenvalue_hermitian(np.zeros((2, 3)))


def test_hermiticity_helpers():
    assert is_hermitian(np.eye(3))
    skew = np.array([[0, 1], [0, 0]], dtype=complex)
    assert not is_hermitian(skew)
    assert hermiticity_defect(skew) == pytest.approx(1.0)
