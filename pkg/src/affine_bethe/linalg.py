"""Small dense matrix helpers for both arithmetic modes.

Exact matrices are tuples of tuples of rational/CQ scalars; float matrices
are NumPy complex arrays.  Module dimensions never exceed a handful, so
plain Python loops are fine on the exact path.
"""

from __future__ import annotations

from fractions import Fraction as Q

import numpy as np

from .scalars import CQ, conj_scalar, to_complex

Mat = "tuple[tuple, ...] | np.ndarray"


def is_np(m) -> bool:
    return isinstance(m, np.ndarray)


def mat_eye(n: int, exact: bool):
    if exact:
        return tuple(tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n))
    return np.eye(n, dtype=complex)


def mat_from_rows(rows, exact: bool):
    if exact:
        return tuple(tuple(r) for r in rows)
    return np.array(rows, dtype=complex)


def mat_mul(a, b):
    if is_np(a) or is_np(b):
        return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_vec(a, v):
    if is_np(a):
        return np.asarray(a, dtype=complex) @ np.asarray(v, dtype=complex)
    return tuple(sum(a[i][t] * v[t] for t in range(len(v))) for i in range(len(a)))


def mat_add(a, b):
    if is_np(a):
        return a + b
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    if is_np(a):
        return a - b
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, s):
    if is_np(a):
        return a * s
    return tuple(tuple(s * x for x in row) for row in a)


def mat_conj_t(a):
    if is_np(a):
        return a.conj().T
    n, m = len(a), len(a[0])
    return tuple(tuple(conj_scalar(a[j][i]) for j in range(n)) for i in range(m))


def mat_transpose(a):
    if is_np(a):
        return a.T
    n, m = len(a), len(a[0])
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(m))


def mat_to_numpy(a) -> np.ndarray:
    if is_np(a):
        return a
    return np.array([[to_complex(x) for x in row] for row in a], dtype=complex)


def mat_equal(a, b, tol: float = 0.0) -> bool:
    if is_np(a) or is_np(b):
        return bool(np.max(np.abs(mat_to_numpy(a) - mat_to_numpy(b))) <= tol)
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_max_abs_diff(a, b) -> float:
    return float(np.max(np.abs(mat_to_numpy(a) - mat_to_numpy(b))))


def mat_det(a):
    """Exact determinant by fraction-free elimination (small matrices)."""
    n = len(a)
    m = [list(row) for row in a]
    det = Q(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Q(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Q(1) / Q(m[col][col]) if not isinstance(m[col][col], CQ) else CQ(1) / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f == 0:
                continue
            for c in range(col, n):
                m[r][c] = m[r][c] - f * m[col][c]
    return det


def mat_inverse_exact(a):
    """Exact inverse via Gauss-Jordan over Fraction/CQ entries."""
    n = len(a)
    m = [list(row) + [Q(1) if i == j else Q(0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r == col:
                continue
            f = m[r][col]
            if f == 0:
                continue
            m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def solve_exact(a, rhs):
    """Solve a x = rhs exactly; rhs is a vector."""
    inv = mat_inverse_exact(a)
    return mat_vec(inv, tuple(rhs))


def op_norm(a, gram: np.ndarray | None = None) -> float:
    """Operator norm of ``a`` w.r.t. the inner product given by ``gram``.

    With ``gram = H`` (Hermitian positive definite) this is the spectral
    norm of ``H^{1/2} a H^{-1/2}``.
    """
    m = mat_to_numpy(a)
    if gram is not None:
        g = np.asarray(gram, dtype=complex)
        evals, vecs = np.linalg.eigh(g)
        sq = vecs @ np.diag(np.sqrt(evals)) @ vecs.conj().T
        isq = vecs @ np.diag(1.0 / np.sqrt(evals)) @ vecs.conj().T
        m = sq @ m @ isq
    return float(np.linalg.norm(m, 2))


def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(x, s):
    return tuple(s * a for a in x)


def vec_neg(x):
    return tuple(-a for a in x)
