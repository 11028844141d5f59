"""Fixed-size 3-vector, 3x3-matrix and quaternion algebra.

Carriers are plain float64 numpy arrays: vectors of shape (3,), row-major
matrices of shape (3, 3), quaternions of shape (4,) stored scalar-first
[w, x, y, z] with the Hamilton product.  Every operation is a pure function
of its arguments and is safe to call concurrently.
"""

from __future__ import annotations

import numpy as np
from numba import njit

Array = np.ndarray

IDENTITY_QUAT = np.array([1.0, 0.0, 0.0, 0.0])


def vec3(x: float, y: float, z: float) -> Array:
    """Build a float64 3-vector."""
    return np.array([x, y, z], dtype=np.float64)


def require_finite(name: str, a) -> Array:
    """Coerce to float64 and reject NaN/Inf entries."""
    a = np.asarray(a, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries: {a!r}")
    return a


def cross(u: Array, v: Array) -> Array:
    """Cross product u x v."""
    return np.array([
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ])


def skew(v: Array) -> Array:
    """Skew-symmetric matrix S(v) with S(v) @ w == cross(v, w)."""
    return np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])


@njit(cache=True, nogil=True)
def _mat_exp3(a: Array) -> Array:
    """exp(a) for a 3x3 float64 matrix by scaling and squaring.

    The argument is halved until its Frobenius norm is <= 0.5, the
    exponential of the scaled matrix is summed as an order-16 Taylor
    polynomial in Horner form (remainder < 1e-19 at norm 0.5), and the
    result is squared back up.
    """
    nrm2 = 0.0
    for i in range(3):
        for j in range(3):
            nrm2 += a[i, j] * a[i, j]
    nrm = np.sqrt(nrm2)

    s = 0
    if nrm > 0.5:
        s = int(np.ceil(np.log2(nrm / 0.5)))
    b = a / 2.0 ** s

    eye = np.eye(3)
    t = np.eye(3)
    for k in range(16, 0, -1):
        t = eye + (b @ t) / k

    for _ in range(s):
        t = t @ t
    return t


def mat_exp(a: Array) -> Array:
    """Matrix exponential of a finite 3x3 matrix."""
    a = require_finite("matrix", a)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    return _mat_exp3(a)


def quat_mul(p: Array, q: Array) -> Array:
    """Hamilton product p * q (scalar-first)."""
    pw, px, py, pz = p
    qw, qx, qy, qz = q
    return np.array([
        pw * qw - px * qx - py * qy - pz * qz,
        pw * qx + px * qw + py * qz - pz * qy,
        pw * qy - px * qz + py * qw + pz * qx,
        pw * qz + px * qy - py * qx + pz * qw,
    ])


def quat_conj(q: Array) -> Array:
    """Conjugate [w, -x, -y, -z]."""
    return np.array([q[0], -q[1], -q[2], -q[3]])


def quat_normalize(q: Array) -> Array:
    """Rescale to unit norm; the zero quaternion is rejected."""
    n = np.sqrt(q @ q)
    if n == 0.0:
        raise ValueError("cannot normalize the zero quaternion")
    return q / n


def quat_exp_pure(v: Array) -> Array:
    """Exponential of the pure quaternion (0, v).

    Returns (cos|v|, sin(|v|) v/|v|).  For |v| < 1e-8 the sine ratio is
    replaced by its series 1 - |v|^2/6 to avoid 0/0.
    """
    n = np.sqrt(v @ v)
    if n < 1e-8:
        s = 1.0 - n * n / 6.0
    else:
        s = np.sin(n) / n
    return np.array([np.cos(n), s * v[0], s * v[1], s * v[2]])
