"""Jacobi elliptic functions sn, cn, dn and the complete integral K.

Everything is computed through arithmetic-geometric-mean (AGM) / Landen
descent with a fixed iteration cap and machine-epsilon early exit; there
are no table lookups and no incomplete integrals.  The modulus k (not the
parameter m = k^2) is the convention throughout; :class:`EllipticModulus`
carries the cached square so call sites never mix the two up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

_MAX_ITER = 32
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus k with 0 <= k < 1 and its cached square k2 = k**2."""

    k: float
    k2: float = field(init=False)

    def __post_init__(self) -> None:
        k = float(self.k)
        if not 0.0 <= k < 1.0:
            raise ValueError(f"modulus must satisfy 0 <= k < 1, got {k!r}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "k2", k * k)

    @property
    def complement(self) -> float:
        """Complementary modulus k' with k^2 + k'^2 = 1."""
        return math.sqrt(1.0 - self.k2)


def as_modulus(k) -> EllipticModulus:
    """Coerce a float (or pass through an EllipticModulus) with validation."""
    if isinstance(k, EllipticModulus):
        return k
    return EllipticModulus(float(k))


@njit(cache=True, nogil=True)
def _agm_K(k2: float) -> float:
    a = 1.0
    b = np.sqrt(1.0 - k2)
    for _ in range(_MAX_ITER):
        if abs(a - b) <= _EPS * a:
            break
        an = 0.5 * (a + b)
        b = np.sqrt(a * b)
        a = an
    return np.pi / (2.0 * a)


def complete_K(k) -> float:
    """Complete elliptic integral of the first kind K(k).

    K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta), evaluated by
    AGM iteration: K = pi / (2 agm(1, k')).  Exact at k = 0 (pi/2) and
    accurate to a few ulps for k bounded away from 1.
    """
    mod = as_modulus(k)
    return float(_agm_K(mod.k2))


@njit(cache=True, nogil=True)
def _sncndn(u: float, mc: float):
    """sn, cn, dn at argument u for complementary parameter mc = 1 - k^2.

    Descending Landen / Gauss transformation with backward recurrence;
    sn^2 + cn^2 == 1 holds exactly by construction and dn is good to a
    few ulps for 0 < mc <= 1.
    """
    if mc == 1.0:
        return np.sin(u), np.cos(u), 1.0

    em = np.empty(_MAX_ITER)
    en = np.empty(_MAX_ITER)
    a = 1.0
    dn = 1.0
    emc = mc
    level = 0
    c = 0.0
    for i in range(_MAX_ITER):
        level = i
        em[i] = a
        emc = np.sqrt(emc)
        en[i] = emc
        c = 0.5 * (a + emc)
        if abs(a - emc) <= _EPS * a:
            break
        emc = a * emc
        a = c

    u = u * c
    sn = np.sin(u)
    cn = np.cos(u)
    if sn != 0.0:
        aa = cn / sn
        c = c * aa
        for ii in range(level, -1, -1):
            b = em[ii]
            aa = aa * c
            c = c * dn
            dn = (en[ii] + aa) / (b + aa)
            aa = c / b
        aa = 1.0 / np.sqrt(c * c + 1.0)
        sn = aa if sn >= 0.0 else -aa
        cn = c * sn
    return sn, cn, dn


def jacobi_sn_cn_dn(u: float, k) -> tuple[float, float, float]:
    """The triple (sn(u, k), cn(u, k), dn(u, k)) for real u, 0 <= k < 1."""
    mod = as_modulus(k)
    u = float(u)
    if not math.isfinite(u):
        raise ValueError(f"argument u must be finite, got {u!r}")
    sn, cn, dn = _sncndn(u, 1.0 - mod.k2)
    return float(sn), float(cn), float(dn)
