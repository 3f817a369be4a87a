"""GF(2^l) arithmetic, scalar and vectorized.

Two representations coexist:

* GF2e: scalar arithmetic with the fixed reduction polynomials
  x^16+x^5+x^3+x+1, x^32+x^7+x^3+x^2+1, x^64+x^4+x^3+x+1 (all verified
  irreducible by the test suite). Used by the group-algebra types.

* VecGF: numpy kernels over a tower GF(2^16) -> GF(2^32) -> GF(2^64) built
  from y^2+y+C and z^2+z+C*y with C = 0x800 (trace 1, so both quadratics are
  irreducible). Elements pack 16-bit limbs into one uint64. Multiplication is
  a handful of log/exp table gathers instead of a 64-step carry-less loop;
  the detection engine runs on this representation. Isomorphic to the fields
  above, not bit-compatible for l in {32, 64}; identical for l = 16.

The l=16 log/exp tables use generator 3 of GF(2^16)* (order 65535).
"""
from __future__ import annotations

import numpy as np

POLY = {
    16: (1 << 16) | (1 << 5) | (1 << 3) | (1 << 1) | 1,
    32: (1 << 32) | (1 << 7) | (1 << 3) | (1 << 2) | 1,
    64: (1 << 64) | (1 << 4) | (1 << 3) | (1 << 1) | 1,
}

_GEN16 = 3
TOWER_C = 0x800  # trace-1 constant for both quadratic extensions


class GF2e:
    """Scalar GF(2^l) with the fixed reduction polynomial; values are ints."""

    def __init__(self, ell: int):
        if ell not in POLY:
            raise ValueError("l must be one of 16, 32, 64")
        self.ell = ell
        self.poly = POLY[ell]
        self.mask = (1 << ell) - 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        r = 0
        top = 1 << self.ell
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.poly
        return r

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("no inverse of 0")
        return self.pow(a, (1 << self.ell) - 2)


def _build_tables16():
    f = GF2e(16)
    exp = [0] * 65535
    v = 1
    for i in range(65535):
        exp[i] = v
        v = f.mul(v, _GEN16)
    log = [0] * 65536
    for i, e in enumerate(exp):
        log[e] = i
    return exp, log


_EXP16_LIST, _LOG16_LIST = _build_tables16()

# zero marker: any log sum involving a zero lands at >= BIG and reads 0
_BIG = 1 << 18
_EXPX_SIZE = 2 * _BIG + 65536

LOG16 = np.full(65536, _BIG, dtype=np.int64)
LOG16[1:] = np.array(_LOG16_LIST[1:], dtype=np.int64)
EXPX = np.zeros(_EXPX_SIZE, dtype=np.uint64)
_exp_arr = np.array(_EXP16_LIST, dtype=np.uint64)
# non-zero region: sums of up to two logs plus one constant log < 3*65535
_reach = 3 * 65535
EXPX[:_reach] = _exp_arr[np.arange(_reach) % 65535]

_LOGC = _LOG16_LIST[TOWER_C]
_LOGC2 = (2 * _LOGC) % 65535

_M16 = np.uint64(0xFFFF)
_M32 = np.uint64(0xFFFFFFFF)
_S16 = np.uint64(16)
_S32 = np.uint64(32)


def mul16v(a, b):
    return EXPX[LOG16[a] + LOG16[b]]


def _mul32v(a, b):
    a0 = a & _M16
    a1 = (a >> _S16) & _M16
    b0 = b & _M16
    b1 = (b >> _S16) & _M16
    la0 = LOG16[a0]
    la1 = LOG16[a1]
    lb0 = LOG16[b0]
    lb1 = LOG16[b1]
    m0 = EXPX[la0 + lb0]
    s2 = la1 + lb1
    cm2 = EXPX[s2 + _LOGC]
    m1 = EXPX[LOG16[a0 ^ a1] + LOG16[b0 ^ b1]]
    return (m0 ^ cm2) | ((m1 ^ m0) << _S16)


def _dmul32v(x):
    # multiply by D = C*y in GF(2^32): (x0 + x1 y) -> (C^2 x1) + C(x0+x1) y
    x0 = x & _M16
    x1 = (x >> _S16) & _M16
    lo = EXPX[LOG16[x1] + _LOGC2]
    hi = EXPX[LOG16[x0 ^ x1] + _LOGC]
    return lo | (hi << _S16)


def _mul64v(a, b):
    a0 = a & _M32
    a1 = (a >> _S32) & _M32
    b0 = b & _M32
    b1 = (b >> _S32) & _M32
    m0 = _mul32v(a0, b0)
    m2 = _mul32v(a1, b1)
    m1 = _mul32v(a0 ^ a1, b0 ^ b1)
    return (m0 ^ _dmul32v(m2)) | ((m1 ^ m0) << _S32)


def _mulscalar16_32(a, s_log):
    a0 = a & _M16
    a1 = (a >> _S16) & _M16
    return EXPX[LOG16[a0] + s_log] | (EXPX[LOG16[a1] + s_log] << _S16)


def _mulscalar16_64(a, s_log):
    lo = _mulscalar16_32(a & _M32, s_log)
    hi = _mulscalar16_32((a >> _S32) & _M32, s_log)
    return lo | (hi << _S32)


class VecGF:
    """Vectorized tower-field arithmetic on uint64 numpy arrays."""

    def __init__(self, ell: int):
        if ell not in (16, 32, 64):
            raise ValueError("l must be one of 16, 32, 64")
        self.ell = ell
        self.mask = np.uint64((1 << ell) - 1)

    def mul(self, a, b):
        if self.ell == 16:
            return mul16v(a, b)
        if self.ell == 32:
            return _mul32v(a, b)
        return _mul64v(a, b)

    def mul_scalar16(self, a, s):
        """Multiply by elements of the GF(2^16) subfield (s < 2^16, limb-wise)."""
        s_log = LOG16[s]
        if self.ell == 16:
            return EXPX[LOG16[a] + s_log]
        if self.ell == 32:
            return _mulscalar16_32(a, s_log)
        return _mulscalar16_64(a, s_log)

    # scalar reference ops (python ints) for tests
    def mul_scalar(self, a: int, b: int) -> int:
        if self.ell == 16:
            return _EXP16_LIST[(_LOG16_LIST[a] + _LOG16_LIST[b]) % 65535] if a and b else 0
        half = self.ell // 2
        m = (1 << half) - 1
        sub = VecGF(half)
        a0, a1 = a & m, a >> half
        b0, b1 = b & m, b >> half
        m0 = sub.mul_scalar(a0, b0)
        m2 = sub.mul_scalar(a1, b1)
        m1 = sub.mul_scalar(a0 ^ a1, b0 ^ b1)
        if self.ell == 32:
            cm2 = sub.mul_scalar(m2, TOWER_C)
        else:
            cm2 = sub.mul_scalar(m2, TOWER_C << 16)  # D = C*y in GF(2^32)
        return (m0 ^ cm2) | ((m1 ^ m0) << half)


# ---------------------------------------------------------------------------
# Vectorized multiplication in the reference polynomial representation, used
# by the dense group-algebra backends. l=16 shares the tower tables (same field).
# ---------------------------------------------------------------------------


def refmul16v(a, b):
    return mul16v(a, b)


def refmul32v(a, b):
    acc = np.zeros_like(a)
    one = np.uint64(1)
    for i in range(32):
        bit = (b >> np.uint64(i)) & one
        m = np.uint64(0) - bit
        acc ^= (a << np.uint64(i)) & m
    hi = acc >> _S32
    v = hi ^ (hi << np.uint64(2)) ^ (hi << np.uint64(3)) ^ (hi << np.uint64(7))
    lo = (acc & _M32) ^ (v & _M32)
    c = v >> _S32
    lo ^= c ^ (c << np.uint64(2)) ^ (c << np.uint64(3)) ^ (c << np.uint64(7))
    return lo & _M32


def refmul64v(a, b):
    lo = np.zeros_like(a)
    hi = np.zeros_like(a)
    one = np.uint64(1)
    for i in range(64):
        bit = (b >> np.uint64(i)) & one
        m = np.uint64(0) - bit
        if i == 0:
            lo ^= a & m
        else:
            lo ^= (a << np.uint64(i)) & m
            hi ^= (a >> np.uint64(64 - i)) & m
    # fold hi: x^64 = x^4 + x^3 + x + 1
    for _ in range(2):
        t = hi
        hi = (t >> np.uint64(60)) ^ (t >> np.uint64(61)) ^ (t >> np.uint64(63))
        lo ^= t ^ (t << one) ^ (t << np.uint64(3)) ^ (t << np.uint64(4))
    return lo


def refmulv(ell: int, a, b):
    if ell == 16:
        return refmul16v(a, b)
    if ell == 32:
        return refmul32v(a, b)
    return refmul64v(a, b)
