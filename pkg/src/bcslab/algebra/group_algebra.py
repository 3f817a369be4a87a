"""Dense group-algebra elements over GF(2^l) indexed by Z2^k bit-vectors.

Two bases for the same ring:

* GroupBasis: coefficients on group elements; multiplication is XOR
  convolution, (ab)_w = sum_{u^v=w} a_u b_v.
* NilpotentBasis: coefficients on square-free monomials in u_1..u_k with
  u_j^2 = 0; multiplication is disjoint-union (subset) convolution, computed
  through ranked zeta/Moebius transforms in 2^k k^2 field operations.

change_basis is the ring isomorphism sending the group element with support V
to prod_{j in V}(1 + u_j); concretely a superset-zeta transform, which is an
involution in characteristic 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .field import GF2e, refmulv


class Basis(Enum):
    GROUP = "group"
    NILPOTENT = "nilpotent"


class Backend(Enum):
    XOR_CONVOLUTION = "xor"
    SUBSET_CONVOLUTION = "subset"


@dataclass(frozen=True)
class GroupAlgebraElement:
    k_dim: int
    ell: int
    basis: Basis
    coeffs: tuple  # 2^k_dim ints, each < 2^ell

    def __post_init__(self):
        if len(self.coeffs) != 1 << self.k_dim:
            raise ValueError("coefficient vector must have length 2^k_dim")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def add(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        _check_compat(self, other)
        return GroupAlgebraElement(
            self.k_dim, self.ell, self.basis,
            tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def scale(self, lam: int) -> "GroupAlgebraElement":
        f = GF2e(self.ell)
        return GroupAlgebraElement(
            self.k_dim, self.ell, self.basis,
            tuple(f.mul(c, lam) for c in self.coeffs),
        )


def _check_compat(a: GroupAlgebraElement, b: GroupAlgebraElement):
    if a.k_dim != b.k_dim or a.ell != b.ell or a.basis != b.basis:
        raise ValueError("mismatched k_dim/ell/basis")


def ga_zero(k_dim: int, ell: int, basis: Basis = Basis.GROUP) -> GroupAlgebraElement:
    return GroupAlgebraElement(k_dim, ell, basis, (0,) * (1 << k_dim))


def ga_identity(k_dim: int, ell: int, basis: Basis = Basis.GROUP) -> GroupAlgebraElement:
    c = [0] * (1 << k_dim)
    c[0] = 1
    return GroupAlgebraElement(k_dim, ell, basis, tuple(c))


def ga_group_element(k_dim: int, ell: int, v: int, coeff: int = 1) -> GroupAlgebraElement:
    c = [0] * (1 << k_dim)
    c[v] = coeff
    return GroupAlgebraElement(k_dim, ell, Basis.GROUP, tuple(c))


def one_plus_v(k_dim: int, ell: int, v: int, lam: int = 1) -> GroupAlgebraElement:
    """lambda * (identity + v) in the group basis; zero when v = 0 (char 2)."""
    c = [0] * (1 << k_dim)
    c[0] ^= lam
    c[v] ^= lam
    return GroupAlgebraElement(k_dim, ell, Basis.GROUP, tuple(c))


_SPARSE_CUTOFF = 4096


def _xor_convolution(a: GroupAlgebraElement, b: GroupAlgebraElement) -> tuple:
    n = 1 << a.k_dim
    nza = [(u, c) for u, c in enumerate(a.coeffs) if c]
    nzb = [(v, c) for v, c in enumerate(b.coeffs) if c]
    if len(nza) * len(nzb) <= _SPARSE_CUTOFF:
        f = GF2e(a.ell)
        out = [0] * n
        for u, cu in nza:
            for v, cv in nzb:
                out[u ^ v] ^= f.mul(cu, cv)
        return tuple(out)
    av = np.array(a.coeffs, dtype=np.uint64)
    bv = np.array(b.coeffs, dtype=np.uint64)
    idx = np.arange(n, dtype=np.uint64)[:, None] ^ np.arange(n, dtype=np.uint64)[None, :]
    prod = refmulv(a.ell, av[:, None], bv[idx])
    out = np.bitwise_xor.reduce(prod, axis=0)
    return tuple(int(x) for x in out)


def _zeta_inplace(arr: np.ndarray, k: int):
    """Subset-sum transform over XOR scalars; self-inverse in char 2."""
    for j in range(k):
        step = 1 << j
        for base in range(0, arr.shape[-1], step << 1):
            arr[..., base + step : base + 2 * step] ^= arr[..., base : base + step]


def _subset_convolution(a: GroupAlgebraElement, b: GroupAlgebraElement) -> tuple:
    k = a.k_dim
    n = 1 << k
    pc = np.array([bin(m).count("1") for m in range(n)])
    av = np.array(a.coeffs, dtype=np.uint64)
    bv = np.array(b.coeffs, dtype=np.uint64)
    za = np.zeros((k + 1, n), dtype=np.uint64)
    zb = np.zeros((k + 1, n), dtype=np.uint64)
    for r in range(k + 1):
        sel = pc == r
        za[r, sel] = av[sel]
        zb[r, sel] = bv[sel]
    _zeta_inplace(za, k)
    _zeta_inplace(zb, k)
    zc = np.zeros((k + 1, n), dtype=np.uint64)
    for r in range(k + 1):
        for i in range(r + 1):
            zc[r] ^= refmulv(a.ell, za[i], zb[r - i])
    _zeta_inplace(zc, k)  # Moebius: same transform in char 2
    out = np.zeros(n, dtype=np.uint64)
    for r in range(k + 1):
        sel = pc == r
        out[sel] = zc[r, sel]
    return tuple(int(x) for x in out)


def ga_multiply(
    a: GroupAlgebraElement,
    b: GroupAlgebraElement,
    backend: Backend,
) -> GroupAlgebraElement:
    """Ring product; backend must match the basis the operands live in."""
    _check_compat(a, b)
    if backend is Backend.XOR_CONVOLUTION:
        if a.basis is not Basis.GROUP:
            raise ValueError("XOR convolution needs GroupBasis operands")
        return GroupAlgebraElement(a.k_dim, a.ell, Basis.GROUP, _xor_convolution(a, b))
    if a.basis is not Basis.NILPOTENT:
        raise ValueError("subset convolution needs NilpotentBasis operands")
    return GroupAlgebraElement(a.k_dim, a.ell, Basis.NILPOTENT, _subset_convolution(a, b))


def change_basis(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Superset-zeta transform; flips the basis tag. Involution in char 2."""
    k = a.k_dim
    arr = np.array(a.coeffs, dtype=np.uint64)
    for j in range(k):
        step = 1 << j
        for base in range(0, 1 << k, step << 1):
            arr[base : base + step] ^= arr[base + step : base + 2 * step]
    other = Basis.NILPOTENT if a.basis is Basis.GROUP else Basis.GROUP
    return GroupAlgebraElement(k, a.ell, other, tuple(int(x) for x in arr))
