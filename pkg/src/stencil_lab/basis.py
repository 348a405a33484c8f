"""Radial kernels, monomial bases and linear differential operators.

Kernels expose the radial value ``phi(r)`` together with the two chain-rule
helpers ``f1(r) = phi'(r)/r`` and ``f2(r) = (phi'' - phi'/r)/r**2``.  All
first and second partial derivatives of ``phi(||v||)`` follow from these:

    d_i   phi = v_i * f1
    d_i d_j phi = delta_ij * f1 + v_i * v_j * f2

Every helper accepts numpy arrays of radii, which is what the batched
weight assembly relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "RadialKernel",
    "PhsKernel",
    "TpsKernel",
    "GaussianKernel",
    "MultiquadricKernel",
    "InverseMultiquadricKernel",
    "kernel_value",
    "kernel_derivative",
    "kernel_from_name",
    "monomial_basis",
    "monomial_derivative",
    "LinearOperator",
    "operator_registry",
    "normal_derivative",
    "laplacian",
    "identity",
    "apply_to_monomial",
]


# --------------------------------------------------------------------------
# radial kernels
# --------------------------------------------------------------------------

class RadialKernel:
    """Base class; subclasses implement value/f1/f2 for r >= 0 arrays."""

    name = "radial"

    def value(self, r):
        raise NotImplementedError

    def f1(self, r):
        raise NotImplementedError

    def f2(self, r):
        raise NotImplementedError

    def __repr__(self):
        return self.name


@dataclass(frozen=True, repr=False)
class PhsKernel(RadialKernel):
    """Odd polyharmonic spline phi(r) = r**(2k+1)."""

    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ConfigurationError("PHS exponent parameter k must be >= 1")

    @property
    def name(self):
        return f"phs{2 * self.k + 1}"

    def value(self, r):
        return np.asarray(r) ** (2 * self.k + 1)

    def f1(self, r):
        p = 2 * self.k + 1
        return p * np.asarray(r) ** (p - 2)

    def f2(self, r):
        # (p-2) >= 1 for k >= 1 keeps f1 finite at 0; f2 alone diverges for
        # k=1 but always appears multiplied by v_i v_j ~ r^2, so callers mask
        # r == 0 (the limit of the full derivative is 0).
        p = 2 * self.k + 1
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore"):
            return p * (p - 2) * r ** (p - 4)


@dataclass(frozen=True, repr=False)
class TpsKernel(RadialKernel):
    """Thin plate spline phi(r) = r**(2k) * log(r), with phi(0) = 0."""

    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ConfigurationError("TPS parameter k must be >= 1")

    @property
    def name(self):
        return f"tps{2 * self.k}"

    def value(self, r):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = r ** (2 * self.k) * np.log(r)
        return np.where(r == 0.0, 0.0, out)

    def f1(self, r):
        k = self.k
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = r ** (2 * k - 2) * (2 * k * np.log(r) + 1.0)
        # r -> 0 limit is 0 for k >= 2; for k = 1 the limit of v_i*f1 is
        # still 0, and the lone f1 value at 0 only enters multiplied by
        # delta_ij in second derivatives, where the 0 convention applies.
        return np.where(r == 0.0, 0.0, out)

    def f2(self, r):
        k = self.k
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = r ** (2 * k - 4) * ((2 * k - 2) * 2 * k * np.log(r) + 4 * k - 2.0)
        return np.where(r == 0.0, 0.0, out)


@dataclass(frozen=True, repr=False)
class GaussianKernel(RadialKernel):
    """phi(r) = exp(-(eps*r)**2)."""

    eps: float = 1.0

    def __post_init__(self):
        if self.eps <= 0:
            raise ConfigurationError("Gaussian shape parameter must be positive")

    @property
    def name(self):
        return f"gauss:{self.eps:g}"

    def value(self, r):
        return np.exp(-(self.eps * np.asarray(r)) ** 2)

    def f1(self, r):
        e2 = self.eps ** 2
        return -2.0 * e2 * np.exp(-e2 * np.asarray(r) ** 2)

    def f2(self, r):
        e2 = self.eps ** 2
        return 4.0 * e2 ** 2 * np.exp(-e2 * np.asarray(r) ** 2)


@dataclass(frozen=True, repr=False)
class MultiquadricKernel(RadialKernel):
    """phi(r) = sqrt(1 + (eps*r)**2)."""

    eps: float = 1.0

    def __post_init__(self):
        if self.eps <= 0:
            raise ConfigurationError("MQ shape parameter must be positive")

    @property
    def name(self):
        return f"mq:{self.eps:g}"

    def value(self, r):
        return np.sqrt(1.0 + (self.eps * np.asarray(r)) ** 2)

    def f1(self, r):
        u = 1.0 + (self.eps * np.asarray(r)) ** 2
        return self.eps ** 2 / np.sqrt(u)

    def f2(self, r):
        u = 1.0 + (self.eps * np.asarray(r)) ** 2
        return -(self.eps ** 4) * u ** (-1.5)


@dataclass(frozen=True, repr=False)
class InverseMultiquadricKernel(RadialKernel):
    """phi(r) = (1 + (eps*r)**2)**(-1/2)."""

    eps: float = 1.0

    def __post_init__(self):
        if self.eps <= 0:
            raise ConfigurationError("IMQ shape parameter must be positive")

    @property
    def name(self):
        return f"imq:{self.eps:g}"

    def value(self, r):
        u = 1.0 + (self.eps * np.asarray(r)) ** 2
        return 1.0 / np.sqrt(u)

    def f1(self, r):
        u = 1.0 + (self.eps * np.asarray(r)) ** 2
        return -(self.eps ** 2) * u ** (-1.5)

    def f2(self, r):
        u = 1.0 + (self.eps * np.asarray(r)) ** 2
        return 3.0 * self.eps ** 4 * u ** (-2.5)


def kernel_from_name(name: str) -> RadialKernel:
    """Parse a kernel id: phs3, phs5, tps2, tps4, gauss:<eps>, mq:<eps>, imq:<eps>."""
    name = name.strip().lower()
    if name.startswith("phs"):
        p = int(name[3:])
        if p % 2 == 0:
            raise ConfigurationError(f"phs exponent must be odd, got {name!r}")
        return PhsKernel(k=(p - 1) // 2)
    if name.startswith("tps"):
        p = int(name[3:])
        if p % 2 != 0:
            raise ConfigurationError(f"tps exponent must be even, got {name!r}")
        return TpsKernel(k=p // 2)
    for prefix, cls in (("gauss", GaussianKernel), ("mq", MultiquadricKernel),
                        ("imq", InverseMultiquadricKernel)):
        if name == prefix or name.startswith(prefix + ":"):
            eps = float(name.split(":", 1)[1]) if ":" in name else 1.0
            return cls(eps=eps)
    raise ConfigurationError(f"unknown kernel id {name!r}")


def kernel_value(kernel: RadialKernel, r):
    """phi(r); array friendly."""
    return kernel.value(r)


def kernel_derivative(kernel: RadialKernel, alpha: Sequence[int], v) -> float:
    """D^alpha of x -> phi(||x||), evaluated at the displacement v.

    Supports |alpha| <= 2.  Removable singularities at v = 0 evaluate to
    their analytic limit (0 for PHS and for TPS k >= 2); the TPS k = 1
    second derivative at 0 uses the 0 convention.
    """
    v = np.atleast_1d(np.asarray(v, dtype=float))
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != v.shape[-1]:
        raise ValueError("alpha and displacement dimension mismatch")
    order = sum(alpha)
    r = float(np.linalg.norm(v))
    if order == 0:
        return float(kernel.value(r))
    if order == 1:
        i = alpha.index(1)
        if r == 0.0:
            return 0.0
        return float(v[i] * kernel.f1(r))
    if order == 2:
        if r == 0.0:
            if isinstance(kernel, (PhsKernel, TpsKernel)):
                return 0.0
            # smooth kernels: d_i d_j phi(0) = delta_ij * f1(0)
            if 2 in alpha:
                return float(kernel.f1(0.0))
            return 0.0
        if 2 in alpha:
            i = alpha.index(2)
            return float(kernel.f1(r) + v[i] ** 2 * kernel.f2(r))
        i, j = [k for k, a in enumerate(alpha) if a == 1]
        return float(v[i] * v[j] * kernel.f2(r))
    raise ValueError(f"kernel derivatives only implemented up to order 2, got {alpha}")


# --------------------------------------------------------------------------
# monomials
# --------------------------------------------------------------------------

def monomial_basis(m: int, d: int) -> list[tuple[int, ...]]:
    """Exponent tuples of all d-variate monomials of degree <= m.

    Graded order (total degree, then first exponent descending); the list
    has C(m+d, d) entries and is deterministic.
    """
    if m < 0 or d not in (1, 2, 3):
        raise ConfigurationError(f"invalid monomial basis request m={m}, d={d}")
    out: list[tuple[int, ...]] = []
    for total in range(m + 1):
        out.extend(_exponents_of_degree(total, d))
    assert len(out) == math.comb(m + d, d)
    return out


def _exponents_of_degree(total, d):
    if d == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in _exponents_of_degree(total - first, d - 1):
            out.append((first,) + rest)
    return out


def monomial_derivative(exponent: Sequence[int], alpha: Sequence[int], x) -> float:
    """D^alpha of the monomial x^exponent evaluated at x (0**0 == 1)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = 1.0
    for e, a, xi in zip(exponent, alpha, x):
        if a > e:
            return 0.0
        c = 1.0
        for j in range(a):
            c *= e - j
        out *= c * xi ** (e - a)
    return float(out)


# --------------------------------------------------------------------------
# linear differential operators
# --------------------------------------------------------------------------

Coefficient = float | Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class LinearOperator:
    """Sum of (coefficient, derivative multi-index) terms.

    Coefficients are either constants or callables of position; callables
    must accept (..., d) arrays and return (...) arrays.
    """

    terms: tuple[tuple[Coefficient, tuple[int, ...]], ...]
    name: str = "operator"

    def __post_init__(self):
        if not self.terms:
            raise ConfigurationError("operator needs at least one term")

    @property
    def dimension(self) -> int:
        return len(self.terms[0][1])

    @property
    def order(self) -> int:
        return max(sum(a) for _, a in self.terms)

    def coefficient_values(self, coeff: Coefficient, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if callable(coeff):
            return np.asarray(coeff(pts), dtype=float)
        return np.full(pts.shape[0], float(coeff))

    def __repr__(self):
        return f"LinearOperator({self.name})"


def laplacian(d: int) -> LinearOperator:
    terms = []
    for i in range(d):
        a = [0] * d
        a[i] = 2
        terms.append((1.0, tuple(a)))
    return LinearOperator(tuple(terms), name="laplacian")


def identity(d: int) -> LinearOperator:
    return LinearOperator(((1.0, (0,) * d),), name="identity")


def normal_derivative(normal) -> LinearOperator:
    """Directional derivative along the given (unit) vector."""
    normal = np.asarray(normal, dtype=float)
    d = normal.shape[-1]
    terms = []
    for i in range(d):
        a = [0] * d
        a[i] = 1
        terms.append((float(normal[i]), tuple(a)))
    return LinearOperator(tuple(terms), name="normal_derivative")


def operator_registry(name: str, d: int) -> LinearOperator:
    """Named operators: laplacian, identity, L1..L5 (L1..L5 are 2D)."""
    key = name.strip().lower()
    if key == "laplacian":
        return laplacian(d)
    if key == "identity":
        return identity(d)
    if key in ("l1", "l2", "l3", "l4", "l5"):
        if d != 2:
            raise ConfigurationError(f"{name} is defined for 2D only")
        lap = laplacian(2).terms
        if key == "l1":
            return LinearOperator(lap + ((1.0, (1, 1)),), name="L1")
        if key == "l2":
            return LinearOperator(lap + ((1.0, (1, 0)), (1.0, (0, 1))), name="L2")
        if key == "l3":
            return LinearOperator(
                (
                    (lambda p: np.asarray(p)[..., 0], (2, 0)),
                    (lambda p: np.asarray(p)[..., 1] ** 2, (0, 2)),
                ),
                name="L3",
            )
        if key == "l4":
            return LinearOperator(lap + ((1.0, (0, 0)),), name="L4")
        return LinearOperator(lap + ((10.0, (0, 0)),), name="L5")
    raise ConfigurationError(f"unknown operator id {name!r}")


def apply_to_monomial(op: LinearOperator, exponent: Sequence[int], x) -> float:
    """(L p)(x) for the monomial x^exponent, exact."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    total = 0.0
    for coeff, alpha in op.terms:
        c = float(coeff(x[None, :])[0]) if callable(coeff) else float(coeff)
        total += c * monomial_derivative(exponent, alpha, x)
    return total
