"""Spin tomograms of X states: joint outcome probabilities along rotated axes.

Measurement directions are parameterized by Euler angles of local SU(2)
rotations.  For X states the tomogram depends on the polar angles and on the
third Euler angles only; the second angle cancels and is kept just for
completeness of the rotation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .xstate import XParams, ZeroDenominatorError, require_valid
from .dense import to_dense


class InvalidAngleError(ValueError):
    """Raised for a polar angle outside [0, pi] or a non-finite angle."""


@dataclass(frozen=True)
class Direction:
    """Measurement axis for one qubit, as Euler angles (theta, phi, psi).

    ``theta`` is the polar angle and must lie in [0, pi]; out-of-range
    values are rejected rather than wrapped.
    """

    theta: float
    phi: float = 0.0
    psi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", float(self.phi))
        object.__setattr__(self, "psi", float(self.psi))
        if not all(math.isfinite(x) for x in (self.theta, self.phi, self.psi)):
            raise InvalidAngleError(f"angles must be finite, got {self}")
        if not 0.0 <= self.theta <= math.pi:
            raise InvalidAngleError(f"theta must lie in [0, pi], got {self.theta}")


@dataclass(frozen=True)
class TomogramTable:
    """Joint spin-projection probabilities for one direction pair.

    Outcomes are labeled u (up) and d (down) for the first and second qubit
    in that order.
    """

    w_uu: float
    w_ud: float
    w_du: float
    w_dd: float
    dir_a: Direction
    dir_b: Direction

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w_uu, self.w_ud, self.w_du, self.w_dd)


def su2_matrix(direction: Direction) -> np.ndarray:
    """SU(2) rotation for the Euler angles of ``direction``."""
    half = 0.5 * direction.theta
    c, s = math.cos(half), math.sin(half)
    ep = cmath.exp(0.5j * (direction.phi + direction.psi))
    em = cmath.exp(0.5j * (direction.phi - direction.psi))
    return np.array(
        [[c * ep, s * em], [-s * em.conjugate(), c * ep.conjugate()]],
        dtype=complex,
    )


def tomogram(p: XParams, dir_a: Direction, dir_b: Direction) -> TomogramTable:
    """Closed-form joint tomogram of a valid X state.

    The four probabilities mix (a, b) through products of squared half-angle
    cosines/sines, plus one interference term fed by the coherences:

        w_uu = w_dd = a f+ + b f- + r,
        w_ud = w_du = a f- + b f+ - r,
        r = sin(theta_a) sin(theta_b)
            * Re(c e^{i(psi_a - psi_b)} + d e^{i(psi_a + psi_b)}) / 2.

    The second Euler angles drop out entirely.
    """
    require_valid(p)
    ca = math.cos(0.5 * dir_a.theta) ** 2
    sa = 1.0 - ca
    cb = math.cos(0.5 * dir_b.theta) ** 2
    sb = 1.0 - cb
    f_plus = ca * cb + sa * sb
    f_minus = ca * sb + sa * cb
    r = (
        0.5
        * math.sin(dir_a.theta)
        * math.sin(dir_b.theta)
        * (
            p.c * cmath.exp(1j * (dir_a.psi - dir_b.psi))
            + p.d * cmath.exp(1j * (dir_a.psi + dir_b.psi))
        ).real
    )
    same = p.a * f_plus + p.b * f_minus + r
    cross = p.a * f_minus + p.b * f_plus - r
    return TomogramTable(
        w_uu=same, w_ud=cross, w_du=cross, w_dd=same, dir_a=dir_a, dir_b=dir_b
    )


def tomogram_dense_oracle(p: XParams, dir_a: Direction, dir_b: Direction) -> TomogramTable:
    """Tomogram by dense rotation: diagonal of (u_a x u_b) rho (u_a x u_b)^H."""
    require_valid(p)
    u = np.kron(su2_matrix(dir_a), su2_matrix(dir_b))
    w = np.diag(u @ to_dense(p) @ u.conj().T).real
    return TomogramTable(
        w_uu=float(w[0]),
        w_ud=float(w[1]),
        w_du=float(w[2]),
        w_dd=float(w[3]),
        dir_a=dir_a,
        dir_b=dir_b,
    )


def marginals(table: TomogramTable) -> tuple[tuple[float, float], tuple[float, float]]:
    """Single-qubit outcome distributions implied by a joint tomogram."""
    first = (table.w_uu + table.w_ud, table.w_du + table.w_dd)
    second = (table.w_uu + table.w_du, table.w_ud + table.w_dd)
    return first, second


# Kronecker sequence generators for the deterministic half of direction sets.
_KRONECKER_ALPHAS = (
    math.sqrt(2.0) - 1.0,
    math.sqrt(3.0) - 1.0,
    math.sqrt(5.0) - 2.0,
    math.sqrt(7.0) - 2.0,
)


def _pair_from_unit_cube(x: tuple[float, float, float, float]) -> tuple[Direction, Direction]:
    # arccos maps a uniform variate to a sphere-uniform polar angle
    theta_a = math.acos(1.0 - 2.0 * x[0])
    theta_b = math.acos(1.0 - 2.0 * x[1])
    psi_a = 2.0 * math.pi * x[2]
    psi_b = 2.0 * math.pi * x[3]
    return Direction(theta=theta_a, psi=psi_a), Direction(theta=theta_b, psi=psi_b)


def direction_pairs(count: int, seed: int) -> list[tuple[Direction, Direction]]:
    """Reproducible direction pairs for inequality and information sweeps.

    The first half walks a low-discrepancy Kronecker sequence on the
    (theta_a, theta_b, psi_a, psi_b) cube, the rest is drawn from a PRNG
    seeded with ``seed``; the same arguments always give the same list.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    pairs = []
    n_grid = (count + 1) // 2
    for k in range(1, n_grid + 1):
        x = tuple(math.modf(k * alpha)[0] for alpha in _KRONECKER_ALPHAS)
        pairs.append(_pair_from_unit_cube(x))
    rng = np.random.default_rng(seed)
    while len(pairs) < count:
        x = tuple(rng.uniform(0.0, 1.0, size=4))
        pairs.append(_pair_from_unit_cube(x))
    return pairs


def werner_tomogram(p: float, n: int, dir_a: Direction, dir_b: Direction) -> TomogramTable:
    """Tomogram of the power-map image of a Werner state, in closed form.

    Written directly over the power sums u = (1+3p)^n and v = (1-p)^n
    rather than through the channel, so it doubles as an independent check
    of the general pipeline.  Valid for any real mixing weight whose image
    is a genuine state; raises otherwise.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"power must be a positive integer, got {n!r}")
    u = (1.0 + 3.0 * p) ** n
    v = (1.0 - p) ** n
    norm = u + 3.0 * v
    if abs(norm) < 1e-12 * (abs(u) + 3.0 * abs(v)) or norm == 0.0:
        raise ZeroDenominatorError(f"normalization vanishes at p={p}, n={n}")
    hi = 0.5 * (u + v) / norm
    lo = v / norm
    image = XParams(a=hi, b=lo, c=0.0, d=hi - lo)
    require_valid(image)
    ca = math.cos(0.5 * dir_a.theta) ** 2
    sa = 1.0 - ca
    cb = math.cos(0.5 * dir_b.theta) ** 2
    sb = 1.0 - cb
    f_plus = ca * cb + sa * sb
    f_minus = ca * sb + sa * cb
    r = (
        0.5
        * (hi - lo)
        * math.sin(dir_a.theta)
        * math.sin(dir_b.theta)
        * math.cos(dir_a.psi + dir_b.psi)
    )
    same = hi * f_plus + lo * f_minus + r
    cross = hi * f_minus + lo * f_plus - r
    return TomogramTable(
        w_uu=same, w_ud=cross, w_du=cross, w_dd=same, dir_a=dir_a, dir_b=dir_b
    )
