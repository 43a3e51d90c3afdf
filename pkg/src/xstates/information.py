"""Entropies and mutual information, von Neumann and tomographic.

All logarithms are natural.  The quantum mutual information of a valid X
state is ln 4 - S(rho) because both marginals are maximally mixed; the
tomographic (Shannon) mutual information of any measured direction pair is
bounded by it from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .xstate import (
    EPS_PSD,
    EPS_TRACE,
    InvalidStateError,
    StateClass,
    XParams,
    apply_power_channel,
    require_valid,
    spectrum,
    validate,
    werner,
)
from .tomography import Direction, TomogramTable, marginals, tomogram

# Slack allowed before an inequality counts as violated.
INEQ_TOL = 1e-10

_LN4 = math.log(4.0)


class InvalidSpectrumError(ValueError):
    """Raised for eigenvalue/probability sets that are not a distribution."""


@dataclass(frozen=True)
class InfoReport:
    """Von Neumann entropies of the pair and its marginals."""

    s12: float
    s1: float
    s2: float
    i_n: float


@dataclass(frozen=True)
class ShannonReport:
    """Shannon entropies of one measured tomogram."""

    h12: float
    h1: float
    h2: float
    i_s: float
    dir_a: Direction
    dir_b: Direction


@dataclass(frozen=True)
class InequalityCheck:
    """Information inequalities evaluated for one direction pair."""

    dir_a: Direction
    dir_b: Direction
    i_s: float
    i_n: float
    i_s_le_i_n: bool
    i_s_nonnegative: bool
    i_n_nonnegative: bool
    subadditive: bool


def _distribution_entropy(values: Iterable[float]) -> float:
    # 0 ln 0 = 0, after clamping [-EPS_PSD, 0) to exactly 0.
    total = 0.0
    acc = 0.0
    for x in values:
        if x < -EPS_PSD:
            raise InvalidSpectrumError(f"negative weight {x} below tolerance")
        if x < 0.0:
            x = 0.0
        total += x
        if x > 0.0:
            acc -= x * math.log(x)
    if abs(total - 1.0) > EPS_TRACE:
        raise InvalidSpectrumError(f"weights sum to {total}, expected 1")
    return acc


def von_neumann_entropy(eigenvalues: Sequence[float]) -> float:
    """Entropy -sum(lam ln lam) of an eigenvalue distribution, in nats."""
    return _distribution_entropy(eigenvalues)


def system_entropies(p: XParams) -> InfoReport:
    """Joint and marginal entropies of a valid X state.

    The marginal entropies are computed from the reduced diagonals; for any
    trace-normalized X state they equal ln 2.
    """
    require_valid(p)
    s12 = von_neumann_entropy(spectrum(p).lam)
    q = p.a + p.b
    s1 = _distribution_entropy((q, q))
    s2 = s1
    return InfoReport(s12=s12, s1=s1, s2=s2, i_n=s1 + s2 - s12)


def werner_mutual_information(p: float, n: int) -> float:
    """Quantum mutual information of the power-map image of a Werner state.

    Closed form over the power sums u = (1+3p)^n, v = (1-p)^n with
    normalization z = u + 3v:

        I = ln 4 - ln z + (u ln u + 3 v ln v) / z.

    Requires the image to be a genuine state; equals ln 4 at p = 1 for
    every n.
    """
    image = apply_power_channel(werner(p), n)
    if not image.valid:
        raise InvalidStateError(validate(image.params) or StateClass.INVALID_NOT_PSD)
    u = (1.0 + 3.0 * p) ** n
    v = (1.0 - p) ** n
    z = u + 3.0 * v
    t = 0.0
    if u > 0.0:
        t += u * math.log(u)
    if v > 0.0:
        t += 3.0 * v * math.log(v)
    return _LN4 - math.log(z) + t / z


def shannon_report(p: XParams, dir_a: Direction, dir_b: Direction) -> ShannonReport:
    """Shannon entropies of the tomogram of ``p`` for one direction pair."""
    table = tomogram(p, dir_a, dir_b)
    return shannon_report_from_table(table)


def shannon_report_from_table(table: TomogramTable) -> ShannonReport:
    """Shannon entropies of an already-computed tomogram."""
    h12 = _distribution_entropy(table.as_tuple())
    first, second = marginals(table)
    h1 = _distribution_entropy(first)
    h2 = _distribution_entropy(second)
    return ShannonReport(
        h12=h12, h1=h1, h2=h2, i_s=h1 + h2 - h12, dir_a=table.dir_a, dir_b=table.dir_b
    )


def check_inequalities(
    p: XParams, pairs: Iterable[tuple[Direction, Direction]]
) -> list[InequalityCheck]:
    """Evaluate the information inequalities for each direction pair.

    A violation beyond INEQ_TOL is reported in the returned records, not
    raised; for genuine states none is expected.
    """
    info = system_entropies(p)
    out = []
    for dir_a, dir_b in pairs:
        rep = shannon_report(p, dir_a, dir_b)
        out.append(
            InequalityCheck(
                dir_a=dir_a,
                dir_b=dir_b,
                i_s=rep.i_s,
                i_n=info.i_n,
                i_s_le_i_n=rep.i_s <= info.i_n + INEQ_TOL,
                i_s_nonnegative=rep.i_s >= -INEQ_TOL,
                i_n_nonnegative=info.i_n >= -INEQ_TOL,
                subadditive=info.s1 + info.s2 >= info.s12 - INEQ_TOL,
            )
        )
    return out
