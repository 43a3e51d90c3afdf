"""Core parameterization of two-qubit X states and the nonlinear power map.

An X state is fixed by two real diagonal entries and two complex coherences,

    rho = [[a, 0, 0, d],
           [0, b, c, 0],
           [0, c*, b, 0],
           [d*, 0, 0, a]],

with unit trace 2(a + b) = 1.  Everything here works on the parameter
quadruple directly; dense 4x4 arithmetic lives in :mod:`xstates.dense` and is
used only for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

# Numerical guard bands shared across the package.
EPS_TRACE = 1e-9
EPS_PSD = 1e-12


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when the power-map normalization Tr rho^n vanishes."""


class InvalidStateError(ValueError):
    """Raised when an operation requires a genuine density matrix.

    Carries the offending :class:`StateClass` as ``state_class``.
    """

    def __init__(self, state_class: "StateClass", message: str | None = None):
        self.state_class = state_class
        super().__init__(message or f"not a valid density matrix: {state_class.value}")


class StateClass(Enum):
    """Separability verdict for an X-state parameter set."""

    SEPARABLE = "separable"
    ENTANGLED = "entangled"
    INVALID_NOT_PSD = "invalid_not_psd"
    INVALID_TRACE = "invalid_trace"


@dataclass(frozen=True)
class XParams:
    """Parameter quadruple (a, b, c, d) of a two-qubit X matrix.

    ``a`` and ``b`` are the outer/inner diagonal entries, each appearing
    twice; ``c`` and ``d`` are the inner and outer anti-diagonal coherences.
    The container itself does not require the parameters to describe a valid
    state; see :func:`validate`.
    """

    a: float
    b: float
    c: complex
    d: complex

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "d", complex(self.d))
        if not all(
            math.isfinite(x)
            for x in (self.a, self.b, self.c.real, self.c.imag, self.d.real, self.d.imag)
        ):
            raise ValueError(f"X parameters must be finite, got {self}")

    @property
    def trace(self) -> float:
        return 2.0 * (self.a + self.b)


@dataclass(frozen=True)
class XSpectrum:
    """Eigenvalues of an X matrix together with the coherence phases.

    ``lam`` is ordered (a+|d|, b+|c|, b-|c|, a-|d|); the phases fix the
    eigenvectors, which mix only the outer pair (1, 4) and the inner
    pair (2, 3) of basis states.
    """

    lam: tuple[float, float, float, float]
    phase_c: complex
    phase_d: complex

    def eigenvectors(self) -> np.ndarray:
        """Return the four eigenvectors as columns, ordered like ``lam``."""
        pc, pd = self.phase_c, self.phase_d
        r = 1.0 / math.sqrt(2.0)
        v = np.zeros((4, 4), dtype=complex)
        v[:, 0] = (r, 0, 0, r * pd.conjugate())
        v[:, 1] = (0, r, r * pc.conjugate(), 0)
        v[:, 2] = (0, -r * pc, r, 0)
        v[:, 3] = (-r * pd, 0, 0, r)
        return v


@dataclass(frozen=True)
class ChannelResult:
    """Image of an X state under rho -> rho^n / Tr rho^n."""

    params: XParams
    n: int
    valid: bool


def _phase(z: complex) -> complex:
    # Phase convention: phase(0) = 1 keeps formulas well defined at zero.
    m = abs(z)
    return z / m if m else complex(1.0)


def validate(p: XParams) -> StateClass | None:
    """Check trace normalization and positivity.

    Returns ``None`` for a genuine density matrix, otherwise the failing
    :class:`StateClass`.  Trace is tested first: |2(a+b) - 1| <= EPS_TRACE.
    Positivity reduces to a >= |d| and b >= |c| within EPS_PSD, which also
    covers negative ``a`` or ``b``.
    """
    if abs(p.trace - 1.0) > EPS_TRACE:
        return StateClass.INVALID_TRACE
    if p.a - abs(p.d) < -EPS_PSD or p.b - abs(p.c) < -EPS_PSD:
        return StateClass.INVALID_NOT_PSD
    return None


def is_valid(p: XParams) -> bool:
    return validate(p) is None


def require_valid(p: XParams) -> None:
    """Raise :class:`InvalidStateError` unless ``p`` is a genuine state."""
    bad = validate(p)
    if bad is not None:
        raise InvalidStateError(bad)


def spectrum(p: XParams) -> XSpectrum:
    """Closed-form spectrum of the X matrix.

    The outer block contributes a +- |d|, the inner block b +- |c|; no
    diagonalization is performed.
    """
    cm, dm = abs(p.c), abs(p.d)
    lam = (p.a + dm, p.b + cm, p.b - cm, p.a - dm)
    return XSpectrum(lam=lam, phase_c=_phase(p.c), phase_d=_phase(p.d))


def apply_power_channel(p: XParams, n: int) -> ChannelResult:
    """Apply the nonlinear map rho -> rho^n / Tr rho^n in closed form.

    The image is again an X matrix whose parameters are power sums of the
    input spectrum over the normalization 2 * sum(lam_i^n); the coherence
    phases are carried over unchanged.  Raises
    :class:`ZeroDenominatorError` when the normalization cancels to zero,
    which can happen for odd ``n`` on non-PSD input.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"power must be a positive integer, got {n!r}")
    s = spectrum(p)
    l1, l2, l3, l4 = (x ** n for x in s.lam)
    denom = 2.0 * (l1 + l2 + l3 + l4)
    scale = 2.0 * (abs(l1) + abs(l2) + abs(l3) + abs(l4))
    if scale == 0.0 or abs(denom) < 1e-12 * scale:
        raise ZeroDenominatorError(f"Tr rho^{n} vanishes for {p}")
    out = XParams(
        a=(l1 + l4) / denom,
        b=(l2 + l3) / denom,
        c=(l2 - l3) / denom * s.phase_c,
        d=(l1 - l4) / denom * s.phase_d,
    )
    return ChannelResult(params=out, n=n, valid=is_valid(out))


def ppt(p: XParams) -> XParams:
    """Partial transpose over the second qubit: swaps the two coherences."""
    return XParams(a=p.a, b=p.b, c=p.d, d=p.c)


def classify(p: XParams) -> StateClass:
    """Separability of an X state via the partial-transpose spectrum.

    Invalid inputs return their validation failure.  Otherwise the state is
    separable iff the partially transposed matrix stays PSD, i.e.
    a >= |c| and b >= |d| within EPS_PSD; the boundary counts as separable.
    """
    bad = validate(p)
    if bad is not None:
        return bad
    if p.a - abs(p.c) < -EPS_PSD or p.b - abs(p.d) < -EPS_PSD:
        return StateClass.ENTANGLED
    return StateClass.SEPARABLE


def werner(p: float) -> XParams:
    """Werner family: p-weighted Bell projector mixed with white noise."""
    return XParams(a=(1.0 + p) / 4.0, b=(1.0 - p) / 4.0, c=0.0, d=p / 2.0)


def werner_entanglement_threshold(n: int) -> float:
    """Mixing weight above which the power-map image of a Werner state is entangled.

    Closed form 1 - 4 / (3**(1/n) + 3); equals 1/3 at n = 1 and decreases
    toward 0 as n grows.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"power must be a positive integer, got {n!r}")
    return 1.0 - 4.0 / (3.0 ** (1.0 / n) + 3.0)


def werner_entanglement_threshold_lower(n: int) -> float:
    """Lower entanglement threshold of the Werner family, even powers only.

    For even ``n`` the image is a valid state for every real mixing weight
    and becomes entangled again below 1 + 4 / (3**(1/n) - 3) < -1.  Odd
    powers have no lower branch (the state itself loses positivity), so a
    ``ValueError`` is raised.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"power must be a positive integer, got {n!r}")
    if n % 2:
        raise ValueError("lower threshold exists only for even powers")
    return 1.0 + 4.0 / (3.0 ** (1.0 / n) - 3.0)


def reduced(p: XParams, subsystem: int) -> np.ndarray:
    """Reduced density matrix of one qubit.

    Both partial traces of an X matrix are diagonal with equal entries
    a + b, so every valid X state has maximally mixed marginals.
    """
    if subsystem not in (1, 2):
        raise ValueError(f"subsystem must be 1 or 2, got {subsystem!r}")
    require_valid(p)
    q = p.a + p.b
    return np.array([[q, 0.0], [0.0, q]])
