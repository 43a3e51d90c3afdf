"""Entanglement measures for X states: negativity and concurrence.

Both measures collapse to short closed forms on the X family, and both must
agree with the PPT classification: a valid X state is entangled exactly when
its negativity exceeds 1, exactly when its concurrence is positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .xstate import StateClass, XParams, classify, ppt, require_valid, spectrum
from .dense import to_dense


@dataclass(frozen=True)
class EntanglementReport:
    """Classification plus measures; measures are None for invalid input."""

    state_class: StateClass
    negativity: float | None
    concurrence: float | None
    ppt_spectrum: tuple[float, float, float, float]


def negativity(p: XParams) -> float:
    """Trace norm of the partial transpose: 1 for separable states, up to 2."""
    require_valid(p)
    cm, dm = abs(p.c), abs(p.d)
    return abs(p.a + cm) + abs(p.a - cm) + abs(p.b + dm) + abs(p.b - dm)


def spin_flip(p: XParams) -> XParams:
    """Conjugate rho* by sigma_y x sigma_y and read the result back.

    The map is performed on the dense matrix rather than shortcut, even
    though every X matrix is its own spin flip.
    """
    yy = np.zeros((4, 4))
    yy[0, 3] = yy[3, 0] = -1.0
    yy[1, 2] = yy[2, 1] = 1.0
    m = yy @ to_dense(p).conj() @ yy
    return XParams(a=m[0, 0].real, b=m[1, 1].real, c=m[1, 2], d=m[0, 3])


def concurrence(p: XParams) -> float:
    """Concurrence of a valid X state.

    Because rho equals its own spin flip, the usual root spectrum is just
    the state's eigenvalue magnitudes; the measure is the largest minus the
    other three, floored at zero.
    """
    require_valid(p)
    roots = sorted((abs(x) for x in spectrum(p).lam), reverse=True)
    return max(0.0, roots[0] - roots[1] - roots[2] - roots[3])


def entanglement_report(p: XParams) -> EntanglementReport:
    """Classify ``p`` and attach its measures.

    Invalid parameter sets keep their partial-transpose spectrum (it is
    plain arithmetic) but carry no measures.
    """
    cls = classify(p)
    ppt_lam = tuple(sorted(spectrum(ppt(p)).lam, reverse=True))
    if cls in (StateClass.INVALID_TRACE, StateClass.INVALID_NOT_PSD):
        return EntanglementReport(
            state_class=cls, negativity=None, concurrence=None, ppt_spectrum=ppt_lam
        )
    return EntanglementReport(
        state_class=cls,
        negativity=negativity(p),
        concurrence=concurrence(p),
        ppt_spectrum=ppt_lam,
    )
