"""Reduced two-atom density matrix after tracing out both cavity fields."""
import numpy as np

from .config import initial_ewl_matrix
from .errors import EmptyGrid, NegativeTime, TruncationTooCoarse, UnsortedGrid
from .propagators import amplitudes
from .xstate import XDensityMatrix


def _amplitude_table(n_max, t, schedule, params):
    # rows n = 0..n_max, columns h_g, h_e, f_g, f_e
    return np.array([amplitudes(n, t, schedule, params) for n in range(n_max + 1)])


def evolve_reduced(scenario, t, accuracy=None, duplicate_rho22_terms=False):
    """Two-atom X state at time ``t``.

    Each population is a double sum over the photon numbers of the two fields,
    weighted by ``p1[n] p2[m]``, of products of single-pair transition
    probabilities with the initial populations. ``rho44`` follows from trace
    completion; ``rho23`` is the only surviving coherence.

    ``accuracy`` optionally bounds the truncation error of thermal fields
    (twice the discarded tail mass per field); a coarser truncation raises
    :class:`TruncationTooCoarse`.

    ``duplicate_rho22_terms`` reuses the ``rho33`` row coefficients for the
    ``rho33(0)`` and ``rho44(0)`` contributions to ``rho22``. That variant is
    not trace consistent and exists only to demonstrate the disagreement with
    the full-space reference.
    """
    if t < 0:
        raise NegativeTime(f"time must be >= 0, got {t}")
    f1, f2 = scenario.field1, scenario.field2
    if accuracy is not None:
        bound = 2 * (f1.tail_mass + f2.tail_mass)
        if bound > accuracy:
            raise TruncationTooCoarse(
                f"thermal truncation error bound {bound:.3g} exceeds requested accuracy {accuracy:.3g}")

    r0 = initial_ewl_matrix(scenario.atoms)
    if t == 0:
        return r0

    p1, p2 = f1.weights(), f2.weights()
    amp = _amplitude_table(max(len(p1), len(p2)) - 1, t, scenario.pulses, scenario.params)
    a1, a2 = amp[: len(p1)], amp[: len(p2)]
    hg1, he1, fg1, fe1 = a1.T
    hg2, he2, fg2, fe2 = a2.T
    w = np.outer(p1, p2)

    def dsum(x1, x2):
        # sum_{n,m} p1n p2m |x1_n x2_m|^2
        return float(np.sum(w * np.outer(np.abs(x1) ** 2, np.abs(x2) ** 2)))

    rho11 = (dsum(fe1, fe2) * r0.rho11 + dsum(fe1, he2) * r0.rho22
             + dsum(he1, fe2) * r0.rho33 + dsum(he1, he2) * r0.rho44)
    if duplicate_rho22_terms:
        rho22 = (dsum(fe1, fg2) * r0.rho11 + dsum(fe1, hg2) * r0.rho22
                 + dsum(hg1, fe2) * r0.rho33 + dsum(hg1, he2) * r0.rho44)
    else:
        rho22 = (dsum(fe1, fg2) * r0.rho11 + dsum(fe1, hg2) * r0.rho22
                 + dsum(he1, fg2) * r0.rho33 + dsum(he1, hg2) * r0.rho44)
    rho33 = (dsum(fg1, fe2) * r0.rho11 + dsum(fg1, he2) * r0.rho22
             + dsum(hg1, fe2) * r0.rho33 + dsum(hg1, he2) * r0.rho44)
    rho44 = 1.0 - rho11 - rho22 - rho33
    rho23 = complex(np.sum(w * np.outer(fe1 * np.conj(hg1), hg2 * np.conj(fe2)))) * r0.rho23
    return XDensityMatrix(rho11, rho22, rho33, rho44, rho23, 0j)


def direct_rho44(scenario, t):
    """``rho44`` summed term by term instead of by trace completion."""
    r0 = initial_ewl_matrix(scenario.atoms)
    p1, p2 = scenario.field1.weights(), scenario.field2.weights()
    amp = _amplitude_table(max(len(p1), len(p2)) - 1, t, scenario.pulses, scenario.params)
    hg1, he1, fg1, fe1 = amp[: len(p1)].T
    hg2, he2, fg2, fe2 = amp[: len(p2)].T
    w = np.outer(p1, p2)

    def dsum(x1, x2):
        return float(np.sum(w * np.outer(np.abs(x1) ** 2, np.abs(x2) ** 2)))

    return (dsum(fg1, fg2) * r0.rho11 + dsum(fg1, hg2) * r0.rho22
            + dsum(hg1, fg2) * r0.rho33 + dsum(hg1, hg2) * r0.rho44)


def evolve_series(scenario, times, **kwargs):
    """Evaluate :func:`evolve_reduced` on a strictly increasing grid."""
    times = np.asarray(times, dtype=float)
    if times.size == 0:
        raise EmptyGrid("time grid is empty")
    if np.any(np.diff(times) <= 0):
        raise UnsortedGrid("time grid must be strictly increasing")
    return [(float(t), evolve_reduced(scenario, float(t), **kwargs)) for t in times]


def special_alpha(params, schedule, t):
    """``|h_g0 f_e0|^2`` for vacuum fields: the weight of the entangled
    component in ``(1 - alpha)|gg><gg| + alpha |Psi><Psi|``."""
    amp = amplitudes(0, t, schedule, params)
    return abs(amp.h_g * amp.f_e) ** 2
