"""Entropic correlations, discord and concurrence of two-qubit X states.

All entropies are in bits. The classical correlation is obtained by a
projective measurement on the second atom, parameterised by the Bloch angles
of the first projector.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from .errors import EmptyGrid, NegativeProbability

CLAMP_WINDOW = 1e-10
DISCORD_CLAMP = 1e-9
DARK_THRESHOLD = 1e-9

THETA_GRID = 91
PHI_GRID = 72
ANGLE_RESOLUTION = 1e-6


class MeasurementAngles(NamedTuple):
    theta: float
    phi: float


@dataclass(frozen=True)
class CorrelationReport:
    Q: float
    I: float
    C: float
    CE: float
    spectrum: tuple


def x_spectrum(rho):
    """Eigenvalues of an X state, outer block first."""
    s14 = np.sqrt((rho.rho11 - rho.rho44) ** 2 + 4 * abs(rho.rho14) ** 2)
    s23 = np.sqrt((rho.rho22 - rho.rho33) ** 2 + 4 * abs(rho.rho23) ** 2)
    return (
        0.5 * (rho.rho11 + rho.rho44 + s14),
        0.5 * (rho.rho11 + rho.rho44 - s14),
        0.5 * (rho.rho22 + rho.rho33 + s23),
        0.5 * (rho.rho22 + rho.rho33 - s23),
    )


def entropy(probabilities):
    """Shannon entropy in bits with 0 log 0 = 0.

    Values in ``[-1e-10, 0)`` are treated as zero; anything more negative
    raises :class:`NegativeProbability`.
    """
    p = np.asarray(probabilities, dtype=float)
    if np.any(p < -CLAMP_WINDOW):
        raise NegativeProbability(f"negative probability {p.min()}")
    if p.sum() > 1 + CLAMP_WINDOW:
        raise NegativeProbability(f"probabilities sum to {p.sum()} > 1")
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p)))


def _binary_entropy(x):
    # vectorised entropy of (x, 1 - x), safe at the endpoints
    x = np.clip(x, 0.0, 1.0)
    out = np.zeros_like(x)
    for q in (x, 1 - x):
        nz = q > 0
        out[nz] -= q[nz] * np.log2(q[nz])
    return out


def marginal_entropies(rho):
    s1 = entropy([rho.rho11 + rho.rho22, rho.rho33 + rho.rho44])
    s2 = entropy([rho.rho11 + rho.rho33, rho.rho22 + rho.rho44])
    return s1, s2


def mutual_information(rho):
    s1, s2 = marginal_entropies(rho)
    return s1 + s2 - entropy(x_spectrum(rho))


def _projector_kets(theta, phi):
    # first projector cos(theta/2)|e> + e^{i phi} sin(theta/2)|g>, second orthogonal
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c, s, e = np.cos(theta / 2), np.sin(theta / 2), np.exp(1j * phi)
    k0 = np.stack([c + 0j, e * s], axis=-1)
    k1 = np.stack([s + 0j, -e * c], axis=-1)
    return k0, k1


def _conditional_entropy_dense(rho4, theta, phi):
    r = rho4.reshape(2, 2, 2, 2)
    total = 0.0
    for ket in _projector_kets(theta, phi):
        # unnormalised state of atom 1 after outcome |ket> on atom 2
        sigma = np.einsum("ajbl,...j,...l->...ab", r, ket.conj(), ket)
        p = np.real(sigma[..., 0, 0] + sigma[..., 1, 1])
        det = np.real(sigma[..., 0, 0] * sigma[..., 1, 1] - sigma[..., 0, 1] * sigma[..., 1, 0])
        safe_p = np.where(p > 0, p, 1.0)
        gap = np.sqrt(np.clip(1 - 4 * det / safe_p ** 2, 0.0, 1.0))
        total = total + np.where(p > 0, p * _binary_entropy((1 + gap) / 2), 0.0)
    return total


def conditional_entropy(rho, angles):
    """Average entropy of atom 1 after measuring atom 2 along ``angles``."""
    theta, phi = angles
    return float(_conditional_entropy_dense(rho.to_array(), theta, phi))


def _candidate_angles(rho):
    # sigma_z basis, plus equatorial bases aligned with the coherence phases
    cands = [(0.0, 0.0), (np.pi / 2, 0.0), (np.pi / 2, np.pi / 2)]
    for z in (rho.rho23, rho.rho14, rho.rho23 * rho.rho14, rho.rho23 * np.conj(rho.rho14)):
        if z != 0:
            ang = float(np.angle(z))
            cands += [(np.pi / 2, ang), (np.pi / 2, -ang), (np.pi / 2, ang / 2), (np.pi / 2, -ang / 2)]
    return cands


def classical_correlation(rho):
    """Maximal entropy reduction of atom 1 from a projective measurement on atom 2.

    Combines analytic candidate angles, a coarse (theta, phi) grid and a local
    Nelder-Mead refinement from the best point found. Returns ``(C, argmax)``.
    """
    rho4 = rho.to_array()
    s_a = marginal_entropies(rho)[0]

    th, ph = np.meshgrid(np.linspace(0, np.pi / 2, THETA_GRID),
                         np.linspace(0, 2 * np.pi, PHI_GRID, endpoint=False), indexing="ij")
    cands = np.array(_candidate_angles(rho))
    th = np.concatenate([th.ravel(), cands[:, 0]])
    ph = np.concatenate([ph.ravel(), cands[:, 1]])
    cond = _conditional_entropy_dense(rho4, th, ph)
    best = int(np.argmin(cond))
    x0 = np.array([th[best], ph[best]])
    best_val = float(cond[best])

    res = minimize(lambda x: float(_conditional_entropy_dense(rho4, x[0], x[1])), x0,
                   method="Nelder-Mead",
                   options={"xatol": ANGLE_RESOLUTION / 10, "fatol": 1e-15,
                            "initial_simplex": x0 + np.array([[0, 0], [1e-2, 0], [0, 1e-2]]),
                            "maxiter": 2000})
    if res.fun < best_val:
        best_val = float(res.fun)
        x0 = res.x
    theta = float(np.mod(x0[0], 2 * np.pi))
    phi = float(x0[1])
    if theta > np.pi:
        theta, phi = 2 * np.pi - theta, phi + np.pi
    return max(s_a - best_val, 0.0), MeasurementAngles(theta, float(np.mod(phi, 2 * np.pi)))


def discord(rho):
    """Mutual information minus classical correlation; tiny negatives clipped to 0."""
    q = mutual_information(rho) - classical_correlation(rho)[0]
    if -DISCORD_CLAMP <= q < 0:
        q = 0.0
    return q


def concurrence(rho):
    c = max(0.0,
            2 * abs(rho.rho23) - 2 * np.sqrt(max(rho.rho11 * rho.rho44, 0.0)),
            2 * abs(rho.rho14) - 2 * np.sqrt(max(rho.rho22 * rho.rho33, 0.0)))
    return float(min(c, 1.0))


def correlations(rho):
    """All measures of one X state."""
    i = mutual_information(rho)
    c, _ = classical_correlation(rho)
    q = i - c
    if -DISCORD_CLAMP <= q < 0:
        q = 0.0
    return CorrelationReport(Q=q, I=i, C=c, CE=concurrence(rho), spectrum=tuple(x_spectrum(rho)))


def small_T_discord(params, T, t2N):
    """Small-interval approximation ``1 - g^2 T^2 sin^2(delta t2N / 2)``."""
    return 1.0 - params.g ** 2 * T ** 2 * np.sin(params.delta * t2N / 2) ** 2


def dark_periods(times, concurrences, threshold=DARK_THRESHOLD):
    """Maximal runs of grid points where the concurrence is at most ``threshold``.

    Returns a list of ``(t_start, t_end)`` grid endpoints.
    """
    times = np.asarray(times, dtype=float)
    ce = np.asarray(concurrences, dtype=float)
    if times.size == 0:
        raise EmptyGrid("empty series")
    dark = ce <= threshold
    periods = []
    start = None
    for i, d in enumerate(dark):
        if d and start is None:
            start = i
        elif not d and start is not None:
            periods.append((float(times[start]), float(times[i - 1])))
            start = None
    if start is not None:
        periods.append((float(times[start]), float(times[-1])))
    return periods
