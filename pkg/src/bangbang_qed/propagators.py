"""Closed-form atom-field propagators in the invariant excitation subspaces.

For excitation number ``n >= 1`` the Jaynes-Cummings dynamics is closed on
the ordered pair ``(|g,n>, |e,n-1>)`` and every operator is a 2x2 complex
matrix. The ground state ``|g,0>`` is its own one-dimensional subspace and is
represented by a 1x1 matrix.

Ideal pulses use the convention ``diag(-i, +i)`` on ``(|g,n>, |e,n-1>)``,
which is ``-exp(-i pi sigma_z / 2)``; the extra global sign cancels in every
density matrix.
"""
from typing import NamedTuple

import numpy as np

from .errors import NegativeTime, NonPositiveT, NotAStroboscopicTime

# relative slack when snapping t / (2T) onto an integer cycle count
CYCLE_SNAP_TOL = 1e-9


def _check_time(t):
    if t < 0:
        raise NegativeTime(f"time must be >= 0, got {t}")


def _check_T(T):
    if T is None or not T > 0:
        raise NonPositiveT(f"pulse interval T must be > 0, got {T}")


def _sin_over(omega, t):
    # sin(omega t) / omega, finite as omega -> 0
    return t * np.sinc(omega * t / np.pi)


def rabi_frequency(n, params):
    """sqrt(delta^2 / 4 + g^2 n)."""
    return np.sqrt(params.delta ** 2 / 4 + params.g ** 2 * n)


def _su2_block(n, t, omega_n, diag_half, coupling, params):
    # exp(-i t [omega (n - 1/2) + [[-diag_half, c], [c*, diag_half]]])
    phase = np.exp(-1j * params.omega * (n - 0.5) * t)
    c = np.cos(omega_n * t)
    s = _sin_over(omega_n, t)
    return phase * np.array([
        [c + 1j * diag_half * s, -1j * coupling * s],
        [-1j * np.conj(coupling) * s, c - 1j * diag_half * s],
    ])


def free_block(n, t, params):
    """Free evolution U0(t) restricted to excitation subspace ``n``."""
    _check_time(t)
    if n == 0:
        return np.array([[np.exp(0.5j * params.omega0 * t)]])
    return _su2_block(n, t, rabi_frequency(n, params), params.delta / 2,
                      params.g * np.sqrt(n), params)


def pulse_block(n):
    """Instantaneous pi-pulse on subspace ``n``."""
    if n == 0:
        return np.array([[-1j]])
    return np.diag([-1j, 1j])


def cycle_block(n, T, params):
    """One pulse cycle ``P U0(T) P U0(T)``."""
    _check_T(T)
    p = pulse_block(n)
    f = free_block(n, T, params)
    return p @ f @ p @ f


def _split_time(t, T):
    # t = 2 N T + residual, snapping residual to 0 when t sits on a cycle boundary
    q = t / (2 * T)
    N = int(np.floor(q))
    if q - N > 1 - CYCLE_SNAP_TOL:
        N += 1
    residual = max(t - 2 * N * T, 0.0)
    return N, residual


def piecewise_propagator(n, t, T, params):
    """Exact propagator under ideal pulses at T, 2T, 3T, ... (pulse at ``t`` itself included)."""
    _check_time(t)
    _check_T(T)
    N, residual = _split_time(t, T)
    u = np.linalg.matrix_power(cycle_block(n, T, params), N)
    if residual < T * (1 - CYCLE_SNAP_TOL):
        return free_block(n, residual, params) @ u
    return (free_block(n, max(residual - T, 0.0), params) @ pulse_block(n)
            @ free_block(n, T, params) @ u)


def effective_coupling(T, params):
    """g_eff = g delta T / 2."""
    return params.g * params.delta * T / 2


def effective_rabi_frequency(n, T, params):
    """(|delta| / 2) sqrt(1 + g^2 T^2 n)."""
    return abs(params.delta) / 2 * np.sqrt(1 + params.g ** 2 * T ** 2 * n)


def stroboscopic_block(n, t2N, T, params):
    """Average-Hamiltonian propagator at a cycle boundary ``t2N = 2 N T``.

    The effective coupling ``-i g_eff (sigma_+ a - sigma_- a^dag)`` is kept to
    first order in T. The ``(-1)**N`` sign carried by the exact cycle product
    in this pulse convention is not included.
    """
    _check_time(t2N)
    _check_T(T)
    q = t2N / (2 * T)
    if abs(q - round(q)) > CYCLE_SNAP_TOL * max(1.0, abs(q)):
        raise NotAStroboscopicTime(f"t={t2N} is not a multiple of 2T={2 * T}")
    if n == 0:
        return free_block(0, t2N, params)
    g_eff = effective_coupling(T, params)
    return _su2_block(n, t2N, effective_rabi_frequency(n, T, params), params.delta / 2,
                      1j * g_eff * np.sqrt(n), params)


def propagator(n, t, schedule, params):
    """Subspace-``n`` propagator for an arbitrary schedule."""
    if schedule.pulsed:
        return piecewise_propagator(n, t, schedule.T, params)
    return free_block(n, t, params)


class TransitionAmplitudes(NamedTuple):
    """Single-pair amplitudes for initial photon number ``n``.

    ``h_g = <g,n|U|g,n>``, ``h_e = <e,n-1|U|g,n>``, ``f_g = <g,n+1|U|e,n>``,
    ``f_e = <e,n|U|e,n>``.
    """

    h_g: complex
    h_e: complex
    f_g: complex
    f_e: complex


def amplitudes(n, t, schedule, params):
    lower = propagator(n, t, schedule, params)
    upper = propagator(n + 1, t, schedule, params)
    h_g = complex(lower[0, 0])
    h_e = 0j if n == 0 else complex(lower[1, 0])
    return TransitionAmplitudes(h_g, h_e, complex(upper[0, 1]), complex(upper[1, 1]))
