"""Independent reference computations used only by the tests."""
import numpy as np
from scipy.linalg import expm

PAULI = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def subspace_hamiltonian(n, g, omega, delta, sign=1.0):
    """<g,n|H|g,n>, <e,n-1|H|e,n-1> and the coupling, written out from H0 + HI."""
    omega0 = omega + delta
    e_g = -omega0 / 2 + omega * n
    e_e = omega0 / 2 + omega * (n - 1)
    c = sign * g * np.sqrt(n)
    return np.array([[e_g, c], [c, e_e]], dtype=complex)


def subspace_expm(n, t, g, omega, delta, sign=1.0):
    if n == 0:
        return np.array([[np.exp(0.5j * (omega + delta) * t)]])
    return expm(-1j * t * subspace_hamiltonian(n, g, omega, delta, sign))


def correlation_tensor(rho4):
    return np.array([[np.trace(rho4 @ np.kron(PAULI[i], PAULI[j])).real for j in range(4)]
                     for i in range(4)])


def _h2(x):
    x = np.clip(x, 0.0, 1.0)
    out = np.zeros_like(x)
    for q in (x, 1 - x):
        nz = q > 0
        out[nz] -= q[nz] * np.log2(q[nz])
    return out


def grid_classical_correlation(rho4, resolution=1e-3):
    """Exhaustive (theta, phi) search using Bloch vectors of the post-measurement states.

    theta covers [0, pi/2] and phi [0, 2 pi): every rank-1 projective measurement
    on a qubit is one of these up to relabelling the two outcomes.
    """
    t = correlation_tensor(rho4)
    r_a = t[1:, 0]
    s_a = _h2(np.array([(1 + np.linalg.norm(r_a)) / 2]))[0]
    thetas = np.linspace(0, np.pi / 2, int(np.ceil(np.pi / 2 / resolution)) + 1)
    phis = np.arange(0, 2 * np.pi, resolution)
    best = np.inf
    cos_p, sin_p = np.cos(phis), np.sin(phis)
    for th in thetas:
        n = np.stack([np.sin(th) * cos_p, np.sin(th) * sin_p, np.full_like(phis, np.cos(th))])
        tn = t[1:, 1:] @ n
        sb = t[0, 1:] @ n
        cond = 0.0
        for sign in (1, -1):
            p = (1 + sign * sb) / 2
            v = (r_a[:, None] + sign * tn)
            length = np.linalg.norm(v, axis=0) / np.where(p > 0, 2 * p, 1.0)
            cond = cond + np.where(p > 1e-15, p * _h2((1 + np.clip(length, 0, 1)) / 2), 0.0)
        best = min(best, cond.min())
    return s_a - best


def random_x_state(rng):
    """Positive X state with random populations and coherence phases."""
    pops = rng.dirichlet(np.ones(4))
    r23 = np.sqrt(pops[1] * pops[2]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
    r14 = np.sqrt(pops[0] * pops[3]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
    return (*pops, r23, r14)


def vn_entropy(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-15]
    return float(-np.sum(w * np.log2(w)))


def partial_trace(rho4, keep):
    r = rho4.reshape(2, 2, 2, 2)
    return np.einsum("ajbj->ab", r) if keep == 0 else np.einsum("jajb->ab", r)
