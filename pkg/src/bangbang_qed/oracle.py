"""Brute-force reference: full atom-field Hilbert space on a truncated Fock basis.

Each atom-field pair lives on ``2 (n_max + 1)`` states ordered
``(atom, photon)`` with atom index 0 = |e>, 1 = |g>. Propagators come from
the spectral decomposition of the dense Hamiltonian; pulses are the exact
unitaries ``exp(-i pi sigma_z / 2)``. Nothing here uses the subspace formulas.
"""
import numpy as np

from .config import Fock, initial_ewl_matrix
from .errors import CutoffTooSmall, NonPositiveT
from .xstate import XDensityMatrix

GUARD_BAND = 2


def _atom_ops():
    sz = np.diag([1.0, -1.0])
    sp = np.array([[0.0, 1.0], [0.0, 0.0]])  # |e><g|
    return sz, sp


def _field_ops(n_max):
    a = np.diag(np.sqrt(np.arange(1, n_max + 1)), k=1)
    return a, np.diag(np.arange(n_max + 1.0))


def build_hamiltonian(params, n_max, coupling_sign=1):
    """``omega0/2 sigma_z + omega a^dag a + sign * g (sigma_+ a + sigma_- a^dag)``."""
    if n_max < 1:
        raise CutoffTooSmall(f"Fock cutoff must be >= 1, got {n_max}")
    sz, sp = _atom_ops()
    a, num = _field_ops(n_max)
    i_a, i_f = np.eye(2), np.eye(n_max + 1)
    h0 = params.omega0 / 2 * np.kron(sz, i_f) + params.omega * np.kron(i_a, num)
    hi = params.g * (np.kron(sp, a) + np.kron(sp.T, a.T))
    return (h0 + coupling_sign * hi).astype(complex)


def exact_propagator(hamiltonian, t):
    energies, vecs = np.linalg.eigh(hamiltonian)
    return (vecs * np.exp(-1j * energies * t)) @ vecs.conj().T


def pulse_operator(n_max):
    return np.kron(np.diag([-1j, 1j]), np.eye(n_max + 1))


def pulsed_sequence_propagator(params, T, t, n_max, hamiltonian=None):
    """Time-ordered product with a pulse at every multiple of ``T`` up to and including ``t``."""
    if T is None or not T > 0:
        raise NonPositiveT(f"pulse interval T must be > 0, got {T}")
    h = build_hamiltonian(params, n_max) if hamiltonian is None else hamiltonian
    energies, vecs = np.linalg.eigh(h)

    def free(dt):
        return (vecs * np.exp(-1j * energies * dt)) @ vecs.conj().T

    pulse = pulse_operator(n_max)
    n_pulses = int(np.floor(t / T * (1 + 1e-12) + 1e-9))
    step = pulse @ free(T)
    u = np.eye(h.shape[0], dtype=complex)
    for _ in range(n_pulses):
        u = step @ u
    return free(max(t - n_pulses * T, 0.0)) @ u


def pair_propagator(params, schedule, t, n_max):
    h = build_hamiltonian(params, n_max)
    if schedule.pulsed:
        return pulsed_sequence_propagator(params, schedule.T, t, n_max, hamiltonian=h)
    return exact_propagator(h, t)


def cutoff_for(field):
    """Photon cutoff that keeps every populated excitation sector strictly inside the basis."""
    support = field.n if isinstance(field, Fock) else len(field.weights()) - 1
    return support + GUARD_BAND


def _field_density(field, n_max):
    p = np.zeros(n_max + 1)
    w = field.weights()
    if len(w) > n_max:
        raise CutoffTooSmall(f"field support {len(w) - 1} does not fit below cutoff {n_max}")
    p[: len(w)] = w
    return np.diag(p)


def _cutoff(scenario, n_max):
    f1, f2 = scenario.field1, scenario.field2
    if n_max is None:
        n_max = max(cutoff_for(f1), cutoff_for(f2))
    for f in (f1, f2):
        if isinstance(f, Fock) and f.n + 1 > n_max:
            raise CutoffTooSmall(f"cutoff {n_max} cannot hold |e,{f.n}> without leakage")
    return n_max


def joint_density(scenario, t, n_max=None):
    """Full joint density matrix of both atom-field pairs at time ``t``.

    Dense ``d^2 x d^2`` with ``d = 2 (n_max + 1)``, ordered
    ``(atom1, photon1, atom2, photon2)``. Memory grows as ``d^4``.
    """
    n_max = _cutoff(scenario, n_max)
    d = 2 * (n_max + 1)
    atoms = initial_ewl_matrix(scenario.atoms).to_array().reshape(2, 2, 2, 2)
    field1 = _field_density(scenario.field1, n_max)
    field2 = _field_density(scenario.field2, n_max)
    # rho[a1 f1 a2 f2, b1 g1 b2 g2]
    rho = np.einsum("ACBD,xy,uv->AxCuByDv", atoms, field1, field2).reshape(d * d, d * d)
    u = pair_propagator(scenario.params, scenario.pulses, t, n_max)
    uu = np.kron(u, u)
    return uu @ rho @ uu.conj().T


def partial_trace_fields(joint, n_max):
    f = n_max + 1
    r = joint.reshape(2, f, 2, f, 2, f, 2, f)
    return np.einsum("axcybxdy->acbd", r).reshape(4, 4)


def joint_reduced_matrix(scenario, t, n_max=None):
    """Two-atom matrix from the full-space evolution, as a dense 4x4 array.

    Equivalent to ``partial_trace_fields(joint_density(...))`` but only the
    propagator columns of populated photon numbers are used, so the cost is
    independent of ``d^4``.
    """
    n_max = _cutoff(scenario, n_max)
    f = n_max + 1
    atoms = initial_ewl_matrix(scenario.atoms).to_array().reshape(2, 2, 2, 2)
    p1 = np.diag(_field_density(scenario.field1, n_max))
    p2 = np.diag(_field_density(scenario.field2, n_max))
    u = pair_propagator(scenario.params, scenario.pulses, t, n_max).reshape(2, f, 2, f)

    # channel of one pair for a diagonal field: E[a', b', a, b] = sum_n p_n sum_k U[a',k,a,n] U*[b',k,b,n]
    def channel(p):
        return np.einsum("n,xkan,ykbn->xyab", p, u, u.conj())

    e1, e2 = channel(p1), channel(p2)
    out = np.einsum("xyab,uvcd,acbd->xuyv", e1, e2, atoms)
    return out.reshape(4, 4)


def joint_evolve_and_trace(scenario, t, n_max=None):
    """Oracle result packed as an :class:`XDensityMatrix`; off-X entries must vanish."""
    return XDensityMatrix.from_array(joint_reduced_matrix(scenario, t, n_max), atol=1e-10)
