"""Two-qubit X-structured density matrices.

Basis order is |ee>, |eg>, |ge>, |gg> (atom 1 first). Only the diagonal and
the anti-diagonal coherences rho23 and rho14 can be non-zero.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class XDensityMatrix:
    rho11: float
    rho22: float
    rho33: float
    rho44: float
    rho23: complex = 0j
    rho14: complex = 0j

    @property
    def populations(self):
        return np.array([self.rho11, self.rho22, self.rho33, self.rho44])

    @property
    def trace(self):
        return self.rho11 + self.rho22 + self.rho33 + self.rho44

    def to_array(self):
        """Dense 4x4 complex matrix."""
        rho = np.diag(self.populations).astype(complex)
        rho[1, 2] = self.rho23
        rho[2, 1] = np.conj(self.rho23)
        rho[0, 3] = self.rho14
        rho[3, 0] = np.conj(self.rho14)
        return rho

    @classmethod
    def from_array(cls, rho, atol=1e-12):
        """Build from a dense 4x4 matrix, rejecting entries outside the X pattern."""
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
        mask = np.ones((4, 4), dtype=bool)
        mask[np.diag_indices(4)] = False
        mask[1, 2] = mask[2, 1] = mask[0, 3] = mask[3, 0] = False
        if np.max(np.abs(rho[mask]), initial=0.0) > atol:
            raise ValueError("matrix is not X-structured")
        d = np.real(np.diag(rho))
        return cls(float(d[0]), float(d[1]), float(d[2]), float(d[3]),
                   complex(rho[1, 2]), complex(rho[0, 3]))

    def is_physical(self, atol=1e-12):
        """Unit trace, non-negative populations and X-state positivity."""
        pops = self.populations
        return bool(
            abs(self.trace - 1.0) <= atol
            and np.all(pops >= -atol)
            and abs(self.rho23) ** 2 <= self.rho22 * self.rho33 + atol
            and abs(self.rho14) ** 2 <= self.rho11 * self.rho44 + atol
        )
