from dataclasses import dataclass

import numpy as np

from app.errors import InvalidModelException

SYMMETRY_TOLERANCE = 1e-10
PSD_TOLERANCE = 1e-10


def _check_covariance(name: str, matrix: np.ndarray) -> None:
    if not np.allclose(matrix, matrix.T, rtol=0.0, atol=SYMMETRY_TOLERANCE * max(1.0, np.abs(matrix).max())):
        raise InvalidModelException(f"{name} must be symmetric.")
    smallest = np.linalg.eigvalsh((matrix + matrix.T) / 2).min()
    if smallest < -PSD_TOLERANCE * max(1.0, np.abs(matrix).max()):
        raise InvalidModelException(f"{name} must be positive semi-definite, smallest eigenvalue {smallest:.3g}.")


@dataclass(frozen=True)
class StateSpaceModel:
    """
    Linear Gaussian state space model

        y_t = Z a_t + e_t,          e_t ~ N(0, h)
        a_{t+1} = T a_t + u_t,      u_t ~ N(0, Q)

    with a_0 ~ N(a0, P0) the prior for the first time point.
    """
    T: np.ndarray
    Z: np.ndarray
    Q: np.ndarray
    h: float
    a0: np.ndarray
    P0: np.ndarray

    def __post_init__(self):
        T = np.atleast_2d(np.asarray(self.T, dtype=float))
        Z = np.asarray(self.Z, dtype=float).reshape(-1)
        Q = np.atleast_2d(np.asarray(self.Q, dtype=float))
        a0 = np.asarray(self.a0, dtype=float).reshape(-1)
        P0 = np.atleast_2d(np.asarray(self.P0, dtype=float))
        m = Z.size

        if T.shape != (m, m) or Q.shape != (m, m) or P0.shape != (m, m) or a0.size != m:
            raise InvalidModelException(
                f"Inconsistent dimensions: Z has {m} states, T {T.shape}, Q {Q.shape}, P0 {P0.shape}, a0 {a0.size}."
            )
        if not np.isfinite(self.h) or self.h < 0:
            raise InvalidModelException(f"Observation variance must be a nonnegative real, got {self.h}.")
        for name, matrix in (("T", T), ("Z", Z), ("Q", Q), ("a0", a0), ("P0", P0)):
            if not np.isfinite(matrix).all():
                raise InvalidModelException(f"{name} contains non-finite entries.")
        _check_covariance("Q", Q)
        _check_covariance("P0", P0)

        object.__setattr__(self, "T", T)
        object.__setattr__(self, "Z", Z)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "h", float(self.h))
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "P0", P0)

    @property
    def n_states(self) -> int:
        return self.Z.size
