"""Squeeze operator on the truncated Fock space and related state vectors.

The mode transformation S = exp((ln Omega / 4)(a^2 - a^dag^2)) maps the bare
oscillator onto one of frequency Omega.  On a finite Fock ladder the truncated
generator is exactly antisymmetric, so its exponential is orthogonal to
rounding accuracy; only amplitudes near the truncation edge differ from the
infinite-space operator.  Converged states are therefore required to carry
negligible weight on the top few rows.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ParameterError, TruncationError
from .model import destroy_op

# rows counted as the truncation edge, and the weight allowed there
TAIL_ROWS = 8
TAIL_TOL = 1e-10


@dataclass(frozen=True)
class SqueezeSpec:
    """Renormalized frequency Omega plus the Fock truncation to act on."""

    omega: float
    n_max: int

    def __post_init__(self):
        if not self.omega > 0:
            raise ParameterError(f"omega must be > 0, got {self.omega}")
        if self.n_max < 2:
            raise ParameterError(f"n_max must be >= 2, got {self.n_max}")


@dataclass(frozen=True, eq=False)
class FockVector:
    """Amplitudes over the first n_max Fock states."""

    amps: np.ndarray
    n_max: int

    def __post_init__(self):
        amps = np.asarray(self.amps)
        object.__setattr__(self, "amps", amps)
        if amps.shape != (self.n_max,):
            raise ParameterError(
                f"amps must have shape ({self.n_max},), got {amps.shape}"
            )
        if self.norm > 1.0 + 1e-12:
            raise ParameterError(f"norm {self.norm} exceeds 1")

    @property
    def norm(self):
        return float(np.linalg.norm(self.amps))

    def tail_mass(self):
        """Probability weight sitting on the top TAIL_ROWS amplitudes."""
        return float(np.sum(np.abs(self.amps[-TAIL_ROWS:]) ** 2))


def _expm(mat, tol=1e-14, max_terms=60):
    """Matrix exponential by scaling and squaring on a Taylor series."""
    norm = np.linalg.norm(mat, 1)
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm / 0.5)))
    scaled = mat / 2.0**squarings
    result = np.eye(mat.shape[0])
    term = np.eye(mat.shape[0])
    for k in range(1, max_terms + 1):
        term = term @ scaled / k
        result = result + term
        if np.linalg.norm(term, 1) <= tol * np.linalg.norm(result, 1):
            break
    else:
        raise ConvergenceError(
            f"exponential series not converged after {max_terms} terms"
        )
    for _ in range(squarings):
        result = result @ result
    return result


def squeeze_matrix(spec):
    """Fock-basis matrix of the squeeze unitary for frequency Omega.

    The generator couples n only to n +- 2, so the matrix is real orthogonal
    with a checkerboard sparsity pattern: column 0 populates even rows only.
    """
    if spec.omega == 1.0:
        return np.eye(spec.n_max)
    a = destroy_op(spec.n_max)
    gen = 0.25 * math.log(spec.omega) * (a @ a - a.T @ a.T)
    return _expm(gen)


def coherent_amplitudes(epsilon, n_max):
    """Coherent state |epsilon> with real amplitude, as a FockVector.

    Uses the stable recurrence amps[k] = amps[k-1] * epsilon / sqrt(k) and
    refuses truncations that cut into the Poisson bulk.
    """
    if epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {epsilon}")
    if n_max < 2:
        raise ParameterError(f"n_max must be >= 2, got {n_max}")
    amps = np.zeros(n_max)
    amps[0] = math.exp(-0.5 * epsilon * epsilon)
    for k in range(1, n_max):
        amps[k] = amps[k - 1] * epsilon / math.sqrt(k)
    vec = FockVector(amps, n_max)
    if vec.tail_mass() >= TAIL_TOL or abs(vec.norm - 1.0) > 1e-8:
        raise TruncationError(
            f"coherent state with epsilon={epsilon} does not fit in "
            f"n_max={n_max} (tail mass {vec.tail_mass():.3e})"
        )
    return vec


def squeezed_coherent_overlaps(epsilon, spec):
    """Overlap column <k|S^dag|epsilon>: the coherent state seen from the
    squeezed frame.

    Squeezing spreads the photon distribution, so the tail criterion here is
    stricter in practice than for the bare coherent state.
    """
    coh = coherent_amplitudes(epsilon, spec.n_max)
    amps = squeeze_matrix(spec).T @ coh.amps
    vec = FockVector(amps, spec.n_max)
    if vec.tail_mass() >= TAIL_TOL:
        raise TruncationError(
            f"squeezed-frame overlaps for epsilon={epsilon}, "
            f"omega={spec.omega} not converged at n_max={spec.n_max}"
        )
    return vec
