"""Self-contained eigensolver for real symmetric tridiagonal matrices.

Bisection on the Sturm sequence isolates each requested eigenvalue; inverse
iteration with a partially pivoted tridiagonal solve recovers eigenvectors,
followed by Gram-Schmidt cleanup inside near-degenerate clusters.  Matrices
are split at exact zeros of the off-diagonal, so direct sums (the uncoupled
f = 0 limit) reduce to their diagonal blocks and cross-block degeneracies
stay exact.

No external eigensolver is called; only elementwise numpy arithmetic and an
O(n) python loop per factorization, which keeps results deterministic from
run to run.
"""

import math

import numpy as np

from .errors import ConvergenceError, ParameterError

_EPS = np.finfo(float).eps
_BISECT_CAP = 120
_INVIT_SWEEPS = 6
# relative gap below which inverse-iteration vectors are orthogonalized
_CLUSTER_REL = 1e-6


def _validate(diag, offdiag):
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    if diag.ndim != 1 or diag.size == 0:
        raise ParameterError("diag must be a nonempty 1-d array")
    if offdiag.shape != (diag.size - 1,):
        raise ParameterError(
            f"offdiag must have length {diag.size - 1}, got {offdiag.shape}"
        )
    if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(offdiag))):
        raise ParameterError("matrix entries must be finite")
    return diag, offdiag


def _sturm_counts(diag, off2, shifts, pivmin):
    """Number of eigenvalues strictly below each shift value.

    Standard LDL^T pivot recurrence; pivots pinned away from zero by pivmin
    so the count stays well defined when a shift hits an eigenvalue.
    """
    counts = np.zeros(shifts.shape, dtype=np.int64)
    d = diag[0] - shifts
    d = np.where(np.abs(d) < pivmin, -pivmin, d)
    counts += d < 0
    for i in range(1, diag.size):
        d = diag[i] - shifts - off2[i - 1] / d
        d = np.where(np.abs(d) < pivmin, -pivmin, d)
        counts += d < 0
    return counts


def _bisect(diag, off2, indices, pivmin):
    """Eigenvalues with the given ascending 0-based indices, by bisection."""
    off = np.sqrt(off2)
    radius = np.zeros(diag.size)
    radius[:-1] += off
    radius[1:] += off
    lo = np.full(indices.size, np.min(diag - radius))
    hi = np.full(indices.size, np.max(diag + radius))
    span = max(hi[0] - lo[0], 1.0)
    for _ in range(_BISECT_CAP):
        mid = 0.5 * (lo + hi)
        below = _sturm_counts(diag, off2, mid, pivmin)
        go_left = below > indices
        hi = np.where(go_left, mid, hi)
        lo = np.where(go_left, lo, mid)
        width = hi - lo
        if np.all(width <= _EPS * (np.abs(lo) + np.abs(hi)) + span * 1e-18):
            break
    else:
        raise ConvergenceError("bisection failed to isolate eigenvalues")
    return 0.5 * (lo + hi)


def _pivoted_solve(lower, shifted_diag, upper, rhs, pivmin):
    """Solve (T - lam I) x = rhs by elimination with partial pivoting.

    The factor has two superdiagonals because of row swaps.  Near-singular
    pivots are pinned to pivmin, which is exactly what inverse iteration
    wants: the solution then blows up along the eigenvector.
    """
    n = shifted_diag.size
    ud = np.empty(n)
    u1 = np.zeros(n)
    u2 = np.zeros(n)
    b = rhs.astype(float).copy()
    p = shifted_diag[0]
    q = upper[0] if n > 1 else 0.0
    r = 0.0
    for i in range(n - 1):
        a1 = lower[i]
        d1 = shifted_diag[i + 1]
        c1 = upper[i + 1] if i + 1 < n - 1 else 0.0
        if abs(p) >= abs(a1):
            piv = p if abs(p) >= pivmin else math.copysign(pivmin, p or 1.0)
            m = a1 / piv
            ud[i], u1[i], u2[i] = piv, q, r
            p = d1 - m * q
            q = c1 - m * r
            b[i + 1] = b[i + 1] - m * b[i]
        else:
            m = p / a1
            ud[i], u1[i], u2[i] = a1, d1, c1
            b[i], b[i + 1] = b[i + 1], b[i] - m * b[i + 1]
            p = q - m * d1
            q = r - m * c1
        r = 0.0
    ud[n - 1] = p if abs(p) >= pivmin else math.copysign(pivmin, p or 1.0)
    x = np.empty(n)
    x[n - 1] = b[n - 1] / ud[n - 1]
    if n > 1:
        x[n - 2] = (b[n - 2] - u1[n - 2] * x[n - 1]) / ud[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (b[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / ud[i]
    return x


def _tridiag_matvec(diag, offdiag, x):
    y = diag * x
    y[:-1] += offdiag * x[1:]
    y[1:] += offdiag * x[:-1]
    return y


def _inverse_iteration(diag, offdiag, values, scale):
    """One eigenvector per value, orthogonalized inside close clusters."""
    n = diag.size
    rng = np.random.default_rng(1234)
    pivmin = _EPS * scale
    vectors = np.empty((n, values.size))
    cluster_start = 0
    for j, lam in enumerate(values):
        if j > 0 and lam - values[j - 1] > _CLUSTER_REL * scale:
            cluster_start = j
        x = rng.standard_normal(n)
        x /= np.linalg.norm(x)
        shifted = diag - lam
        ok = False
        for _ in range(_INVIT_SWEEPS):
            x = _pivoted_solve(offdiag, shifted, offdiag, x, pivmin)
            # project out previously found members of the same cluster
            for k in range(cluster_start, j):
                x -= (vectors[:, k] @ x) * vectors[:, k]
            nrm = np.linalg.norm(x)
            if nrm == 0.0:
                x = rng.standard_normal(n)
                x /= np.linalg.norm(x)
                continue
            x /= nrm
            res = np.linalg.norm(_tridiag_matvec(diag, offdiag, x) - lam * x)
            if res <= _EPS * scale * max(1e3, 30.0 * math.sqrt(n)):
                ok = True
                break
        if not ok:
            raise ConvergenceError(
                f"inverse iteration stalled for eigenvalue {lam}"
            )
        vectors[:, j] = x
    return vectors


def _fix_signs(vectors):
    # first component clearly above rounding noise is made positive
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        big = np.abs(col) > 1e-8 * np.max(np.abs(col))
        lead = int(np.argmax(big))
        if col[lead] < 0:
            vectors[:, j] = -col
    return vectors


def _solve_unreduced(diag, offdiag, levels, want_vectors):
    """Lowest eigenpairs of a block whose off-diagonal has no exact zeros."""
    n = diag.size
    if n == 1:
        vals = diag.copy()
        vecs = np.ones((1, 1)) if want_vectors else None
        return vals, vecs
    off2 = offdiag**2
    scale = float(np.max(np.abs(diag)) + 2.0 * np.max(np.abs(offdiag)))
    scale = max(scale, 1.0)
    pivmin = 1e-290 * max(1.0, float(np.max(off2)))
    indices = np.arange(levels)
    values = _bisect(diag, off2, indices, pivmin)
    values = np.maximum.accumulate(values)  # guard rounding inversions
    if not want_vectors:
        return values, None
    vectors = _inverse_iteration(diag, offdiag, values, scale)
    return values, vectors


def _split_points(offdiag):
    segments = []
    start = 0
    zeros = np.flatnonzero(offdiag == 0.0)
    for z in zeros:
        segments.append((start, z + 1))
        start = z + 1
    segments.append((start, offdiag.size + 1))
    return segments


def tridiagonal_eigh(diag, offdiag, levels=None, vectors=True):
    """Lowest `levels` eigenpairs of the symmetric tridiagonal matrix.

    Parameters
    ----------
    diag, offdiag : array_like
        Main diagonal (length n) and off-diagonal (length n-1).
    levels : int or None
        Number of lowest eigenpairs wanted; None means all n.
    vectors : bool
        When False, skip inverse iteration and return (values, None).

    Returns
    -------
    values : ndarray, ascending
    vecs : ndarray of shape (n, levels) with unit columns, or None
    """
    diag, offdiag = _validate(diag, offdiag)
    n = diag.size
    if levels is None:
        levels = n
    if not 1 <= levels <= n:
        raise ParameterError(f"levels must be in [1, {n}], got {levels}")

    found = []  # (value, segment_rank, start, local_vector)
    for rank, (lo, hi) in enumerate(_split_points(offdiag)):
        m = hi - lo
        want = min(levels, m)
        vals, vecs = _solve_unreduced(
            diag[lo:hi], offdiag[lo : hi - 1], want, vectors
        )
        for j in range(want):
            found.append((vals[j], rank, lo, vecs[:, j] if vectors else None))
    found.sort(key=lambda item: (item[0], item[1]))
    found = found[:levels]

    values = np.array([item[0] for item in found])
    if not vectors:
        return values, None
    out = np.zeros((n, levels))
    for j, (_, _, lo, local) in enumerate(found):
        out[lo : lo + local.size, j] = local
    _fix_signs(out)
    return values, out


def tridiagonal_eigvals(diag, offdiag, levels=None):
    """Eigenvalues only; see tridiagonal_eigh."""
    values, _ = tridiagonal_eigh(diag, offdiag, levels, vectors=False)
    return values
