"""Dense complex linear algebra primitives.

Everything downstream works with plain ``numpy.ndarray`` objects of dtype
complex128.  The helpers here add the shape and accuracy checks the rest of
the package relies on; they do not try to be a general-purpose wrapper.
"""

from __future__ import annotations

import warnings

import numpy as np

from .errors import InputError, NumericalError

HERMITICITY_TOL = 1e-10
DROP_TOL = 1e-10
EIGENVALUE_SUM_TOL = 1e-10


class RankDeficiencyWarning(UserWarning):
    """Emitted when orthonormalization drops linearly dependent vectors."""


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-D complex128 array with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise InputError(f"{name} must be 2-dimensional, got ndim={m.ndim}")
    if m.size == 0:
        raise InputError(f"{name} must be non-empty")
    if not np.all(np.isfinite(m)):
        raise InputError(f"{name} contains non-finite entries")
    return m


def multiply(a, b) -> np.ndarray:
    """Matrix product a @ b, rejecting incompatible shapes."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise InputError(
            f"cannot multiply shapes {a.shape} and {b.shape}: "
            f"inner dimensions {a.shape[1]} != {b.shape[0]}"
        )
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a, "a").conj().T


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product Tr(a^dagger b) for same-shape matrices."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape != b.shape:
        raise InputError(f"shape mismatch: {a.shape} vs {b.shape}")
    # vdot conjugates its first argument, which is exactly Tr(a^dagger b).
    return complex(np.vdot(a, b))


def hermitian_eigenvalues(h, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    Parameters
    ----------
    h : array_like
        Square matrix, Hermitian to within `tol` in Frobenius norm.
    tol : float
        Largest acceptable Frobenius norm of ``h - h^dagger``.

    Returns
    -------
    numpy.ndarray
        Real eigenvalues in non-increasing order.

    Raises
    ------
    InputError
        If `h` is not square or the Hermiticity defect exceeds `tol`.
    NumericalError
        If the eigenvalue sum disagrees with the trace beyond a relative
        1e-10, which would mean the decomposition itself went wrong.
    """
    h = as_matrix(h, "h")
    if h.shape[0] != h.shape[1]:
        raise InputError(f"matrix must be square, got shape {h.shape}")
    defect = float(np.linalg.norm(h - h.conj().T))
    if defect > tol:
        raise InputError(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds tol {tol:.3e}"
        )
    # Symmetrize first so the solver sees an exactly Hermitian matrix.
    w = np.linalg.eigvalsh((h + h.conj().T) / 2.0)[::-1]
    trace = float(np.trace(h).real)
    if abs(float(w.sum()) - trace) > EIGENVALUE_SUM_TOL * max(1.0, abs(trace)):
        raise NumericalError(
            f"eigenvalue sum {w.sum():.17g} disagrees with trace {trace:.17g}"
        )
    return np.ascontiguousarray(w)


def gram_schmidt(vectors, tol: float = DROP_TOL) -> np.ndarray:
    """Orthonormalize a spanning set with modified Gram-Schmidt.

    Runs two projection sweeps per vector (a single re-orthogonalization
    pass), which keeps the result orthonormal to near machine precision even
    for nearly dependent inputs.  Vectors whose residual norm falls below
    `tol` are dropped and the rank reduction is reported through a
    ``RankDeficiencyWarning``.

    Parameters
    ----------
    vectors : iterable of array_like
        Non-empty collection of equal-length 1-D complex vectors.
    tol : float
        Residual norm below which a vector counts as dependent.

    Returns
    -------
    numpy.ndarray
        Array of shape (k, dim) whose rows are orthonormal.
    """
    rows = [np.asarray(v, dtype=np.complex128) for v in vectors]
    if not rows:
        raise InputError("gram_schmidt requires at least one vector")
    dim = rows[0].shape
    for v in rows:
        if v.ndim != 1:
            raise InputError("gram_schmidt expects 1-D vectors")
        if v.shape != dim:
            raise InputError(f"inconsistent vector lengths: {v.shape} vs {dim}")
        if not np.all(np.isfinite(v)):
            raise InputError("vector contains non-finite entries")

    kept: list[np.ndarray] = []
    dropped = 0
    for v in rows:
        w = v.copy()
        for _ in range(2):
            for u in kept:
                w = w - np.vdot(u, w) * u
        norm = float(np.linalg.norm(w))
        if norm < tol:
            dropped += 1
            continue
        kept.append(w / norm)
    if not kept:
        raise InputError("no linearly independent vectors above the drop tolerance")
    if dropped:
        warnings.warn(
            f"gram_schmidt dropped {dropped} linearly dependent vector(s); "
            f"rank is {len(kept)}",
            RankDeficiencyWarning,
            stacklevel=2,
        )
    return np.array(kept)
