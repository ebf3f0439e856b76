"""Operator Schmidt decompositions of subspace projectors.

A subspace V of H1 (x) H2 with projector P is summarized by the Schmidt
string of the normalized operator P / sqrt(dim V): the descending squared
Schmidt coefficients of its expansion in product operator bases.  The string
is a probability distribution of length min(d1^2, d2^2), and every
entanglement quantity in this package is a function of it.

The decomposition is computed by realigning P into the d1^2 x d2^2 matrix A
with entries

    A[(i, j), (k, l)] = P[(i, k), (j, l)] / sqrt(dim V)

where (i, j) indexes pairs of H1 basis labels row-major and (k, l) pairs of
H2 labels.  Squared singular values of A form the string; they are obtained
as eigenvalues of the smaller of the two Gram matrices A A^dagger, A^dagger A,
which are the reduced states of P / sqrt(dim V) viewed as a unit vector in
operator space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NumericalError
from .linalg import hermitian_eigenvalues
from .spaces import Factorization, Projector

DEFAULT_ZERO_THRESHOLD = 1e-10
NEGATIVE_EIGENVALUE_FLOOR = 1e-10
EIGENVALUE_SUM_TOL = 1e-8
STRING_SUM_TOL = 1e-9
REALIGN_NORM_TOL = 1e-10
UNIT_TRACE_TOL = 1e-10
VECTOR_NORM_TOL = 1e-8


@dataclass(frozen=True)
class SchmidtString:
    """Descending probability string of squared Schmidt coefficients.

    `probs` has the full factorization length min(d1^2, d2^2), padded with
    exact zeros past the first `k` positive entries; `k` is the Schmidt rank.
    """

    probs: np.ndarray
    k: int

    def __post_init__(self) -> None:
        p = np.asarray(self.probs, dtype=np.float64)
        if p.ndim != 1 or p.size == 0:
            raise InputError("probs must be a non-empty 1-D array")
        if np.any(p < 0):
            raise InputError(f"probs contains negative entries (min {p.min():.3e})")
        if np.any(np.diff(p) > 0):
            raise InputError("probs must be sorted in non-increasing order")
        total = float(p.sum())
        if abs(total - 1.0) > STRING_SUM_TOL:
            raise InputError(f"probs sum to {total:.17g}, expected 1 within 1e-9")
        k = int(np.count_nonzero(p))
        if self.k != k:
            raise InputError(f"k={self.k} does not match {k} positive entries")
        p = np.ascontiguousarray(p)
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)
        object.__setattr__(self, "k", k)

    def __len__(self) -> int:
        return int(self.probs.size)

    @classmethod
    def from_probs(
        cls,
        values,
        *,
        length: int | None = None,
        zero_threshold: float = 0.0,
    ) -> "SchmidtString":
        """Build a string from raw probabilities.

        Sorts descending, floors entries below `zero_threshold` to exact
        zeros, and right-pads with zeros to `length` when given.  Tiny
        negative values above -1e-10 are clamped to zero; anything more
        negative is rejected.
        """
        p = np.array(values, dtype=np.float64).ravel()
        if p.size == 0:
            raise InputError("probability string must be non-empty")
        if np.any(p < -NEGATIVE_EIGENVALUE_FLOOR):
            raise InputError(f"negative probability {p.min():.3e}")
        p = np.clip(p, 0.0, None)
        p[p < zero_threshold] = 0.0
        p = np.sort(p)[::-1]
        if length is not None:
            if length < p.size:
                raise InputError(f"length {length} shorter than {p.size} values")
            padded = np.zeros(length, dtype=np.float64)
            padded[: p.size] = p
            p = padded
        return cls(probs=p, k=int(np.count_nonzero(p)))

    def padded(self, length: int) -> np.ndarray:
        """Probabilities padded (or zero-truncated) to `length`."""
        if length >= len(self):
            out = np.zeros(length, dtype=np.float64)
            out[: len(self)] = self.probs
            return out
        if np.any(self.probs[length:] != 0.0):
            raise InputError(
                f"cannot truncate to {length}: positive entries beyond it"
            )
        return self.probs[:length].copy()


@dataclass(frozen=True)
class Measures:
    """The three entanglement measures of a Schmidt string.

    e_d: distance measure sqrt(2 (1 - sqrt(p_1))), range [0, sqrt(2)].
    e_i: Shannon entropy of the string in bits, range [0, log2 min(d1^2, d2^2)].
    e_t: linear entropy 1 - sum p^2, range [0, 1).
    """

    e_d: float
    e_i: float
    e_t: float


def measures(s: SchmidtString) -> Measures:
    """Evaluate all three measures on a Schmidt string."""
    p = s.probs
    p1 = float(p[0])
    # p1 may exceed 1 by up to the string sum tolerance; clamp the radicand.
    e_d = math.sqrt(max(0.0, 2.0 * (1.0 - math.sqrt(p1))))
    nz = p[p > 0]
    e_i = float(-(nz * np.log2(nz)).sum()) + 0.0
    e_t = float(1.0 - (p * p).sum()) + 0.0
    return Measures(e_d=e_d, e_i=e_i, e_t=max(e_t, 0.0))


def realign(p: Projector) -> np.ndarray:
    """Realigned matrix A of P / sqrt(dim V), shape (d1^2, d2^2).

    Row (i, j) and column (k, l) of A hold the entry of P at row i*d2+k,
    column j*d2+l, scaled by 1/sqrt(dim V).  A has unit Frobenius norm
    because Tr(P) = dim V.
    """
    d1, d2 = p.factorization.d1, p.factorization.d2
    a = p.matrix.reshape(d1, d2, d1, d2)
    a = a.transpose(0, 2, 1, 3).reshape(d1 * d1, d2 * d2) / math.sqrt(p.dim)
    norm = float(np.linalg.norm(a))
    if abs(norm - 1.0) > REALIGN_NORM_TOL:
        raise NumericalError(
            f"realigned matrix has Frobenius norm {norm:.17g}, expected 1"
        )
    return a


def reduced_superop(p: Projector, side: int) -> np.ndarray:
    """Reduced operator-space state of P / sqrt(dim V) on one factor.

    Side 1 returns A A^dagger (shape d1^2 x d1^2); side 2 returns
    A^dagger A (shape d2^2 x d2^2).  Both are Hermitian, positive
    semidefinite and unit-trace, and they share their nonzero spectrum.
    """
    if side not in (1, 2):
        raise InputError(f"side must be 1 or 2, got {side!r}")
    a = realign(p)
    if side == 1:
        g = a @ a.conj().T
    else:
        g = a.conj().T @ a
    g = (g + g.conj().T) / 2.0
    trace = float(np.trace(g).real)
    if abs(trace - 1.0) > UNIT_TRACE_TOL:
        raise NumericalError(f"reduced matrix trace {trace:.17g}, expected 1")
    return g


def _string_from_eigenvalues(
    values: np.ndarray, length: int, zero_threshold: float
) -> SchmidtString:
    """Normalize raw spectrum values into a SchmidtString of `length`."""
    v = np.asarray(values, dtype=np.float64).copy()
    if v.size > length:
        raise InputError(f"{v.size} values exceed string length {length}")
    worst = float(v.min()) if v.size else 0.0
    if worst < -NEGATIVE_EIGENVALUE_FLOOR:
        raise NumericalError(
            f"eigenvalue {worst:.3e} below the -1e-10 clamping floor"
        )
    v = np.clip(v, 0.0, None)
    total = float(v.sum())
    if abs(total - 1.0) > EIGENVALUE_SUM_TOL:
        raise NumericalError(f"eigenvalue sum {total:.17g} deviates from 1")
    v[v < zero_threshold] = 0.0
    v = np.sort(v)[::-1]
    probs = np.zeros(length, dtype=np.float64)
    probs[: v.size] = v
    return SchmidtString(probs=probs, k=int(np.count_nonzero(probs)))


def schmidt_string(
    p: Projector, zero_threshold: float = DEFAULT_ZERO_THRESHOLD
) -> SchmidtString:
    """Schmidt string of a subspace projector.

    Eigenvalues are taken from the smaller of the two reduced matrices;
    entries below `zero_threshold` are floored to exact zeros before the
    Schmidt rank is counted.
    """
    if zero_threshold < 0:
        raise InputError(f"zero_threshold must be >= 0, got {zero_threshold}")
    f = p.factorization
    side = 1 if f.d1 <= f.d2 else 2
    g = reduced_superop(p, side)
    w = hermitian_eigenvalues(g)
    return _string_from_eigenvalues(w, f.schmidt_length, zero_threshold)


def vector_schmidt(v, factorization: Factorization) -> np.ndarray:
    """Squared Schmidt coefficients of a unit vector in H1 (x) H2.

    The vector must be normalized to within 1e-8; it is renormalized exactly
    before decomposition, so the returned coefficients sum to 1 at machine
    precision.  Returned descending, length min(d1, d2).
    """
    vec = np.asarray(v, dtype=np.complex128).ravel()
    if vec.size != factorization.dim:
        raise InputError(
            f"vector length {vec.size} does not match composite dimension "
            f"{factorization.dim}"
        )
    if not np.all(np.isfinite(vec)):
        raise InputError("vector contains non-finite entries")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > VECTOR_NORM_TOL:
        raise InputError(f"vector norm {norm:.17g} deviates from 1 beyond 1e-8")
    m = (vec / norm).reshape(factorization.d1, factorization.d2)
    s = np.linalg.svd(m, compute_uv=False)
    return s * s


def pure_subspace_string(
    coefficients,
    factorization: Factorization,
    zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
) -> SchmidtString:
    """Schmidt string of the 1-D subspace spanned by a vector.

    Takes the vector's squared Schmidt coefficients (as from
    :func:`vector_schmidt`); the projector string is then all pairwise
    products, sorted descending and padded to min(d1^2, d2^2).
    """
    c = np.asarray(coefficients, dtype=np.float64).ravel()
    if c.size == 0:
        raise InputError("coefficient list must be non-empty")
    if c.size > min(factorization.d1, factorization.d2):
        raise InputError(
            f"{c.size} coefficients exceed min(d1, d2) = "
            f"{min(factorization.d1, factorization.d2)}"
        )
    if np.any(c < -NEGATIVE_EIGENVALUE_FLOOR):
        raise InputError(f"negative coefficient {c.min():.3e}")
    c = np.clip(c, 0.0, None)
    total = float(c.sum())
    if abs(total - 1.0) > VECTOR_NORM_TOL:
        raise InputError(f"coefficients sum to {total:.17g}, expected 1 within 1e-8")
    c = c / total
    products = np.outer(c, c).ravel()
    return _string_from_eigenvalues(
        products, factorization.schmidt_length, zero_threshold
    )
