"""Bipartite factorizations, subspace bases and projectors.

The composite space H1 (x) H2 is flattened row-major with the H1 index slow:
the product basis vector e_i (x) e_k lives at composite index ``i * d2 + k``.
Every matrix in this module is expressed in that product basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .linalg import as_matrix

ORTHONORMALITY_TOL = 1e-10
PROJECTOR_HERMITICITY_TOL = 1e-10
PROJECTOR_IDEMPOTENCY_TOL = 1e-10
PROJECTOR_TRACE_TOL = 1e-8


def _freeze(a: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Factorization:
    """Tensor factorization of a composite space into d1 (x) d2."""

    d1: int
    d2: int

    def __post_init__(self) -> None:
        for name, value in (("d1", self.d1), ("d2", self.d2)):
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise InputError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise InputError(f"{name} must be >= 1, got {value}")
            object.__setattr__(self, name, int(value))

    @property
    def dim(self) -> int:
        """Dimension of the composite space."""
        return self.d1 * self.d2

    @property
    def schmidt_length(self) -> int:
        """Length of Schmidt strings over this factorization: min(d1^2, d2^2)."""
        return min(self.d1 ** 2, self.d2 ** 2)

    def composite_index(self, i: int, k: int) -> int:
        """Composite index of e_i (x) e_k (0-based, H1 index slow)."""
        if not 0 <= i < self.d1:
            raise InputError(f"i must be in [0, {self.d1}), got {i}")
        if not 0 <= k < self.d2:
            raise InputError(f"k must be in [0, {self.d2}), got {k}")
        return i * self.d2 + k


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal basis of a subspace, stored as rows of `vectors`.

    Construction validates orthonormality: the Gram matrix must equal the
    identity entrywise to within 1e-10.  Raw spanning sets should go through
    :func:`subent.linalg.gram_schmidt` first.
    """

    factorization: Factorization
    vectors: np.ndarray

    def __post_init__(self) -> None:
        v = as_matrix(self.vectors, "vectors")
        if v.shape[1] != self.factorization.dim:
            raise InputError(
                f"vectors have length {v.shape[1]}, expected "
                f"{self.factorization.dim} for factorization "
                f"{self.factorization.d1}x{self.factorization.d2}"
            )
        if not 1 <= v.shape[0] <= self.factorization.dim:
            raise InputError(
                f"basis size {v.shape[0]} out of range [1, {self.factorization.dim}]"
            )
        gram = v @ v.conj().T
        defect = float(np.max(np.abs(gram - np.eye(v.shape[0]))))
        if defect > ORTHONORMALITY_TOL:
            raise InputError(
                f"basis is not orthonormal (Gram defect {defect:.3e}); "
                "orthonormalize with gram_schmidt first"
            )
        object.__setattr__(self, "vectors", _freeze(v))

    @property
    def dim(self) -> int:
        """Dimension of the spanned subspace."""
        return self.vectors.shape[0]


@dataclass(frozen=True)
class ProjectorReport:
    """Measured defects of a candidate projector matrix.

    `hermiticity` and `idempotency` are max-abs entrywise defects of
    ``P - P^dagger`` and ``P @ P - P``; `trace` is ``|Tr(P) - dim|``.
    """

    hermiticity: float
    idempotency: float
    trace: float
    dim: int
    passes: bool


def validate_projector(p, dim: int | None = None) -> ProjectorReport:
    """Check a matrix against the orthogonal projector contract.

    Accepts either a :class:`Projector` or a raw square matrix.  When `dim`
    is omitted it is inferred as the rounded real trace.  The report passes
    when Hermiticity and idempotency defects are at most 1e-10 entrywise,
    the trace is within 1e-8 of `dim`, and `dim` is at least 1.
    """
    if isinstance(p, Projector):
        matrix = p.matrix
        if dim is None:
            dim = p.dim
    else:
        matrix = as_matrix(p, "projector")
        if matrix.shape[0] != matrix.shape[1]:
            raise InputError(f"projector must be square, got shape {matrix.shape}")
        if dim is None:
            dim = int(round(float(np.trace(matrix).real)))
    hermiticity = float(np.max(np.abs(matrix - matrix.conj().T)))
    idempotency = float(np.max(np.abs(matrix @ matrix - matrix)))
    trace = float(abs(complex(np.trace(matrix)) - dim))
    passes = (
        hermiticity <= PROJECTOR_HERMITICITY_TOL
        and idempotency <= PROJECTOR_IDEMPOTENCY_TOL
        and trace <= PROJECTOR_TRACE_TOL
        and dim >= 1
    )
    return ProjectorReport(
        hermiticity=hermiticity,
        idempotency=idempotency,
        trace=trace,
        dim=int(dim),
        passes=passes,
    )


@dataclass(frozen=True)
class Projector:
    """Validated orthogonal projector onto a `dim`-dimensional subspace.

    Construction re-runs :func:`validate_projector` and refuses matrices
    that fail it, so holding a `Projector` is proof of validity.
    """

    factorization: Factorization
    matrix: np.ndarray
    dim: int

    def __post_init__(self) -> None:
        m = as_matrix(self.matrix, "matrix")
        expected = self.factorization.dim
        if m.shape != (expected, expected):
            raise InputError(
                f"projector shape {m.shape} does not match factorization "
                f"{self.factorization.d1}x{self.factorization.d2}"
            )
        report = validate_projector(m, dim=self.dim)
        if not report.passes:
            raise InputError(
                "matrix fails projector validation: "
                f"hermiticity={report.hermiticity:.3e}, "
                f"idempotency={report.idempotency:.3e}, "
                f"trace defect={report.trace:.3e}, dim={report.dim}"
            )
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "matrix", _freeze(m))

    @classmethod
    def from_matrix(
        cls, factorization: Factorization, matrix, dim: int | None = None
    ) -> "Projector":
        """Build a projector from a raw matrix, inferring `dim` from the trace."""
        m = as_matrix(matrix, "matrix")
        if dim is None:
            dim = int(round(float(np.trace(m).real)))
        if dim < 1:
            raise InputError(f"projector trace rounds to {dim}, expected >= 1")
        return cls(factorization=factorization, matrix=m, dim=dim)

    def report(self) -> ProjectorReport:
        return validate_projector(self)


def projector_from_basis(basis: SubspaceBasis) -> Projector:
    """Orthogonal projector P = sum_a |v_a><v_a| onto the span of `basis`."""
    v = basis.vectors
    matrix = v.T @ v.conj()
    return Projector(factorization=basis.factorization, matrix=matrix, dim=basis.dim)


def embed(basis: SubspaceBasis, d1: int, d2: int) -> SubspaceBasis:
    """Embed a subspace into a larger factorization d1 (x) d2.

    Each basis vector keeps its amplitudes on the original product basis
    vectors; the new directions get exact zeros.  Pairwise inner products are
    preserved exactly, so the result is again orthonormal.
    """
    f = basis.factorization
    if d1 < f.d1 or d2 < f.d2:
        raise InputError(
            f"cannot embed {f.d1}x{f.d2} into {d1}x{d2}: "
            "target factors must not shrink"
        )
    target = Factorization(d1, d2)
    old = basis.vectors.reshape(basis.dim, f.d1, f.d2)
    new = np.zeros((basis.dim, d1, d2), dtype=np.complex128)
    new[:, : f.d1, : f.d2] = old
    return SubspaceBasis(factorization=target, vectors=new.reshape(basis.dim, -1))
