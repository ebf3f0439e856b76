"""Cross checks of the numerical pipeline against closed forms.

Each family function sweeps a parameter range, recomputes every catalog
string through the full projector pipeline, and reports the worst deviation
per check.  These reports back the command line `verify` subcommand and the
acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalog import (
    Branch,
    SpinLabel,
    antisym_string_closed,
    antisymmetric_subspace,
    closed_measures,
    hydrogen_level,
    limiting_string,
    spin_projector,
    spin_string_closed,
    spin_x_operator,
    sym_string_closed,
    symmetric_subspace,
)
from .errors import InputError
from .linalg import hermitian_eigenvalues
from .majorization import sort_chain
from .schmidt import Measures, SchmidtString, measures, reduced_superop, schmidt_string
from .spaces import Factorization, SubspaceBasis, projector_from_basis

STRING_TOL = 1e-9
MEASURE_TOL = 1e-9
Q_MATRIX_TOL = 1e-10
COMPLETENESS_TOL = 1e-12


@dataclass(frozen=True)
class Check:
    """A single named deviation against its tolerance."""

    name: str
    deviation: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.deviation <= self.tolerance


@dataclass(frozen=True)
class FamilyReport:
    """All checks run for one catalog family."""

    family: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def max_deviation(self) -> float:
        return max(c.deviation for c in self.checks)

    @property
    def worst(self) -> Check:
        return max(self.checks, key=lambda c: c.deviation)

    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _measure_deviation(a: Measures, b: Measures) -> float:
    return max(abs(a.e_d - b.e_d), abs(a.e_i - b.e_i), abs(a.e_t - b.e_t))


def _string_deviation(a: SchmidtString, b: SchmidtString) -> float:
    n = max(len(a), len(b))
    return float(np.max(np.abs(a.padded(n) - b.padded(n))))


def verify_antisym(max_n: int = 12, tol: float = STRING_TOL) -> FamilyReport:
    """Pipeline vs closed form for antisymmetric subspaces, n = 2..max_n."""
    if max_n < 2:
        raise InputError(f"max_n must be >= 2, got {max_n}")
    checks: list[Check] = []
    for n in range(2, max_n + 1):
        p = projector_from_basis(antisymmetric_subspace(n))
        numeric = schmidt_string(p)
        closed = antisym_string_closed(n)
        checks.append(
            Check(f"antisym n={n} string", _string_deviation(numeric, closed), tol)
        )
        dev = _measure_deviation(measures(numeric), closed_measures("antisym", n))
        checks.append(Check(f"antisym n={n} measures", dev, MEASURE_TOL))
    return FamilyReport(family="antisym", checks=tuple(checks))


def verify_sym(max_n: int = 12, tol: float = STRING_TOL) -> FamilyReport:
    """Pipeline vs closed form for symmetric subspaces, n = 1..max_n."""
    if max_n < 1:
        raise InputError(f"max_n must be >= 1, got {max_n}")
    checks: list[Check] = []
    for n in range(1, max_n + 1):
        p = projector_from_basis(symmetric_subspace(n))
        numeric = schmidt_string(p)
        closed = sym_string_closed(n)
        checks.append(
            Check(f"sym n={n} string", _string_deviation(numeric, closed), tol)
        )
        dev = _measure_deviation(measures(numeric), closed_measures("sym", n))
        checks.append(Check(f"sym n={n} measures", dev, MEASURE_TOL))
    return FamilyReport(family="sym", checks=tuple(checks))


def _expected_q_matrix(two_j: int) -> np.ndarray:
    """Reduced spin-side matrix of the plus-branch projector, closed form.

    Expressed in the row-major pair basis of the spin-1/2 factor used by
    :func:`subent.schmidt.reduced_superop`, ordered (++, +-, -+, --).
    """
    j = two_j / 2.0
    denom = 2.0 * j + 1.0
    q_diag = (4.0 * j + 3.0) / (6.0 * denom)
    q_mid = j / (3.0 * denom)
    q_corner = (2.0 * j + 3.0) / (6.0 * denom)
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = m[3, 3] = q_diag
    m[1, 1] = m[2, 2] = q_mid
    m[0, 3] = m[3, 0] = q_corner
    return m


def verify_spin(
    max_two_j: int = 20,
    tol: float = STRING_TOL,
    q_tol: float = Q_MATRIX_TOL,
) -> FamilyReport:
    """Pipeline vs closed form for both coupling branches, 2j = 1..max_two_j.

    Besides the strings this checks the spin-side reduced matrix of the plus
    projector entrywise, the spectrum of the coupling operator X, and the
    completeness relation P(plus) + P(minus) = identity.
    """
    if max_two_j < 1:
        raise InputError(f"max_two_j must be >= 1, got {max_two_j}")
    checks: list[Check] = []
    for two_j in range(1, max_two_j + 1):
        s = SpinLabel(two_j)
        plus = spin_projector(s, Branch.PLUS)
        minus = spin_projector(s, Branch.MINUS)
        for branch, proj in (("plus", plus), ("minus", minus)):
            numeric = schmidt_string(proj)
            closed = spin_string_closed(s, Branch(branch))
            checks.append(
                Check(
                    f"spin 2j={two_j} {branch} string",
                    _string_deviation(numeric, closed),
                    tol,
                )
            )
            dev = _measure_deviation(
                measures(numeric), closed_measures(f"spin_{branch}", two_j)
            )
            checks.append(Check(f"spin 2j={two_j} {branch} measures", dev, MEASURE_TOL))

        q = reduced_superop(plus, side=2)
        q_dev = float(np.max(np.abs(q - _expected_q_matrix(two_j))))
        checks.append(Check(f"spin 2j={two_j} Q matrix", q_dev, q_tol))

        x = spin_x_operator(s)
        spectrum = hermitian_eigenvalues(x)
        expected = np.concatenate(
            [np.full(two_j + 2, s.j), np.full(two_j, -(s.j + 1.0))]
        )
        x_dev = float(np.max(np.abs(spectrum - expected)))
        checks.append(Check(f"spin 2j={two_j} X spectrum", x_dev, tol))

        eye = np.eye(2 * s.dim)
        comp_dev = float(np.max(np.abs(plus.matrix + minus.matrix - eye)))
        checks.append(
            Check(f"spin 2j={two_j} completeness", comp_dev, COMPLETENESS_TOL)
        )
    return FamilyReport(family="spin", checks=tuple(checks))


def hydrogen_chain_expected(n: int) -> tuple[str, ...]:
    """Total entanglement order of level n plus the limiting string S_0.

    Least entangled first: the plus branches V_1/2 .. V_{n-1/2} in
    increasing j, then S_0, then the minus branches Vt_{n-3/2} .. Vt_1/2 in
    decreasing j.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    plus = [f"V_{2 * l + 1}/2" for l in range(n)]
    minus = [f"Vt_{2 * l - 1}/2" for l in range(n - 1, 0, -1)]
    return tuple(plus + ["S_0"] + minus)


def verify_hydrogen(max_n: int = 8, tol: float = STRING_TOL) -> FamilyReport:
    """Pipeline strings and chain order for hydrogen-like levels, n = 1..max_n."""
    if max_n < 1:
        raise InputError(f"max_n must be >= 1, got {max_n}")
    checks: list[Check] = []
    for n in range(1, max_n + 1):
        level = hydrogen_level(n)
        for entry in level.entries:
            if entry.l == 0:
                # l = 0 is the whole 1 (x) 2 space; run it through the
                # pipeline as an explicit basis.
                basis = SubspaceBasis(
                    factorization=Factorization(1, 2),
                    vectors=np.eye(2, dtype=np.complex128),
                )
                numeric = schmidt_string(projector_from_basis(basis))
            else:
                numeric = schmidt_string(
                    spin_projector(SpinLabel(2 * entry.l), entry.branch)
                )
            checks.append(
                Check(
                    f"hydrogen n={n} {entry.label} string",
                    _string_deviation(numeric, entry.string),
                    tol,
                )
            )
        chain = sort_chain(
            [(e.label, e.string) for e in level.entries]
            + [("S_0", limiting_string())]
        )
        order_ok = chain.ordered and chain.labels == hydrogen_chain_expected(n)
        checks.append(
            Check(f"hydrogen n={n} chain order", 0.0 if order_ok else 1.0, 0.0)
        )
    return FamilyReport(family="hydrogen", checks=tuple(checks))


def verify_all(
    max_n: int = 12, max_two_j: int = 20, max_hydrogen_n: int = 8
) -> list[FamilyReport]:
    """Run every family verification at the standard ranges."""
    return [
        verify_antisym(max_n=max_n),
        verify_sym(max_n=max_n),
        verify_spin(max_two_j=max_two_j),
        verify_hydrogen(max_n=max_hydrogen_n),
    ]
