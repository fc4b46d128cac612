"""Finite-difference confirmation of the analytic spectra.

-d^2/dx^2 + V(x) is discretized with the 3-point Laplacian on the interior of
a uniform grid (Dirichlet ends) and the resulting complex-symmetric
tridiagonal matrix is diagonalized densely with LAPACK's general
non-Hermitian driver.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceFailure, UnsupportedFamily
from .potentials import GridSpec, potential_value

CEILING_FRACTION = 0.25
DEFAULT_GRID = GridSpec(-12.0, 12.0, 2001)


@dataclass(frozen=True, eq=False)
class DiscretizedOperator:
    grid: GridSpec
    x: np.ndarray
    diagonal: np.ndarray
    off_diagonal: float
    boundary: str = "dirichlet"

    @property
    def size(self):
        return self.diagonal.size

    @property
    def ceiling(self):
        """Validity ceiling on Re E for the 3-point stencil."""
        return CEILING_FRACTION * (math.pi / self.grid.h) ** 2

    def to_dense(self):
        m = np.diag(self.diagonal)
        off = np.full(self.size - 1, self.off_diagonal, dtype=complex)
        m += np.diag(off, 1) + np.diag(off, -1)
        return m


@dataclass(frozen=True)
class NumericMatchReport:
    numeric_levels: tuple
    matches: tuple  # (analytic, numeric, distance)
    unmatched_analytic: tuple
    conjugation_defect: float

    @property
    def all_matched(self):
        return not self.unmatched_analytic


def discretize(spec, grid=DEFAULT_GRID):
    if spec.kind.trigonometric:
        raise UnsupportedFamily(
            f"{spec.kind.value}: trigonometric families are verified by residual only")
    x = grid.points()[1:-1]
    h = grid.h
    v = np.asarray(potential_value(spec, x), dtype=complex)
    return DiscretizedOperator(grid=grid, x=x, diagonal=2.0 / h ** 2 + v,
                               off_diagonal=-1.0 / h ** 2)


def _sorted(vals):
    order = np.lexsort((vals.imag, np.round(vals.real, 9)))
    return vals[order]


def eigen_spectrum(op, k=None):
    """The k lowest eigenvalues (by Re, then Im) below the validity ceiling.

    ``k=None`` returns every eigenvalue below the ceiling.  Truncation never
    separates a complex-conjugate pair.
    """
    if k is not None and (k < 1 or k > op.size):
        raise ValueError(f"k must lie in [1, {op.size}]")
    try:
        vals = scipy.linalg.eigvals(op.to_dense(), overwrite_a=True, check_finite=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    vals = _sorted(vals[vals.real < op.ceiling])
    if k is None or k >= vals.size:
        return [complex(v) for v in vals]
    cut = k
    while cut < vals.size and vals[cut - 1].imag != 0 and \
            abs(vals[cut].real - vals[cut - 1].real) <= 1e-8 * (1 + abs(vals[cut - 1])):
        cut += 1
    return [complex(v) for v in vals[:cut]]


@functools.lru_cache(maxsize=16)
def numeric_levels(spec, grid=DEFAULT_GRID, k=None):
    """Cached eigen_spectrum(discretize(spec, grid), k) as a tuple."""
    return tuple(eigen_spectrum(discretize(spec, grid), k))


def conjugation_defect(values):
    vals = np.asarray(values, dtype=complex)
    if vals.size == 0:
        return 0.0
    conj = np.conj(vals)
    d = np.abs(vals[:, None] - conj[None, :])
    return float(np.max(np.min(d, axis=1)))


def match_spectra(analytic, numeric, tol):
    """Greedy nearest-neighbour matching of analytic levels to numeric ones.

    ``analytic`` is a Spectrum or a sequence of energies / EnergyLevels.
    Analytic levels are processed by increasing |E|; each numeric value is
    used at most once and a match requires distance <= tol.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if hasattr(analytic, "levels"):
        analytic = analytic.levels
    targets = [complex(getattr(a, "energy", a)) for a in analytic]
    nums = [complex(v) for v in numeric]
    used = set()
    matches, unmatched = [], []
    for e in sorted(targets, key=abs):
        best, best_d = None, math.inf
        for j, v in enumerate(nums):
            if j in used:
                continue
            d = abs(v - e)
            if d < best_d:
                best, best_d = j, d
        if best is not None and best_d <= tol:
            used.add(best)
            matches.append((e, nums[best], best_d))
        else:
            unmatched.append(e)
    return NumericMatchReport(numeric_levels=tuple(nums), matches=tuple(matches),
                              unmatched_analytic=tuple(unmatched),
                              conjugation_defect=conjugation_defect(nums))
