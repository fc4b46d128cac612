"""Exactly solvable PT-symmetric potentials: spectra, eigenfunctions, checks."""

from .errors import (AsymmetricGrid, BranchAmbiguity, ConvergenceFailure,
                     DegenerateRecurrence, DegreeTooLarge, GridTooCoarse,
                     NoImaginaryParameter, NonPositiveScale, NotApplicable, PoleHit,
                     PTSpectraError, PtViolation, SingularShift, UnsupportedFamily,
                     UsageError, ZeroDenominator)
from .numsolve import (DEFAULT_GRID, DiscretizedOperator, NumericMatchReport,
                       conjugation_defect, discretize, eigen_spectrum, match_spectra,
                       numeric_levels)
from .potentials import (FAMILY_INFO, FamilyKind, GridSpec, PotentialSpec, ShiftLattice,
                         make_spec, potential_value, pt_defect, singularity_set)
from .specfun import (jacobi_poly, jacobi_series_oracle, laguerre_poly,
                      laguerre_series_oracle)
from .spectra import (ClassificationReport, EnergyLevel, Spectrum, classify,
                      conjugate_partner, decay_exponents, energy, enumerate_levels,
                      is_regular, orbits)
from .wavefun import VerificationReport, default_grid, residual, wavefunction

__version__ = "0.1.0"
