"""Analytic eigenfunctions and their verification by grid residual.

Each eigenfunction is (z')^(-1/2) exp(1/2 int Q dz) F(z).  For the Jacobi
families the prefactor (1-z)^mu (1+z)^nu is rewritten per row in terms of
half-angle functions of the shifted coordinate, so that the logarithms used
for the complex powers are continuous along the whole evaluation line:

* hyperbolic rows use bases that stay in one open half plane after the shift
  is reduced to its fundamental window (principal branch suffices);
* trigonometric rows use log sin u = -iu + log1p(-e^{2iu}) + const (and the
  cos analogue), which is analytic on any line with Im u != 0.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchAmbiguity, GridTooCoarse, NotApplicable, PoleHit
from .potentials import FamilyKind, GridSpec, pole_distance, potential_value
from .spectra import EnergyLevel, energy, is_regular, jacobi_indices, level, orbit_parameters
from .specfun import jacobi_poly, laguerre_poly

BRANCH_TOL = 1e-6
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class WavefunctionSample:
    x: float
    psi: complex


@dataclass(frozen=True)
class VerificationReport:
    level: EnergyLevel
    residual_norm: float
    boundary_moduli: tuple
    passed: bool
    stencil_error: float = 0.0
    decay_thresholds: tuple = (1.0, 1.0)


def _principal_log(b):
    b = np.asarray(b, dtype=complex)
    near_cut = (b.real < 0) & (np.abs(b.imag) <= BRANCH_TOL * np.maximum(1.0, np.abs(b)))
    if np.any(near_cut):
        raise BranchAmbiguity("fractional power argument on the negative real axis")
    return np.log(b)


def _log_sin(u):
    """Continuous log sin(u) (up to a constant) for Im u != 0."""
    sgn = np.sign(np.imag(u))
    if np.any(sgn == 0):
        return _principal_log(np.sin(u))
    pos = sgn > 0
    out = np.empty_like(u)
    up, um = u[pos], u[~pos]
    out[pos] = -1j * up + np.log1p(-np.exp(2j * up))
    out[~pos] = 1j * um + np.log1p(-np.exp(-2j * um))
    return out


def _log_cos(u):
    """Continuous log cos(u) (up to a constant) for Im u != 0."""
    sgn = np.sign(np.imag(u))
    if np.any(sgn == 0):
        return _principal_log(np.cos(u))
    pos = sgn > 0
    out = np.empty_like(u)
    up, um = u[pos], u[~pos]
    out[pos] = -1j * up + np.log1p(np.exp(2j * up))
    out[~pos] = 1j * um + np.log1p(np.exp(-2j * um))
    return out


def _wrap(eps, low, period):
    """eps reduced into [low, low + period)."""
    return low + math.fmod(math.fmod(eps - low, period) + period, period)


def _jacobi_row_parts(spec, n, orbit, x):
    """(log prefactor, z, alpha_n, beta_n) for the Jacobi-type rows."""
    k = spec.kind
    a = spec.a
    eps = spec.eps
    al, be = jacobi_indices(spec, n, orbit)

    if k is FamilyKind.PI_ISINH:
        e = _wrap(eps, -math.pi / 2, 2 * math.pi)
        if e > math.pi / 2:
            # i sinh(w + i pi) = -i sinh(w): shift back and swap the indices
            e -= math.pi
            al, be = be, al
        w = a * x + 1j * e
        v = w / 2
        lp = ((al + 0.5) * _principal_log(np.cosh(v) - 1j * np.sinh(v))
              + (be + 0.5) * _principal_log(np.cosh(v) + 1j * np.sinh(v)))
        return lp, 1j * np.sinh(w), al, be

    if k in (FamilyKind.PI_COSH, FamilyKind.PI_COSH2):
        e = _wrap(eps, -math.pi, 2 * math.pi)
        if k is FamilyKind.PI_COSH:
            v = (a * x + 1j * e) / 2
        else:
            v = a * x + 0.5j * e
        lp = ((al + 0.5) * _principal_log(np.sinh(v))
              + (be + 0.5) * _principal_log(np.cosh(v)))
        return lp, np.cosh(2 * v), al, be

    if k is FamilyKind.PI_SIN:
        w = a * x + 1j * eps
        v = w / 2
        lp = (al + 0.5) * _log_sin(v) + (be + 0.5) * _log_cos(v)
        return lp, np.cos(w), al, be

    if k is FamilyKind.PI_SIN2_COS2:
        v = a * x + 0.5j * eps
        lp = (al + 0.5) * _log_sin(v) + (be + 0.5) * _log_cos(v)
        return lp, np.cos(2 * v), al, be

    if k is FamilyKind.PI_COS:
        w = a * x + 1j * eps
        v = w / 2 + math.pi / 4
        lp = (al + 0.5) * _log_cos(v) + (be + 0.5) * _log_sin(v)
        return lp, np.sin(w), al, be

    # PII rows: (1-z)^(al/2) (1+z)^(be/2) = exp(+w L/d) * base^(-d) with d = s-n
    d = (al + be) / 2
    ratio = -(al - be) / 2  # Lambda / d
    if k is FamilyKind.PII_TANH:
        e = _wrap(eps, -math.pi / 2, math.pi)
        w = a * x + 1j * e
        lp = w * ratio - d * _principal_log(np.cosh(w))
        return lp, np.tanh(w), al, be
    if k is FamilyKind.PII_COTH:
        e = _wrap(eps, 0.0, math.pi)
        w = a * x + 1j * e
        lp = w * ratio - d * _principal_log(np.sinh(w))
        return lp, 1 / np.tanh(w), al, be
    w = a * x + 1j * eps
    if k is FamilyKind.PII_COT:
        lp = 1j * w * ratio - d * _log_sin(w)
        return lp, -1j / np.tan(w), al, be
    lp = 1j * w * ratio - d * _log_cos(w)
    return lp, 1j * np.tan(w), al, be


def _li_parts(spec, n, orbit, x):
    al = orbit_parameters(spec, orbit)["alpha"]
    u = x + 1j * spec.eps
    p = al + 0.5
    gauss = -0.25 * spec.omega * u * u
    if spec.eps == 0:
        k = round(p.real)
        if abs(p - k) < 1e-12 and k >= 0:
            with np.errstate(divide="ignore"):
                lp = k * np.log(np.abs(u)) + 1j * math.pi * k * (u.real < 0)
            return lp + gauss, 0.5 * spec.omega * u * u, al
        if np.any(u.real < 0):
            raise BranchAmbiguity("non-integer power of x on the negative axis with eps = 0")
    return p * _principal_log(u) + gauss, 0.5 * spec.omega * u * u, al


def log_prefactor(spec, n, orbit, x):
    """Logarithm of the closed-form prefactor multiplying the polynomial."""
    x = np.atleast_1d(np.asarray(x, dtype=float)).astype(complex)
    if spec.kind is FamilyKind.LI_OSC:
        return _li_parts(spec, n, orbit, x)[0]
    return _jacobi_row_parts(spec, n, orbit, x)[0]


def wavefunction(spec, n, orbit=None, x=0.0, *, normalize=True, allow_irregular=False):
    """Analytic eigenfunction psi_n on the points x.

    With ``normalize`` (and more than one point) the result is scaled so the
    largest modulus is 1.  Irregular levels are refused unless
    ``allow_irregular`` is set.
    """
    orbit = tuple(orbit) if orbit is not None else None
    if not allow_irregular and not is_regular(spec, n, orbit):
        raise NotApplicable(f"level n={n} orbit={orbit} of {spec.kind.value} is not regular")
    scalar = np.ndim(x) == 0
    xr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(pole_distance(spec, xr) <= 1e-10):
        raise PoleHit(f"{spec.kind.value}: evaluation point on a pole")
    xc = xr.astype(complex)

    if spec.kind is FamilyKind.LI_OSC:
        lp, z, al = _li_parts(spec, n, orbit, xc)
        poly = laguerre_poly(n, al, z)
    else:
        lp, z, al, be = _jacobi_row_parts(spec, n, orbit, xc)
        poly = jacobi_poly(n, al, be, z)

    finite = np.isfinite(lp.real)
    shift = np.max(lp.real[finite]) if np.any(finite) else 0.0
    if scalar or not normalize:
        shift = 0.0
    with np.errstate(under="ignore"):
        psi = np.exp(lp - shift) * poly
    if normalize and psi.size > 1:
        m = np.max(np.abs(psi))
        if m > 0:
            psi = psi / m
    return psi[0] if scalar else psi


def sample(spec, n, orbit, grid):
    """Normalized eigenfunction on a grid as WavefunctionSample records."""
    x = grid.points()
    psi = wavefunction(spec, n, orbit, x)
    return [WavefunctionSample(float(xi), complex(p)) for xi, p in zip(x, psi)]


def second_derivative(psi, h, step=1):
    """Centered 5-point second derivative with spacing step*h.

    Returns values for the interior points [2*step, N - 2*step).
    """
    m = step
    f = np.asarray(psi)
    n = f.size
    c = slice(2 * m, n - 2 * m)
    return (-f[4 * m:] + 16 * f[3 * m:n - m] - 30 * f[c] + 16 * f[m:n - 3 * m]
            - f[:n - 4 * m]) / (12 * (m * h) ** 2)


def stencil_residual(psi, h, e, v):
    """max |psi'' + (E - V) psi| / max |psi| on the 2-point trimmed interior,
    plus a Richardson estimate of the stencil truncation error."""
    psi = np.asarray(psi)
    v = np.asarray(v)
    scale = np.max(np.abs(psi))
    d2 = second_derivative(psi, h)
    res = d2 + (e - v[2:-2]) * psi[2:-2]
    norm = float(np.max(np.abs(res)) / scale)
    if psi.size >= 9:
        d2_wide = second_derivative(psi, h, step=2)
        est = float(np.max(np.abs(d2[2:-2] - d2_wide)) / 15 / scale)
    else:
        est = 0.0
    return norm, est


def decay_thresholds(spec, lvl, grid):
    """Allowed |psi| at the grid ends (relative to the maximum)."""
    k = spec.kind
    if k.trigonometric:
        return (math.inf, math.inf)
    if k is FamilyKind.LI_OSC:
        out = []
        for xe in (grid.x_max, grid.x_min):
            arg = spec.omega * (xe * xe - spec.eps ** 2) / 8
            out.append(min(1.0, 10 * math.exp(-arg)) if arg > 0 else 1.0)
        return tuple(out)
    kp, km = lvl.decay_exponents
    return (min(1.0, 10 * math.exp(-0.5 * kp.real * abs(grid.x_max))),
            min(1.0, 10 * math.exp(-0.5 * km.real * abs(grid.x_min))))


def residual(spec, n, orbit, grid, tol=DEFAULT_TOL, *, allow_irregular=False):
    """Verify level n as a solution of psi'' + (E - V) psi = 0 on a grid."""
    orbit = tuple(orbit) if orbit is not None else None
    lvl = level(spec, n, orbit)
    if not lvl.regular and not allow_irregular:
        raise NotApplicable(f"level n={n} orbit={orbit} of {spec.kind.value} is not regular")
    x = grid.points()
    h = grid.h
    if np.any(pole_distance(spec, x) < 10 * h):
        raise PoleHit(f"{spec.kind.value}: grid passes within 10h of a pole")

    psi = wavefunction(spec, n, orbit, x, allow_irregular=True)
    v = potential_value(spec, x)
    e = energy(spec, n, orbit)
    norm, est = stencil_residual(psi, h, e, v)
    if est > tol / 2:
        raise GridTooCoarse(f"stencil error estimate {est:.2e} exceeds tol/2 = {tol / 2:.2e}")
    bounds = (float(abs(psi[-1])), float(abs(psi[0])))
    thr = decay_thresholds(spec, lvl, grid)
    passed = norm <= tol and bounds[0] <= thr[0] and bounds[1] <= thr[1]
    return VerificationReport(level=lvl, residual_norm=norm, boundary_moduli=bounds,
                              passed=bool(passed), stencil_error=est,
                              decay_thresholds=thr)


def default_grid(spec):
    """The standard verification grid for a family."""
    if spec.kind.trigonometric:
        return GridSpec(-math.pi / spec.a + 0.2, math.pi / spec.a - 0.2, 2001)
    return GridSpec(-10.0, 10.0, 2001)
