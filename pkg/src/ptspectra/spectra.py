"""Closed-form energies, regularity, sign orbits and the breaking classifier.

A *sign orbit* relabels the parameters that enter the potential only through
their squares (alpha, beta for the Jacobi families, alpha for the oscillator)
or through s(s+1) (the PII families, where the second choice is s -> -1-s).
All members of an orbit describe the same potential but give different
energy towers; regularity then decides which levels are physical.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import NoImaginaryParameter, NotApplicable, ZeroDenominator
from .potentials import (FamilyKind, PotentialSpec, admissibility_violations,
                         ahmed_coefficients, coupling_c, is_imaginary, is_real,
                         pii_lambda_internal, shift_is_singular)

REGULARITY_TOL = 1e-12
DEDUP_TOL = 1e-12
ZERO_DENOM_TOL = 1e-13


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    orbit: tuple
    energy: complex
    regular: bool
    decay_exponents: Optional[tuple] = None


@dataclass(frozen=True)
class Spectrum:
    spec: PotentialSpec
    levels: tuple = ()

    @property
    def energies(self):
        return [lvl.energy for lvl in self.levels]

    def __len__(self):
        return len(self.levels)


@dataclass(frozen=True)
class Condition:
    name: str
    satisfied: bool


@dataclass(frozen=True)
class AhmedCheck:
    v1: float
    v2: float
    holds: bool
    agreement: bool


@dataclass(frozen=True)
class ClassificationReport:
    admissible: bool
    breaking_possible: bool
    reasons: tuple = field(default_factory=tuple)
    ahmed_check: Optional[AhmedCheck] = None


def orbits(spec):
    """All sign orbits of a spec, identity first."""
    if spec.kind.params == "jacobi":
        return list(itertools.product((1, -1), repeat=2))
    return [(1,), (-1,)]


def _identity_orbit(spec):
    return orbits(spec)[0]


def orbit_parameters(spec, orbit=None):
    """Parameters after applying the orbit's sign choices."""
    orbit = _identity_orbit(spec) if orbit is None else tuple(orbit)
    p = spec.kind.params
    if p == "jacobi":
        sa, sb = orbit
        return {"alpha": sa * complex(spec.alpha), "beta": sb * complex(spec.beta)}
    if p == "pii":
        (ss,) = orbit
        s = complex(spec.s)
        return {"s": s if ss > 0 else -1 - s}
    (sa,) = orbit
    return {"alpha": sa * complex(spec.alpha)}


def _pii_shift(spec, n, orbit):
    s = orbit_parameters(spec, orbit)["s"]
    d = s - n
    if abs(d) < ZERO_DENOM_TOL:
        raise ZeroDenominator(f"{spec.kind.value}: s - n vanishes (s={s}, n={n})")
    return d


def jacobi_indices(spec, n, orbit=None):
    """(alpha, beta) of the Jacobi polynomial P_n carrying level n.

    For the PII families these depend on n through s - n and Lambda.
    """
    p = spec.kind.params
    if p == "jacobi":
        q = orbit_parameters(spec, orbit)
        return q["alpha"], q["beta"]
    if p == "pii":
        d = _pii_shift(spec, n, orbit)
        lam = pii_lambda_internal(spec)
        return d - lam / d, d + lam / d
    raise NotApplicable("the oscillator uses Laguerre polynomials")


def energy(spec, n, orbit=None):
    """Closed-form energy of level n in the given sign orbit."""
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    p = spec.kind.params
    c = coupling_c(spec)
    if p == "jacobi":
        q = orbit_parameters(spec, orbit)
        return complex(c * (n + (q["alpha"] + q["beta"] + 1) / 2) ** 2)
    if p == "pii":
        d = _pii_shift(spec, n, orbit)
        lam = pii_lambda_internal(spec)
        return complex(-c * (d * d + lam * lam / (d * d)))
    q = orbit_parameters(spec, orbit)
    return complex(spec.omega * (2 * n + q["alpha"] + 1))


def decay_exponents(spec, n, orbit=None):
    """Asymptotic decay rates (x -> +inf, x -> -inf) of the analytic solution.

    |psi| ~ exp(-Re(k) |x|); the oscillator decays like a Gaussian and
    reports ``inf`` for both.
    """
    k = spec.kind
    if k.trigonometric:
        raise NotApplicable(f"{k.value} is trigonometric; no asymptotic region")
    if k is FamilyKind.LI_OSC:
        inf = complex(math.inf, 0.0)
        return inf, inf
    a = spec.a
    if k.params == "jacobi":
        q = orbit_parameters(spec, orbit)
        rate = 2 * a if k is FamilyKind.PI_COSH2 else a
        kappa = -rate * (n + (q["alpha"] + q["beta"] + 1) / 2)
        return complex(kappa), complex(kappa)
    al, be = jacobi_indices(spec, n, orbit)
    return complex(a * al), complex(a * be)


def is_regular(spec, n, orbit=None):
    """Regularity verdict for level n; see module docstring."""
    k = spec.kind
    if shift_is_singular(spec):
        if k is FamilyKind.LI_OSC and abs(complex(spec.alpha) ** 2 - 0.25) < 1e-12:
            return True
        return False
    if k.trigonometric or k is FamilyKind.LI_OSC:
        return True
    try:
        kp, km = decay_exponents(spec, n, orbit)
    except ZeroDenominator:
        return False
    return kp.real > REGULARITY_TOL and km.real > REGULARITY_TOL


def level(spec, n, orbit=None):
    orbit = _identity_orbit(spec) if orbit is None else tuple(orbit)
    e = energy(spec, n, orbit)
    dec = None if spec.kind.trigonometric else decay_exponents(spec, n, orbit)
    return EnergyLevel(n=n, orbit=orbit, energy=e,
                       regular=is_regular(spec, n, orbit), decay_exponents=dec)


def _sort_key(lvl):
    return (round(lvl.energy.real, 10), lvl.energy.imag)


def enumerate_levels(spec, n_max):
    """Regular levels with n <= n_max over all sign orbits.

    Levels are deduplicated by energy (absolute tolerance 1e-12) and sorted by
    (Re E, Im E).  Quantum numbers where a PII level is undefined (s = n) are
    skipped as irregular.
    """
    if int(n_max) != n_max or n_max < 0:
        raise ValueError("n_max must be a non-negative integer")
    kept = []
    for orb in orbits(spec):
        for n in range(int(n_max) + 1):
            try:
                lvl = level(spec, n, orb)
            except ZeroDenominator:
                continue
            if not lvl.regular:
                continue
            if any(abs(lvl.energy - other.energy) <= DEDUP_TOL for other in kept):
                continue
            kept.append(lvl)
    kept.sort(key=_sort_key)
    return Spectrum(spec=spec, levels=tuple(kept))


def _eps_nonzero(spec):
    return not shift_is_singular(spec)




def _exactly_one_imaginary(al, be):
    # both imaginary makes every level irregular at |x| -> inf
    ia, ib = is_imaginary(al), is_imaginary(be)
    return (ia and is_real(be)) or (ib and is_real(al))


def _orbit_has(spec, pred):
    return any(pred(orbit_parameters(spec, o)) for o in orbits(spec))


def classify(spec):
    """Evaluate the family's conditions for complex-energy regular solutions.

    For the i*sinh family at eps = 0 the verdict is cross-checked against the
    inequality |V2| > V1 + a^2/4 on the potential coefficients.
    """
    k = spec.kind
    violations = admissibility_violations(spec)
    admissible = not violations
    reasons = [Condition("PT-symmetric parameters", admissible)]
    al, be = complex(spec.alpha), complex(spec.beta)
    s = complex(spec.s)

    if k in (FamilyKind.PI_ISINH, FamilyKind.PI_COSH, FamilyKind.PI_COSH2):
        reasons.append(Condition("alpha or beta imaginary", _exactly_one_imaginary(al, be)))
        shift = ("eps != pi/2 + k pi" if k is FamilyKind.PI_ISINH else "eps != k pi")
        reasons.append(Condition(shift, _eps_nonzero(spec)))
    elif k in (FamilyKind.PI_SIN, FamilyKind.PI_SIN2_COS2):
        reasons.append(Condition("alpha and/or beta imaginary",
                                 is_imaginary(al) or is_imaginary(be)))
        reasons.append(Condition(
            "Im(alpha+beta) != 0 (for some sign orbit)",
            _orbit_has(spec, lambda q: abs((q["alpha"] + q["beta"]).imag) > 1e-12)))
        reasons.append(Condition("eps != 0", _eps_nonzero(spec)))
    elif k is FamilyKind.PI_COS:
        def pred(q):
            a_, b_ = q["alpha"], q["beta"]
            return is_imaginary(a_) and abs(b_ + a_.conjugate()) <= 1e-12 * max(1.0, abs(a_))
        reasons.append(Condition("beta = -conj(alpha) imaginary (for some sign orbit)",
                                 _orbit_has(spec, pred)))
        reasons.append(Condition("eps != 0", _eps_nonzero(spec)))
    elif k in (FamilyKind.PII_TANH, FamilyKind.PII_COTH):
        reasons.append(Condition("no such solutions", False))
    elif k in (FamilyKind.PII_COT, FamilyKind.PII_TAN):
        reasons.append(Condition("s = -1/2 + i sigma, sigma != 0",
                                 abs(s.real + 0.5) <= 1e-12 and abs(s.imag) > 1e-12))
        reasons.append(Condition("eps != 0", _eps_nonzero(spec)))
    else:
        reasons.append(Condition("alpha imaginary", is_imaginary(al)))
        reasons.append(Condition("eps != 0", _eps_nonzero(spec)))

    breaking = all(c.satisfied for c in reasons)

    ahmed = None
    if k is FamilyKind.PI_ISINH and abs(spec.eps) <= 1e-9:
        v1, v2 = ahmed_coefficients(spec)
        v1r, v2r = float(v1.real), float(v2.real)
        holds = abs(v2r) > v1r + spec.a ** 2 / 4
        ahmed = AhmedCheck(v1=v1r, v2=v2r, holds=holds, agreement=holds == breaking)

    return ClassificationReport(admissible=admissible, breaking_possible=breaking,
                                reasons=tuple(reasons), ahmed_check=ahmed)


def conjugate_partner(spec):
    """Spec with every imaginary parameter (or imaginary part of s) negated.

    The partner defines the same potential; its energies are the complex
    conjugates of the original ones.
    """
    p = spec.kind.params
    if p == "pii":
        s = complex(spec.s)
        if s.imag == 0:
            raise NoImaginaryParameter(f"{spec.kind.value}: s is real")
        return spec.with_params(s=s.conjugate())
    al = complex(spec.alpha)
    changes = {}
    if al.imag != 0:
        changes["alpha"] = al.conjugate()
    if p == "jacobi":
        be = complex(spec.beta)
        if be.imag != 0:
            changes["beta"] = be.conjugate()
    if not changes:
        raise NoImaginaryParameter(f"{spec.kind.value}: no imaginary parameter")
    return spec.with_params(**changes)
