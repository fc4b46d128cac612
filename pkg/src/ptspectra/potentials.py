"""The eleven PT-symmetric solvable potentials and their evaluation.

Every family is written in terms of the complex coordinate ``w = a x + i eps``
(``u = a x + i eps / 2`` for the two double-angle PI rows, ``x + i eps`` for
the oscillator).  The imaginary shift ``eps`` is the integration constant of
the variable transformation; it moves the real axis to a parallel line in the
complex plane and regularizes the singular members of the catalog.
"""

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import (AsymmetricGrid, NonPositiveScale, PoleHit, PtViolation,
                     SingularShift)

SHIFT_TOL = 1e-9
POLE_TOL = 1e-10
PARAM_TOL = 1e-12


class FamilyKind(enum.Enum):
    PI_ISINH = "pi-isinh"
    PI_COSH = "pi-cosh"
    PI_COSH2 = "pi-cosh2"
    PI_SIN = "pi-sin"
    PI_SIN2_COS2 = "pi-sin2cos2"
    PI_COS = "pi-cos"
    PII_TANH = "pii-tanh"
    PII_COTH = "pii-coth"
    PII_COT = "pii-cot"
    PII_TAN = "pii-tan"
    LI_OSC = "li-osc"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            pass
        try:
            return cls[str(value).upper().replace("-", "_")]
        except KeyError:
            raise ValueError(f"unknown family {value!r}") from None

    @property
    def info(self):
        return FAMILY_INFO[self]

    @property
    def params(self):
        return self.info.params

    @property
    def trigonometric(self):
        return self.info.trigonometric


@dataclass(frozen=True)
class FamilyInfo:
    row: int
    params: str  # "jacobi" | "pii" | "li"
    trigonometric: bool
    z_label: str
    c_factor: float  # C = c_factor * a**2 (LI: C = 2 omega)
    potential_formula: str
    energy_formula: str
    condition: str


FAMILY_INFO = {
    FamilyKind.PI_ISINH: FamilyInfo(
        1, "jacobi", False, "i sinh(ax+ie)", -1.0,
        "-(2(al^2+be^2)-1)/(4cosh^2(x+ie)) - i(al^2-be^2)sinh(x+ie)/(2cosh^2(x+ie))",
        "-(n+(al+be+1)/2)^2",
        "al or be imaginary, e != pi/2 + k pi"),
    FamilyKind.PI_COSH: FamilyInfo(
        2, "jacobi", False, "cosh(ax+ie)", -1.0,
        "(2(al^2+be^2)-1)/(4sinh^2(x+ie)) + (al^2-be^2)cosh(x+ie)/(2sinh^2(x+ie))",
        "-(n+(al+be+1)/2)^2",
        "al or be imaginary, e != k pi"),
    FamilyKind.PI_COSH2: FamilyInfo(
        3, "jacobi", False, "cosh(2ax+ie)", -4.0,
        "-(4be^2-1)/(4cosh^2(x+ie/2)) + (4al^2-1)/(4sinh^2(x+ie/2))",
        "-(2n+al+be+1)^2",
        "al or be imaginary, e != k pi"),
    FamilyKind.PI_SIN: FamilyInfo(
        4, "jacobi", True, "cos(ax+ie)", 1.0,
        "(2(al^2+be^2)-1)/(4sin^2(x+ie)) + (al^2-be^2)cos(x+ie)/(2sin^2(x+ie))",
        "(n+(al+be+1)/2)^2",
        "al and/or be imaginary, Im(al+be) != 0, e != 0"),
    FamilyKind.PI_SIN2_COS2: FamilyInfo(
        5, "jacobi", True, "cos(2ax+ie)", 4.0,
        "(4be^2-1)/(4cos^2(x+ie/2)) + (4al^2-1)/(4sin^2(x+ie/2))",
        "(2n+al+be+1)^2",
        "al and/or be imaginary, Im(al+be) != 0, e != 0"),
    FamilyKind.PI_COS: FamilyInfo(
        6, "jacobi", True, "sin(ax+ie)", 1.0,
        "(2(al^2+be^2)-1)/(4cos^2(x+ie)) + (al^2-be^2)sin(x+ie)/(2cos^2(x+ie))",
        "(n+(al+be+1)/2)^2",
        "be = -conj(al) imaginary, e != 0"),
    FamilyKind.PII_TANH: FamilyInfo(
        7, "pii", False, "tanh(ax+ie)", 1.0,
        "-s(s+1)/cosh^2(x+ie) - 2i la tanh(x+ie)",
        "-(s-n)^2 + la^2/(s-n)^2",
        "no such solutions"),
    FamilyKind.PII_COTH: FamilyInfo(
        8, "pii", False, "coth(ax+ie)", 1.0,
        "s(s+1)/sinh^2(x+ie) - 2i la coth(x+ie)",
        "-(s-n)^2 + la^2/(s-n)^2",
        "no such solutions"),
    FamilyKind.PII_COT: FamilyInfo(
        9, "pii", True, "-i cot(ax+ie)", -1.0,
        "s(s+1)/sin^2(x+ie) - 2i la cot(x+ie)",
        "(s-n)^2 + la^2/(s-n)^2",
        "s = -1/2 + i sigma, e != 0"),
    FamilyKind.PII_TAN: FamilyInfo(
        10, "pii", True, "i tan(ax+ie)", -1.0,
        "s(s+1)/cos^2(x+ie) + 2i la tan(x+ie)",
        "(s-n)^2 + la^2/(s-n)^2",
        "s = -1/2 + i sigma, e != 0"),
    FamilyKind.LI_OSC: FamilyInfo(
        11, "li", False, "(omega/2)(x+ie)^2", 2.0,
        "(om^2/4)(x+ie)^2 + (al^2-1/4)/(x+ie)^2",
        "2 om (n+(al+1)/2)",
        "al imaginary, e != 0"),
}


@dataclass(frozen=True)
class ShiftLattice:
    """Excluded imaginary shifts: ``offset + k * period`` (a single point if
    ``period`` is None)."""

    offset: float
    period: Optional[float] = None

    def contains(self, eps, tol=SHIFT_TOL):
        if self.period is None:
            return abs(eps - self.offset) <= tol
        r = math.remainder(eps - self.offset, self.period)
        return abs(r) <= tol

    def as_list(self):
        return [self.offset] if self.period is None else [self.offset, self.period]


@dataclass(frozen=True)
class PotentialSpec:
    """One member of the catalog.

    Constructing this directly skips validation; use :func:`make_spec` for
    PT-admissible specs.
    """

    kind: FamilyKind
    alpha: complex = 0j
    beta: complex = 0j
    s: complex = 0j
    lam: float = 0.0
    omega: float = 1.0
    a: float = 1.0
    eps: float = 0.0
    allow_singular: bool = field(default=False, compare=True)

    def with_params(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    count: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError("grid requires x_min < x_max")
        if int(self.count) != self.count or self.count < 3:
            raise ValueError("grid requires count >= 3")

    @property
    def h(self):
        return (self.x_max - self.x_min) / (self.count - 1)

    def points(self):
        return np.linspace(self.x_min, self.x_max, self.count)

    @property
    def symmetric(self):
        return abs(self.x_min + self.x_max) <= 1e-12 * max(1.0, abs(self.x_max))


def is_real(v, tol=PARAM_TOL):
    v = complex(v)
    return abs(v.imag) <= tol * max(1.0, abs(v))


def is_imaginary(v, tol=PARAM_TOL):
    """Purely imaginary and nonzero."""
    v = complex(v)
    return abs(v.real) <= tol * max(1.0, abs(v)) and abs(v.imag) > tol


def _real_or_imaginary(v):
    return is_real(v) or is_imaginary(v)


def singularity_set(kind):
    """Shifts ``eps`` for which the potential has poles on the real x axis."""
    kind = FamilyKind.parse(kind)
    if kind in (FamilyKind.PI_ISINH, FamilyKind.PII_TANH):
        return ShiftLattice(math.pi / 2, math.pi)
    if kind in (FamilyKind.PI_COSH, FamilyKind.PI_COSH2, FamilyKind.PII_COTH):
        return ShiftLattice(0.0, math.pi)
    return ShiftLattice(0.0)


def admissibility_violations(spec):
    """Return the list of violated PT conditions (empty when admissible)."""
    kind = spec.kind
    out = []
    if kind.params == "jacobi":
        if not _real_or_imaginary(spec.alpha):
            out.append("alpha must be real or purely imaginary (conj(alpha) = +-alpha)")
        if not _real_or_imaginary(spec.beta):
            out.append("beta must be real or purely imaginary (conj(beta) = +-beta)")
        if kind is FamilyKind.PI_COS and not out:
            a2 = complex(spec.alpha) ** 2
            b2 = complex(spec.beta) ** 2
            if abs(b2 - a2.conjugate()) > 1e-10 * max(1.0, abs(a2)):
                out.append("beta must equal +-conj(alpha) for the sin(ax+ie) family")
    elif kind.params == "pii":
        s = complex(spec.s)
        if not is_real(spec.lam):
            out.append("lambda must be real")
        if not (is_real(s) or abs(s.real + 0.5) <= PARAM_TOL):
            out.append("s must be real or have Re(s) = -1/2")
    else:
        if not _real_or_imaginary(spec.alpha):
            out.append("alpha must be real or purely imaginary")
    return out


def make_spec(kind, *, alpha=None, beta=None, s=None, lam=None, omega=None,
              a=1.0, eps=0.0, allow_singular=False):
    """Build a validated :class:`PotentialSpec`.

    Raises PtViolation, SingularShift or NonPositiveScale naming the violated
    condition.
    """
    kind = FamilyKind.parse(kind)
    a = float(a)
    eps = float(eps)
    if not a > 0:
        raise NonPositiveScale(f"scale a must be positive, got {a}")
    fields = {}
    if kind.params == "jacobi":
        if alpha is None or beta is None:
            raise ValueError(f"{kind.value} requires alpha and beta")
        fields.update(alpha=complex(alpha), beta=complex(beta))
    elif kind.params == "pii":
        if s is None or lam is None:
            raise ValueError(f"{kind.value} requires s and lambda")
        lam_c = complex(lam)
        if not is_real(lam_c):
            raise PtViolation(f"{kind.value}: lambda must be real, got {lam}")
        fields.update(s=complex(s), lam=lam_c.real)
    else:
        if alpha is None or omega is None:
            raise ValueError(f"{kind.value} requires alpha and omega")
        omega = float(omega)
        if not omega > 0:
            raise NonPositiveScale(f"omega must be positive, got {omega}")
        fields.update(alpha=complex(alpha), omega=omega)

    spec = PotentialSpec(kind=kind, a=a, eps=eps, allow_singular=bool(allow_singular),
                         **fields)
    bad = admissibility_violations(spec)
    if bad:
        raise PtViolation(f"{kind.value}: " + "; ".join(bad))
    if not allow_singular and shift_is_singular(spec):
        lat = singularity_set(kind)
        where = (f"eps = {lat.offset:g}" if lat.period is None
                 else f"eps = {lat.offset:g} + k*{lat.period:g}")
        raise SingularShift(f"{kind.value}: shift eps={eps} lies on the singular "
                            f"lattice {where}")
    return spec


def shift_is_singular(spec):
    return singularity_set(spec.kind).contains(spec.eps)


def _li_centrifugal(spec):
    return complex(spec.alpha) ** 2 - 0.25


def real_poles(spec):
    """Pole lattice of V on the real x axis as ``(offset, period)``; None if V
    is regular on the whole axis."""
    if not shift_is_singular(spec):
        return None
    k = spec.kind
    a = spec.a
    if k is FamilyKind.LI_OSC:
        return None if abs(_li_centrifugal(spec)) == 0 else (0.0, None)
    if not k.trigonometric:
        return (0.0, None)
    if k in (FamilyKind.PI_SIN, FamilyKind.PII_COT):
        return (0.0, math.pi / a)
    if k in (FamilyKind.PI_COS, FamilyKind.PII_TAN):
        return (math.pi / (2 * a), math.pi / a)
    return (0.0, math.pi / (2 * a))  # PI_SIN2_COS2


def pole_distance(spec, x):
    """Distance from each x to the nearest real pole (inf if none)."""
    x = np.asarray(x, dtype=float)
    poles = real_poles(spec)
    if poles is None:
        return np.full(x.shape, np.inf)
    offset, period = poles
    if period is None:
        return np.abs(x - offset)
    r = np.remainder(x - offset, period)
    return np.minimum(r, period - r)


def check_poles(spec, x, margin=POLE_TOL):
    xr = np.real(np.asarray(x))
    d = pole_distance(spec, xr)
    if np.any(d <= margin):
        bad = np.atleast_1d(xr)[np.atleast_1d(d) <= margin][0]
        raise PoleHit(f"{spec.kind.value}: x={bad:g} is within {margin:g} of a pole")


def shift_scale(spec):
    """Imaginary displacement of the evaluation line in x units."""
    if spec.kind is FamilyKind.LI_OSC:
        return spec.eps
    if spec.kind in (FamilyKind.PI_COSH2, FamilyKind.PI_SIN2_COS2):
        return spec.eps / (2 * spec.a)
    return spec.eps / spec.a


def _w(spec, x):
    return spec.a * np.asarray(x, dtype=complex) + 1j * spec.eps


def _u_half(spec, x):
    return spec.a * np.asarray(x, dtype=complex) + 0.5j * spec.eps


def z_of_x(spec, x):
    """The transformation variable z at x (scalar or array)."""
    k = spec.kind
    if k in (FamilyKind.PII_COTH, FamilyKind.PII_COT, FamilyKind.PII_TAN):
        check_poles(spec, x)
    w = _w(spec, x)
    if k is FamilyKind.PI_ISINH:
        z = 1j * np.sinh(w)
    elif k is FamilyKind.PI_COSH:
        z = np.cosh(w)
    elif k is FamilyKind.PI_COSH2:
        z = np.cosh(2 * _u_half(spec, x))
    elif k is FamilyKind.PI_SIN:
        z = np.cos(w)
    elif k is FamilyKind.PI_SIN2_COS2:
        z = np.cos(2 * _u_half(spec, x))
    elif k is FamilyKind.PI_COS:
        z = np.sin(w)
    elif k is FamilyKind.PII_TANH:
        z = np.tanh(w)
    elif k is FamilyKind.PII_COTH:
        z = 1 / np.tanh(w)
    elif k is FamilyKind.PII_COT:
        z = -1j / np.tan(w)
    elif k is FamilyKind.PII_TAN:
        z = 1j * np.tan(w)
    else:
        u = np.asarray(x, dtype=complex) + 1j * spec.eps
        z = 0.5 * spec.omega * u * u
    return z[()] if isinstance(z, np.ndarray) else z


def coupling_c(spec):
    """The constant C of the family (C = 2 omega for the oscillator)."""
    if spec.kind is FamilyKind.LI_OSC:
        return 2.0 * spec.omega
    return spec.kind.info.c_factor * spec.a ** 2


def pii_lambda_internal(spec):
    """Lambda in V = -C s(s+1)(1-z^2) - 2 C Lambda z reproducing the tabulated
    potentials: i*lam for tanh/coth, lam for cot/tan."""
    if spec.kind in (FamilyKind.PII_TANH, FamilyKind.PII_COTH):
        return 1j * spec.lam
    return complex(spec.lam)


def potential_value(spec, x):
    """V(x) from the tabulated closed form with scale a restored.

    ``x`` may be complex; the family is then evaluated at ``x + i*shift``.
    """
    x = np.asarray(x)
    if not np.iscomplexobj(x):
        check_poles(spec, x)
    k = spec.kind
    a2 = spec.a ** 2
    if k.params == "jacobi":
        al2 = complex(spec.alpha) ** 2
        be2 = complex(spec.beta) ** 2
        big_a = (al2 + be2) / 2 - 0.25
        big_b = (al2 - be2) / 2
    elif k.params == "pii":
        s = complex(spec.s)
        ss = s * (s + 1)
        lam = spec.lam

    with np.errstate(divide="ignore", invalid="ignore"):
        if k is FamilyKind.PI_ISINH:
            w = _w(spec, x)
            c2 = np.cosh(w) ** 2
            v = a2 * (-big_a / c2 - 1j * big_b * np.sinh(w) / c2)
        elif k is FamilyKind.PI_COSH:
            w = _w(spec, x)
            s2 = np.sinh(w) ** 2
            v = a2 * (big_a / s2 + big_b * np.cosh(w) / s2)
        elif k is FamilyKind.PI_COSH2:
            u = _u_half(spec, x)
            v = a2 * (-(be2 - 0.25) / np.cosh(u) ** 2 + (al2 - 0.25) / np.sinh(u) ** 2)
        elif k is FamilyKind.PI_SIN:
            w = _w(spec, x)
            s2 = np.sin(w) ** 2
            v = a2 * (big_a / s2 + big_b * np.cos(w) / s2)
        elif k is FamilyKind.PI_SIN2_COS2:
            u = _u_half(spec, x)
            v = a2 * ((be2 - 0.25) / np.cos(u) ** 2 + (al2 - 0.25) / np.sin(u) ** 2)
        elif k is FamilyKind.PI_COS:
            w = _w(spec, x)
            c2 = np.cos(w) ** 2
            v = a2 * (big_a / c2 + big_b * np.sin(w) / c2)
        elif k is FamilyKind.PII_TANH:
            w = _w(spec, x)
            v = a2 * (-ss / np.cosh(w) ** 2 - 2j * lam * np.tanh(w))
        elif k is FamilyKind.PII_COTH:
            w = _w(spec, x)
            v = a2 * (ss / np.sinh(w) ** 2 - 2j * lam / np.tanh(w))
        elif k is FamilyKind.PII_COT:
            w = _w(spec, x)
            v = a2 * (ss / np.sin(w) ** 2 - 2j * lam / np.tan(w))
        elif k is FamilyKind.PII_TAN:
            w = _w(spec, x)
            v = a2 * (ss / np.cos(w) ** 2 + 2j * lam * np.tan(w))
        else:
            u = np.asarray(x, dtype=complex) + 1j * spec.eps
            v = 0.25 * spec.omega ** 2 * u * u
            cent = _li_centrifugal(spec)
            if cent != 0:
                v = v + cent / (u * u)
    return v[()] if isinstance(v, np.ndarray) else v


def pt_defect(spec, grid):
    """max |conj(V(-x)) - V(x)| over a grid symmetric about the origin."""
    if not grid.symmetric:
        raise AsymmetricGrid(f"grid [{grid.x_min}, {grid.x_max}] is not symmetric about 0")
    x = grid.points()
    v = potential_value(spec, x)
    v_mirror = potential_value(spec, -x)
    return float(np.max(np.abs(np.conj(v_mirror) - v)))


def ahmed_coefficients(spec):
    """(V1, V2) with V = -V1 sech^2(w) + i V2 sinh(w)/cosh^2(w) for the
    i sinh family; both are real for PT-admissible parameters."""
    if spec.kind is not FamilyKind.PI_ISINH:
        raise ValueError("Ahmed coefficients are defined for pi-isinh only")
    al2 = complex(spec.alpha) ** 2
    be2 = complex(spec.beta) ** 2
    a2 = spec.a ** 2
    v1 = a2 * ((al2 + be2) / 2 - 0.25)
    v2 = a2 * (be2 - al2) / 2
    return v1, v2


def describe(spec):
    """Short human-readable parameter summary."""
    k = spec.kind
    parts = [k.value]
    if k.params == "jacobi":
        parts += [f"alpha={_fmt(spec.alpha)}", f"beta={_fmt(spec.beta)}"]
    elif k.params == "pii":
        parts += [f"s={_fmt(spec.s)}", f"lambda={spec.lam:g}"]
    else:
        parts += [f"omega={spec.omega:g}", f"alpha={_fmt(spec.alpha)}"]
    parts += [f"a={spec.a:g}", f"eps={spec.eps:g}"]
    return " ".join(parts)


def _fmt(c):
    c = complex(c)
    if c.imag == 0:
        return f"{c.real:g}"
    if c.real == 0:
        return f"{c.imag:g}i"
    return f"{c.real:g}{c.imag:+g}i"


__all__ = [
    "FamilyKind", "FamilyInfo", "FAMILY_INFO", "PotentialSpec", "GridSpec",
    "ShiftLattice", "make_spec", "singularity_set", "z_of_x", "potential_value",
    "pt_defect", "coupling_c", "admissibility_violations", "shift_is_singular",
    "real_poles", "pole_distance", "check_poles", "shift_scale",
    "pii_lambda_internal", "ahmed_coefficients", "is_real", "is_imaginary",
    "describe",
]
