import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ptspectra.errors import AsymmetricGrid, NonPositiveScale, PoleHit, PtViolation, SingularShift
from ptspectra.potentials import (FAMILY_INFO, FamilyKind as K, GridSpec, PotentialSpec,
                                  coupling_c, make_spec, pii_lambda_internal,
                                  potential_value, pt_defect, shift_scale, singularity_set,
                                  z_of_x)

from cases import ACCEPTANCE_SPECS


def generic_potential(spec, x):
    """V rebuilt from z(x) and C alone (no per-row closed form)."""
    z = z_of_x(spec, x)
    c = coupling_c(spec)
    if spec.kind.params == "jacobi":
        al2, be2 = complex(spec.alpha) ** 2, complex(spec.beta) ** 2
        return c * ((al2 + be2) / 2 - 0.25 + (al2 - be2) / 2 * z) / (1 - z * z)
    s = complex(spec.s)
    lam = pii_lambda_internal(spec)
    return -c * s * (s + 1) * (1 - z * z) - 2 * c * lam * z


def test_catalog_has_eleven_rows_in_order():
    assert [k.value for k in K] == [
        "pi-isinh", "pi-cosh", "pi-cosh2", "pi-sin", "pi-sin2cos2", "pi-cos",
        "pii-tanh", "pii-coth", "pii-cot", "pii-tan", "li-osc"]
    assert [FAMILY_INFO[k].row for k in K] == list(range(1, 12))


def test_coupling_constants():
    expected = [-1, -1, -4, 1, 4, 1, 1, 1, -1, -1]
    for kind, c in zip(list(K)[:10], expected):
        spec = ACCEPTANCE_SPECS[kind].with_params(a=2.0)
        assert coupling_c(spec) == pytest.approx(4 * c)
    assert coupling_c(ACCEPTANCE_SPECS[K.LI_OSC]) == pytest.approx(4.0)


def test_parse_accepts_ids_and_names():
    assert K.parse("pii-cot") is K.PII_COT
    assert K.parse("PI_SIN2_COS2") is K.PI_SIN2_COS2
    with pytest.raises(ValueError):
        K.parse("morse")


def test_make_spec_examples():
    make_spec(K.PI_ISINH, alpha=2j, beta=-3, eps=0.3)
    make_spec(K.PII_TANH, s=-0.5 + 2j, lam=1, eps=0)
    with pytest.raises(PtViolation, match="alpha"):
        make_spec(K.PI_ISINH, alpha=1 + 1j, beta=0, eps=0)


def test_make_spec_rejections():
    with pytest.raises(PtViolation):
        make_spec(K.PII_COT, s=0.3 + 1j, lam=1, eps=0.4)
    with pytest.raises(PtViolation):
        make_spec(K.PII_COT, s=1, lam=1j, eps=0.4)
    with pytest.raises(PtViolation):
        make_spec(K.PI_COS, alpha=0.6j, beta=0.3, eps=0.4)
    with pytest.raises(SingularShift):
        make_spec(K.PI_COSH, alpha=1j, beta=2, eps=math.pi)
    with pytest.raises(SingularShift):
        make_spec(K.PI_ISINH, alpha=1j, beta=2, eps=-math.pi / 2 + 1e-11)
    with pytest.raises(NonPositiveScale):
        make_spec(K.PI_COSH, alpha=1j, beta=2, eps=1, a=0)
    with pytest.raises(NonPositiveScale):
        make_spec(K.LI_OSC, alpha=1j, omega=-1, eps=1)
    make_spec(K.PI_COSH, alpha=1j, beta=2, eps=math.pi, allow_singular=True)


def test_z_examples():
    assert z_of_x(make_spec(K.PI_ISINH, alpha=1j, beta=1, eps=0), 0.0) == 0
    z = z_of_x(make_spec(K.PI_COS, alpha=0.5j, beta=0.5j, eps=math.pi / 2), 0.0)
    assert z == pytest.approx(1j * math.sinh(math.pi / 2))
    assert z_of_x(make_spec(K.LI_OSC, omega=2, alpha=1j, eps=0.5), 1.0) == pytest.approx(0.75 + 1j)


def test_potential_examples():
    v = potential_value(make_spec(K.PI_ISINH, alpha=2j, beta=-3, eps=0), 0.0)
    assert v == pytest.approx(-2.25)
    v = potential_value(make_spec(K.LI_OSC, omega=2, alpha=0.5, eps=0.5), 0.0)
    assert v == pytest.approx(-0.25)
    v = potential_value(make_spec(K.PII_TANH, s=1, lam=0, eps=0), 0.0)
    assert v == pytest.approx(-2)


@pytest.mark.parametrize("kind", list(K)[:10], ids=lambda k: k.value)
def test_closed_form_matches_generic_form(kind):
    spec = ACCEPTANCE_SPECS[kind].with_params(a=1.3)
    x = np.linspace(-2.1, 2.3, 37)
    v = potential_value(spec, x)
    g = generic_potential(spec, x)
    assert np.allclose(v, g, rtol=1e-11, atol=1e-11)


@pytest.mark.parametrize("kind", list(K), ids=lambda k: k.value)
def test_shift_is_a_complex_translation(kind):
    spec = ACCEPTANCE_SPECS[kind]
    unshifted = spec.with_params(eps=0.0, allow_singular=True)
    x = np.linspace(-2.05, 2.15, 23)
    lhs = potential_value(spec, x)
    rhs = potential_value(unshifted, x + 1j * shift_scale(spec))
    assert np.allclose(lhs, rhs, rtol=1e-13, atol=1e-13)


@pytest.mark.parametrize("kind", list(K), ids=lambda k: k.value)
def test_pt_symmetry_of_acceptance_specs(kind):
    spec = ACCEPTANCE_SPECS[kind]
    if spec.kind.trigonometric:
        spec = spec.with_params(eps=0.4)
    grid = GridSpec(-5, 5, 401)
    vmax = np.max(np.abs(potential_value(spec, grid.points())))
    assert pt_defect(spec, grid) <= 1e-12 * vmax


def test_pt_defect_examples():
    assert pt_defect(make_spec(K.PI_ISINH, alpha=2j, beta=-3, eps=0.3),
                     GridSpec(-5, 5, 201)) <= 1e-12
    assert pt_defect(make_spec(K.PII_COT, s=-0.5 + 2j, lam=1, eps=0.4),
                     GridSpec(-3, 3, 301)) <= 1e-12
    forced = PotentialSpec(K.PI_ISINH, alpha=1 + 1j, beta=0.0, eps=0.0)
    assert pt_defect(forced, GridSpec(-5, 5, 201)) > 1e-3
    with pytest.raises(AsymmetricGrid):
        pt_defect(make_spec(K.PI_ISINH, alpha=2j, beta=-3), GridSpec(-5, 4, 201))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(K)[:6]), st.floats(0.05, 3), st.floats(0.05, 3),
       st.booleans(), st.booleans(), st.floats(0.1, 1.4))
def test_parameter_sign_parity(kind, p, q, p_imag, q_imag, eps):
    al = 1j * p if p_imag else p
    be = 1j * q if q_imag else q
    if kind is K.PI_COS:
        be = al  # only beta^2 = conj(alpha^2) is PT-symmetric here
    spec = make_spec(kind, alpha=al, beta=be, eps=eps)
    x = np.linspace(-1.7, 1.9, 13)
    v = potential_value(spec, x)
    assert np.allclose(potential_value(spec.with_params(alpha=-al), x), v, rtol=1e-13)
    assert np.allclose(potential_value(spec.with_params(beta=-be), x), v, rtol=1e-13)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([K.PI_ISINH, K.PI_COSH, K.PI_COSH2, K.PII_TANH, K.PII_COTH]),
       st.floats(-3, 3), st.floats(0.2, 2.5))
def test_hyperbolic_pt_symmetry_random(kind, eps, a):
    if kind.params == "jacobi":
        spec = ACCEPTANCE_SPECS[kind].with_params(a=a, eps=eps)
    else:
        spec = make_spec(kind, s=-0.5 + 1.3j, lam=0.8, a=a, eps=eps, allow_singular=True)
    if singularity_set(kind).contains(eps, tol=0.05):
        return
    grid = GridSpec(-4, 4, 81)
    vmax = np.max(np.abs(potential_value(spec, grid.points())))
    assert pt_defect(spec, grid) <= 1e-12 * max(1.0, vmax)


def test_row1_at_half_pi_is_real_singular_row2():
    """i sinh(x + i pi/2) = -cosh x, so alpha and beta trade places."""
    x = np.concatenate([np.linspace(-3, -0.2, 15), np.linspace(0.2, 3, 15)])
    r1 = make_spec(K.PI_ISINH, alpha=2j, beta=-3, eps=math.pi / 2, allow_singular=True)
    r2 = make_spec(K.PI_COSH, alpha=-3, beta=2j, eps=0.0, allow_singular=True)
    assert np.allclose(potential_value(r1, x), potential_value(r2, x), rtol=1e-12)


def test_singularity_sets():
    assert singularity_set(K.PI_COSH).as_list() == [0.0, math.pi]
    assert singularity_set(K.PI_ISINH).as_list() == [math.pi / 2, math.pi]
    assert singularity_set(K.LI_OSC).as_list() == [0.0]
    lat = singularity_set(K.PII_TANH)
    assert lat.contains(-math.pi / 2) and not lat.contains(0.0)


def test_pole_hit_on_singular_line():
    spec = make_spec(K.PII_COTH, s=2, lam=1, eps=0.0, allow_singular=True)
    with pytest.raises(PoleHit):
        potential_value(spec, np.array([-1.0, 0.0, 1.0]))
    with pytest.raises(PoleHit):
        z_of_x(spec, 0.0)
    assert np.isfinite(potential_value(spec, 0.5))
