"""JSON/CSV encodings of specs and reports.

Complex numbers are written as ``{"re": float, "im": float}``; floats go
through ``repr`` (the json default) so every value round-trips exactly.
"""

import io
import math

from .numsolve import match_spectra, numeric_levels
from .potentials import FAMILY_INFO, FamilyKind, GridSpec, make_spec, potential_value
from .spectra import classify, enumerate_levels

SCHEMA_VERSION = 1


def cjson(c):
    c = complex(c)
    return {"re": _f(c.real), "im": _f(c.imag)}


def _f(x):
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def from_cjson(d):
    return complex(float(d["re"]), float(d["im"]))


def spec_to_dict(spec):
    k = spec.kind
    d = {"family": k.value}
    if k.params == "jacobi":
        d.update(alpha=cjson(spec.alpha), beta=cjson(spec.beta))
    elif k.params == "pii":
        d.update(s=cjson(spec.s), **{"lambda": float(spec.lam)})
    else:
        d.update(omega=float(spec.omega), alpha=cjson(spec.alpha))
    d.update(a=float(spec.a), eps=float(spec.eps), allow_singular=bool(spec.allow_singular))
    return d


def spec_from_dict(d):
    kind = FamilyKind.parse(d["family"])
    kw = {"a": d.get("a", 1.0), "eps": d.get("eps", 0.0),
          "allow_singular": d.get("allow_singular", False)}
    if "alpha" in d:
        kw["alpha"] = from_cjson(d["alpha"])
    if "beta" in d:
        kw["beta"] = from_cjson(d["beta"])
    if "s" in d:
        kw["s"] = from_cjson(d["s"])
    if "lambda" in d:
        kw["lam"] = d["lambda"]
    if "omega" in d:
        kw["omega"] = d["omega"]
    return make_spec(kind, **kw)


def grid_to_dict(grid):
    return {"x_min": grid.x_min, "x_max": grid.x_max, "count": grid.count}


def grid_from_dict(d):
    return GridSpec(float(d["x_min"]), float(d["x_max"]), int(d["count"]))


def envelope(spec, result):
    return {"schema_version": SCHEMA_VERSION,
            "spec": None if spec is None else spec_to_dict(spec),
            "result": result}


def family_table():
    rows = []
    for kind, info in FAMILY_INFO.items():
        rows.append({"id": kind.value, "row": info.row, "z": info.z_label,
                     "potential": info.potential_formula,
                     "energy": info.energy_formula,
                     "complex_energy_condition": info.condition})
    return rows


def level_dict(lvl):
    d = {"n": lvl.n, "orbit": list(lvl.orbit), "energy": cjson(lvl.energy),
         "regular": lvl.regular}
    if lvl.decay_exponents is not None:
        d["decay_exponents"] = [cjson(k) for k in lvl.decay_exponents]
    return d


def spectrum_result(spec, n_max):
    sp = enumerate_levels(spec, n_max)
    return {"n_max": n_max, "levels": [level_dict(lvl) for lvl in sp.levels]}


def classify_result(spec):
    rep = classify(spec)
    out = {"admissible": rep.admissible, "breaking_possible": rep.breaking_possible,
           "reasons": [{"condition": c.name, "satisfied": c.satisfied} for c in rep.reasons],
           "ahmed_check": None}
    if rep.ahmed_check is not None:
        a = rep.ahmed_check
        out["ahmed_check"] = {"V1": a.v1, "V2": a.v2, "holds": a.holds,
                              "agreement": a.agreement}
    return out


def eval_result(spec, grid):
    x = grid.points()
    v = potential_value(spec, x)
    return {"grid": grid_to_dict(grid), "x": [float(t) for t in x],
            "v": [cjson(t) for t in v]}


def eval_csv(spec, grid):
    x = grid.points()
    v = potential_value(spec, x)
    buf = io.StringIO()
    buf.write("x,re_v,im_v\n")
    for xi, vi in zip(x, v):
        buf.write(f"{float(xi)!r},{float(vi.real)!r},{float(vi.imag)!r}\n")
    return buf.getvalue()


def verify_result(spec, n_max, grid, tol):
    from .wavefun import residual

    entries = []
    ok = True
    for lvl in enumerate_levels(spec, n_max).levels:
        entry = {"n": lvl.n, "orbit": list(lvl.orbit), "energy": cjson(lvl.energy)}
        try:
            rep = residual(spec, lvl.n, lvl.orbit, grid, tol)
        except Exception as exc:  # reported per level, verification fails
            entry.update(passed=False, error=f"{type(exc).__name__}: {exc}")
            ok = False
        else:
            entry.update(residual_norm=rep.residual_norm,
                         stencil_error=rep.stencil_error,
                         boundary_moduli=list(rep.boundary_moduli),
                         passed=rep.passed)
            ok = ok and rep.passed
        entries.append(entry)
    return {"grid": grid_to_dict(grid), "tol": tol, "levels": entries, "passed": ok}


def solve_result(spec, levels, grid, tol):
    nums = numeric_levels(spec, grid, levels)
    analytic = enumerate_levels(spec, levels)
    top = max((v.real for v in nums), default=-math.inf)
    # only analytic levels inside the returned numeric window are checked
    targets = [lvl for lvl in analytic.levels if lvl.energy.real <= top + tol][:levels]
    rep = match_spectra(targets, nums, tol)
    return {"grid": grid_to_dict(grid), "tol": tol,
            "numeric_levels": [cjson(v) for v in rep.numeric_levels],
            "matches": [{"analytic": cjson(a), "numeric": cjson(n), "distance": d}
                        for a, n, d in rep.matches],
            "unmatched_analytic": [cjson(a) for a in rep.unmatched_analytic],
            "conjugation_defect": rep.conjugation_defect,
            "passed": rep.all_matched}
