"""Command-line front end.

    ptspectra list
    ptspectra eval      --family F <params> [--xmin --xmax --count] [--format csv|json]
    ptspectra spectrum  --family F <params> --nmax N
    ptspectra classify  --family F <params>
    ptspectra verify    --family F <params> --nmax N [--tol 1e-6]
    ptspectra solve     --family F <params> --levels K [--tol 1e-2]

Complex flags accept ``a``, ``a+bi``, ``a-bi`` and the shorthand ``2i`` /
``-0.5i``.  Exit codes: 0 success, 2 parameters rejected as not PT-symmetric
(or on a singular shift), 3 a ``verify``/``solve`` check failed, 64 usage.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional

from . import serialize
from .errors import NonPositiveScale, PTSpectraError, PtViolation, SingularShift, UsageError
from .numsolve import DEFAULT_GRID
from .potentials import FamilyKind, GridSpec, make_spec
from .wavefun import default_grid

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_CHECK_FAILED = 3
EXIT_USAGE = 64

COMMANDS = ("list", "eval", "spectrum", "classify", "verify", "solve")
FORMATS = ("csv", "json", "table")

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?:[+-]?{_NUM}|[+-]?(?:{_NUM})?i|[+-]?{_NUM}[+-](?:{_NUM})?i)$")

_VALUE_FLAGS = {"--family", "--alpha", "--beta", "--s", "--lambda", "--omega", "--a",
                "--eps", "--nmax", "--levels", "--xmin", "--xmax", "--count", "--tol",
                "--format", "--output"}


def parse_complex(text):
    """Parse ``[+-]a[+-bi]`` or a pure-imaginary shorthand such as ``-0.5i``."""
    t = str(text).strip().replace(" ", "")
    if not _COMPLEX_RE.match(t):
        raise UsageError(f"cannot parse complex number {text!r}")
    if t.endswith("i"):
        body = t[:-1]
        if body in ("", "+", "-") or body[-1] in "+-":
            body += "1"
        t = body + "j"
    return complex(t)


@dataclass
class RunConfig:
    command: str
    spec: Optional[object] = None
    grid: Optional[GridSpec] = None
    fmt: str = "json"
    output: Optional[str] = None
    n_max: int = 5
    levels: int = 6
    tol: Optional[float] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "usage error")
        if message:
            sys.stdout.write(message)
        raise SystemExit(0)


def _build_parser():
    p = _Parser(prog="ptspectra", description="PT-symmetric solvable potentials")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_flags(sp):
        sp.add_argument("--family", required=True,
                        choices=[k.value for k in FamilyKind], metavar="ID")
        sp.add_argument("--alpha", type=str)
        sp.add_argument("--beta", type=str)
        sp.add_argument("--s", type=str)
        sp.add_argument("--lambda", dest="lam", type=str)
        sp.add_argument("--omega", type=float)
        sp.add_argument("--a", type=float, default=1.0)
        sp.add_argument("--eps", type=float, default=0.0)
        sp.add_argument("--allow-singular", action="store_true")

    def grid_flags(sp):
        sp.add_argument("--xmin", type=float)
        sp.add_argument("--xmax", type=float)
        sp.add_argument("--count", type=int)

    def out_flags(sp, fmt_default, choices=FORMATS):
        sp.add_argument("--format", choices=choices, default=fmt_default)
        sp.add_argument("--output")

    sp = sub.add_parser("list", help="list the eleven families")
    out_flags(sp, "table", ("json", "table"))

    sp = sub.add_parser("eval", help="evaluate V(x) on a grid")
    spec_flags(sp)
    grid_flags(sp)
    out_flags(sp, "csv", ("csv", "json"))

    sp = sub.add_parser("spectrum", help="analytic regular levels")
    spec_flags(sp)
    sp.add_argument("--nmax", type=int, default=5)
    out_flags(sp, "json", ("json", "table"))

    sp = sub.add_parser("classify", help="PT-breaking conditions")
    spec_flags(sp)
    out_flags(sp, "json", ("json", "table"))

    sp = sub.add_parser("verify", help="ODE residual check of every level")
    spec_flags(sp)
    grid_flags(sp)
    sp.add_argument("--nmax", type=int, default=5)
    sp.add_argument("--tol", type=float, default=1e-6)
    out_flags(sp, "json", ("json", "table"))

    sp = sub.add_parser("solve", help="finite-difference eigenvalues vs analytic")
    spec_flags(sp)
    grid_flags(sp)
    sp.add_argument("--levels", type=int, default=6)
    sp.add_argument("--tol", type=float, default=1e-2)
    out_flags(sp, "json", ("json", "table"))
    return p


def _merge_negative_values(argv):
    """Glue ``--flag -0.5+2i`` into ``--flag=-0.5+2i`` so argparse keeps it."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _grid(ns, fallback):
    if ns.xmin is None and ns.xmax is None and ns.count is None:
        return fallback
    try:
        return GridSpec(fallback.x_min if ns.xmin is None else ns.xmin,
                        fallback.x_max if ns.xmax is None else ns.xmax,
                        fallback.count if ns.count is None else ns.count)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(ns):
    kind = FamilyKind(ns.family)
    p = kind.params
    needed = {"jacobi": ("alpha", "beta"), "pii": ("s", "lam"), "li": ("alpha", "omega")}[p]
    for name in needed:
        if getattr(ns, name) is None:
            flag = "--lambda" if name == "lam" else f"--{name}"
            raise UsageError(f"{kind.value} requires {flag}")
    allowed = set(needed)
    for name in ("alpha", "beta", "s", "lam", "omega"):
        if name not in allowed and getattr(ns, name) is not None:
            flag = "--lambda" if name == "lam" else f"--{name}"
            raise UsageError(f"{flag} does not apply to {kind.value}")
    kw = {}
    for name in ("alpha", "beta", "s", "lam"):
        if name in allowed:
            kw[name] = parse_complex(getattr(ns, name))
    if "omega" in allowed:
        kw["omega"] = ns.omega
    return make_spec(kind, a=ns.a, eps=ns.eps, allow_singular=ns.allow_singular, **kw)


def parse_args(argv):
    """Validate argv into a RunConfig (UsageError / PtViolation on bad input)."""
    ns = _build_parser().parse_args(_merge_negative_values(list(argv)))
    cfg = RunConfig(command=ns.command, fmt=ns.format, output=ns.output)
    if ns.command == "list":
        return cfg
    cfg.spec = _spec(ns)
    if ns.command in ("eval", "verify"):
        cfg.grid = _grid(ns, default_grid(cfg.spec))
    elif ns.command == "solve":
        cfg.grid = _grid(ns, DEFAULT_GRID)
    if hasattr(ns, "nmax"):
        if ns.nmax < 0:
            raise UsageError("--nmax must be >= 0")
        cfg.n_max = ns.nmax
    if hasattr(ns, "levels"):
        if ns.levels < 1:
            raise UsageError("--levels must be >= 1")
        cfg.levels = ns.levels
    if hasattr(ns, "tol"):
        if not ns.tol > 0:
            raise UsageError("--tol must be positive")
        cfg.tol = ns.tol
    return cfg


def _c(z):
    z = complex(z) + 0.0  # drops negative zeros
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _table(rows, headers):
    rows = [[str(v) for v in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _as_table(command, result):
    if command == "list":
        return _table([[r["id"], r["row"], r["potential"], r["energy"]] for r in result],
                      ["id", "row", "potential", "energy"])
    if command == "spectrum":
        return _table([[lv["n"], lv["orbit"], _c(serialize.from_cjson(lv["energy"]))]
                       for lv in result["levels"]], ["n", "orbit", "energy"])
    if command == "classify":
        body = _table([[c["condition"], c["satisfied"]] for c in result["reasons"]],
                      ["condition", "satisfied"])
        body += f"breaking_possible: {result['breaking_possible']}\n"
        if result["ahmed_check"]:
            a = result["ahmed_check"]
            body += (f"ahmed: V1={a['V1']:.12g} V2={a['V2']:.12g} holds={a['holds']} "
                     f"agreement={a['agreement']}\n")
        return body
    if command == "verify":
        rows = [[lv["n"], lv["orbit"], _c(serialize.from_cjson(lv["energy"])),
                 f"{lv['residual_norm']:.3e}" if "residual_norm" in lv else lv.get("error"),
                 lv["passed"]] for lv in result["levels"]]
        return _table(rows, ["n", "orbit", "energy", "residual", "passed"])
    rows = [[_c(serialize.from_cjson(m["analytic"])), _c(serialize.from_cjson(m["numeric"])),
             f"{m['distance']:.3e}"] for m in result["matches"]]
    rows += [[_c(serialize.from_cjson(u)), "-", "unmatched"]
             for u in result["unmatched_analytic"]]
    return _table(rows, ["analytic", "numeric", "distance"])


def execute(cfg):
    """Run the configured command; returns (text, exit_code)."""
    spec = cfg.spec
    code = EXIT_OK
    if cfg.command == "list":
        result = serialize.family_table()
    elif cfg.command == "eval":
        if cfg.fmt == "csv":
            return serialize.eval_csv(spec, cfg.grid), EXIT_OK
        result = serialize.eval_result(spec, cfg.grid)
    elif cfg.command == "spectrum":
        result = serialize.spectrum_result(spec, cfg.n_max)
    elif cfg.command == "classify":
        result = serialize.classify_result(spec)
    elif cfg.command == "verify":
        result = serialize.verify_result(spec, cfg.n_max, cfg.grid, cfg.tol)
        code = EXIT_OK if result["passed"] else EXIT_CHECK_FAILED
    else:
        result = serialize.solve_result(spec, cfg.levels, cfg.grid, cfg.tol)
        code = EXIT_OK if result["passed"] else EXIT_CHECK_FAILED
    if cfg.fmt == "table":
        return _as_table(cfg.command, result), code
    return json.dumps(serialize.envelope(spec, result), indent=2) + "\n", code


def run(cfg):
    try:
        text, code = execute(cfg)
    except PTSpectraError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CHECK_FAILED if cfg.command in ("verify", "solve") else EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except (PtViolation, SingularShift, NonPositiveScale) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_REJECTED
    except (UsageError, PTSpectraError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
