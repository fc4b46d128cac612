#!/usr/bin/env python3
"""Print the regular levels, breaking verdict and residual check for one
example parameter set per family."""

import argparse
from dataclasses import dataclass

from ptspectra.potentials import FamilyKind as K, describe, make_spec
from ptspectra.spectra import classify, enumerate_levels
from ptspectra.wavefun import default_grid, residual


@dataclass(frozen=True)
class TableConfig:
    n_max: int = 3
    tol: float = 1e-6


EXAMPLES = [
    make_spec(K.PI_ISINH, alpha=2j, beta=-3, eps=0.0),
    make_spec(K.PI_COSH, alpha=1.5j, beta=-4, eps=0.5),
    make_spec(K.PI_COSH2, alpha=0.8j, beta=-3.5, a=0.5, eps=1.5),
    make_spec(K.PI_SIN, alpha=0.3, beta=0.8j, eps=0.4),
    make_spec(K.PI_SIN2_COS2, alpha=0.7j, beta=0.3, eps=0.4),
    make_spec(K.PI_COS, alpha=0.6j, beta=0.6j, eps=0.4),
    make_spec(K.PII_TANH, s=2, lam=1, eps=0.0),
    make_spec(K.PII_COTH, s=2.5, lam=0.7, eps=1.5),
    make_spec(K.PII_COT, s=-0.5 + 2j, lam=1, eps=0.4),
    make_spec(K.PII_TAN, s=-0.5 + 1.5j, lam=0.5, eps=0.4),
    make_spec(K.LI_OSC, omega=2, alpha=1j, eps=1.0),
]


def fmt(e):
    e = complex(e) + 0.0
    return f"{e.real:9.4f}{e.imag:+9.4f}i"


def run(cfg):
    for spec in EXAMPLES:
        report = classify(spec)
        grid = default_grid(spec)
        print(f"{describe(spec)}  breaking_possible={report.breaking_possible}")
        for lvl in enumerate_levels(spec, cfg.n_max).levels:
            rep = residual(spec, lvl.n, lvl.orbit, grid, cfg.tol)
            flag = "ok" if rep.passed else "FAILED"
            print(f"    n={lvl.n} orbit={lvl.orbit!s:9} E={fmt(lvl.energy)}"
                  f"  residual={rep.residual_norm:.2e} {flag}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--nmax", type=int, default=TableConfig.n_max)
    p.add_argument("--tol", type=float, default=TableConfig.tol)
    args = p.parse_args()
    run(TableConfig(n_max=args.nmax, tol=args.tol))


if __name__ == "__main__":
    main()
