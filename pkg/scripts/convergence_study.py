#!/usr/bin/env python3
"""Finite-difference convergence of bound levels towards the closed forms.

For each grid size the dense eigen-solve is matched against the analytic
spectrum and the worst error is reported together with the observed order
log2(err(N) / err(2N - 1)).  Levels with a small decay rate (for example
the i cosh2 family at a = 0.5) are limited by the box size rather than the
spacing and need a larger --half-width before the order shows.
"""

import argparse
import math
import time
from dataclasses import dataclass, field

from ptspectra.numsolve import match_spectra, numeric_levels
from ptspectra.potentials import FamilyKind as K, GridSpec, describe, make_spec
from ptspectra.spectra import enumerate_levels


@dataclass(frozen=True)
class ConvergenceConfig:
    half_width: float = 12.0
    counts: tuple = (251, 501, 1001)
    n_max: int = 2
    tol: float = 0.1
    specs: tuple = field(default_factory=lambda: (
        make_spec(K.LI_OSC, omega=2, alpha=0.5, eps=0.5),
        make_spec(K.PI_ISINH, alpha=2j, beta=-3, eps=0.0),
        make_spec(K.PII_TANH, s=2, lam=1, eps=0.0),
    ))


def worst_error(spec, grid, n_max, tol):
    analytic = enumerate_levels(spec, n_max)
    rep = match_spectra(analytic, numeric_levels(spec, grid), tol)
    if not rep.all_matched:
        return math.nan
    return max((d for _, _, d in rep.matches), default=0.0)


def run(cfg):
    for spec in cfg.specs:
        print(describe(spec))
        prev = None
        for count in cfg.counts:
            grid = GridSpec(-cfg.half_width, cfg.half_width, count)
            t0 = time.perf_counter()
            err = worst_error(spec, grid, cfg.n_max, cfg.tol)
            dt = time.perf_counter() - t0
            order = "" if prev is None else f"  order {math.log2(prev / err):.2f}"
            print(f"    N={count:5d} h={grid.h:.4f} max error {err:.3e} ({dt:.1f}s){order}")
            prev = err


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--counts", type=int, nargs="+", default=list(ConvergenceConfig.counts))
    p.add_argument("--half-width", type=float, default=ConvergenceConfig.half_width)
    args = p.parse_args()
    run(ConvergenceConfig(half_width=args.half_width, counts=tuple(args.counts)))


if __name__ == "__main__":
    main()
