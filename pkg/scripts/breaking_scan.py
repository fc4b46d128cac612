#!/usr/bin/env python3
"""Scan the strength of the imaginary parameter and count complex levels.

For each family with a breaking regime, the imaginary parameter is swept and
the number of regular levels with Im E != 0 is compared with the classifier
verdict.  Rows 7 and 8 are swept as well to show that they never break.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from ptspectra.potentials import FamilyKind as K, make_spec
from ptspectra.spectra import classify, enumerate_levels


@dataclass(frozen=True)
class ScanConfig:
    points: int = 9
    top: float = 3.0
    n_max: int = 6


def builders():
    return {
        K.PI_ISINH: lambda t: make_spec(K.PI_ISINH, alpha=1j * t, beta=-3.5, eps=0.0),
        K.PI_COSH: lambda t: make_spec(K.PI_COSH, alpha=1j * t, beta=-4, eps=0.5),
        K.PI_SIN: lambda t: make_spec(K.PI_SIN, alpha=0.3, beta=1j * t, eps=0.4),
        K.PI_COS: lambda t: make_spec(K.PI_COS, alpha=1j * t, beta=1j * t, eps=0.4),
        K.PII_TANH: lambda t: make_spec(K.PII_TANH, s=-0.5 + 1j * t, lam=1, eps=0.3),
        K.PII_COTH: lambda t: make_spec(K.PII_COTH, s=-0.5 + 1j * t, lam=1, eps=1.5),
        K.PII_COT: lambda t: make_spec(K.PII_COT, s=-0.5 + 1j * t, lam=1, eps=0.4),
        K.LI_OSC: lambda t: make_spec(K.LI_OSC, omega=2, alpha=1j * t, eps=1.0),
    }


def run(cfg):
    strengths = np.linspace(cfg.top / cfg.points, cfg.top, cfg.points)
    print("family        " + " ".join(f"{t:6.2f}" for t in strengths))
    for kind, build in builders().items():
        cells = []
        for t in strengths:
            spec = build(t)
            levels = enumerate_levels(spec, cfg.n_max).levels
            n_complex = sum(abs(lvl.energy.imag) > 1e-12 for lvl in levels)
            mark = "*" if classify(spec).breaking_possible else " "
            cells.append(f"{n_complex:2d}/{len(levels):<2d}{mark}")
        print(f"{kind.value:13s} " + " ".join(cells))
    print("cells: complex/regular levels with n <= n_max; * marks breaking_possible")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--points", type=int, default=ScanConfig.points)
    p.add_argument("--top", type=float, default=ScanConfig.top)
    p.add_argument("--nmax", type=int, default=ScanConfig.n_max)
    args = p.parse_args()
    run(ScanConfig(points=args.points, top=args.top, n_max=args.nmax))


if __name__ == "__main__":
    main()
