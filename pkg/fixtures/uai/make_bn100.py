"""Generate the 100-variable near-deterministic Bayesian network fixture.

Each variable has up to two parents drawn from earlier variables.  Every
conditional table row puts 0.99 on one value and 0.01 on the other, so the
network is sharply peaked without any exact zeros.

Usage: python make_bn100.py [output path]
"""
import sys

import numpy as np

from lsb.targets import FactorGraphModel
from lsb.targets.factor_graph import write_uai


def make_bn100(seed=2024, n_vars=100, p_major=0.99):
    rng = np.random.default_rng(seed)
    factors = []
    for v in range(n_vars):
        k = min(v, int(rng.integers(0, 3)))
        parents = sorted(int(p) for p in rng.choice(v, size=k, replace=False)) if k else []
        rows = 2 ** len(parents)
        major = rng.integers(0, 2, size=rows)
        table = np.where(np.arange(2)[None, :] == major[:, None], p_major, 1.0 - p_major)
        factors.append((tuple(parents) + (v,), np.log(table.ravel())))
    return FactorGraphModel([2] * n_vars, factors, kind="BAYES")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "bn100.uai"
    write_uai(make_bn100(), out)
