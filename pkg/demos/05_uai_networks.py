"""
Sampling Bayesian networks from UAI files
=========================================

The parser reads the standard UAI model format.  On the four-variable
fixture the chain's marginals can be compared with exact enumeration; the
100-variable fixture is too large for that, so we just train and sample.
"""
import os

import numpy as np

from lsb import FixedBalancing, parse_uai, run_chain
from lsb.adapt import TrainConfig, train
from lsb.balancing import SoftmaxMixture
from lsb.diagnostics import effective_sample_size, exact_distribution

HERE = os.path.dirname(os.path.abspath(__file__))
UAI = os.path.join(HERE, "..", "fixtures", "uai")

bn4 = parse_uai(os.path.join(UAI, "bn4.uai"))
p = exact_distribution(bn4).reshape(bn4.cardinalities)
tr = run_chain(bn4, FixedBalancing("barker"), np.zeros(4, dtype=int), 200_000,
               np.random.default_rng(0), record_states=True)
counts = np.bincount(tr.states[1:], minlength=bn4.n_states).reshape(bn4.cardinalities)
emp = counts / counts.sum()
for v in range(bn4.n_vars):
    axes = tuple(a for a in range(bn4.n_vars) if a != v)
    print(f"variable {v}: exact {np.round(p.sum(axis=axes), 4)}  chain {np.round(emp.sum(axis=axes), 4)}")

###############################################################################
# The 100-variable network has sharply peaked conditionals (0.99 / 0.01).

bn100 = parse_uai(os.path.join(UAI, "bn100.uai"))
g, trace, states = train(bn100, SoftmaxMixture(), TrainConfig(K=500, N=5), seed=0)
print("mean log p of training chains: start", round(trace.mean_logp[0], 1),
      "end", round(trace.mean_logp[-1], 1))
print("skipped objective samples:", int(trace.skipped.sum()))
print("learned weights (barker, sqrt, minone, maxone):", np.round(g.weights, 3))
chain = run_chain(bn100, g, states[0], 10_000, np.random.default_rng(5))
print("ESS of the log-probability trace:", round(effective_sample_size(chain.logp[1:]).ess, 1))
