"""
Burn-in on a denoising posterior
================================

A 20x20 binary image is observed through Gaussian noise and the posterior
is an Ising model with coupling lambda = 1.  We compare how fast the mean
log-probability of 30 chains climbs under two fixed balancing functions and
under the two learnable families, which adapt while the chains burn in.
"""
import numpy as np

from lsb.adapt import TrainConfig
from lsb.diagnostics import iterations_to_threshold
from lsb.experiment import run_trial
from lsb.targets import ising_case

target = ising_case(3, n=20, seed=0)
cfg = TrainConfig(K=800, N=30)

results = {name: run_trial(target, name, cfg, iters=5000, seed=0)
           for name in ("sqrt", "maxone", "lsb1", "lsb2")}
best = max(r.burnin_logp.max() for r in results.values())

print(f"{'sampler':8s} {'start':>9s} {'k=200':>9s} {'k=800':>9s} {'iters to 95%':>13s}")
for name, r in results.items():
    curve = r.burnin_logp
    print(f"{name:8s} {curve[0]:9.1f} {curve[200]:9.1f} {curve[-1]:9.1f} "
          f"{iterations_to_threshold(curve, best):13d}")

###############################################################################
# The mixture learns to move weight away from max{1, t}, whose proposals
# favour moves that are then rejected.

print("learned mixture weights (barker, sqrt, minone, maxone):",
      np.round(results["lsb1"].balancing.weights, 3))
