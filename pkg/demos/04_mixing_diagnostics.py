"""
Autocorrelation and effective sample size
=========================================

After burn-in, mixing is judged from the log-probability trace of a single
chain.  The integrated autocorrelation time uses Geyer's initial positive
sequence, and ESS is also reported per 1000 samples.
"""
import numpy as np

from lsb import FixedBalancing, autocorrelation, effective_sample_size, run_chain
from lsb.targets import ising_case

target = ising_case(1, n=15, seed=3)
rng = np.random.default_rng(3)
x0 = target.random_state(rng)

for kind in ("barker", "sqrt", "minone", "maxone"):
    burn = run_chain(target, FixedBalancing(kind), x0, 5000, np.random.default_rng(1))
    tr = run_chain(target, FixedBalancing(kind), burn.final_state, 20000, np.random.default_rng(2))
    rho = autocorrelation(tr.logp[1:], 50).rho
    ess = effective_sample_size(tr.logp[1:])
    print(f"{kind:7s} acceptance {tr.acceptance_rate:.3f}  rho[1] {rho[1]:.3f}  rho[50] {rho[50]:.3f}  "
          f"tau {ess.tau:7.1f}  ESS {ess.ess:7.1f}  per 1000: {ess.ess_per:.2f}")

###############################################################################
# A synthetic check: an AR(1) process with coefficient phi has
# ESS / L = (1 - phi) / (1 + phi).

phi, n = 0.8, 100_000
e = np.random.default_rng(0).normal(size=n)
x = np.empty(n)
x[0] = e[0]
for i in range(1, n):
    x[i] = phi * x[i - 1] + e[i]
print(f"AR(1) ESS/L estimated {effective_sample_size(x).ess / n:.4f}, exact {(1 - phi) / (1 + phi):.4f}")
