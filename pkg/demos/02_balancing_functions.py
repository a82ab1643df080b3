"""
Balancing functions
===================

All functions are evaluated on log-ratios ``d = log t`` and return
``log g(t)``.  The four closed forms, a softmax mixture of them and the
monotonic-network family all satisfy ``g(t) = t g(1/t)``.
"""
import numpy as np

from lsb import FixedBalancing, MonotonicBalancing, SoftmaxMixture

t = np.array([0.1, 0.5, 1.0, 2.0, 10.0])
d = np.log(t)

functions = {
    "barker": FixedBalancing("barker"),
    "sqrt": FixedBalancing("sqrt"),
    "minone": FixedBalancing("minone"),
    "maxone": FixedBalancing("maxone"),
    "mixture": SoftmaxMixture([2.0, 0.0, 0.0, -2.0]),
    "network": MonotonicBalancing.init(np.random.default_rng(1)),
}

print("t        " + "".join(f"{v:>9.2f}" for v in t))
for name, g in functions.items():
    print(f"{name:8s} " + "".join(f"{v:9.4f}" for v in np.exp(g.log_g(d))))

###############################################################################
# The identity holds to rounding error, including far outside the range
# where the network input is clamped.

wide = np.random.default_rng(2).uniform(-80, 80, 10_000)
for name, g in functions.items():
    resid = np.abs(np.expm1(wide + g.log_g(-wide) - g.log_g(wide))).max()
    print(f"{name:8s} max relative residual of g(t) - t g(1/t): {resid:.1e}")

###############################################################################
# Learnable families expose a vector-Jacobian product.  Here is the gradient
# of ``sum_i log g(d_i)`` with respect to the mixture logits.

mix = functions["mixture"]
print("mixture weights ", np.round(mix.weights, 3))
print("d/dtheta sum log g", np.round(mix.vjp(d, np.ones_like(d)), 4))
