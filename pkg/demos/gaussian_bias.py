"""Why summing two experts' scores does not sample their product.

Prints the analytic score error for two unit Gaussians over noise levels and
the moments of samples drawn with the summed score versus the exact one.
"""
import numpy as np

from avid.gaussian import Gauss1D, bias_grid, poe_gauss, sample_exact_poe, sample_summed_scores

g = Gauss1D(0.0, 1.0)
alphas = np.array([0.0, 0.25, 0.5, 0.75, 1.0])
xs = np.array([0.5, 1.0, 2.0])
grid = bias_grid(g, g, alphas, xs)
print("score error |s_true - s_sum|")
print("alpha  " + "  ".join(f"x={x:<4g}" for x in xs))
for a, row in zip(alphas, grid):
    print(f"{a:5.2f}  " + "  ".join(f"{b:6.3f}" for b in row))

target = poe_gauss(g, g)
for name, rep in (("summed scores", sample_summed_scores(g, g)), ("exact PoE", sample_exact_poe(g, g))):
    print(f"{name:14s} mean {rep.mean:+.4f}  var {rep.var:.4f}  (target var {target.var}, z = {rep.var_z:+.1f})")
