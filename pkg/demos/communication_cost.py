"""
Communication cost and break-even rounds
========================================

Closed-form costs for the desk MNIST setting, compared with a measured
ledger from a short synthetic run.
"""

from fractions import Fraction

import numpy as np

from safl.comm import CostModelInputs, analytic_fedavg_cost, analytic_safl_cost, breakeven_G, reconcile
from safl.data import synth_cluster_data
from safl.nn import build_model
from safl.server import SAFLConfig, run_safl

M = build_model("mnist", 0).num_params()
inp = CostModelInputs.from_rates(N=10, K=2, M=M, G=300, rates=[0, 0.1, 0.2, 0.3])
print(f"model size {M}, SAFL {float(analytic_safl_cost(inp)):.3e}, FedAvg {float(analytic_fedavg_cost(inp)):.3e}")
print(f"SAFL / FedAvg = {float(analytic_safl_cost(inp) / analytic_fedavg_cost(inp)):.3f}")
print(f"SAFL is cheaper once G > {breakeven_G(inp):.2f}")

# with no learning and a fixed assignment every client realizes the same size each round,
# so the measured ledger equals the closed form exactly
parts, _ = synth_cluster_data(4, 2, 16)
cfg = SAFLConfig(arch="synth", n_clusters=2, schedule=[0.0, 0.25, 0.5], guided_epochs=0, finetune_epochs=0,
                 rounds=3, local_epochs=0, lr=0.0, fixed_assignment=[0, 1, 0, 1], eval_every=0)
init = build_model("synth", 0)
for b, bn in enumerate(init.bn_layers()):
    # distinct scales so each round's cut is unambiguous
    bn.params["gamma"][:] = 1 + 0.1 * b + 0.01 * np.arange(bn.num_channels)
res = run_safl(parts, cfg, init)
sizes = [next(e.param_count for e in res.ledger.events if e.phase == "prune_upload" and e.round == t)
         for t in range(3)]
report = reconcile(res.ledger, CostModelInputs(4, 2, init.num_params(), 3, [Fraction(s, init.num_params())
                                                                             for s in sizes]))
for phase in ("distribution", "cluster_broadcast", "prune_upload", "stage2_up", "stage2_down", "total"):
    r = report[phase]
    print(f"{phase:18s} measured {r['measured']:7d} modeled {r['modeled']:9.1f}")
