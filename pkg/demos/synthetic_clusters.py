"""
Clustered pruning against local-only pruning
============================================

Eight clients hold one of two disjoint label halves. SAFL recovers the two
groups, prunes each client with guidance from its cluster and then runs
personalized aggregation; the ablation prunes each client alone.
"""

import numpy as np

from safl.baselines import run_hermes_ablation
from safl.data import synth_cluster_data
from safl.server import SAFLConfig, run_safl

parts, truth = synth_cluster_data(8, 2, 60, seed=0)
cfg = SAFLConfig(arch="synth", n_clusters=2, schedule=[0.0, 0.2, 0.4], guided_epochs=10, finetune_epochs=5,
                 rounds=10, lr=0.05, cluster_init="warm", eval_every=5)

safl = run_safl(parts, cfg)
print("ground truth :", truth.tolist())
for t, h in enumerate(safl.state.history):
    print(f"round {t} rate {cfg.schedule[t]:.1f}: {h}")

ablation = run_hermes_ablation(parts, cfg)
sizes = [m.effective_size() for m in safl.clients]
print(f"per-client sizes after pruning: {sizes} of {safl.clients[0].model.num_params()}")
print(f"SAFL accuracy {safl.final_accuracy():.3f}, local-only ablation {ablation.final_accuracy():.3f}")

phases = {p: safl.ledger.total(p) for p in ("distribution", "cluster_broadcast", "prune_upload", "stage2_up")}
print("parameters moved per phase:", phases)
print("ablation moved", ablation.ledger.total(), "parameters, SAFL", safl.ledger.total(),
      f"(ratio {ablation.ledger.total() / safl.ledger.total():.2f})")
print("mean effective size, SAFL vs ablation:",
      np.mean(sizes), np.mean([m.effective_size() for m in ablation.clients]))
