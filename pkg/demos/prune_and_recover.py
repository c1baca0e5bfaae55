"""
Channel pruning and model recovery
==================================

Prune a small convolutional model by its BN scale factors, restore it to
full size and watch a wrongly pruned channel come back under alignment.
"""

import numpy as np

from safl.clustering import GuidedLossConfig, guided_update
from safl.data import synth_cluster_data
from safl.nn import build_model
from safl.pruning import MaskedModel, bn_scales, compact, model_recover, netslim

# a two-block model on 8x8 synthetic images: BN widths 4 and 8
model = build_model("synth", 0)
gamma = [bn.params["gamma"] for bn in model.bn_layers()]
gamma[0][:] = [1.0, 0.01, 0.02, 0.9]
gamma[1][:] = np.linspace(0.8, 1.2, 8)

# one channel out of twelve goes, the globally smallest |gamma|
pruned = netslim(MaskedModel.dense(model), 1 / 12)
print("mask after pruning:", [m.astype(int).tolist() for m in pruned.mask.layers])
print("parameters kept:", pruned.effective_size(), "of", model.num_params())

# the compact sub-network computes exactly what the masked full model does
x = np.random.default_rng(0).random((2, 1, 8, 8))
print("compact == masked:", np.allclose(compact(pruned).forward(x), pruned.model.forward(x)))

# recovery reinstates the channel with zero weights and zero scale
rec = model_recover(pruned)
print("scales after recovery:", bn_scales(rec.model)[0])

# the cluster keeps channel 1, so the alignment term pulls it back up
cluster = MaskedModel.dense(model.copy())
cluster.model.bn_layers()[0].params["gamma"][:] = [1.0, 1.0, 0.0, 0.9]
data = synth_cluster_data(2, 1, 64)[0][0].train
updated, _ = guided_update(pruned, cluster, data, GuidedLossConfig(lam=1e-4, mu=0.2, epochs=10, lr=0.05),
                           np.random.default_rng(0))
print("scales after guided update:", np.round(bn_scales(updated)[0], 3))
print("mask next round:", [m.astype(int).tolist() for m in netslim(MaskedModel.dense(updated), 1 / 12).mask.layers])
