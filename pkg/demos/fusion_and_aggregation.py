"""
Fusing sub-models and personalized aggregation
==============================================

Same-cluster sub-models with different channel masks are fused by an
overlap vote. In the second stage each client keeps its own mask and
coordinates are averaged over the clients that keep them.
"""

import numpy as np

from safl.nn import build_model
from safl.pruning import ChannelMaskSet, MaskedModel
from safl.server import fuse_cluster, fusion_vote, stage_two_aggregate

masks = [ChannelMaskSet([np.array(r, bool)]) for r in ([1, 1, 0, 1], [1, 0, 0, 1], [1, 0, 1, 1])]
vote, fused_mask = fusion_vote(masks, target_rate=0.5)
print("overlap counts:", vote.counts[0], "threshold:", vote.threshold)
print("fused channels:", np.flatnonzero(fused_mask.layers[0]))


def constant_model(value, mask):
    m = build_model("synth", 0, widths=(len(mask.layers[0]),))
    for _, p in m.named_params():
        p[...] = value
    return MaskedModel(m, mask).apply_mask()


# the fused value of a channel is the mean over the members keeping it
members = [constant_model(v, m) for v, m in zip([2.0, 4.0, 6.0], masks)]
fused = fuse_cluster(members, 0.5)
print("fused first conv weight per channel:", fused.model.layers[0].params["weight"][:, 0, 0, 0])

# stage two: shared channel 0 is averaged, channel 1 belongs only to client A
a, b = stage_two_aggregate([constant_model(6.0, masks[0]), constant_model(2.0, masks[1])])
print("client A:", a.model.layers[0].params["weight"][:, 0, 0, 0])
print("client B:", b.model.layers[0].params["weight"][:, 0, 0, 0])
