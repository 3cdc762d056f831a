#pragma once

#include "sagvne/embedder.hpp"

namespace sagvne {

// Resource metric of a substrate node: residual CPU times the sum of
// residual bandwidth on its intra-domain links.
double nrm_score(const SubstrateNetwork& net, NodeId id);

// NRM-VNE: virtual nodes ranked by demand metric (cpu_demand times the sum
// of incident bandwidth demands), hosts ranked by nrm_score, both largest
// first; links mapped in descending bandwidth demand onto minimum-hop paths
// preferring the largest bottleneck bandwidth among delay-feasible ones.
EmbedResult nrm_vne_embed(SubstrateNetwork& net, const Vnr& vnr);

// RCR-VNE: virtual nodes in given order, each on the feasible host with the
// most residual CPU; links in descending bandwidth demand onto plain
// minimum-hop paths.
EmbedResult rcr_vne_embed(SubstrateNetwork& net, const Vnr& vnr);

}  // namespace sagvne
