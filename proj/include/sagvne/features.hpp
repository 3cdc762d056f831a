#pragma once

#include <array>
#include <vector>

#include "sagvne/substrate.hpp"

namespace sagvne {

// Per-node observation row: residual CPU, adjacent intra-domain bandwidth,
// adjacent intra-domain delay, average hop distance to the unembedded nodes
// of the same segment.
inline constexpr int kFeatureCount = 4;

struct FeatureMatrix {
  std::vector<std::array<double, kFeatureCount>> rows;  // indexed by node id

  int row_count() const { return static_cast<int>(rows.size()); }
};

// Sum of bw_available over intra-domain links incident to the node.
// Inter-domain links are excluded.
Res sum_adjacent_bandwidth(const SubstrateNetwork& net, NodeId id);

// Sum of delay over intra-domain links incident to the node.
Res sum_adjacent_delay(const SubstrateNetwork& net, NodeId id);

// Mean-like hop distance from `id` to the other unembedded nodes of its
// segment: sum of hop distances divided by (set size + 1). An unreachable
// in-segment node contributes the segment's node count as penalty distance.
// `unembedded` is a mask over node ids (nonzero = not hosting a virtual node
// of the request currently being mapped).
double avg_distance_to_unembedded(const SubstrateNetwork& net, NodeId id,
                                  const std::vector<char>& unembedded);

// Raw, unnormalized rows in node-id order.
FeatureMatrix raw_feature_matrix(const SubstrateNetwork& net,
                                 const std::vector<char>& unembedded);

// Per-column min-max normalization in place; constant columns become 0.
void min_max_normalize(FeatureMatrix& m);

// raw_feature_matrix followed by min_max_normalize: every entry in [0, 1].
FeatureMatrix extract_feature_matrix(const SubstrateNetwork& net,
                                     const std::vector<char>& unembedded);

}  // namespace sagvne
