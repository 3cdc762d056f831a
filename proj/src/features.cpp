#include "sagvne/features.hpp"

#include <algorithm>

namespace sagvne {

Res sum_adjacent_bandwidth(const SubstrateNetwork& net, NodeId id) {
  Res sum = 0;
  for (LinkId l : net.incident(id)) {
    const auto& link = net.link(l);
    if (!link.inter_domain) sum += link.bw_available;
  }
  return sum;
}

Res sum_adjacent_delay(const SubstrateNetwork& net, NodeId id) {
  Res sum = 0;
  for (LinkId l : net.incident(id)) {
    const auto& link = net.link(l);
    if (!link.inter_domain) sum += link.delay;
  }
  return sum;
}

double avg_distance_to_unembedded(const SubstrateNetwork& net, NodeId id,
                                  const std::vector<char>& unembedded) {
  const Domain d = net.node(id).domain;
  const auto& members = net.domain_members(d);
  const int penalty = static_cast<int>(members.size());
  long long total = 0;
  int count = 0;
  for (NodeId other : members) {
    if (other == id) continue;
    if (static_cast<std::size_t>(other) >= unembedded.size() || !unembedded[other]) continue;
    const int hops = net.intra_domain_hops(id, other);
    total += hops >= 0 ? hops : penalty;
    ++count;
  }
  return static_cast<double>(total) / static_cast<double>(count + 1);
}

FeatureMatrix raw_feature_matrix(const SubstrateNetwork& net,
                                 const std::vector<char>& unembedded) {
  FeatureMatrix m;
  m.rows.resize(net.node_count());
  for (const auto& nd : net.nodes()) {
    m.rows[nd.id] = {static_cast<double>(nd.cpu_available),
                     static_cast<double>(sum_adjacent_bandwidth(net, nd.id)),
                     static_cast<double>(sum_adjacent_delay(net, nd.id)),
                     avg_distance_to_unembedded(net, nd.id, unembedded)};
  }
  return m;
}

void min_max_normalize(FeatureMatrix& m) {
  if (m.rows.empty()) return;
  for (int c = 0; c < kFeatureCount; ++c) {
    double lo = m.rows[0][c], hi = m.rows[0][c];
    for (const auto& row : m.rows) {
      lo = std::min(lo, row[c]);
      hi = std::max(hi, row[c]);
    }
    const double span = hi - lo;
    for (auto& row : m.rows) row[c] = span > 0.0 ? (row[c] - lo) / span : 0.0;
  }
}

FeatureMatrix extract_feature_matrix(const SubstrateNetwork& net,
                                     const std::vector<char>& unembedded) {
  FeatureMatrix m = raw_feature_matrix(net, unembedded);
  min_max_normalize(m);
  return m;
}

}  // namespace sagvne
