#include "sagvne/baselines.hpp"

#include <algorithm>
#include <sstream>

#include "sagvne/metrics.hpp"

namespace sagvne {

double nrm_score(const SubstrateNetwork& net, NodeId id) {
  Res bw_sum = 0;
  for (LinkId l : net.incident(id)) {
    const auto& link = net.link(l);
    if (!link.inter_domain) bw_sum += link.bw_available;
  }
  return static_cast<double>(net.node(id).cpu_available) * static_cast<double>(bw_sum);
}

namespace {

Res demand_metric(const Vnr& vnr, int vnode) {
  Res bw_sum = 0;
  for (const auto& l : vnr.links) {
    if (l.u == vnode || l.v == vnode) bw_sum += l.bw_demand;
  }
  return vnr.nodes[static_cast<std::size_t>(vnode)].cpu_demand * bw_sum;
}

// Minimum-hop path with the largest bottleneck bandwidth among delay-feasible
// minimum-hop paths. The bottleneck optimum is found exactly by binary search
// over bandwidth floors, re-running the hop/delay search per floor.
std::optional<std::vector<LinkId>> widest_min_hop_path(const SubstrateNetwork& net,
                                                       NodeId src, NodeId dst,
                                                       Res bw_demand, Res delay_budget) {
  auto base = bfs_shortest_feasible_path(net, src, dst, bw_demand, delay_budget);
  if (!base) return std::nullopt;
  const std::size_t hop_count = base->size();

  std::vector<Res> floors;
  for (const auto& link : net.links()) {
    if (link.bw_available >= bw_demand) floors.push_back(link.bw_available);
  }
  std::sort(floors.begin(), floors.end());
  floors.erase(std::unique(floors.begin(), floors.end()), floors.end());

  // feasible(floor) is monotone: raising the floor only removes links.
  std::size_t lo = 0, hi = floors.size();  // floors[lo..hi) still candidates
  std::optional<std::vector<LinkId>> best = std::move(base);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto attempt =
        bfs_shortest_feasible_path(net, src, dst, bw_demand, delay_budget, floors[mid]);
    if (attempt && attempt->size() == hop_count) {
      best = std::move(attempt);
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return best;
}

using PathRule = std::optional<std::vector<LinkId>> (*)(const SubstrateNetwork&, NodeId,
                                                        NodeId, Res, Res);

std::optional<std::vector<PathPlacement>> map_links_by_demand(SubstrateNetwork& net,
                                                              const Vnr& vnr,
                                                              const NodeMapping& mapping,
                                                              PathRule rule,
                                                              EmbedFailure* failure) {
  std::vector<int> order(vnr.links.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Res ba = vnr.links[static_cast<std::size_t>(a)].bw_demand;
    const Res bb = vnr.links[static_cast<std::size_t>(b)].bw_demand;
    if (ba != bb) return ba > bb;  // fattest virtual links first
    return a < b;
  });
  std::vector<PathPlacement> placements;
  placements.reserve(order.size());
  for (int idx : order) {
    const auto& vl = vnr.links[static_cast<std::size_t>(idx)];
    const NodeId src = mapping[static_cast<std::size_t>(vl.u)];
    const NodeId dst = mapping[static_cast<std::size_t>(vl.v)];
    auto path = rule(net, src, dst, vl.bw_demand, vl.delay_bound);
    if (!path) {
      if (failure != nullptr) {
        failure->kind = EmbedFailure::Kind::LinkMapping;
        failure->element = idx;
        std::ostringstream msg;
        msg << "no feasible path for virtual link " << idx << " between hosts " << src
            << " and " << dst;
        failure->detail = msg.str();
      }
      return std::nullopt;
    }
    net.allocate_path(*path, vl.bw_demand);
    placements.push_back({idx, std::move(*path), vl.bw_demand});
  }
  std::sort(placements.begin(), placements.end(),
            [](const PathPlacement& a, const PathPlacement& b) { return a.vlink < b.vlink; });
  return placements;
}

using NodeStage = std::optional<NodeMapping> (*)(SubstrateNetwork&, const Vnr&, EmbedFailure*);

EmbedResult heuristic_embed(SubstrateNetwork& net, const Vnr& vnr, NodeStage node_stage,
                            PathRule path_rule) {
  EmbedResult result;
  const LedgerSnapshot snap = net.snapshot();
  auto mapping = node_stage(net, vnr, &result.failure);
  if (!mapping) {
    net.restore(snap);
    return result;
  }
  auto placements = map_links_by_demand(net, vnr, *mapping, path_rule, &result.failure);
  if (!placements) {
    net.restore(snap);
    return result;
  }
  Embedding emb;
  emb.vnr_id = vnr.id;
  for (std::size_t i = 0; i < vnr.nodes.size(); ++i)
    emb.nodes.push_back({static_cast<int>(i), (*mapping)[i], vnr.nodes[i].cpu_demand});
  emb.paths = std::move(*placements);
  emb.revenue = embedding_revenue(vnr);
  emb.cost = embedding_cost(vnr, emb);
  net.mark_applied(vnr.id);
  result.embedding = std::move(emb);
  return result;
}

std::optional<NodeMapping> nrm_node_stage(SubstrateNetwork& net, const Vnr& vnr,
                                          EmbedFailure* failure) {
  std::vector<int> order(vnr.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Res ma = demand_metric(vnr, a), mb = demand_metric(vnr, b);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  NodeMapping mapping(vnr.nodes.size(), -1);
  for (int vnode : order) {
    const auto candidates = candidate_hosts(net, vnr, vnode, mapping);
    NodeId best = -1;
    double best_score = -1.0;
    for (NodeId id : candidates) {
      const double score = nrm_score(net, id);
      if (score > best_score) {  // ties keep the lowest id
        best_score = score;
        best = id;
      }
    }
    if (best < 0) {
      if (failure != nullptr) {
        failure->kind = EmbedFailure::Kind::NodeMapping;
        failure->element = vnode;
        failure->detail = "no feasible host for virtual node " + std::to_string(vnode);
      }
      return std::nullopt;
    }
    net.allocate_node(best, vnr.nodes[static_cast<std::size_t>(vnode)].cpu_demand);
    mapping[static_cast<std::size_t>(vnode)] = best;
  }
  return mapping;
}

std::optional<NodeMapping> rcr_node_stage(SubstrateNetwork& net, const Vnr& vnr,
                                          EmbedFailure* failure) {
  NodeMapping mapping(vnr.nodes.size(), -1);
  for (std::size_t vnode = 0; vnode < vnr.nodes.size(); ++vnode) {
    const auto candidates = candidate_hosts(net, vnr, static_cast<int>(vnode), mapping);
    NodeId best = -1;
    Res best_cpu = -1;
    for (NodeId id : candidates) {
      const Res cpu = net.node(id).cpu_available;
      if (cpu > best_cpu) {
        best_cpu = cpu;
        best = id;
      }
    }
    if (best < 0) {
      if (failure != nullptr) {
        failure->kind = EmbedFailure::Kind::NodeMapping;
        failure->element = static_cast<int>(vnode);
        failure->detail = "no feasible host for virtual node " + std::to_string(vnode);
      }
      return std::nullopt;
    }
    net.allocate_node(best, vnr.nodes[vnode].cpu_demand);
    mapping[vnode] = best;
  }
  return mapping;
}

std::optional<std::vector<LinkId>> plain_min_hop(const SubstrateNetwork& net, NodeId src,
                                                 NodeId dst, Res bw, Res budget) {
  return bfs_shortest_feasible_path(net, src, dst, bw, budget);
}

}  // namespace

EmbedResult nrm_vne_embed(SubstrateNetwork& net, const Vnr& vnr) {
  return heuristic_embed(net, vnr, nrm_node_stage, widest_min_hop_path);
}

EmbedResult rcr_vne_embed(SubstrateNetwork& net, const Vnr& vnr) {
  return heuristic_embed(net, vnr, rcr_node_stage, plain_min_hop);
}

}  // namespace sagvne
