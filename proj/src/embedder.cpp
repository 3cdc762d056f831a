#include "sagvne/embedder.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "sagvne/metrics.hpp"

namespace sagvne {

NodeId PolicySelector::choose(const SubstrateNetwork& net, const Vnr&, int,
                              std::span<const NodeId> candidates,
                              const std::vector<char>& unembedded) {
  FeatureMatrix m = extract_feature_matrix(net, unembedded);
  const NodeDistribution dist = forward(*params_, m, candidates);
  const NodeId chosen = select_node(dist, mode_, rng_);
  if (trace_ != nullptr) {
    DecisionRecord rec;
    rec.features = std::move(m);
    rec.candidates.assign(candidates.begin(), candidates.end());
    rec.chosen = chosen;
    trace_->push_back(std::move(rec));
  }
  return chosen;
}

std::vector<NodeId> candidate_hosts(const SubstrateNetwork& net, const Vnr& vnr,
                                    int vnode, const NodeMapping& mapping) {
  const VirtualNode& vn = vnr.nodes[static_cast<std::size_t>(vnode)];
  std::vector<char> used(net.node_count(), 0);
  for (NodeId host : mapping) {
    if (host >= 0) used[static_cast<std::size_t>(host)] = 1;
  }
  std::vector<NodeId> out;
  for (NodeId id : net.domain_members(vn.target_domain)) {
    if (used[static_cast<std::size_t>(id)]) continue;
    if (net.node(id).cpu_available < vn.cpu_demand) continue;
    out.push_back(id);
  }
  return out;  // domain_members is ascending, so candidates are too
}

std::optional<NodeMapping> map_nodes(SubstrateNetwork& net, const Vnr& vnr,
                                     NodeSelector& selector, EmbedFailure* failure) {
  std::vector<int> order(vnr.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Res da = vnr.nodes[static_cast<std::size_t>(a)].cpu_demand;
    const Res db = vnr.nodes[static_cast<std::size_t>(b)].cpu_demand;
    if (da != db) return da > db;  // hardest first
    return a < b;
  });

  NodeMapping mapping(vnr.nodes.size(), -1);
  std::vector<char> unembedded(net.node_count(), 1);
  for (int vnode : order) {
    const std::vector<NodeId> candidates = candidate_hosts(net, vnr, vnode, mapping);
    if (candidates.empty()) {
      if (failure != nullptr) {
        failure->kind = EmbedFailure::Kind::NodeMapping;
        failure->element = vnode;
        failure->detail = "no feasible host for virtual node " + std::to_string(vnode);
      }
      return std::nullopt;
    }
    const NodeId host = selector.choose(net, vnr, vnode, candidates, unembedded);
    net.allocate_node(host, vnr.nodes[static_cast<std::size_t>(vnode)].cpu_demand);
    mapping[static_cast<std::size_t>(vnode)] = host;
    unembedded[static_cast<std::size_t>(host)] = 0;
  }
  return mapping;
}

std::optional<std::vector<LinkId>> bfs_shortest_feasible_path(
    const SubstrateNetwork& net, NodeId src, NodeId dst, Res bw_demand,
    Res delay_budget, Res bw_floor) {
  if (src == dst) throw std::invalid_argument("path search: src == dst");
  const int n = static_cast<int>(net.node_count());
  const Res need = std::max(bw_demand, bw_floor);
  constexpr Res kInf = std::numeric_limits<Res>::max();

  // Level h holds the minimum total delay of any h-hop walk from src; the
  // first level whose delay at dst fits the budget yields a minimum-hop
  // feasible path (which is then necessarily simple, delays being positive).
  std::vector<Res> prev(static_cast<std::size_t>(n), kInf);
  prev[static_cast<std::size_t>(src)] = 0;
  std::vector<std::vector<LinkId>> via_levels;  // per level, arriving link per node
  std::vector<Res> cur(static_cast<std::size_t>(n));
  for (int h = 1; h < n; ++h) {
    cur.assign(static_cast<std::size_t>(n), kInf);
    std::vector<LinkId> via(static_cast<std::size_t>(n), -1);
    bool any = false;
    for (NodeId u = 0; u < n; ++u) {
      const Res base = prev[static_cast<std::size_t>(u)];
      if (base == kInf) continue;
      for (LinkId l : net.incident(u)) {  // neighbors in ascending id order
        const auto& link = net.link(l);
        if (link.bw_available < need) continue;
        const NodeId v = link.other(u);
        const Res nd = base + link.delay;
        if (nd < cur[static_cast<std::size_t>(v)]) {
          cur[static_cast<std::size_t>(v)] = nd;
          via[static_cast<std::size_t>(v)] = l;
          any = true;
        }
      }
    }
    if (!any) return std::nullopt;
    via_levels.push_back(std::move(via));
    if (cur[static_cast<std::size_t>(dst)] <= delay_budget) {
      std::vector<LinkId> path(static_cast<std::size_t>(h));
      NodeId at = dst;
      for (int lev = h - 1; lev >= 0; --lev) {
        const LinkId l = via_levels[static_cast<std::size_t>(lev)][static_cast<std::size_t>(at)];
        path[static_cast<std::size_t>(lev)] = l;
        at = net.link(l).other(at);
      }
      return path;
    }
    prev.swap(cur);
  }
  return std::nullopt;
}

std::optional<std::vector<PathPlacement>> map_links(SubstrateNetwork& net,
                                                    const Vnr& vnr,
                                                    const NodeMapping& mapping,
                                                    EmbedFailure* failure) {
  std::vector<int> order;
  order.reserve(vnr.links.size());
  for (std::size_t i = 0; i < vnr.links.size(); ++i) order.push_back(static_cast<int>(i));
  auto is_intra = [&](int idx) {
    const auto& l = vnr.links[static_cast<std::size_t>(idx)];
    const NodeId a = mapping[static_cast<std::size_t>(l.u)];
    const NodeId b = mapping[static_cast<std::size_t>(l.v)];
    return net.node(a).domain == net.node(b).domain;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool ia = is_intra(a), ib = is_intra(b);
    if (ia != ib) return ia;  // same-segment links first
    return a < b;
  });

  std::vector<PathPlacement> placements;
  placements.reserve(order.size());
  for (int idx : order) {
    const auto& vl = vnr.links[static_cast<std::size_t>(idx)];
    const NodeId src = mapping[static_cast<std::size_t>(vl.u)];
    const NodeId dst = mapping[static_cast<std::size_t>(vl.v)];
    auto path = bfs_shortest_feasible_path(net, src, dst, vl.bw_demand, vl.delay_bound);
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

EmbedResult embed_vnr(SubstrateNetwork& net, const Vnr& vnr, NodeSelector& selector) {
  EmbedResult result;
  const LedgerSnapshot snap = net.snapshot();
  auto mapping = map_nodes(net, vnr, selector, &result.failure);
  if (!mapping) {
    net.restore(snap);
    return result;
  }
  auto placements = map_links(net, vnr, *mapping, &result.failure);
  if (!placements) {
    net.restore(snap);
    return result;
  }
  Embedding emb;
  emb.vnr_id = vnr.id;
  emb.nodes.reserve(vnr.nodes.size());
  for (std::size_t i = 0; i < vnr.nodes.size(); ++i)
    emb.nodes.push_back({static_cast<int>(i), (*mapping)[i], vnr.nodes[i].cpu_demand});
  emb.paths = std::move(*placements);
  emb.revenue = embedding_revenue(vnr);
  emb.cost = embedding_cost(vnr, emb);
  net.mark_applied(vnr.id);
  result.embedding = std::move(emb);
  return result;
}

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::NodeAssignment: return "node-assignment";
    case Constraint::NodeInjectivity: return "node-injectivity";
    case Constraint::CpuCapacity: return "cpu-capacity";
    case Constraint::BwCapacity: return "bandwidth-capacity";
    case Constraint::DelayBound: return "delay-bound";
    case Constraint::FlowConservation: return "flow-conservation";
  }
  return "?";
}

std::vector<Violation> validate_embedding(const SubstrateNetwork& pre_state,
                                          const Vnr& vnr, const Embedding& emb) {
  std::vector<Violation> out;
  auto report = [&](Constraint c, int element, std::string detail) {
    out.push_back({c, element, std::move(detail)});
  };

  // Node assignment: every virtual node mapped exactly once onto a distinct
  // existing host, holding exactly its demand.
  std::vector<int> seen(vnr.nodes.size(), 0);
  std::unordered_map<NodeId, Res> cpu_load;
  std::unordered_map<NodeId, int> host_use;
  for (const auto& p : emb.nodes) {
    if (p.vnode < 0 || static_cast<std::size_t>(p.vnode) >= vnr.nodes.size()) {
      report(Constraint::NodeAssignment, p.vnode, "placement for unknown virtual node");
      continue;
    }
    ++seen[static_cast<std::size_t>(p.vnode)];
    if (p.host < 0 || static_cast<std::size_t>(p.host) >= pre_state.node_count()) {
      report(Constraint::NodeAssignment, p.vnode, "host does not exist");
      continue;
    }
    if (p.cpu != vnr.nodes[static_cast<std::size_t>(p.vnode)].cpu_demand)
      report(Constraint::NodeAssignment, p.vnode, "held cpu differs from the demand");
    cpu_load[p.host] += p.cpu;
    ++host_use[p.host];
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1)
      report(Constraint::NodeAssignment, static_cast<int>(i),
             seen[i] == 0 ? "virtual node unmapped" : "virtual node mapped twice");
  }
  for (const auto& [host, uses] : host_use) {
    if (uses > 1)
      report(Constraint::NodeInjectivity, host,
             "host carries " + std::to_string(uses) + " nodes of one request");
  }
  for (const auto& [host, load] : cpu_load) {
    const Res avail = pre_state.node(host).cpu_available;
    if (load > avail) {
      std::ostringstream msg;
      msg << "cpu load " << load << " exceeds available " << avail;
      report(Constraint::CpuCapacity, host, msg.str());
    }
  }

  // Link assignment: per virtual link a contiguous simple path between the
  // mapped endpoints within its delay bound; bandwidth accounted jointly.
  std::vector<int> seen_links(vnr.links.size(), 0);
  std::unordered_map<LinkId, Res> bw_load;
  for (const auto& p : emb.paths) {
    if (p.vlink < 0 || static_cast<std::size_t>(p.vlink) >= vnr.links.size()) {
      report(Constraint::NodeAssignment, p.vlink, "path for unknown virtual link");
      continue;
    }
    ++seen_links[static_cast<std::size_t>(p.vlink)];
    const auto& vl = vnr.links[static_cast<std::size_t>(p.vlink)];
    if (p.bw != vl.bw_demand)
      report(Constraint::NodeAssignment, p.vlink, "held bandwidth differs from the demand");
    const NodeId src = emb.host_of(vl.u);
    const NodeId dst = emb.host_of(vl.v);
    if (src < 0 || dst < 0) continue;  // already reported as unmapped

    bool broken = false;
    Res delay_total = 0;
    NodeId at = src;
    std::vector<char> visited(pre_state.node_count(), 0);
    visited[static_cast<std::size_t>(at)] = 1;
    for (LinkId l : p.links) {
      if (l < 0 || static_cast<std::size_t>(l) >= pre_state.link_count()) {
        report(Constraint::FlowConservation, p.vlink, "path uses unknown link");
        broken = true;
        break;
      }
      const auto& link = pre_state.link(l);
      if (!link.touches(at)) {
        report(Constraint::FlowConservation, p.vlink,
               "path is not contiguous at node " + std::to_string(at));
        broken = true;
        break;
      }
      at = link.other(at);
      if (visited[static_cast<std::size_t>(at)]) {
        report(Constraint::FlowConservation, p.vlink, "path revisits a node");
        broken = true;
        break;
      }
      visited[static_cast<std::size_t>(at)] = 1;
      delay_total += link.delay;
      bw_load[l] += p.bw;
    }
    if (broken) continue;
    if (at != dst) {
      report(Constraint::FlowConservation, p.vlink, "path does not end at the mapped host");
      continue;
    }
    if (delay_total > vl.delay_bound) {
      std::ostringstream msg;
      msg << "path delay " << delay_total << " exceeds bound " << vl.delay_bound;
      report(Constraint::DelayBound, p.vlink, msg.str());
    }
  }
  for (std::size_t i = 0; i < seen_links.size(); ++i) {
    if (seen_links[i] != 1)
      report(Constraint::FlowConservation, static_cast<int>(i),
             seen_links[i] == 0 ? "virtual link unmapped" : "virtual link mapped twice");
  }
  for (const auto& [link_id, load] : bw_load) {
    const Res avail = pre_state.link(link_id).bw_available;
    if (load > avail) {
      std::ostringstream msg;
      msg << "bandwidth load " << load << " exceeds available " << avail;
      report(Constraint::BwCapacity, link_id, msg.str());
    }
  }
  return out;
}

}  // namespace sagvne
