#include "sagvne/oracle.hpp"

#include <algorithm>
#include <string>

#include "sagvne/metrics.hpp"

namespace sagvne {

namespace {

struct Search {
  const SubstrateNetwork& net;
  const Vnr& vnr;
  std::vector<NodeId> assignment;     // per virtual node, -1 while open
  std::vector<char> host_used;
  std::vector<Res> bw_left;           // residual bandwidth during path search
  std::vector<std::vector<LinkId>> paths;  // per virtual link

  explicit Search(const SubstrateNetwork& n, const Vnr& v)
      : net(n),
        vnr(v),
        assignment(v.nodes.size(), -1),
        host_used(n.node_count(), 0),
        paths(v.links.size()) {
    bw_left.reserve(n.link_count());
    for (const auto& l : n.links()) bw_left.push_back(l.bw_available);
  }

  bool assign_nodes(std::size_t vnode) {
    if (vnode == vnr.nodes.size()) return map_link(0);
    const auto& vn = vnr.nodes[vnode];
    for (NodeId host : net.domain_members(vn.target_domain)) {
      if (host_used[static_cast<std::size_t>(host)]) continue;
      if (net.node(host).cpu_available < vn.cpu_demand) continue;
      host_used[static_cast<std::size_t>(host)] = 1;
      assignment[vnode] = host;
      if (assign_nodes(vnode + 1)) return true;
      assignment[vnode] = -1;
      host_used[static_cast<std::size_t>(host)] = 0;
    }
    return false;
  }

  bool map_link(std::size_t vlink) {
    if (vlink == vnr.links.size()) return true;
    const auto& vl = vnr.links[vlink];
    const NodeId src = assignment[static_cast<std::size_t>(vl.u)];
    const NodeId dst = assignment[static_cast<std::size_t>(vl.v)];
    std::vector<char> visited(net.node_count(), 0);
    visited[static_cast<std::size_t>(src)] = 1;
    std::vector<LinkId> trail;
    return extend_path(vlink, src, dst, vl, 0, visited, trail);
  }

  // Enumerates every simple path for this virtual link, allocating its
  // bandwidth before recursing into the next link so shared substrate links
  // are accounted jointly.
  bool extend_path(std::size_t vlink, NodeId at, NodeId dst, const VirtualLink& vl,
                   Res delay_so_far, std::vector<char>& visited,
                   std::vector<LinkId>& trail) {
    if (at == dst) {
      paths[vlink] = trail;
      for (LinkId l : trail) bw_left[static_cast<std::size_t>(l)] -= vl.bw_demand;
      if (map_link(vlink + 1)) return true;
      for (LinkId l : trail) bw_left[static_cast<std::size_t>(l)] += vl.bw_demand;
      paths[vlink].clear();
      return false;
    }
    for (LinkId l : net.incident(at)) {
      if (bw_left[static_cast<std::size_t>(l)] < vl.bw_demand) continue;
      const auto& link = net.link(l);
      const Res delay = delay_so_far + link.delay;
      if (delay > vl.delay_bound) continue;
      const NodeId next = link.other(at);
      if (visited[static_cast<std::size_t>(next)]) continue;
      visited[static_cast<std::size_t>(next)] = 1;
      trail.push_back(l);
      if (extend_path(vlink, next, dst, vl, delay, visited, trail)) return true;
      trail.pop_back();
      visited[static_cast<std::size_t>(next)] = 0;
    }
    return false;
  }
};

}  // namespace

OracleResult brute_force_feasible(const SubstrateNetwork& net, const Vnr& vnr) {
  if (net.node_count() > kOracleMaxSubstrateNodes)
    throw std::invalid_argument("oracle: substrate exceeds " +
                                std::to_string(kOracleMaxSubstrateNodes) + " nodes");
  if (vnr.nodes.size() > kOracleMaxVirtualNodes)
    throw std::invalid_argument("oracle: request exceeds " +
                                std::to_string(kOracleMaxVirtualNodes) + " virtual nodes");

  Search search(net, vnr);
  if (!search.assign_nodes(0)) return {false, std::nullopt};

  Embedding emb;
  emb.vnr_id = vnr.id;
  for (std::size_t i = 0; i < vnr.nodes.size(); ++i)
    emb.nodes.push_back({static_cast<int>(i), search.assignment[i], vnr.nodes[i].cpu_demand});
  for (std::size_t i = 0; i < vnr.links.size(); ++i)
    emb.paths.push_back({static_cast<int>(i), search.paths[i], vnr.links[i].bw_demand});
  emb.revenue = embedding_revenue(vnr);
  emb.cost = embedding_cost(vnr, emb);
  return {true, std::move(emb)};
}

}  // namespace sagvne
