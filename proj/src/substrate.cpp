#include "sagvne/substrate.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace sagvne {

const char* to_string(Domain d) {
  switch (d) {
    case Domain::Space: return "space";
    case Domain::Air: return "air";
    case Domain::Ground: return "ground";
  }
  return "?";
}

Domain domain_from_string(const std::string& s) {
  if (s == "space") return Domain::Space;
  if (s == "air") return Domain::Air;
  if (s == "ground") return Domain::Ground;
  throw std::invalid_argument("unknown domain: " + s);
}

NodeId SubstrateNetwork::add_node(Domain domain, Res cpu_capacity) {
  if (cpu_capacity < 0) throw std::invalid_argument("node capacity must be >= 0");
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({id, domain, cpu_capacity, cpu_capacity});
  incident_.emplace_back();
  members_[static_cast<int>(domain)].push_back(id);
  finalized_ = false;
  return id;
}

LinkId SubstrateNetwork::add_link(NodeId u, NodeId v, Res bw_capacity, Res delay) {
  check_node(u);
  check_node(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (bw_capacity < 0) throw std::invalid_argument("link capacity must be >= 0");
  if (delay <= 0) throw std::invalid_argument("link delay must be > 0");
  if (link_between(u, v) != -1) throw std::invalid_argument("duplicate link rejected");
  if (u > v) std::swap(u, v);
  const LinkId id = static_cast<LinkId>(links_.size());
  const bool inter = nodes_[u].domain != nodes_[v].domain;
  links_.push_back({id, u, v, bw_capacity, bw_capacity, delay, inter});
  // Keep incident lists ordered by neighbor id so traversals are
  // deterministic regardless of insertion order.
  auto insert_sorted = [&](NodeId at, NodeId nb) {
    auto& lst = incident_[at];
    auto pos = std::upper_bound(lst.begin(), lst.end(), nb, [&](NodeId key, LinkId l) {
      return key < links_[l].other(at);
    });
    lst.insert(pos, id);
  };
  insert_sorted(u, v);
  insert_sorted(v, u);
  finalized_ = false;
  return id;
}

void SubstrateNetwork::finalize() {
  const int n = static_cast<int>(nodes_.size());
  hops_.assign(static_cast<std::size_t>(n) * n, -1);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    int* row = hops_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeId cur = queue.front();
      queue.pop_front();
      for (LinkId l : incident_[cur]) {
        if (links_[l].inter_domain) continue;
        const NodeId nb = links_[l].other(cur);
        if (row[nb] == -1) {
          row[nb] = row[cur] + 1;
          queue.push_back(nb);
        }
      }
    }
  }
  finalized_ = true;
}

const SubstrateNode& SubstrateNetwork::node(NodeId id) const {
  check_node(id);
  return nodes_[id];
}

const SubstrateLink& SubstrateNetwork::link(LinkId id) const {
  check_link(id);
  return links_[id];
}

std::span<const LinkId> SubstrateNetwork::incident(NodeId id) const {
  check_node(id);
  return incident_[id];
}

LinkId SubstrateNetwork::link_between(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& lst = incident_[u];
  for (LinkId l : lst) {
    if (links_[l].other(u) == v) return l;
  }
  return -1;
}

const std::vector<NodeId>& SubstrateNetwork::domain_members(Domain d) const {
  return members_[static_cast<int>(d)];
}

bool SubstrateNetwork::is_boundary(NodeId id) const {
  check_node(id);
  for (LinkId l : incident_[id]) {
    if (links_[l].inter_domain) return true;
  }
  return false;
}

std::vector<NodeId> SubstrateNetwork::boundary_nodes() const {
  std::vector<NodeId> out;
  for (const auto& nd : nodes_) {
    if (is_boundary(nd.id)) out.push_back(nd.id);
  }
  return out;
}

int SubstrateNetwork::intra_domain_hops(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  if (!finalized_) throw std::logic_error("finalize() must run before distance queries");
  return hops_[static_cast<std::size_t>(a) * nodes_.size() + b];
}

void SubstrateNetwork::allocate_node(NodeId id, Res amount) {
  check_node(id);
  if (amount < 0) throw std::invalid_argument("allocation amount must be >= 0");
  auto& nd = nodes_[id];
  if (amount > nd.cpu_available) {
    std::ostringstream msg;
    msg << "insufficient cpu on node " << id << ": need " << amount << ", available "
        << nd.cpu_available;
    throw ResourceError(msg.str());
  }
  nd.cpu_available -= amount;
}

void SubstrateNetwork::release_node(NodeId id, Res amount) {
  check_node(id);
  if (amount < 0) throw std::invalid_argument("release amount must be >= 0");
  auto& nd = nodes_[id];
  if (nd.cpu_available + amount > nd.cpu_capacity) {
    std::ostringstream msg;
    msg << "release exceeds capacity on node " << id;
    throw LedgerError(msg.str());
  }
  nd.cpu_available += amount;
}

void SubstrateNetwork::allocate_path(std::span<const LinkId> path, Res amount) {
  if (amount < 0) throw std::invalid_argument("allocation amount must be >= 0");
  // Check pass first, counting repeated links, so failure leaves the ledger
  // untouched and the error names the first violating link in path order.
  std::unordered_map<LinkId, Res> need;
  for (LinkId l : path) {
    check_link(l);
    Res& acc = need[l];
    acc += amount;
    if (acc > links_[l].bw_available) {
      std::ostringstream msg;
      msg << "insufficient bandwidth on link " << l << ": need " << acc << ", available "
          << links_[l].bw_available;
      throw ResourceError(msg.str());
    }
  }
  for (LinkId l : path) links_[l].bw_available -= amount;
}

void SubstrateNetwork::release_path(std::span<const LinkId> path, Res amount) {
  if (amount < 0) throw std::invalid_argument("release amount must be >= 0");
  std::unordered_map<LinkId, Res> back;
  for (LinkId l : path) {
    check_link(l);
    Res& acc = back[l];
    acc += amount;
    if (links_[l].bw_available + acc > links_[l].bw_capacity) {
      std::ostringstream msg;
      msg << "release exceeds capacity on link " << l;
      throw LedgerError(msg.str());
    }
  }
  for (LinkId l : path) links_[l].bw_available += amount;
}

LedgerSnapshot SubstrateNetwork::snapshot() const {
  LedgerSnapshot snap;
  snap.cpu_available.reserve(nodes_.size());
  for (const auto& nd : nodes_) snap.cpu_available.push_back(nd.cpu_available);
  snap.bw_available.reserve(links_.size());
  for (const auto& l : links_) snap.bw_available.push_back(l.bw_available);
  return snap;
}

void SubstrateNetwork::restore(const LedgerSnapshot& snap) {
  if (snap.cpu_available.size() != nodes_.size() || snap.bw_available.size() != links_.size())
    throw std::invalid_argument("snapshot does not match this network");
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i].cpu_available = snap.cpu_available[i];
  for (std::size_t i = 0; i < links_.size(); ++i) links_[i].bw_available = snap.bw_available[i];
}

void SubstrateNetwork::mark_applied(VnrId vnr_id) {
  if (!applied_.insert(vnr_id).second) {
    throw LedgerError("embedding already applied for request " + std::to_string(vnr_id));
  }
}

void SubstrateNetwork::mark_released(VnrId vnr_id) {
  if (applied_.erase(vnr_id) == 0) {
    throw LedgerError("double release for request " + std::to_string(vnr_id));
  }
}

void SubstrateNetwork::check_node(NodeId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size())
    throw std::out_of_range("unknown node id " + std::to_string(id));
}

void SubstrateNetwork::check_link(LinkId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= links_.size())
    throw std::out_of_range("unknown link id " + std::to_string(id));
}

const DomainSpec& SubstrateConfig::domain(Domain d) const {
  switch (d) {
    case Domain::Space: return space;
    case Domain::Air: return air;
    case Domain::Ground: return ground;
  }
  throw std::invalid_argument("bad domain");
}

namespace {

void check_range(const AttrRange& r, const char* what, Res floor) {
  if (r.min > r.max) throw std::invalid_argument(std::string(what) + ": min > max");
  if (r.min < floor) throw std::invalid_argument(std::string(what) + ": below minimum");
}

long long max_simple_links(long long n) { return n * (n - 1) / 2; }

}  // namespace

void SubstrateConfig::validate() const {
  for (Domain d : {Domain::Space, Domain::Air, Domain::Ground}) {
    const auto& spec = domain(d);
    const std::string name = to_string(d);
    if (spec.nodes <= 0) throw std::invalid_argument(name + ": node count must be > 0");
    if (spec.links < 0) throw std::invalid_argument(name + ": link count must be >= 0");
    if (spec.nodes > 1 && spec.links < spec.nodes - 1)
      throw std::invalid_argument(name + ": too few links for a connected segment");
    if (spec.nodes == 1 && spec.links > 0)
      throw std::invalid_argument(name + ": single-node segment admits no links");
    if (spec.links > max_simple_links(spec.nodes))
      throw std::invalid_argument(name + ": link count exceeds simple-graph maximum");
    check_range(spec.cpu, (name + " cpu").c_str(), 0);
    check_range(spec.delay, (name + " delay").c_str(), 1);
  }
  check_range(bandwidth, "bandwidth", 0);
  check_range(inter_delay, "inter-domain delay", 1);
  if (inter_links_per_pair < 0)
    throw std::invalid_argument("inter_links_per_pair must be >= 0");
}

namespace {

// Intra-domain wiring: random spanning tree first, extra links uniformly
// among the absent pairs afterwards.
void wire_domain(SubstrateNetwork& net, const SubstrateConfig& cfg, Domain d, Rng& rng) {
  const auto& spec = cfg.domain(d);
  const auto& ids = net.domain_members(d);
  const int n = spec.nodes;
  int created = 0;
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(rng.uniform_int(0, i - 1));
    net.add_link(ids[j], ids[i], rng.uniform_int(cfg.bandwidth.min, cfg.bandwidth.max),
                 rng.uniform_int(spec.delay.min, spec.delay.max));
    ++created;
  }
  int attempts = 0;
  const int attempt_cap = 64 * std::max(1, spec.links);
  while (created < spec.links) {
    if (attempts++ < attempt_cap) {
      const int a = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      const int b = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      if (a == b || net.link_between(ids[a], ids[b]) != -1) continue;
      net.add_link(ids[a], ids[b], rng.uniform_int(cfg.bandwidth.min, cfg.bandwidth.max),
                   rng.uniform_int(spec.delay.min, spec.delay.max));
      ++created;
    } else {
      // Dense segment: pick uniformly among the remaining absent pairs.
      std::vector<std::pair<NodeId, NodeId>> absent;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (net.link_between(ids[a], ids[b]) == -1) absent.emplace_back(ids[a], ids[b]);
      while (created < spec.links) {
        const std::size_t k = rng.index(absent.size());
        const auto [ua, ub] = absent[k];
        absent.erase(absent.begin() + static_cast<std::ptrdiff_t>(k));
        net.add_link(ua, ub, rng.uniform_int(cfg.bandwidth.min, cfg.bandwidth.max),
                     rng.uniform_int(spec.delay.min, spec.delay.max));
        ++created;
      }
    }
  }
}

void wire_inter_domain(SubstrateNetwork& net, const SubstrateConfig& cfg, Domain da,
                       Domain db, Rng& rng) {
  const auto& a_ids = net.domain_members(da);
  const auto& b_ids = net.domain_members(db);
  const long long pair_cap = static_cast<long long>(a_ids.size()) * b_ids.size();
  int created = 0;
  int attempts = 0;
  const int attempt_cap = 64 * std::max(1, cfg.inter_links_per_pair);
  while (created < cfg.inter_links_per_pair) {
    if (static_cast<long long>(created) >= pair_cap) break;  // no unused node pair left
    const NodeId u = a_ids[rng.index(a_ids.size())];
    const NodeId v = b_ids[rng.index(b_ids.size())];
    if (net.link_between(u, v) != -1) {
      if (attempts++ > attempt_cap) {
        std::vector<std::pair<NodeId, NodeId>> absent;
        for (NodeId x : a_ids)
          for (NodeId y : b_ids)
            if (net.link_between(x, y) == -1) absent.emplace_back(x, y);
        if (absent.empty()) break;
        const auto [ua, ub] = absent[rng.index(absent.size())];
        net.add_link(ua, ub, rng.uniform_int(cfg.bandwidth.min, cfg.bandwidth.max),
                     rng.uniform_int(cfg.inter_delay.min, cfg.inter_delay.max));
        ++created;
      }
      continue;
    }
    net.add_link(u, v, rng.uniform_int(cfg.bandwidth.min, cfg.bandwidth.max),
                 rng.uniform_int(cfg.inter_delay.min, cfg.inter_delay.max));
    ++created;
  }
}

}  // namespace

SubstrateNetwork generate_substrate(const SubstrateConfig& cfg, Rng& rng) {
  cfg.validate();
  SubstrateNetwork net;
  for (Domain d : {Domain::Space, Domain::Air, Domain::Ground}) {
    const auto& spec = cfg.domain(d);
    for (int i = 0; i < spec.nodes; ++i)
      net.add_node(d, rng.uniform_int(spec.cpu.min, spec.cpu.max));
  }
  for (Domain d : {Domain::Space, Domain::Air, Domain::Ground}) wire_domain(net, cfg, d, rng);
  wire_inter_domain(net, cfg, Domain::Space, Domain::Air, rng);
  wire_inter_domain(net, cfg, Domain::Space, Domain::Ground, rng);
  wire_inter_domain(net, cfg, Domain::Air, Domain::Ground, rng);
  net.finalize();
  return net;
}

void save_substrate(const SubstrateNetwork& net, std::ostream& out) {
  out << "nodes " << net.node_count() << " links " << net.link_count() << "\n";
  for (const auto& nd : net.nodes())
    out << "node " << nd.id << ' ' << to_string(nd.domain) << ' ' << nd.cpu_capacity << "\n";
  for (const auto& l : net.links())
    out << "link " << l.u << ' ' << l.v << ' ' << l.bw_capacity << ' ' << l.delay << "\n";
}

SubstrateNetwork load_substrate(std::istream& in) {
  std::string tok;
  std::size_t n = 0, m = 0;
  if (!(in >> tok) || tok != "nodes" || !(in >> n) || !(in >> tok) || tok != "links" ||
      !(in >> m))
    throw std::invalid_argument("substrate file: bad header");
  SubstrateNetwork net;
  for (std::size_t i = 0; i < n; ++i) {
    NodeId id;
    std::string dom;
    Res cpu;
    if (!(in >> tok) || tok != "node" || !(in >> id >> dom >> cpu))
      throw std::invalid_argument("substrate file: bad node line");
    if (id != static_cast<NodeId>(i))
      throw std::invalid_argument("substrate file: node ids must be 0..n-1 in order");
    net.add_node(domain_from_string(dom), cpu);
  }
  for (std::size_t i = 0; i < m; ++i) {
    NodeId u, v;
    Res bw, delay;
    if (!(in >> tok) || tok != "link" || !(in >> u >> v >> bw >> delay))
      throw std::invalid_argument("substrate file: bad link line");
    net.add_link(u, v, bw, delay);
  }
  net.finalize();
  return net;
}

}  // namespace sagvne
