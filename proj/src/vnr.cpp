#include "sagvne/vnr.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>

namespace sagvne {

bool is_connected(const Vnr& vnr) {
  const int n = static_cast<int>(vnr.nodes.size());
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& l : vnr.links) {
    adj[l.u].push_back(l.v);
    adj[l.v].push_back(l.u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int nb : adj[cur]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++count;
        stack.push_back(nb);
      }
    }
  }
  return count == n;
}

void VnrConfig::validate() const {
  if (count < 0) throw std::invalid_argument("vnr count must be >= 0");
  if (nodes_min < 2) throw std::invalid_argument("requests need at least 2 nodes");
  if (nodes_max < nodes_min) throw std::invalid_argument("nodes_max < nodes_min");
  if (cpu.min <= 0 || cpu.min > cpu.max) throw std::invalid_argument("bad cpu demand range");
  if (bw.min <= 0 || bw.min > bw.max) throw std::invalid_argument("bad bw demand range");
  if (delay_cap < 1) throw std::invalid_argument("delay_cap must be >= 1");
  if (link_prob < 0.0 || link_prob > 1.0) throw std::invalid_argument("link_prob outside [0,1]");
  if (arrival_rate <= 0.0) throw std::invalid_argument("arrival_rate must be > 0");
  if (mean_lifetime <= 0.0) throw std::invalid_argument("mean_lifetime must be > 0");
  int total_weight = 0;
  for (int w : domain_weights) {
    if (w < 0) throw std::invalid_argument("domain weights must be >= 0");
    total_weight += w;
  }
  if (total_weight <= 0) throw std::invalid_argument("domain weights sum to 0");
}

namespace {

Domain draw_domain(const VnrConfig& cfg, Rng& rng) {
  if (cfg.domain_choice == VnrConfig::DomainChoice::Uniform)
    return static_cast<Domain>(rng.uniform_int(0, kDomainCount - 1));
  int total = 0;
  for (int w : cfg.domain_weights) total += w;
  std::int64_t pick = rng.uniform_int(0, total - 1);
  for (int d = 0; d < kDomainCount; ++d) {
    pick -= cfg.domain_weights[d];
    if (pick < 0) return static_cast<Domain>(d);
  }
  return Domain::Ground;
}

Res draw_delay_bound(const VnrConfig& cfg, Rng& rng) {
  // Scale one uniform draw by the cap so runs differing only in delay_cap
  // see the same requests with pointwise-scaled bounds.
  const double u = rng.uniform01();
  Res bound = 1 + static_cast<Res>(u * static_cast<double>(cfg.delay_cap));
  return std::min(bound, cfg.delay_cap);
}

}  // namespace

std::vector<Vnr> generate_vnr_set(const VnrConfig& cfg, Rng& rng) {
  cfg.validate();
  std::vector<Vnr> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  double clock = 0.0;
  for (int id = 0; id < cfg.count; ++id) {
    Vnr vnr;
    vnr.id = id;
    clock += rng.exponential(1.0 / cfg.arrival_rate);
    vnr.arrival_time = clock;
    vnr.lifetime = rng.exponential(cfg.mean_lifetime);
    const int k = static_cast<int>(rng.uniform_int(cfg.nodes_min, cfg.nodes_max));
    vnr.nodes.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      vnr.nodes.push_back({i, rng.uniform_int(cfg.cpu.min, cfg.cpu.max), draw_domain(cfg, rng)});
    }
    // Connected topology: random spanning tree, then each remaining pair
    // joins with probability link_prob.
    std::vector<std::pair<int, int>> tree;
    for (int i = 1; i < k; ++i) tree.emplace_back(static_cast<int>(rng.uniform_int(0, i - 1)), i);
    std::vector<std::vector<char>> present(static_cast<std::size_t>(k),
                                           std::vector<char>(static_cast<std::size_t>(k), 0));
    auto push_link = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      present[a][b] = 1;
      VirtualLink l;
      l.u = a;
      l.v = b;
      l.bw_demand = rng.uniform_int(cfg.bw.min, cfg.bw.max);
      l.delay_bound = draw_delay_bound(cfg, rng);
      vnr.links.push_back(l);
    };
    for (auto [a, b] : tree) push_link(a, b);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (!present[a][b] && rng.bernoulli(cfg.link_prob)) push_link(a, b);
    out.push_back(std::move(vnr));
  }
  return out;
}

bool event_before(const Event& a, const Event& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.vnr_id < b.vnr_id;
}

std::vector<Event> build_event_stream(const std::vector<Vnr>& vnrs,
                                      const std::vector<bool>& accepted) {
  if (accepted.size() != vnrs.size())
    throw std::invalid_argument("one outcome per request required");
  std::vector<Event> events;
  events.reserve(vnrs.size() * 2);
  for (std::size_t i = 0; i < vnrs.size(); ++i) {
    events.push_back({vnrs[i].arrival_time, EventKind::Arrival, vnrs[i].id});
    if (accepted[i])
      events.push_back(
          {vnrs[i].arrival_time + vnrs[i].lifetime, EventKind::Departure, vnrs[i].id});
  }
  std::sort(events.begin(), events.end(), event_before);
  return events;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void save_vnrs(const std::vector<Vnr>& vnrs, std::ostream& out) {
  out << "vnrs " << vnrs.size() << "\n";
  for (const auto& vnr : vnrs) {
    out << "vnr " << vnr.id << ' ' << vnr.nodes.size() << ' ' << vnr.links.size() << ' '
        << fmt_double(vnr.arrival_time) << ' ' << fmt_double(vnr.lifetime) << "\n";
    for (const auto& nd : vnr.nodes)
      out << "vnode " << nd.id << ' ' << to_string(nd.target_domain) << ' ' << nd.cpu_demand
          << "\n";
    for (const auto& l : vnr.links)
      out << "vlink " << l.u << ' ' << l.v << ' ' << l.bw_demand << ' ' << l.delay_bound << "\n";
  }
}

std::vector<Vnr> load_vnrs(std::istream& in) {
  std::string tok;
  std::size_t count = 0;
  if (!(in >> tok) || tok != "vnrs" || !(in >> count))
    throw std::invalid_argument("vnr file: bad header");
  std::vector<Vnr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Vnr vnr;
    std::size_t nn = 0, nl = 0;
    if (!(in >> tok) || tok != "vnr" ||
        !(in >> vnr.id >> nn >> nl >> vnr.arrival_time >> vnr.lifetime))
      throw std::invalid_argument("vnr file: bad vnr line");
    for (std::size_t j = 0; j < nn; ++j) {
      VirtualNode nd;
      std::string dom;
      if (!(in >> tok) || tok != "vnode" || !(in >> nd.id >> dom >> nd.cpu_demand))
        throw std::invalid_argument("vnr file: bad vnode line");
      nd.target_domain = domain_from_string(dom);
      vnr.nodes.push_back(nd);
    }
    for (std::size_t j = 0; j < nl; ++j) {
      VirtualLink l;
      if (!(in >> tok) || tok != "vlink" || !(in >> l.u >> l.v >> l.bw_demand >> l.delay_bound))
        throw std::invalid_argument("vnr file: bad vlink line");
      vnr.links.push_back(l);
    }
    out.push_back(std::move(vnr));
  }
  return out;
}

}  // namespace sagvne
