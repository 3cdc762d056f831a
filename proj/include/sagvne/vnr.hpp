#pragma once

#include <iosfwd>
#include <vector>

#include "sagvne/rng.hpp"
#include "sagvne/substrate.hpp"

namespace sagvne {

struct VirtualNode {
  int id = -1;  // local to the request
  Res cpu_demand = 0;
  Domain target_domain = Domain::Ground;
};

struct VirtualLink {
  int u = -1, v = -1;  // virtual node ids, u < v
  Res bw_demand = 0;
  Res delay_bound = 0;
};

// A virtual network request: a small connected graph of resource demands
// arriving at a point in simulated time and holding its resources for
// `lifetime` once embedded.
struct Vnr {
  VnrId id = -1;
  std::vector<VirtualNode> nodes;
  std::vector<VirtualLink> links;
  double arrival_time = 0.0;
  double lifetime = 0.0;
};

bool is_connected(const Vnr& vnr);

struct VnrConfig {
  int count = 2000;
  int nodes_min = 2;
  int nodes_max = 10;
  AttrRange cpu{1, 20};
  AttrRange bw{1, 20};
  Res delay_cap = 50;       // bounds drawn uniformly from [1, delay_cap]
  double link_prob = 0.5;   // extra-link probability beyond the spanning tree
  enum class DomainChoice { Proportional, Uniform };
  DomainChoice domain_choice = DomainChoice::Proportional;
  std::array<int, kDomainCount> domain_weights{10, 30, 60};
  double arrival_rate = 0.04;    // arrivals per time unit (Poisson process)
  double mean_lifetime = 1000.0; // exponential holding time

  void validate() const;
};

// Deterministic for a given (cfg, rng state). The delay bound of each link
// is derived from its own uniform draw scaled by delay_cap, so configs that
// differ only in delay_cap produce identical requests with pointwise-scaled
// bounds.
std::vector<Vnr> generate_vnr_set(const VnrConfig& cfg, Rng& rng);

enum class EventKind : int { Departure = 0, Arrival = 1 };

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::Arrival;
  VnrId vnr_id = -1;
};

// Ordering: by time, then Departure before Arrival, then by vnr id.
bool event_before(const Event& a, const Event& b);

// Static stream for replay: every request contributes an Arrival; accepted
// requests also contribute a Departure at arrival_time + lifetime.
std::vector<Event> build_event_stream(const std::vector<Vnr>& vnrs,
                                      const std::vector<bool>& accepted);

// Line-oriented text fixture format mirroring the substrate format:
//   vnrs <count>
//   vnr <id> <nnodes> <nlinks> <arrival> <lifetime>
//   vnode <id> <domain> <cpu>
//   vlink <u> <v> <bw> <delay_bound>
void save_vnrs(const std::vector<Vnr>& vnrs, std::ostream& out);
std::vector<Vnr> load_vnrs(std::istream& in);

}  // namespace sagvne
