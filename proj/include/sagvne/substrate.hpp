#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "sagvne/rng.hpp"

namespace sagvne {

using NodeId = int;
using LinkId = int;
using VnrId = int;
using Res = std::int64_t;  // CPU (Tflops), bandwidth (Mbps), delay (ms)

enum class Domain : int { Space = 0, Air = 1, Ground = 2 };
inline constexpr int kDomainCount = 3;

const char* to_string(Domain d);
Domain domain_from_string(const std::string& s);

// Thrown when an allocation would exceed an available CPU/bandwidth ledger.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on ledger bookkeeping misuse: releasing more than allocated,
// double-applying or double-releasing an embedding.
struct LedgerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SubstrateNode {
  NodeId id = -1;
  Domain domain = Domain::Ground;
  Res cpu_capacity = 0;
  Res cpu_available = 0;
};

struct SubstrateLink {
  LinkId id = -1;
  NodeId u = -1, v = -1;  // unordered endpoints, stored with u < v
  Res bw_capacity = 0;
  Res bw_available = 0;
  Res delay = 0;
  bool inter_domain = false;

  NodeId other(NodeId n) const { return n == u ? v : u; }
  bool touches(NodeId n) const { return n == u || n == v; }
};

// Saved CPU/bandwidth availabilities; used for atomic rollback and for
// validating embeddings against the pre-apply state.
struct LedgerSnapshot {
  std::vector<Res> cpu_available;
  std::vector<Res> bw_available;
};

// Layered physical network: an undirected simple graph whose nodes belong to
// one of three segments, plus an exact ledger of allocated vs. available
// resources. Topology is append-only; the ledger mutates during a run.
class SubstrateNetwork {
 public:
  NodeId add_node(Domain domain, Res cpu_capacity);
  LinkId add_link(NodeId u, NodeId v, Res bw_capacity, Res delay);

  // Builds the per-segment hop-distance table; must be called after the
  // topology is complete and before intra_domain_hops() is queried.
  // generate_substrate() and load_substrate() finalize automatically.
  void finalize();
  bool finalized() const { return finalized_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }
  const SubstrateNode& node(NodeId id) const;
  const SubstrateLink& link(LinkId id) const;
  const std::vector<SubstrateNode>& nodes() const { return nodes_; }
  const std::vector<SubstrateLink>& links() const { return links_; }

  // Incident link ids, ordered by neighbor node id.
  std::span<const LinkId> incident(NodeId id) const;
  LinkId link_between(NodeId u, NodeId v) const;  // -1 when absent
  const std::vector<NodeId>& domain_members(Domain d) const;
  bool is_boundary(NodeId id) const;
  std::vector<NodeId> boundary_nodes() const;

  // Hop distance using only links inside the node's segment; -1 when the
  // nodes are unreachable or in different segments. Requires finalize().
  int intra_domain_hops(NodeId a, NodeId b) const;

  // Ledger operations.
  void allocate_node(NodeId id, Res amount);
  void release_node(NodeId id, Res amount);
  // Atomic: on failure no link is modified; the error names the first link
  // along the path whose availability is exceeded.
  void allocate_path(std::span<const LinkId> path, Res amount);
  void release_path(std::span<const LinkId> path, Res amount);

  LedgerSnapshot snapshot() const;
  void restore(const LedgerSnapshot& snap);

  // Registry of currently applied embeddings, keyed by VNR id; guards
  // against double apply/release.
  void mark_applied(VnrId vnr_id);
  bool is_applied(VnrId vnr_id) const { return applied_.count(vnr_id) != 0; }
  void mark_released(VnrId vnr_id);
  void clear_applied() { applied_.clear(); }

 private:
  void check_node(NodeId id) const;
  void check_link(LinkId id) const;

  std::vector<SubstrateNode> nodes_;
  std::vector<SubstrateLink> links_;
  std::vector<std::vector<LinkId>> incident_;
  std::array<std::vector<NodeId>, kDomainCount> members_;
  std::vector<int> hops_;  // node_count^2 row-major; -1 = unreachable/cross-domain
  std::unordered_set<VnrId> applied_;
  bool finalized_ = false;
};

struct AttrRange {
  Res min = 0;
  Res max = 0;
};

struct DomainSpec {
  int nodes = 0;
  int links = 0;  // intra-domain link count
  AttrRange cpu;
  AttrRange delay;
};

// Defaults follow the evaluation setup: 100 nodes (10 space / 30 air / 60
// ground), ~600 links, two inter-domain links per segment pair.
struct SubstrateConfig {
  DomainSpec space{10, 30, {20, 40}, {20, 40}};
  DomainSpec air{30, 140, {20, 40}, {10, 30}};
  DomainSpec ground{60, 424, {50, 100}, {1, 20}};
  AttrRange bandwidth{50, 100};  // shared by every link class
  int inter_links_per_pair = 2;
  AttrRange inter_delay{40, 60};

  const DomainSpec& domain(Domain d) const;
  void validate() const;  // throws std::invalid_argument
};

// Random layered network: per segment a random spanning tree plus uniform
// extra links up to the configured count, then inter-domain links between
// uniformly chosen endpoints. Deterministic for a given (cfg, rng state).
SubstrateNetwork generate_substrate(const SubstrateConfig& cfg, Rng& rng);

// Line-oriented text fixture format:
//   nodes <n> links <m>
//   node <id> <domain> <cpu>
//   link <u> <v> <bw> <delay>
void save_substrate(const SubstrateNetwork& net, std::ostream& out);
SubstrateNetwork load_substrate(std::istream& in);

}  // namespace sagvne
