#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sagvne/embedding.hpp"
#include "sagvne/policy.hpp"
#include "sagvne/vnr.hpp"

namespace sagvne {

// Virtual-node id -> substrate node id; -1 while unmapped.
using NodeMapping = std::vector<NodeId>;

struct EmbedFailure {
  enum class Kind { None, NodeMapping, LinkMapping };
  Kind kind = Kind::None;
  int element = -1;  // failing virtual node or virtual link index
  std::string detail;
};

struct EmbedResult {
  std::optional<Embedding> embedding;
  EmbedFailure failure;

  bool accepted() const { return embedding.has_value(); }
};

// Chooses a host for one virtual node among its feasible candidates.
class NodeSelector {
 public:
  virtual ~NodeSelector() = default;
  // `candidates` is nonempty and ascending; `unembedded` masks nodes not yet
  // hosting part of this request.
  virtual NodeId choose(const SubstrateNetwork& net, const Vnr& vnr, int vnode,
                        std::span<const NodeId> candidates,
                        const std::vector<char>& unembedded) = 0;
};

// Policy-network selector; optionally records decisions for the learner.
class PolicySelector final : public NodeSelector {
 public:
  PolicySelector(const PolicyParams& params, SelectMode mode, Rng* rng = nullptr,
                 std::vector<DecisionRecord>* trace = nullptr)
      : params_(&params), mode_(mode), rng_(rng), trace_(trace) {}

  NodeId choose(const SubstrateNetwork& net, const Vnr& vnr, int vnode,
                std::span<const NodeId> candidates,
                const std::vector<char>& unembedded) override;

 private:
  const PolicyParams* params_;
  SelectMode mode_;
  Rng* rng_;
  std::vector<DecisionRecord>* trace_;
};

// Nodes of the virtual node's target segment with enough residual CPU that
// do not already host another node of the same request. Ascending ids.
std::vector<NodeId> candidate_hosts(const SubstrateNetwork& net, const Vnr& vnr,
                                    int vnode, const NodeMapping& mapping);

// Places virtual nodes in descending cpu_demand order (ties by lower id),
// allocating CPU immediately so later decisions see the residual ledger.
// No rollback on failure; embed_vnr owns atomicity.
std::optional<NodeMapping> map_nodes(SubstrateNetwork& net, const Vnr& vnr,
                                     NodeSelector& selector, EmbedFailure* failure);

// Minimum-hop path from src to dst using only links with
// bw_available >= max(bw_demand, bw_floor), with total delay within budget.
// Hop count is minimized first; among equal hop counts the minimum-delay
// path is taken, expanding neighbors in ascending node-id order.
std::optional<std::vector<LinkId>> bfs_shortest_feasible_path(
    const SubstrateNetwork& net, NodeId src, NodeId dst, Res bw_demand,
    Res delay_budget, Res bw_floor = 0);

// Maps virtual links over the whole substrate (inter-domain links included):
// links with both endpoints in one segment first, then cross-segment links,
// ascending link index within each class. Bandwidth is allocated per path as
// it is found. No rollback on failure; embed_vnr owns atomicity.
std::optional<std::vector<PathPlacement>> map_links(SubstrateNetwork& net,
                                                    const Vnr& vnr,
                                                    const NodeMapping& mapping,
                                                    EmbedFailure* failure);

// Full pipeline: node mapping via the selector, then link mapping, booking
// revenue/cost and registering the embedding. On any failure the ledger is
// restored to its pre-call state.
EmbedResult embed_vnr(SubstrateNetwork& net, const Vnr& vnr, NodeSelector& selector);

enum class Constraint {
  NodeAssignment,     // mapping incomplete/malformed or amounts disagree
  NodeInjectivity,    // two virtual nodes of one request on one host
  CpuCapacity,
  BwCapacity,
  DelayBound,
  FlowConservation,   // path not a contiguous simple src->dst path
};

struct Violation {
  Constraint constraint;
  int element = -1;  // virtual node / virtual link / substrate element id
  std::string detail;
};

const char* to_string(Constraint c);

// Checks an embedding against the ledger state prior to its application.
// Empty result = valid.
std::vector<Violation> validate_embedding(const SubstrateNetwork& pre_state,
                                          const Vnr& vnr, const Embedding& emb);

}  // namespace sagvne
