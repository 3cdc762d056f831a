#pragma once

#include <vector>

#include "sagvne/substrate.hpp"

namespace sagvne {

struct NodePlacement {
  int vnode = -1;
  NodeId host = -1;
  Res cpu = 0;  // amount held on the host
};

struct PathPlacement {
  int vlink = -1;                // index into Vnr::links
  std::vector<LinkId> links;     // substrate path, ordered from the mapped u to the mapped v
  Res bw = 0;                    // amount held on every path link
};

// A request bound to substrate resources: the node assignment, one substrate
// path per virtual link, and the booked revenue/cost. Self-contained so the
// ledger can be released without the original request.
struct Embedding {
  VnrId vnr_id = -1;
  std::vector<NodePlacement> nodes;
  std::vector<PathPlacement> paths;
  Res revenue = 0;
  Res cost = 0;

  NodeId host_of(int vnode) const;  // -1 when unmapped
};

// Atomic: on any allocation failure the ledger is restored and the error
// rethrown. Throws LedgerError if the embedding's VNR is already applied.
void apply_embedding(SubstrateNetwork& net, const Embedding& emb);

// Returns every held amount to its node/link. Throws LedgerError when the
// embedding is not currently applied (double release).
void release_embedding(SubstrateNetwork& net, const Embedding& emb);

}  // namespace sagvne
