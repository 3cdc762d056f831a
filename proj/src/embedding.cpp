#include "sagvne/embedding.hpp"

namespace sagvne {

NodeId Embedding::host_of(int vnode) const {
  for (const auto& p : nodes) {
    if (p.vnode == vnode) return p.host;
  }
  return -1;
}

void apply_embedding(SubstrateNetwork& net, const Embedding& emb) {
  net.mark_applied(emb.vnr_id);
  const LedgerSnapshot snap = net.snapshot();
  try {
    for (const auto& p : emb.nodes) net.allocate_node(p.host, p.cpu);
    for (const auto& p : emb.paths) net.allocate_path(p.links, p.bw);
  } catch (...) {
    net.restore(snap);
    net.mark_released(emb.vnr_id);
    throw;
  }
}

void release_embedding(SubstrateNetwork& net, const Embedding& emb) {
  net.mark_released(emb.vnr_id);  // throws on double release
  for (const auto& p : emb.nodes) net.release_node(p.host, p.cpu);
  for (const auto& p : emb.paths) net.release_path(p.links, p.bw);
}

}  // namespace sagvne
