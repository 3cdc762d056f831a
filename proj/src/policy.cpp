#include "sagvne/policy.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace sagvne {

PolicyParams PolicyParams::random_init(Rng& rng, double learning_rate) {
  PolicyParams p;
  for (auto& w : p.weights) w = -0.1 + 0.2 * rng.uniform01();
  p.bias = -0.1 + 0.2 * rng.uniform01();
  p.learning_rate = learning_rate;
  return p;
}

namespace {

double logit_of(const PolicyParams& params, const FeatureMatrix& m, NodeId id) {
  const auto& row = m.rows[static_cast<std::size_t>(id)];
  double v = params.bias;
  for (int c = 0; c < kFeatureCount; ++c) v += params.weights[c] * row[c];
  return v;
}

}  // namespace

NodeDistribution forward(const PolicyParams& params, const FeatureMatrix& m,
                         std::span<const NodeId> candidates) {
  if (candidates.empty()) throw std::invalid_argument("forward: empty candidate set");
  const std::size_t n = m.rows.size();
  NodeDistribution dist;
  dist.probs.assign(n, 0.0);
  dist.candidate_mask.assign(n, 0);

  double max_logit = -std::numeric_limits<double>::infinity();
  for (NodeId id : candidates) {
    if (id < 0 || static_cast<std::size_t>(id) >= n)
      throw std::out_of_range("forward: candidate outside the matrix");
    max_logit = std::max(max_logit, logit_of(params, m, id));
  }
  double total = 0.0;
  for (NodeId id : candidates) {
    const double e = std::exp(logit_of(params, m, id) - max_logit);
    dist.probs[static_cast<std::size_t>(id)] = e;
    dist.candidate_mask[static_cast<std::size_t>(id)] = 1;
    total += e;
  }
  for (NodeId id : candidates) dist.probs[static_cast<std::size_t>(id)] /= total;
  return dist;
}

NodeId select_node(const NodeDistribution& dist, SelectMode mode, Rng* rng) {
  if (mode == SelectMode::Greedy) {
    NodeId best = -1;
    double best_p = -1.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
      if (!dist.candidate_mask[i]) continue;
      if (dist.probs[i] > best_p) {  // ties keep the lowest id
        best_p = dist.probs[i];
        best = static_cast<NodeId>(i);
      }
    }
    if (best < 0) throw std::invalid_argument("select_node: empty distribution");
    return best;
  }
  if (rng == nullptr) throw std::invalid_argument("select_node: sampling needs an rng");
  const double u = rng->uniform01();
  double acc = 0.0;
  NodeId last = -1;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    if (!dist.candidate_mask[i]) continue;
    last = static_cast<NodeId>(i);
    acc += dist.probs[i];
    if (u < acc) return last;
  }
  if (last < 0) throw std::invalid_argument("select_node: empty distribution");
  return last;  // guards against rounding shortfall
}

double compute_reward(Res revenue, Res cost) {
  if (cost <= 0) throw std::invalid_argument("compute_reward: cost must be > 0");
  return static_cast<double>(revenue) / static_cast<double>(cost);
}

std::array<double, kFeatureCount + 1> grad_log_prob(const PolicyParams& params,
                                                    const FeatureMatrix& m,
                                                    std::span<const NodeId> candidates,
                                                    NodeId chosen) {
  const NodeDistribution dist = forward(params, m, candidates);
  if (chosen < 0 || static_cast<std::size_t>(chosen) >= dist.probs.size() ||
      !dist.candidate_mask[static_cast<std::size_t>(chosen)])
    throw std::invalid_argument("grad_log_prob: chosen node is not a candidate");

  // d/dw log p(c) = v_c - sum_i p_i v_i over the candidate set;
  // d/db log p(c) = 1 - sum_i p_i.
  std::array<double, kFeatureCount + 1> grad{};
  double prob_sum = 0.0;
  for (NodeId id : candidates) {
    const double p = dist.probs[static_cast<std::size_t>(id)];
    prob_sum += p;
    const auto& row = m.rows[static_cast<std::size_t>(id)];
    for (int c = 0; c < kFeatureCount; ++c) grad[c] -= p * row[c];
  }
  const auto& chosen_row = m.rows[static_cast<std::size_t>(chosen)];
  for (int c = 0; c < kFeatureCount; ++c) grad[c] += chosen_row[c];
  grad[kFeatureCount] = 1.0 - prob_sum;
  return grad;
}

PolicyParams reinforce_update(PolicyParams params, std::span<const EpisodeTrace> traces) {
  if (traces.empty()) throw std::invalid_argument("reinforce_update: empty batch");
  std::array<double, kFeatureCount + 1> total{};
  for (const auto& trace : traces) {
    if (trace.reward == 0.0) continue;  // failed episodes clear their gradient
    for (const auto& decision : trace.decisions) {
      const auto g = grad_log_prob(params, decision.features, decision.candidates,
                                   decision.chosen);
      for (int c = 0; c <= kFeatureCount; ++c) total[c] += trace.reward * g[c];
    }
  }
  for (double g : total) {
    if (!std::isfinite(g)) throw std::runtime_error("reinforce_update: non-finite gradient");
  }
  for (int c = 0; c < kFeatureCount; ++c) params.weights[c] += params.learning_rate * total[c];
  params.bias += params.learning_rate * total[kFeatureCount];
  return params;
}

void save_policy(const PolicyParams& params, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write policy file " + file.string());
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g\n", params.weights[0],
                params.weights[1], params.weights[2], params.weights[3], params.bias);
  out << buf;
}

PolicyParams load_policy(const std::filesystem::path& file, double learning_rate) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read policy file " + file.string());
  PolicyParams p;
  p.learning_rate = learning_rate;
  for (auto& w : p.weights) {
    if (!(in >> w)) throw std::runtime_error("malformed policy file " + file.string());
  }
  if (!(in >> p.bias)) throw std::runtime_error("malformed policy file " + file.string());
  return p;
}

}  // namespace sagvne
