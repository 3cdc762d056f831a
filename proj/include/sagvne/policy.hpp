#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "sagvne/features.hpp"
#include "sagvne/rng.hpp"

namespace sagvne {

// The node-selection scorer: a single linear convolution over each feature
// row followed by a softmax, an infeasibility filter and the node output.
struct PolicyParams {
  std::array<double, kFeatureCount> weights{};
  double bias = 0.0;
  double learning_rate = 0.005;

  // Uniform init in [-0.1, 0.1]; keeps the early distribution near uniform.
  static PolicyParams random_init(Rng& rng, double learning_rate);
};

struct NodeDistribution {
  std::vector<double> probs;          // aligned to node ids; non-candidates exactly 0
  std::vector<char> candidate_mask;   // nonzero = selectable
};

enum class SelectMode { Sample, Greedy };

// Scores every row, softmaxes, zeroes non-candidates and renormalizes over
// the candidate set. Renormalizing the full softmax over a subset equals a
// softmax over the subset's logits, so it is computed that way (with
// max-logit subtraction) for numerical stability.
// Throws std::invalid_argument when `candidates` is empty.
NodeDistribution forward(const PolicyParams& params, const FeatureMatrix& m,
                         std::span<const NodeId> candidates);

// Sample draws from the distribution (training); Greedy takes the argmax
// with lowest-id tie-break (testing). `rng` is required for Sample.
NodeId select_node(const NodeDistribution& dist, SelectMode mode, Rng* rng);

// revenue/cost for an accepted request; call with the booked values.
double compute_reward(Res revenue, Res cost);

// One node decision as replayed by the learner.
struct DecisionRecord {
  FeatureMatrix features;
  std::vector<NodeId> candidates;
  NodeId chosen = -1;
};

// One request's episode: its decisions and the scalar reward (0 on failure,
// which zeroes the episode's gradient contribution).
struct EpisodeTrace {
  std::vector<DecisionRecord> decisions;
  double reward = 0.0;
};

// d log p(chosen) / d(weights..., bias) for one decision.
std::array<double, kFeatureCount + 1> grad_log_prob(const PolicyParams& params,
                                                    const FeatureMatrix& m,
                                                    std::span<const NodeId> candidates,
                                                    NodeId chosen);

// One REINFORCE step of gradient ascent on
//   sum over decisions of reward * grad log p(chosen).
// Throws std::runtime_error on a non-finite gradient.
PolicyParams reinforce_update(PolicyParams params, std::span<const EpisodeTrace> traces);

// Text record "w1 w2 w3 w4 b"; round-trips exactly.
void save_policy(const PolicyParams& params, const std::filesystem::path& file);
PolicyParams load_policy(const std::filesystem::path& file, double learning_rate);

}  // namespace sagvne
