#pragma once

#include <optional>

#include "sagvne/embedding.hpp"
#include "sagvne/vnr.hpp"

namespace sagvne {

inline constexpr int kOracleMaxSubstrateNodes = 10;
inline constexpr int kOracleMaxVirtualNodes = 4;

struct OracleResult {
  bool feasible = false;
  std::optional<Embedding> witness;
};

// Exhaustive feasibility check for tiny instances: enumerates every
// injective, segment-respecting node assignment and, per assignment, every
// combination of simple paths with joint bandwidth accounting and cumulative
// delay bounds. Exact — never a false positive or false negative.
// Throws std::invalid_argument beyond the size guard above.
OracleResult brute_force_feasible(const SubstrateNetwork& net, const Vnr& vnr);

}  // namespace sagvne
