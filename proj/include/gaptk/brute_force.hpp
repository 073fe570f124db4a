#pragma once

#include "gaptk/core.hpp"

namespace gaptk {

inline constexpr int kBruteForceLimit = 11;

/// Exact optimum over all (n-1)!/2 undirected Hamiltonian cycles. Vertex 0 is
/// fixed first and reversed duplicates are skipped, which is sound because
/// tour cost is reversal-invariant. Ties break to the lexicographically
/// smallest order. Throws when n exceeds the limit.
Tour brute_force_optimum(const GapInstance& instance, bool maximize = false,
                         int limit = kBruteForceLimit);

}  // namespace gaptk
