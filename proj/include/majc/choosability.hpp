#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "majc/colouring.hpp"
#include "majc/graph.hpp"

namespace majc {

enum class OracleMode { exhaustive, sampled };

struct OracleOptions {
  OracleMode mode = OracleMode::exhaustive;
  std::size_t samples = 1000;  // sampled mode
  std::uint64_t seed = 0;      // sampled mode
  unsigned threads = 1;
};

struct ChoosabilityVerdict {
  bool choosable = true;
  std::optional<ListSystem> failing;  // first failing list system
  std::size_t systems_checked = 0;
};

/// List systems with lists of `ell` colours from {0..palette-1}, one per
/// colour-renaming class. Two systems on the same vertex order are
/// equivalent under a renaming exactly when the multisets of their colour
/// incidence vectors agree, which is the dedup key.
std::vector<ListSystem> canonical_list_systems(std::size_t vertices,
                                               std::size_t ell,
                                               std::size_t palette);

/// Sorted colour-incidence signature of a list system over vertices 0..n-1.
std::vector<std::uint32_t> incidence_signature(const ListSystem& lists,
                                               std::size_t vertices);

/// Checks that every list system of size `ell` from the palette admits a
/// majority list colouring. Exhaustive mode covers every renaming class
/// and is limited to 4 vertices; sampled mode draws seeded random systems
/// and is limited to 10 vertices. Throws guard_exceeded beyond the limits.
ChoosabilityVerdict majority_choosable_oracle(const FiniteGraph& g,
                                              std::size_t ell,
                                              std::size_t palette,
                                              const OracleOptions& options = {});

/// All connected labelled graphs on exactly n vertices (n <= 6), one per
/// isomorphism class, vertices named "0".."n-1".
std::vector<FiniteGraph> connected_graphs(std::size_t n);

}  // namespace majc
