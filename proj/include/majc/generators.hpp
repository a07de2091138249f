#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "majc/lazy_graph.hpp"

namespace majc {

/// Countable graph families. Which vertices have degree aleph0:
///   path, grid, regular_tree, seeded_locally_finite: none
///   star: the centre "c"
///   dominating_vertex: the dominating vertex "d"
enum class Family {
  path,                   // v0 - v1 - v2 - ...
  grid,                   // quarter-plane grid, vertices g<x>_<y>
  regular_tree,           // infinite d-regular tree, t0 is the root
  star,                   // centre c joined to leaves l0, l1, ...
  seeded_locally_finite,  // path plus seeded random chords of bounded length
  dominating_vertex,      // d joined to every v_i, plus a family on the v_i
};

enum class DominatedFamily { path, matching };

struct GeneratorSpec {
  Family family = Family::path;
  std::size_t degree = 3;      // regular_tree
  std::size_t max_degree = 4;  // seeded_locally_finite, >= 2
  DominatedFamily rest = DominatedFamily::path;
  std::uint64_t seed = 0;
};

std::string_view family_name(Family f);
/// Accepts the canonical names plus the aliases "tree", "star-aleph0",
/// "seeded-random-locally-finite" and "dominating-vertex-plus-family".
std::optional<Family> parse_family(std::string_view name);

/// Builds the oracle. Throws invalid_argument for bad parameters.
std::unique_ptr<LazyGraph> instantiate_generator(const GeneratorSpec& spec);

}  // namespace majc
