#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "majc/colouring.hpp"
#include "majc/graph.hpp"

namespace majc {

inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 24;

/// One finite instance: every vertex is either frozen (coloured by h) or
/// free with its own sublist. If `b1` is set, its colour must avoid `cx`.
struct SolveInstance {
  FiniteGraph graph;
  PartialColouring frozen;
  std::map<Vertex, ColourList> free_lists;
  std::optional<Vertex> b1;
  std::optional<Colour> cx;

  /// The list b1 may actually use: its sublist minus cx.
  ColourList effective_list(Vertex v) const;
};

/// Throws invalid_argument / hypothesis_violated for malformed instances.
/// With `min_list` = 2, every free vertex must keep two colours.
void validate(const SolveInstance& instance, std::size_t min_list);

struct SolveResult {
  PartialColouring colouring;  // total on the instance graph
  std::uint64_t objective = 0; // cross edges
  std::uint64_t iterations = 0;
  bool locally_optimal = false;

  bool operator==(const SolveResult&) const = default;
};

/// Local search on cross edges. Starts from the lowest colour of every
/// list and applies first-improvement single-vertex recolourings (vertex
/// ascending, colour ascending) until none improves.
///
/// A recolouring of v from a to b changes the cross-edge count by
/// same_a(v) - same_b(v). At a local optimum no colour of v's list has fewer
/// neighbours than v's own colour, and since the list has a second colour,
/// v has at least as many neighbours of other colours as of its own. So a
/// local optimum already makes every free vertex happy; a global maximum is
/// not needed. The result is audited before it is returned.
SolveResult solve_finite(const SolveInstance& instance);

/// Global maximum of cross edges over all colourings satisfying the frozen
/// part, the sublists and the b1 constraint. Ties go to the
/// lexicographically first assignment (vertex order, then colour order).
/// Throws guard_exceeded if the product of list sizes is above `guard`.
SolveResult exhaustive_max_cross(const SolveInstance& instance,
                                 std::uint64_t guard = kDefaultEnumerationGuard);

struct SolveAudit {
  bool agrees_with_frozen = true;
  bool respects_sublists = true;
  bool avoids_cx = true;
  bool free_vertices_happy = true;
  bool locally_optimal = true;
  std::string failure;

  bool ok() const {
    return agrees_with_frozen && respects_sublists && avoids_cx &&
           free_vertices_happy && locally_optimal;
  }
};

SolveAudit audit(const SolveInstance& instance, const SolveResult& result);

/// Exhaustive search for a list colouring in which every vertex is happy.
std::optional<PartialColouring> exists_majority_list_colouring(
    const FiniteGraph& g, const ListSystem& lists,
    std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace majc
