#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "majc/colouring.hpp"
#include "majc/graph.hpp"
#include "majc/lazy_graph.hpp"

namespace majc {

enum class Happiness { happy, unhappy, pending };

std::string_view to_string(Happiness h);

/// Verdict plus the counts it was derived from. `same` and `diff` count
/// coloured neighbours with the vertex's own colour and with another colour.
struct HappinessStatus {
  Happiness verdict = Happiness::pending;
  std::uint64_t same = 0;
  std::uint64_t diff = 0;

  bool operator==(const HappinessStatus&) const = default;
};

/// A coloured vertex is happy when same <= diff, counted over its coloured
/// neighbours only. Throws not_in_domain if v is uncoloured.
HappinessStatus happiness_status(const FiniteGraph& g,
                                 const PartialColouring& colouring, Vertex v);

/// Lazy-graph variant. Finite degree: exact, over coloured neighbours.
/// Degree aleph0: needs a horizon and reports pending counters over that
/// many neighbours, unless the caller certifies that v has infinitely many
/// neighbours of another colour, in which case v is happy.
HappinessStatus happiness_status(const LazyGraph& g,
                                 const PartialColouring& colouring, Vertex v,
                                 std::optional<std::size_t> horizon = {},
                                 bool infinitely_many_opposite = false);

/// Edges whose endpoints receive different colours. The colouring must be
/// total on g (partial_colouring otherwise).
std::uint64_t cross_edge_count(const FiniteGraph& g,
                               const PartialColouring& colouring);
std::uint64_t monochromatic_edge_count(const FiniteGraph& g,
                                       const PartialColouring& colouring);

}  // namespace majc
