#include "majc/happiness.hpp"

#include <string>

#include "majc/error.hpp"

namespace majc {

std::string_view to_string(Happiness h) {
  switch (h) {
    case Happiness::happy: return "happy";
    case Happiness::unhappy: return "unhappy";
    case Happiness::pending: return "pending";
  }
  return "pending";
}

namespace {

template <typename Range>
HappinessStatus tally(const Range& nbrs, const PartialColouring& colouring,
                      Colour own) {
  HappinessStatus s;
  for (Vertex w : nbrs) {
    auto c = colouring.get(w);
    if (!c) continue;
    if (*c == own) ++s.same;
    else ++s.diff;
  }
  return s;
}

void require_total(const FiniteGraph& g, const PartialColouring& colouring) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!colouring.contains(v))
      throw Error(ErrorCode::partial_colouring,
                  "vertex '" + g.name(v) + "' is uncoloured");
}

}  // namespace

HappinessStatus happiness_status(const FiniteGraph& g,
                                 const PartialColouring& colouring, Vertex v) {
  Colour own = colouring.at(v);
  HappinessStatus s = tally(g.neighbours(v), colouring, own);
  s.verdict = s.same <= s.diff ? Happiness::happy : Happiness::unhappy;
  return s;
}

HappinessStatus happiness_status(const LazyGraph& g,
                                 const PartialColouring& colouring, Vertex v,
                                 std::optional<std::size_t> horizon,
                                 bool infinitely_many_opposite) {
  Colour own = colouring.at(v);
  Card d = g.degree(v);
  if (d.is_finite()) {
    HappinessStatus s = tally(full_neighbourhood(g, v), colouring, own);
    s.verdict = s.same <= s.diff ? Happiness::happy : Happiness::unhappy;
    return s;
  }
  if (!horizon)
    throw Error(ErrorCode::horizon_required,
                "vertex '" + g.name(v) + "' has infinite degree");
  HappinessStatus s = tally(g.neighbours(v, *horizon), colouring, own);
  s.verdict = infinitely_many_opposite ? Happiness::happy : Happiness::pending;
  return s;
}

std::uint64_t cross_edge_count(const FiniteGraph& g,
                               const PartialColouring& colouring) {
  require_total(g, colouring);
  std::uint64_t n = 0;
  for (auto [u, v] : g.edges())
    if (colouring.at(u) != colouring.at(v)) ++n;
  return n;
}

std::uint64_t monochromatic_edge_count(const FiniteGraph& g,
                                       const PartialColouring& colouring) {
  require_total(g, colouring);
  std::uint64_t n = 0;
  for (auto [u, v] : g.edges())
    if (colouring.at(u) == colouring.at(v)) ++n;
  return n;
}

}  // namespace majc
