#include "majc/lazy_graph.hpp"

#include <algorithm>
#include <limits>

#include "majc/error.hpp"

namespace majc {

Vertex LazyGraph::at(std::string_view name) const {
  auto v = find(name);
  if (!v)
    throw Error(ErrorCode::unknown_vertex,
                "unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::vector<Vertex> FiniteLazyGraph::neighbours(Vertex v,
                                                std::size_t limit) const {
  auto adj = graph_.neighbours(v);
  auto n = std::min(limit, adj.size());
  return {adj.begin(), adj.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<Vertex> full_neighbourhood(const LazyGraph& g, Vertex v) {
  Card d = g.degree(v);
  if (d.is_aleph0())
    throw Error(ErrorCode::horizon_required,
                "vertex '" + g.name(v) + "' has infinite degree");
  auto out = g.neighbours(v, d.value());
  MAJC_CHECK(out.size() == d.value(),
             "neighbour stream of '" + g.name(v) + "' disagrees with its degree");
  return out;
}

std::optional<bool> adjacent(const LazyGraph& g, Vertex u, Vertex v,
                             std::size_t horizon) {
  if (u == v) return false;
  auto scan = [&](Vertex from, Vertex to, std::size_t limit) {
    auto adj = g.neighbours(from, limit);
    return std::find(adj.begin(), adj.end(), to) != adj.end();
  };
  if (Card d = g.degree(u); d.is_finite()) return scan(u, v, d.value());
  if (Card d = g.degree(v); d.is_finite()) return scan(v, u, d.value());
  if (scan(u, v, horizon) || scan(v, u, horizon)) return true;
  return std::nullopt;
}

InducedSubgraph induced_finite_subgraph(const LazyGraph& g,
                                        const VertexSet& vertices,
                                        std::optional<std::size_t> horizon) {
  InducedSubgraph out;
  out.source.assign(vertices.begin(), vertices.end());
  std::vector<bool> infinite(out.source.size(), false);
  for (std::size_t i = 0; i < out.source.size(); ++i) {
    if (!g.contains(out.source[i]))
      throw Error(ErrorCode::unknown_vertex,
                  "vertex " + std::to_string(out.source[i]) + " out of range");
    infinite[i] = g.degree(out.source[i]).is_aleph0();
    if (infinite[i] && !horizon)
      throw Error(ErrorCode::horizon_required,
                  "vertex '" + g.name(out.source[i]) +
                      "' has infinite degree; a horizon is required");
  }

  auto local = [&](Vertex v) -> std::optional<Vertex> {
    auto it = std::lower_bound(out.source.begin(), out.source.end(), v);
    if (it == out.source.end() || *it != v) return std::nullopt;
    return static_cast<Vertex>(it - out.source.begin());
  };

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.source.size(); ++i) {
    Vertex v = out.source[i];
    std::size_t limit = infinite[i] ? *horizon : g.degree(v).value();
    for (Vertex w : g.neighbours(v, limit)) {
      if (auto j = local(w))
        edges.emplace_back(std::min<Vertex>(i, *j), std::max<Vertex>(i, *j));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Pairs of infinite-degree members that neither scan connected stay unknown.
  for (std::size_t i = 0; i < out.source.size() && !out.truncated; ++i) {
    if (!infinite[i]) continue;
    for (std::size_t j = i + 1; j < out.source.size(); ++j) {
      if (infinite[j] &&
          !std::binary_search(edges.begin(), edges.end(), Edge{i, j})) {
        out.truncated = true;
        break;
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(out.source.size());
  for (Vertex v : out.source) names.push_back(g.name(v));
  out.graph = FiniteGraph::from_indexed(std::move(names), edges,
                                        {.allow_isolated = true});
  return out;
}

}  // namespace majc
