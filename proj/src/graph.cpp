#include "majc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "majc/error.hpp"

namespace majc {

FiniteGraph FiniteGraph::from_indexed(std::vector<std::string> names,
                                      std::span<const Edge> edges,
                                      Options options) {
  FiniteGraph g;
  g.names_ = std::move(names);
  g.allow_isolated_ = options.allow_isolated;
  const std::size_t n = g.names_.size();

  g.by_name_.resize(n);
  std::iota(g.by_name_.begin(), g.by_name_.end(), Vertex{0});
  std::sort(g.by_name_.begin(), g.by_name_.end(),
            [&](Vertex a, Vertex b) { return g.names_[a] < g.names_[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (g.names_[g.by_name_[i]] == g.names_[g.by_name_[i - 1]])
      throw Error(ErrorCode::duplicate_vertex,
                  "duplicate vertex '" + g.names_[g.by_name_[i]] + "'");
  }

  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::dangling_endpoint, "edge endpoint out of range");
    if (u == v)
      throw Error(ErrorCode::self_loop, "self-loop at '" + g.names_[u] + "'");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      if (options.reject_duplicate_edges)
        throw Error(ErrorCode::duplicate_edge,
                    "duplicate edge '" + g.names_[v] + "'-'" +
                        g.names_[*dup] + "'");
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    if (adj.empty() && !options.allow_isolated)
      throw Error(ErrorCode::isolated_vertex,
                  "isolated vertex '" + g.names_[v] + "'");
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;
  return g;
}

FiniteGraph FiniteGraph::from_named(
    std::vector<std::string> names,
    std::span<const std::pair<std::string, std::string>> edges,
    Options options) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < names.size(); ++v) index.emplace(names[v], v);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(ErrorCode::dangling_endpoint,
                  "edge '" + a + "'-'" + b + "' names an unknown vertex");
    indexed.emplace_back(ia->second, ib->second);
  }
  return from_indexed(std::move(names), indexed, options);
}

FiniteGraph FiniteGraph::from_edges(std::size_t n, std::span<const Edge> edges,
                                    Options options) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return from_indexed(std::move(names), edges, options);
}

bool FiniteGraph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<Vertex> FiniteGraph::find(std::string_view name) const {
  auto it = std::lower_bound(
      by_name_.begin(), by_name_.end(), name,
      [&](Vertex v, std::string_view n) { return names_[v] < n; });
  if (it == by_name_.end() || names_[*it] != name) return std::nullopt;
  return *it;
}

Vertex FiniteGraph::at(std::string_view name) const {
  auto v = find(name);
  if (!v)
    throw Error(ErrorCode::unknown_vertex,
                "unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::vector<Edge> FiniteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace majc
