#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majc {

/// Dense vertex index. For finite graphs this is the position in the vertex
/// list; for lazy graphs it is the position in the vertex enumeration.
using Vertex = std::size_t;
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

struct GraphOptions {
  bool allow_isolated = false;
  bool reject_duplicate_edges = true;
};

/// Simple undirected graph with named vertices and sorted adjacency lists.
///
/// Vertex order is the order of the names passed at construction; callers
/// that want "vertex-id order" to mean lexicographic order sort first (the
/// JSON reader does). Self-loops are rejected, and isolated vertices are
/// rejected unless `allow_isolated` is set.
class FiniteGraph {
 public:
  using Options = GraphOptions;

  FiniteGraph() = default;

  static FiniteGraph from_indexed(std::vector<std::string> names,
                                  std::span<const Edge> edges,
                                  Options options = {});
  static FiniteGraph from_named(
      std::vector<std::string> names,
      std::span<const std::pair<std::string, std::string>> edges,
      Options options = {});
  /// Vertices named "0".."n-1".
  static FiniteGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                Options options = {});

  std::size_t order() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex at(std::string_view name) const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool allows_isolated() const { return allow_isolated_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Vertex> by_name_;  // indices sorted by name
  std::size_t edge_count_ = 0;
  bool allow_isolated_ = false;
};

}  // namespace majc
