#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majc/card.hpp"
#include "majc/graph.hpp"

namespace majc {

/// Oracle-backed graph on a finite or countably infinite vertex set.
///
/// Vertex k is the k-th vertex of the enumeration. Implementations must be
/// pure: every query depends only on the generator parameters and its
/// arguments. Neighbour streams have a fixed order; a vertex of degree
/// aleph0 has a non-terminating stream, and a vertex of finite degree d has
/// a stream of exactly d entries.
class LazyGraph {
 public:
  virtual ~LazyGraph() = default;

  /// Number of vertices, or nullopt for a countably infinite vertex set.
  virtual std::optional<std::size_t> order() const = 0;
  virtual Card degree(Vertex v) const = 0;
  /// The first min(limit, degree) entries of the neighbour stream of v.
  virtual std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const = 0;
  virtual std::string name(Vertex v) const = 0;
  virtual std::optional<Vertex> find(std::string_view name) const = 0;

  bool contains(Vertex v) const {
    auto n = order();
    return !n || v < *n;
  }
  Vertex at(std::string_view name) const;
};

/// A finite graph viewed through the lazy interface.
class FiniteLazyGraph final : public LazyGraph {
 public:
  explicit FiniteLazyGraph(FiniteGraph graph) : graph_(std::move(graph)) {}

  std::optional<std::size_t> order() const override { return graph_.order(); }
  Card degree(Vertex v) const override { return Card::finite(graph_.degree(v)); }
  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override;
  std::string name(Vertex v) const override { return graph_.name(v); }
  std::optional<Vertex> find(std::string_view name) const override {
    return graph_.find(name);
  }

  const FiniteGraph& graph() const { return graph_; }

 private:
  FiniteGraph graph_;
};

/// Whole neighbourhood of a finite-degree vertex; throws horizon_required
/// for a vertex of degree aleph0.
std::vector<Vertex> full_neighbourhood(const LazyGraph& g, Vertex v);

/// Adjacency decided from the neighbour streams. Exact whenever either end
/// has finite degree; for two infinite-degree vertices both streams are
/// scanned up to `horizon` and nullopt is returned if neither hit.
std::optional<bool> adjacent(const LazyGraph& g, Vertex u, Vertex v,
                             std::size_t horizon);

struct InducedSubgraph {
  FiniteGraph graph;            // vertex i of graph is source[i]
  std::vector<Vertex> source;   // sorted by enumeration index
  bool truncated = false;       // some pair of infinite-degree members undecided
};

/// Subgraph induced by a finite vertex set. Members of degree aleph0 need a
/// horizon; edges between two such members are found only within it.
InducedSubgraph induced_finite_subgraph(const LazyGraph& g,
                                        const VertexSet& vertices,
                                        std::optional<std::size_t> horizon = {});

}  // namespace majc
