#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "majc/graph.hpp"
#include "majc/lazy_graph.hpp"

namespace majc {

/// Vertices all of whose neighbours lie in `a`.
VertexSet nbly(const FiniteGraph& g, const VertexSet& a);

struct LazyVertexSet {
  VertexSet vertices;
  bool complete = true;  // false if a budget or an infinite stream cut the search
};

/// Lazy variant for finite `a`. Infinite-degree vertices never qualify.
/// Members of `a` with infinite degree are scanned for `scan_limit`
/// neighbours, and the result is then flagged incomplete.
LazyVertexSet nbly(const LazyGraph& g, const VertexSet& a,
                   std::size_t scan_limit);

enum class Closedness { closed, not_closed, undecided };

struct ClosedCheck {
  Closedness verdict = Closedness::closed;
  std::optional<Vertex> witness;  // some v outside a with d_a(v) = d(v)

  bool closed() const { return verdict == Closedness::closed; }
};

ClosedCheck is_closed(const FiniteGraph& g, const VertexSet& a);
ClosedCheck is_closed(const LazyGraph& g, const VertexSet& a,
                      std::size_t scan_limit);

/// Stage sequence a = A_0, A_{i+1} = A_i + nbly(A_i), up to the fixpoint.
struct ClosureTrace {
  std::vector<VertexSet> stages;
  std::map<Vertex, std::size_t> absorbed_at;
  bool complete = true;
};

struct ClosureResult {
  VertexSet closed;
  ClosureTrace trace;

  /// closure minus the seed set
  VertexSet boundary() const;
};

ClosureResult closure(const FiniteGraph& g, const VertexSet& a);

/// Lazy closure of a finite set. Stops and flags the trace incomplete once
/// the closed set would exceed `budget` vertices, or when a member of
/// infinite degree prevents the stage from being decided.
ClosureResult closure(const LazyGraph& g, const VertexSet& a,
                      std::size_t budget);

/// Boundary vertices in absorption order; within a stage, ascending id.
struct EliminationOrder {
  std::vector<Vertex> order;
  std::vector<std::size_t> stage;  // stage[i] = absorption stage of order[i]
  bool complete = true;
};

EliminationOrder elimination_order(const ClosureResult& result);
EliminationOrder elimination_order(const FiniteGraph& g, const VertexSet& a);

/// Checks N(a_i) within the seed plus the earlier a_j, for every i. Returns
/// the first offending position.
std::optional<std::size_t> first_elimination_violation(
    const FiniteGraph& g, const VertexSet& a, const EliminationOrder& order);

struct BoundaryVerdict {
  Vertex vertex;
  bool pass;  // every neighbour lies in the closure
};

struct BoundaryDegreeReport {
  std::vector<BoundaryVerdict> verdicts;
  bool all_pass = true;
};

BoundaryDegreeReport boundary_degree_check(const FiniteGraph& g,
                                           const VertexSet& a);
BoundaryDegreeReport boundary_degree_check(const FiniteGraph& g,
                                           const ClosureResult& result);

}  // namespace majc
