#include "majc/closure.hpp"

#include <algorithm>
#include <iterator>

#include "majc/error.hpp"

namespace majc {

namespace {

bool all_inside(std::span<const Vertex> nbrs, const VertexSet& a) {
  return std::all_of(nbrs.begin(), nbrs.end(),
                     [&](Vertex w) { return a.count(w) != 0; });
}

void require_members(const FiniteGraph& g, const VertexSet& a) {
  if (!a.empty() && *a.rbegin() >= g.order())
    throw Error(ErrorCode::unknown_vertex, "vertex set names a vertex out of range");
}

}  // namespace

VertexSet nbly(const FiniteGraph& g, const VertexSet& a) {
  require_members(g, a);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (all_inside(g.neighbours(v), a)) out.insert(out.end(), v);
  return out;
}

LazyVertexSet nbly(const LazyGraph& g, const VertexSet& a,
                   std::size_t scan_limit) {
  LazyVertexSet out;
  auto qualifies = [&](Vertex v) {
    Card d = g.degree(v);
    if (d.is_aleph0()) return false;
    auto nbrs = g.neighbours(v, d.value());
    return all_inside(nbrs, a);
  };

  if (auto n = g.order()) {
    for (Vertex v = 0; v < *n; ++v)
      if (qualifies(v)) out.vertices.insert(out.vertices.end(), v);
    return out;
  }

  VertexSet candidates = a;
  for (Vertex m : a) {
    Card d = g.degree(m);
    std::size_t limit = d.is_finite() ? d.value() : scan_limit;
    if (d.is_aleph0()) out.complete = false;
    for (Vertex w : g.neighbours(m, limit)) candidates.insert(w);
  }
  for (Vertex v : candidates)
    if (qualifies(v)) out.vertices.insert(v);
  return out;
}

ClosedCheck is_closed(const FiniteGraph& g, const VertexSet& a) {
  for (Vertex v : nbly(g, a))
    if (!a.count(v)) return {Closedness::not_closed, v};
  return {};
}

ClosedCheck is_closed(const LazyGraph& g, const VertexSet& a,
                      std::size_t scan_limit) {
  LazyVertexSet n = nbly(g, a, scan_limit);
  for (Vertex v : n.vertices)
    if (!a.count(v)) return {Closedness::not_closed, v};
  return {n.complete ? Closedness::closed : Closedness::undecided, std::nullopt};
}

VertexSet ClosureResult::boundary() const {
  VertexSet out;
  const VertexSet& seed = trace.stages.front();
  std::set_difference(closed.begin(), closed.end(), seed.begin(), seed.end(),
                      std::inserter(out, out.end()));
  return out;
}

ClosureResult closure(const FiniteGraph& g, const VertexSet& a) {
  require_members(g, a);
  ClosureResult r;
  r.closed = a;
  r.trace.stages.push_back(a);
  for (Vertex v : a) r.trace.absorbed_at[v] = 0;
  while (true) {
    VertexSet fresh;
    for (Vertex v : nbly(g, r.closed))
      if (!r.closed.count(v)) fresh.insert(v);
    if (fresh.empty()) break;
    std::size_t stage = r.trace.stages.size();
    for (Vertex v : fresh) {
      r.closed.insert(v);
      r.trace.absorbed_at[v] = stage;
    }
    r.trace.stages.push_back(r.closed);
  }
  return r;
}

ClosureResult closure(const LazyGraph& g, const VertexSet& a,
                      std::size_t budget) {
  if (a.size() > budget)
    throw Error(ErrorCode::budget_exhausted,
                "seed set is larger than the vertex budget");
  ClosureResult r;
  r.closed = a;
  r.trace.stages.push_back(a);
  for (Vertex v : a) r.trace.absorbed_at[v] = 0;
  while (true) {
    LazyVertexSet next = nbly(g, r.closed, budget);
    if (!next.complete) r.trace.complete = false;
    VertexSet fresh;
    for (Vertex v : next.vertices)
      if (!r.closed.count(v)) fresh.insert(v);
    if (fresh.empty()) break;
    if (r.closed.size() + fresh.size() > budget) {
      r.trace.complete = false;
      break;
    }
    std::size_t stage = r.trace.stages.size();
    for (Vertex v : fresh) {
      r.closed.insert(v);
      r.trace.absorbed_at[v] = stage;
    }
    r.trace.stages.push_back(r.closed);
  }
  return r;
}

EliminationOrder elimination_order(const ClosureResult& result) {
  EliminationOrder out;
  out.complete = result.trace.complete;
  const auto& stages = result.trace.stages;
  for (std::size_t s = 1; s < stages.size(); ++s) {
    // std::set iterates in ascending id order, which fixes the tie-break.
    for (Vertex v : stages[s]) {
      if (stages[s - 1].count(v)) continue;
      out.order.push_back(v);
      out.stage.push_back(s);
    }
  }
  return out;
}

EliminationOrder elimination_order(const FiniteGraph& g, const VertexSet& a) {
  return elimination_order(closure(g, a));
}

std::optional<std::size_t> first_elimination_violation(
    const FiniteGraph& g, const VertexSet& a, const EliminationOrder& order) {
  VertexSet seen = a;
  for (std::size_t i = 0; i < order.order.size(); ++i) {
    Vertex v = order.order[i];
    if (!all_inside(g.neighbours(v), seen)) return i;
    seen.insert(v);
  }
  return std::nullopt;
}

BoundaryDegreeReport boundary_degree_check(const FiniteGraph& g,
                                           const ClosureResult& result) {
  BoundaryDegreeReport report;
  for (Vertex v : result.boundary()) {
    bool pass = all_inside(g.neighbours(v), result.closed);
    report.verdicts.push_back({v, pass});
    report.all_pass = report.all_pass && pass;
  }
  return report;
}

BoundaryDegreeReport boundary_degree_check(const FiniteGraph& g,
                                           const VertexSet& a) {
  return boundary_degree_check(g, closure(g, a));
}

}  // namespace majc
