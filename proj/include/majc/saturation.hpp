#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "majc/card.hpp"
#include "majc/lazy_graph.hpp"

namespace majc {

/// Materialized prefix of an A-saturated superset B* of a seed B.
///
/// Round 0 is B. Round n+1 adds N(b) \ A for every b added in round n; with
/// mu = aleph0 and a countable graph every neighbourhood is small enough to
/// be added whole. Neighbour streams of one round are dovetailed, so an
/// infinite-degree vertex does not starve the others in its round.
struct SaturationResult {
  VertexSet a;
  std::vector<Vertex> members;  // in materialization order
  std::map<Vertex, std::size_t> generation;
  std::size_t rounds = 0;       // rounds whose expansion was started
  bool complete = true;         // false once the vertex budget cut a round

  bool contains(Vertex v) const { return generation.count(v) != 0; }
};

/// Throws invalid_argument for a finite mu (the construction needs an
/// infinite seed cardinality) and budget_exhausted if B alone exceeds the
/// budget. `budget` bounds the number of materialized vertices.
SaturationResult saturate(const LazyGraph& g, const VertexSet& a,
                          const VertexSet& b, Card mu, std::size_t budget);

enum class SaturationVerdict { saturated, violated, unknown };

std::string to_string(SaturationVerdict v);

struct SaturationCheck {
  SaturationVerdict verdict = SaturationVerdict::saturated;
  std::optional<Vertex> witness;
  std::string reason;
  std::uint64_t checked = 0;      // members examined
  std::uint64_t undecided = 0;    // adjacency or membership questions left open
};

/// Both saturation clauses for every member of an explicit finite b_star
/// that has a neighbour outside a + b_star. `horizon` bounds scans of
/// infinite neighbour streams; undecided questions give `unknown`, never
/// `saturated`.
SaturationCheck is_saturated(const LazyGraph& g, const VertexSet& a,
                             const VertexSet& b_star, std::size_t horizon);

/// Same check against the (possibly infinite) set a saturation run
/// describes. Membership of a vertex outside the materialized prefix is
/// certified when one of its neighbours is a materialized member, since
/// every member's neighbourhood minus `a` belongs to B*.
SaturationCheck is_saturated(const LazyGraph& g, const SaturationResult& r,
                             std::size_t horizon);

}  // namespace majc
