#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "majc/card.hpp"
#include "majc/colouring.hpp"
#include "majc/disjoint_refinement.hpp"
#include "majc/graph.hpp"

namespace majc {

struct BPrimeEntry {
  Vertex b;
  Card boundary_neighbours;  // |N(b) n boundary|
  Card inside_neighbours;    // |N(b) n (A u B*)|
  bool included;
};

/// B' = { b in B* : |N(b) n boundary| > |N(b) n (A u B*)| }, where the
/// boundary is closure(A u B*) minus A u B*.
struct BPrime {
  VertexSet members;
  std::vector<BPrimeEntry> entries;
  VertexSet closure;
  VertexSet boundary;
};

BPrime compute_B_prime(const FiniteGraph& g, const VertexSet& a,
                       const VertexSet& b_star);

/// Witness that no disjoint family meets the requirements: the listed
/// vertices need `demand` boundary vertices in total but only
/// `neighbourhood` is available to them.
struct HallCertificate {
  VertexSet deficient;
  VertexSet neighbourhood;
  std::size_t demand = 0;
};

struct FFamily {
  std::map<Vertex, std::vector<Vertex>> sets;  // F_b, ascending
  std::map<Vertex, std::size_t> required;
  bool meets_requirements = true;
  std::optional<HallCertificate> hall;

  /// Owner b of boundary vertex z, if z is in some F_b.
  std::optional<Vertex> owner(Vertex z) const;
};

/// Pairwise disjoint F_b within N(b) n boundary. A max-flow first tries to
/// give every b its `required` count (a Hall certificate is attached when
/// that is impossible); the remaining boundary vertices are then handed
/// out one at a time to the currently smallest F_b.
FFamily build_F_family(const FiniteGraph& g, const VertexSet& b_prime,
                       const VertexSet& boundary,
                       const std::map<Vertex, std::size_t>& required);

/// Default requirement: ceil(|N(b) n closure| / 2). If every F_b vertex gets
/// a colour different from b, this many already make b happy.
std::map<Vertex, std::size_t> half_closure_requirement(const FiniteGraph& g,
                                                       const BPrime& bp);

/// Countable-scale F family: disjoint prefixes of length k of the given
/// boundary neighbourhood streams.
std::vector<std::vector<Element>> f_family_prefixes(LazySetFamily streams,
                                                    std::size_t k,
                                                    std::uint64_t seed);

struct ExtensionPlan {
  FiniteGraph graph;
  PartialColouring base;      // h on A u B*
  std::vector<Vertex> order;  // elimination order of the boundary
  FFamily family;
  ListSystem lists;           // three colours on every boundary vertex
};

/// Closure, elimination order, B' and F family for a base colouring whose
/// domain is A u B*. Throws if the family is not pairwise disjoint.
ExtensionPlan make_plan(const FiniteGraph& g, const VertexSet& a,
                        const PartialColouring& base, const ListSystem& lists);

struct ExtensionStep {
  Vertex z;
  ColourList safe;
  std::optional<Colour> avoided;  // g(b) when z is in F_b
  Colour chosen;
};

struct BPrimeAudit {
  Vertex b;
  std::size_t f_size;
  std::size_t closure_degree;
  bool sufficient;  // 2 |F_b| >= |N(b) n closure|
  bool happy;
};

struct ExtensionResult {
  PartialColouring colouring;
  std::vector<ExtensionStep> steps;
  bool boundary_happy = true;
  std::vector<BPrimeAudit> b_prime;
  bool audited_b_prime_happy = true;  // over the sufficient entries
};

/// Colours the boundary in elimination order. At each z the safe colours
/// are those c in L(z) with (neighbours coloured c) <= (neighbours coloured
/// otherwise); at most one colour can fail that, so a 3-list keeps two.
/// Picks the lowest safe colour, skipping g(b) when z is in F_b.
ExtensionResult extend_over_boundary(const ExtensionPlan& plan);

}  // namespace majc
