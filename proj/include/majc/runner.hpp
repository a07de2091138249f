#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "majc/colouring.hpp"
#include "majc/lazy_graph.hpp"
#include "majc/solver.hpp"
#include "majc/sublists.hpp"

namespace majc {

/// Enumeration b_1 = x, b_2, ... of B = V \ A. Breadth-first from x through
/// all of V, emitting only B; a vertex of infinite degree yields one
/// neighbour per visit and is then queued again, so it cannot block the
/// search. When the queue empties the next unseen vertex of the global
/// enumeration is taken. Exhaustive on connected graphs.
class BEnumeration {
 public:
  BEnumeration(std::shared_ptr<const LazyGraph> graph, VertexSet a, Vertex x);

  /// b_{i+1}; extends the enumeration as needed. Throws hypothesis_violated
  /// if B turns out to be finite.
  Vertex at(std::size_t i);
  /// Position of v if it has been enumerated already.
  std::optional<std::size_t> position(Vertex v) const;
  std::size_t size() const { return order_.size(); }

 private:
  void emit(Vertex v);
  void grow();

  std::shared_ptr<const LazyGraph> graph_;
  VertexSet a_;
  std::vector<Vertex> order_;
  std::map<Vertex, std::size_t> position_;
  VertexSet seen_;
  std::vector<std::pair<Vertex, std::size_t>> queue_;  // (vertex, next neighbour)
  std::size_t head_ = 0;
  std::size_t global_cursor_ = 0;
};

struct RunConfig {
  std::shared_ptr<const LazyGraph> graph;
  VertexSet a;                    // finite; checked for closedness
  std::optional<PartialColouring> h;  // colouring of A; default: lowest colours
  ListSystem lists;               // three colours per vertex
  Vertex x = 0;
  Colour cx = 1;
  std::size_t horizon = 500;      // number N of finite instances
  std::size_t prefix = 50;        // k vertices to certify
  std::optional<std::size_t> sublist_horizon;  // default 2N
  std::size_t scan_horizon = 4096;  // prefix length read from infinite streams
  std::optional<std::size_t> compare_horizon;  // second run for the stability report
  unsigned threads = 1;
  std::uint64_t seed = 0;         // recorded; generators consume their own seed
};

/// Throws invalid_argument or hypothesis_violated, naming the broken
/// hypothesis.
void validate(const RunConfig& config);

struct PreparedRun {
  std::vector<Vertex> b_order;           // b_1..b_N
  PartialColouring h;
  SublistTable sublists;
  std::vector<Vertex> family_centres;    // X_i = N(c_i) n B, i >= 1
  std::vector<SolveInstance> instances;  // instances[n-1] is G_n
  std::vector<std::vector<Vertex>> sources;  // local -> global per instance
  bool truncated = false;                // some G_n missed an undecidable pair
};

/// Enumerates B, selects the 2-element sublists and builds G_1..G_N.
PreparedRun build_instances(const RunConfig& config);

struct DiagonalExtraction {
  std::vector<Colour> prefix;
  std::vector<std::size_t> survivors;  // |S| after each step
};

/// colourings[n-1][j] = g_n(b_{j+1}) for j < min(n, k). At step j the
/// surviving instances that colour b_j vote; the colour whose supporters
/// include the largest instance index wins (ties: more supporters, then the
/// lower colour) and the survivors shrink to its supporters.
DiagonalExtraction diagonal_extract(
    const std::vector<std::vector<Colour>>& colourings, std::size_t k);

enum class CertVerdict { happy_certified, unhappy, pending };

std::string_view to_string(CertVerdict v);

struct VertexVerdict {
  Vertex vertex;
  CertVerdict verdict;
  std::uint64_t same = 0;
  std::uint64_t diff = 0;
  std::optional<std::uint64_t> opposite_witnesses;  // certified, infinite degree only
};

/// Exact verdicts for prefix vertices of finite degree whose neighbours are
/// all coloured; pending with counters for everything else.
std::vector<VertexVerdict> certify(
    const LazyGraph& g, const PartialColouring& colouring,
    const std::vector<Vertex>& prefix, std::size_t horizon,
    const std::map<Vertex, std::uint64_t>& opposite_witnesses = {});

struct StabilityReport {
  std::size_t compare_horizon = 0;
  bool prefix_identical = true;
  std::optional<std::size_t> first_divergence;  // 0-based prefix position
  bool counters_monotone = true;
};

struct PrefixCertificate {
  static constexpr int kVersion = 1;

  std::vector<Vertex> prefix;       // b_1..b_k
  PartialColouring colouring;       // h plus the prefix
  std::map<Vertex, ColourList> sublists;  // L'(b) for the prefix
  std::vector<VertexVerdict> verdicts;
  std::vector<std::size_t> survivors;
  std::vector<std::size_t> instance_orders;  // |V(G_n)|
  bool gx_differs_from_cx = false;
  std::size_t instances_audited = 0;
  bool truncated = false;
  std::optional<StabilityReport> stability;
};

/// Sublists, instances, N solves (each audited), diagonal extraction and
/// certification of the prefix.
PrefixCertificate run_prefix(const RunConfig& config);

}  // namespace majc
