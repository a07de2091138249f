#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "majc/colouring.hpp"
#include "majc/graph.hpp"

namespace majc {

/// An infinite subset X of V, given by a membership test.
struct TrackedSet {
  std::string name;
  std::function<bool(Vertex)> contains;
};

struct SublistRequest {
  /// Enumeration of V; position 0 must be x.
  std::function<Vertex(std::size_t)> vertex_at;
  /// The sets X. The whole of V is inserted in front as set 0.
  std::vector<TrackedSet> family;
  ListSystem lists;  // every list has ell + 1 colours
  Vertex x = 0;
  Colour cx = 0;
  std::size_t ell = 2;
  /// Positions of V a single choice may scan before the stream is declared
  /// stalled.
  std::size_t scan_limit = std::size_t{1} << 20;
};

struct SublistLogEntry {
  std::size_t set_index;
  Colour colour;
  std::size_t n;       // 1-based repetition index of the pair
  Vertex vertex;       // minimal unchosen member of the set
  bool struck;         // colour was in L(vertex) and got removed
};

/// Horizon-stamped result: L'(v) for processed vertices, the default rule
/// (drop the largest colour) for the rest.
class SublistTable {
 public:
  std::size_t horizon() const { return log_.size(); }
  std::size_t ell() const { return ell_; }
  const std::vector<SublistLogEntry>& log() const { return log_; }
  const std::vector<std::string>& set_names() const { return set_names_; }
  const ColourList& colours() const { return colours_; }
  const ListSystem& base() const { return base_; }

  ColourList sublist(Vertex v) const;
  bool chosen(Vertex v) const { return derived_.count(v) != 0; }

  /// Logged vertices of set X whose sublist misses c. Throws invalid_argument
  /// for an unknown (X, c) pair.
  std::size_t coverage_counter(std::size_t set_index, Colour c) const;

 private:
  friend class SublistEngine;

  ListSystem base_;
  std::size_t ell_ = 2;
  ColourList colours_;
  std::vector<std::string> set_names_;
  std::vector<SublistLogEntry> log_;
  std::unordered_map<Vertex, ColourList> derived_;
  // membership_[i][s]: logged vertex of entry i lies in set s
  std::vector<std::vector<bool>> membership_;
};

/// Incremental sublist selection. Triples (X, c, n) are enumerated with
/// (V, cx, 1) first, then along the diagonals of (set index, colour index,
/// n - 1); each triple picks the earliest vertex of X in the enumeration of
/// V not chosen before and strikes c from its list when present.
class SublistEngine {
 public:
  explicit SublistEngine(SublistRequest request);

  /// Processes triples until the table's horizon is `horizon`.
  const SublistTable& advance_to(std::size_t horizon);
  const SublistTable& table() const { return table_; }

  /// Smallest horizon (advancing as needed, up to max_horizon) at which the
  /// counter of (X, c) reaches m.
  std::optional<std::size_t> horizon_for_coverage(std::size_t set_index,
                                                  Colour c, std::size_t m,
                                                  std::size_t max_horizon);

 private:
  struct Triple {
    std::size_t set_index;
    std::size_t colour_index;
    std::size_t n;
  };

  Triple next_triple();
  void process(const Triple& t);

  SublistRequest request_;
  SublistTable table_;
  std::vector<std::size_t> cursors_;  // per set, first position not yet ruled out
  std::size_t cx_index_ = 0;
  bool forced_done_ = false;
  std::size_t diag_ = 0, diag_x_ = 0, diag_c_ = 0;
};

/// One-shot form: the table at horizon T (T >= 1).
SublistTable select_sublists(SublistRequest request, std::size_t horizon);

}  // namespace majc
