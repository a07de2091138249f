#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "majc/card.hpp"

namespace majc {

using Element = std::uint64_t;

/// Duplicate-free stream; element(k) is the k-th element, or nullopt past
/// the end of a finite set.
struct LazySet {
  Card declared = Card::aleph0();
  std::function<std::optional<Element>(std::size_t)> element;
};

/// Family indexed by a finite or countably infinite set I.
struct LazySetFamily {
  std::function<LazySet(std::size_t)> member;
  std::optional<std::size_t> size;  // nullopt: I is countably infinite

  static LazySetFamily of(std::vector<LazySet> sets);
};

/// Pairwise disjoint B_i within A_i, each of the same (infinite) size.
///
/// A schedule f visits every index infinitely often; step t appends to
/// B_{f(t)} the first element of A_{f(t)} not used by any earlier step. For
/// finite I the schedule is a seeded permutation repeated round-robin, for
/// infinite I it reads the first coordinate of the Cantor unpairing of t.
class DisjointRefinement {
 public:
  /// Throws hypothesis_violated if a member declares a finite cardinality.
  DisjointRefinement(LazySetFamily family, std::uint64_t schedule_seed,
                     std::size_t stall_limit = std::size_t{1} << 20);

  /// First k elements of B_i, running the schedule as far as needed. Throws
  /// stalled_stream if more than `step_budget` further steps are needed or
  /// a single step probes more than the stall limit.
  std::vector<Element> prefix(std::size_t i, std::size_t k,
                              std::size_t step_budget);

  std::size_t steps() const { return steps_; }
  std::size_t schedule(std::size_t t) const;

 private:
  struct Slot {
    LazySet set;
    std::size_t cursor = 0;
    std::vector<Element> out;
  };

  Slot& slot(std::size_t i);
  void step();

  LazySetFamily family_;
  std::vector<std::size_t> permutation_;
  std::size_t stall_limit_;
  std::vector<std::optional<Slot>> slots_;
  std::unordered_set<Element> used_;
  std::size_t steps_ = 0;
};

}  // namespace majc
