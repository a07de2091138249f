#include "majc/disjoint_refinement.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "majc/error.hpp"

namespace majc {

LazySetFamily LazySetFamily::of(std::vector<LazySet> sets) {
  LazySetFamily f;
  f.size = sets.size();
  f.member = [sets = std::move(sets)](std::size_t i) { return sets.at(i); };
  return f;
}

namespace {

std::size_t cantor_first(std::size_t t) {
  auto w = static_cast<std::size_t>(
      (std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > t) --w;
  while ((w + 1) * (w + 2) / 2 <= t) ++w;
  std::size_t y = t - w * (w + 1) / 2;
  return w - y;
}

}  // namespace

DisjointRefinement::DisjointRefinement(LazySetFamily family,
                                       std::uint64_t schedule_seed,
                                       std::size_t stall_limit)
    : family_(std::move(family)), stall_limit_(stall_limit) {
  if (family_.size) {
    if (*family_.size == 0)
      throw Error(ErrorCode::invalid_argument, "empty family");
    permutation_.resize(*family_.size);
    std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
    // Fisher-Yates with an explicit engine so the order is portable.
    std::mt19937_64 rng(schedule_seed);
    for (std::size_t i = permutation_.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(permutation_[i - 1], permutation_[j]);
    }
    for (std::size_t i = 0; i < *family_.size; ++i) slot(i);
  }
}

std::size_t DisjointRefinement::schedule(std::size_t t) const {
  if (family_.size) return permutation_[t % permutation_.size()];
  return cantor_first(t);
}

DisjointRefinement::Slot& DisjointRefinement::slot(std::size_t i) {
  if (family_.size && i >= *family_.size)
    throw Error(ErrorCode::invalid_argument,
                "index " + std::to_string(i) + " outside the family");
  if (slots_.size() <= i) slots_.resize(i + 1);
  if (!slots_[i]) {
    LazySet s = family_.member(i);
    if (s.declared.is_finite())
      throw Error(ErrorCode::hypothesis_violated,
                  "member " + std::to_string(i) +
                      " is finite; every member must be countably infinite");
    slots_[i] = Slot{std::move(s), 0, {}};
  }
  return *slots_[i];
}

void DisjointRefinement::step() {
  std::size_t i = schedule(steps_);
  Slot& s = slot(i);
  for (std::size_t probes = 0;; ++probes) {
    if (probes >= stall_limit_)
      throw Error(ErrorCode::stalled_stream,
                  "member " + std::to_string(i) + " stalled");
    auto e = s.set.element(s.cursor++);
    if (!e)
      throw Error(ErrorCode::hypothesis_violated,
                  "member " + std::to_string(i) + " ended; it was declared infinite");
    if (used_.insert(*e).second) {
      s.out.push_back(*e);
      break;
    }
  }
  ++steps_;
}

std::vector<Element> DisjointRefinement::prefix(std::size_t i, std::size_t k,
                                                std::size_t step_budget) {
  slot(i);
  std::size_t start = steps_;
  while (slots_[i]->out.size() < k) {
    if (steps_ - start >= step_budget)
      throw Error(ErrorCode::stalled_stream,
                  "prefix of member " + std::to_string(i) +
                      " not delivered within the step budget");
    step();
  }
  return {slots_[i]->out.begin(),
          slots_[i]->out.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace majc
