#include "majc/solver.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "majc/error.hpp"
#include "majc/happiness.hpp"

namespace majc {

ColourList SolveInstance::effective_list(Vertex v) const {
  ColourList list = free_lists.at(v);
  if (b1 && cx && *b1 == v) std::erase(list, *cx);
  return list;
}

void validate(const SolveInstance& instance, std::size_t min_list) {
  const FiniteGraph& g = instance.graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool frozen = instance.frozen.contains(v);
    bool free = instance.free_lists.count(v) != 0;
    if (frozen == free)
      throw Error(ErrorCode::invalid_argument,
                  "vertex '" + g.name(v) + "' must be exactly one of frozen or free");
  }
  for (const auto& [v, c] : instance.frozen)
    if (v >= g.order())
      throw Error(ErrorCode::invalid_argument, "frozen vertex out of range");
  if (instance.b1 && !instance.free_lists.count(*instance.b1))
    throw Error(ErrorCode::invalid_argument, "b1 must be a free vertex");
  for (const auto& [v, list] : instance.free_lists) {
    if (v >= g.order())
      throw Error(ErrorCode::invalid_argument, "free vertex out of range");
    std::size_t size = instance.effective_list(v).size();
    if (size < std::max<std::size_t>(min_list, 1))
      throw Error(ErrorCode::hypothesis_violated,
                  "free vertex '" + g.name(v) + "' keeps " +
                      std::to_string(size) + " colour(s), needs " +
                      std::to_string(std::max<std::size_t>(min_list, 1)));
  }
}

namespace {

struct Workspace {
  std::vector<Colour> colour;
  std::vector<Vertex> free;
  std::vector<ColourList> lists;  // parallel to free
};

Workspace prepare(const SolveInstance& instance) {
  Workspace w;
  w.colour.assign(instance.graph.order(), 0);
  for (const auto& [v, c] : instance.frozen) w.colour[v] = c;
  for (const auto& [v, list] : instance.free_lists) {
    w.free.push_back(v);
    w.lists.push_back(instance.effective_list(v));
  }
  return w;
}

std::uint64_t count_cross(const FiniteGraph& g, const std::vector<Colour>& col) {
  std::uint64_t n = 0;
  for (auto [u, v] : g.edges())
    if (col[u] != col[v]) ++n;
  return n;
}

std::uint64_t neighbours_with(const FiniteGraph& g, const std::vector<Colour>& col,
                              Vertex v, Colour c) {
  std::uint64_t n = 0;
  for (Vertex w : g.neighbours(v))
    if (col[w] == c) ++n;
  return n;
}

PartialColouring to_colouring(const std::vector<Colour>& col) {
  PartialColouring out;
  for (Vertex v = 0; v < col.size(); ++v) out.set(v, col[v]);
  return out;
}

}  // namespace

SolveResult solve_finite(const SolveInstance& instance) {
  validate(instance, 2);
  const FiniteGraph& g = instance.graph;
  Workspace w = prepare(instance);
  for (std::size_t i = 0; i < w.free.size(); ++i) w.colour[w.free[i]] = w.lists[i].front();

  SolveResult r;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < w.free.size(); ++i) {
      Vertex v = w.free[i];
      const std::uint64_t same = neighbours_with(g, w.colour, v, w.colour[v]);
      for (Colour c : w.lists[i]) {
        if (c == w.colour[v]) continue;
        if (neighbours_with(g, w.colour, v, c) < same) {
          w.colour[v] = c;
          ++r.iterations;
          improved = true;
          break;
        }
      }
    }
  }

  r.colouring = to_colouring(w.colour);
  r.objective = count_cross(g, w.colour);
  r.locally_optimal = true;
  SolveAudit a = audit(instance, r);
  MAJC_CHECK(a.ok(), "local search result failed its audit: " + a.failure);
  return r;
}

SolveResult exhaustive_max_cross(const SolveInstance& instance,
                                 std::uint64_t guard) {
  validate(instance, 1);
  const FiniteGraph& g = instance.graph;
  Workspace w = prepare(instance);

  std::uint64_t total = 1;
  for (const auto& list : w.lists) {
    if (total > guard / list.size())
      throw Error(ErrorCode::guard_exceeded,
                  "more than " + std::to_string(guard) + " assignments");
    total *= list.size();
  }

  std::vector<std::size_t> digit(w.free.size(), 0);
  std::vector<Colour> best;
  std::uint64_t best_value = 0;
  bool have = false;
  // Odometer with the first free vertex as the most significant digit, so
  // assignments come in lexicographic order and the first maximum is kept.
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < w.free.size(); ++i)
      w.colour[w.free[i]] = w.lists[i][digit[i]];
    std::uint64_t value = count_cross(g, w.colour);
    if (!have || value > best_value) {
      best = w.colour;
      best_value = value;
      have = true;
    }
    for (std::size_t i = w.free.size(); i-- > 0;) {
      if (++digit[i] < w.lists[i].size()) break;
      digit[i] = 0;
    }
  }

  SolveResult r;
  r.colouring = to_colouring(best);
  r.objective = best_value;
  r.iterations = total;
  r.locally_optimal = audit(instance, r).locally_optimal;
  return r;
}

SolveAudit audit(const SolveInstance& instance, const SolveResult& result) {
  SolveAudit a;
  const FiniteGraph& g = instance.graph;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) a.failure += (a.failure.empty() ? "" : "; ") + why;
    flag = false;
  };
  for (Vertex v = 0; v < g.order(); ++v)
    if (!result.colouring.contains(v)) {
      fail(a.agrees_with_frozen, "colouring is not total");
      return a;
    }

  for (const auto& [v, c] : instance.frozen)
    if (result.colouring.at(v) != c)
      fail(a.agrees_with_frozen, "frozen vertex '" + g.name(v) + "' recoloured");

  std::vector<Colour> col(g.order());
  for (Vertex v = 0; v < g.order(); ++v) col[v] = result.colouring.at(v);

  for (const auto& [v, list] : instance.free_lists) {
    if (!list_contains(list, col[v]))
      fail(a.respects_sublists, "vertex '" + g.name(v) + "' leaves its sublist");
    if (happiness_status(g, result.colouring, v).verdict != Happiness::happy)
      fail(a.free_vertices_happy, "vertex '" + g.name(v) + "' is unhappy");
    const std::uint64_t same = neighbours_with(g, col, v, col[v]);
    for (Colour c : instance.effective_list(v))
      if (c != col[v] && neighbours_with(g, col, v, c) < same)
        fail(a.locally_optimal, "vertex '" + g.name(v) + "' has an improving move");
  }
  if (instance.b1 && instance.cx && col[*instance.b1] == *instance.cx)
    fail(a.avoids_cx, "b1 received the forbidden colour");
  if (result.objective != count_cross(g, col))
    fail(a.agrees_with_frozen, "reported objective does not match the colouring");
  return a;
}

std::optional<PartialColouring> exists_majority_list_colouring(
    const FiniteGraph& g, const ListSystem& lists, std::uint64_t guard) {
  const std::size_t n = g.order();
  std::uint64_t total = 1;
  std::vector<ColourList> list(n);
  for (Vertex v = 0; v < n; ++v) {
    list[v] = lists.at(v);
    if (total > guard / list[v].size())
      throw Error(ErrorCode::guard_exceeded,
                  "more than " + std::to_string(guard) + " colourings");
    total *= list[v].size();
  }

  // A vertex's happiness is decided once it and all its neighbours are
  // coloured, i.e. at step max(v, max neighbour).
  std::vector<std::vector<Vertex>> settle(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex last = v;
    for (Vertex w : g.neighbours(v)) last = std::max(last, w);
    settle[last].push_back(v);
  }

  std::vector<Colour> col(n, 0);
  auto happy = [&](Vertex v) {
    std::size_t same = 0, diff = 0;
    for (Vertex w : g.neighbours(v)) (col[w] == col[v] ? same : diff)++;
    return same <= diff;
  };

  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  if (n == 0) return PartialColouring{};
  // Iterative backtracking in vertex order.
  while (true) {
    if (choice[depth] < list[depth].size()) {
      col[depth] = list[depth][choice[depth]];
      bool ok = std::all_of(settle[depth].begin(), settle[depth].end(), happy);
      if (ok && depth + 1 == n) {
        PartialColouring out;
        for (Vertex v = 0; v < n; ++v) out.set(v, col[v]);
        return out;
      }
      if (ok) {
        ++depth;
        choice[depth] = 0;
      } else {
        ++choice[depth];
      }
    } else {
      if (depth == 0) return std::nullopt;
      --depth;
      ++choice[depth];
    }
  }
}

}  // namespace majc
