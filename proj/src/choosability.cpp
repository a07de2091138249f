#include "majc/choosability.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "majc/error.hpp"
#include "majc/solver.hpp"

namespace majc {

std::vector<std::uint32_t> incidence_signature(const ListSystem& lists,
                                               std::size_t vertices) {
  std::map<Colour, std::uint32_t> incidence;
  for (Vertex v = 0; v < vertices; ++v)
    for (Colour c : lists.at(v)) incidence[c] |= std::uint32_t{1} << v;
  std::vector<std::uint32_t> sig;
  for (const auto& [c, mask] : incidence) sig.push_back(mask);
  std::sort(sig.begin(), sig.end());
  return sig;
}

namespace {

// Colours are introduced in order of first use: vertex i picks j colours
// among those already used and ell - j fresh ones, which are always the
// next unused labels. Every renaming class has a representative of this
// shape.
void extend_systems(std::size_t vertex, std::size_t vertices, std::size_t ell,
                    std::size_t palette, std::size_t used,
                    std::vector<ColourList>& partial,
                    std::set<std::vector<std::uint32_t>>& seen,
                    std::vector<ListSystem>& out) {
  if (vertex == vertices) {
    ListSystem lists;
    for (Vertex v = 0; v < vertices; ++v) lists.set(v, partial[v]);
    if (seen.insert(incidence_signature(lists, vertices)).second)
      out.push_back(std::move(lists));
    return;
  }
  for (std::size_t old = std::min(ell, used) + 1; old-- > 0;) {
    std::size_t fresh = ell - old;
    if (used + fresh > palette) continue;
    // every `old`-subset of the used colours
    std::vector<bool> mask(used, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(old), true);
    do {
      ColourList list;
      for (std::size_t c = 0; c < used; ++c)
        if (mask[c]) list.push_back(static_cast<Colour>(c));
      for (std::size_t f = 0; f < fresh; ++f)
        list.push_back(static_cast<Colour>(used + f));
      partial[vertex] = list;
      extend_systems(vertex + 1, vertices, ell, palette, used + fresh, partial,
                     seen, out);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

ListSystem random_system(std::size_t vertices, std::size_t ell,
                         std::size_t palette, std::mt19937_64& rng) {
  ListSystem lists;
  std::vector<Colour> pool(palette);
  std::iota(pool.begin(), pool.end(), Colour{0});
  for (Vertex v = 0; v < vertices; ++v) {
    // partial Fisher-Yates with an explicit modulus, for portable draws
    for (std::size_t i = 0; i < ell; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng() % (palette - i));
      std::swap(pool[i], pool[j]);
    }
    lists.set(v, {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(ell)});
  }
  return lists;
}

}  // namespace

std::vector<ListSystem> canonical_list_systems(std::size_t vertices,
                                               std::size_t ell,
                                               std::size_t palette) {
  if (ell == 0 || ell > palette)
    throw Error(ErrorCode::invalid_argument, "need 1 <= ell <= palette");
  if (vertices > 32)
    throw Error(ErrorCode::guard_exceeded, "at most 32 vertices");
  std::vector<ColourList> partial(vertices);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<ListSystem> out;
  extend_systems(0, vertices, ell, palette, 0, partial, seen, out);
  return out;
}

ChoosabilityVerdict majority_choosable_oracle(const FiniteGraph& g,
                                              std::size_t ell,
                                              std::size_t palette,
                                              const OracleOptions& options) {
  const std::size_t n = g.order();
  std::vector<ListSystem> systems;
  if (options.mode == OracleMode::exhaustive) {
    if (n > 4)
      throw Error(ErrorCode::guard_exceeded,
                  "exhaustive mode is limited to 4 vertices");
    systems = canonical_list_systems(n, ell, palette);
  } else {
    if (n > 10)
      throw Error(ErrorCode::guard_exceeded,
                  "sampled mode is limited to 10 vertices");
    if (ell == 0 || ell > palette)
      throw Error(ErrorCode::invalid_argument, "need 1 <= ell <= palette");
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i)
      systems.push_back(random_system(n, ell, palette, rng));
  }

  std::vector<char> ok(systems.size(), 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      ok[i] = exists_majority_list_colouring(g, systems[i]).has_value() ? 1 : 0;
  };
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1 || systems.size() < 2) {
    work(0, systems.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (systems.size() + threads - 1) / threads;
    for (std::size_t b = 0; b < systems.size(); b += chunk)
      pool.emplace_back(work, b, std::min(systems.size(), b + chunk));
  }

  ChoosabilityVerdict verdict;
  verdict.systems_checked = systems.size();
  for (std::size_t i = 0; i < systems.size(); ++i) {
    if (!ok[i]) {
      verdict.choosable = false;
      verdict.failing = systems[i];
      break;
    }
  }
  return verdict;
}

std::vector<FiniteGraph> connected_graphs(std::size_t n) {
  if (n == 0 || n > 6)
    throw Error(ErrorCode::invalid_argument, "connected_graphs supports 1..6");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);

  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto slot_of = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    // position of (u, v) in the row-major upper triangle
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };

  std::set<std::uint32_t> seen;
  std::vector<FiniteGraph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    // connectivity by flood fill
    std::vector<bool> reached(n, false);
    std::vector<Vertex> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v = 0; v < n; ++v)
        if (v != u && !reached[v] && (mask >> slot_of(u, v) & 1U)) {
          reached[v] = true;
          stack.push_back(v);
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) continue;

    std::uint32_t canon = mask;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1U)
          image |= std::uint32_t{1} << slot_of(perm[slots[s].first], perm[slots[s].second]);
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;

    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) edges.push_back(slots[s]);
    out.push_back(FiniteGraph::from_edges(n, edges, {.allow_isolated = n == 1}));
  }
  return out;
}

}  // namespace majc
