// Independent oracles and corpora shared by the test binaries. Nothing here
// calls into the library's algorithms; only the plain data types are used.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "majc/colouring.hpp"
#include "majc/graph.hpp"
#include "majc/solver.hpp"

namespace testing_support {

using majc::Colour;
using majc::Edge;
using majc::FiniteGraph;
using majc::PartialColouring;
using majc::Vertex;
using majc::VertexSet;

inline std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

/// G(n, p) with every isolated vertex joined to a random other vertex.
inline FiniteGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::set<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace(u, v);
  if (n >= 2) {
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) ++deg[u], ++deg[v];
    for (Vertex u = 0; u < n; ++u)
      if (deg[u] == 0) {
        Vertex v = (u + 1 + draw(rng, n - 1)) % n;
        edges.emplace(std::min(u, v), std::max(u, v));
        ++deg[u], ++deg[v];
      }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return FiniteGraph::from_edges(n, list, {.allow_isolated = n == 1});
}

inline VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng) {
  VertexSet s;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng) < p) s.insert(v);
  return s;
}

/// Adjacency matrix rebuilt from the edge list.
inline std::vector<std::vector<bool>> matrix(const FiniteGraph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// Closedness by definition: no vertex outside S has all neighbours in S.
inline bool closed_by_definition(const std::vector<std::vector<bool>>& m,
                                 std::uint32_t mask) {
  const std::size_t n = m.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (mask >> v & 1U) continue;
    bool all_inside = true;
    for (std::size_t w = 0; w < n; ++w)
      if (m[v][w] && !(mask >> w & 1U)) all_inside = false;
    if (all_inside) return false;
  }
  return true;
}

/// Intersection of all closed supersets of `a`, by enumerating all 2^n
/// subsets. Only for n <= 20.
inline VertexSet brute_force_closure(const FiniteGraph& g, const VertexSet& a) {
  const auto m = matrix(g);
  const std::size_t n = g.order();
  std::uint32_t seed = 0;
  for (Vertex v : a) seed |= std::uint32_t{1} << v;
  std::uint32_t meet = (n == 32) ? ~0U : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
    if ((mask & seed) == seed && closed_by_definition(m, mask)) meet &= mask;
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (meet >> v & 1U) out.insert(v);
  return out;
}

struct Counts {
  std::uint64_t same = 0;
  std::uint64_t diff = 0;
};

/// Recount over the edge list (not the adjacency lists).
inline Counts recount(const FiniteGraph& g, const PartialColouring& c, Vertex v) {
  Counts out;
  const Colour own = c.at(v);
  for (auto [a, b] : g.edges()) {
    Vertex w;
    if (a == v) w = b;
    else if (b == v) w = a;
    else continue;
    if (auto cw = c.get(w)) (*cw == own ? out.same : out.diff)++;
  }
  return out;
}

inline std::uint64_t recount_cross(const FiniteGraph& g, const PartialColouring& c) {
  std::uint64_t n = 0;
  for (auto [a, b] : g.edges()) n += c.at(a) != c.at(b);
  return n;
}

/// Graphs used across closure, elimination and extension tests: 200 seeded
/// graphs with 1..12 vertices and a random seed set each.
struct CorpusEntry {
  FiniteGraph graph;
  VertexSet a;
};

inline std::vector<CorpusEntry> closure_corpus(std::uint64_t seed = 20240611,
                                               std::size_t count = 200) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = 1 + draw(rng, 12);
    double p = 0.15 + 0.5 * static_cast<double>(draw(rng, 100)) / 100.0;
    FiniteGraph g = random_graph(n, p, rng);
    VertexSet a = random_subset(n, 0.3, rng);
    out.push_back({std::move(g), std::move(a)});
  }
  return out;
}

/// Random solver instance: n <= max_n vertices, about 30%
/// frozen, the rest free with 2-element sublists of {1..4}; b1 is a random
/// free vertex whose sublist avoids cx.
inline majc::SolveInstance random_instance(std::mt19937_64& rng, std::size_t max_n = 10) {
  majc::SolveInstance inst;
  std::size_t n = 1 + draw(rng, max_n);
  inst.graph = random_graph(n, 0.2 + 0.5 * static_cast<double>(draw(rng, 100)) / 100.0, rng);
  Vertex b1 = draw(rng, n);
  Colour cx = 1 + static_cast<Colour>(draw(rng, 4));
  for (Vertex v = 0; v < n; ++v) {
    if (v != b1 && draw(rng, 10) < 3) {
      inst.frozen.set(v, 1 + static_cast<Colour>(draw(rng, 4)));
      continue;
    }
    std::vector<Colour> pool;
    for (Colour c = 1; c <= 4; ++c)
      if (v != b1 || c != cx) pool.push_back(c);
    std::shuffle(pool.begin(), pool.end(), rng);
    inst.free_lists[v] = majc::make_list({pool[0], pool[1]});
  }
  inst.b1 = b1;
  inst.cx = cx;
  return inst;
}

struct ExtensionCase {
  FiniteGraph graph;
  VertexSet a;
  PartialColouring base;
  majc::ListSystem lists;
};

/// Closure corpus plus 100 sparse graphs (long boundaries). A comes from
/// the corpus, B* is a random part of the rest, the base colouring is drawn
/// from {1..4} and every vertex gets a random 3-list from {1..5}.
inline std::vector<ExtensionCase> extension_corpus() {
  std::mt19937_64 rng(777);
  auto entries = closure_corpus();
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 6 + draw(rng, 9);
    FiniteGraph g = random_graph(n, 0.15, rng);
    entries.push_back({std::move(g), random_subset(n, 0.3, rng)});
  }
  std::vector<ExtensionCase> out;
  for (auto& entry : entries) {
    if (entry.graph.order() < 2) continue;  // isolated vertex
    ExtensionCase c{entry.graph, entry.a, {}, {}};
    for (Vertex v = 0; v < c.graph.order(); ++v) {
      if (c.a.count(v) || draw(rng, 10) < 2) c.base.set(v, 1 + static_cast<Colour>(draw(rng, 4)));
      std::vector<Colour> pool = {1, 2, 3, 4, 5};
      std::shuffle(pool.begin(), pool.end(), rng);
      c.lists.set(v, {pool[0], pool[1], pool[2]});
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace testing_support
