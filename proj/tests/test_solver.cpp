#include <doctest.h>

#include <map>
#include <random>

#include "majc/choosability.hpp"
#include "majc/error.hpp"
#include "majc/happiness.hpp"
#include "majc/solver.hpp"
#include "support.hpp"

using namespace majc;
namespace ts = testing_support;

namespace {

FiniteGraph edges(std::size_t n, std::vector<Edge> e) {
  return FiniteGraph::from_edges(n, e);
}

// Independent scan: does any single free recolouring raise the cross count?
bool has_improving_move(const SolveInstance& inst, const PartialColouring& c) {
  const auto base = ts::recount_cross(inst.graph, c);
  for (const auto& [v, list] : inst.free_lists)
    for (Colour to : list) {
      if (inst.b1 == v && inst.cx == to) continue;
      PartialColouring moved = c;
      moved.set(v, to);
      if (ts::recount_cross(inst.graph, moved) > base) return true;
    }
  return false;
}

// Frozen part kept, sublists respected, c_x avoided at b1, free vertices
// happy; all checked from scratch.
void require_conditions(const SolveInstance& inst, const PartialColouring& c) {
  for (const auto& [v, colour] : inst.frozen) REQUIRE(c.at(v) == colour);
  for (const auto& [v, list] : inst.free_lists) {
    REQUIRE(list_contains(list, c.at(v)));
    auto counts = ts::recount(inst.graph, c, v);
    REQUIRE(counts.same <= counts.diff);
  }
  if (inst.b1) REQUIRE(c.at(*inst.b1) != *inst.cx);
}

// Largest cross count over all list colourings, by odometer.
std::uint64_t brute_force_max(const SolveInstance& inst) {
  std::vector<Vertex> free;
  std::vector<ColourList> lists;
  for (const auto& [v, list] : inst.free_lists) {
    free.push_back(v);
    lists.push_back(inst.effective_list(v));
  }
  std::vector<std::size_t> digit(free.size(), 0);
  std::uint64_t best = 0;
  while (true) {
    PartialColouring c = inst.frozen;
    for (std::size_t i = 0; i < free.size(); ++i) c.set(free[i], lists[i][digit[i]]);
    best = std::max(best, ts::recount_cross(inst.graph, c));
    std::size_t i = 0;
    while (i < free.size() && ++digit[i] == lists[i].size()) digit[i++] = 0;
    if (i == free.size()) break;
  }
  return best;
}

// Canonical form of a list system under colour renaming, by trying every
// permutation of the palette.
std::vector<ColourList> canonical_by_permutation(const std::vector<ColourList>& lists,
                                                 std::size_t palette) {
  std::vector<Colour> perm(palette);
  std::iota(perm.begin(), perm.end(), Colour{0});
  std::vector<ColourList> best;
  do {
    std::vector<ColourList> image;
    for (const auto& l : lists) {
      ColourList m;
      for (Colour c : l) m.push_back(perm[static_cast<std::size_t>(c)]);
      std::sort(m.begin(), m.end());
      image.push_back(m);
    }
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("solver examples") {
  SUBCASE("b1 avoids c_x, ties go to the lowest colour") {
    SolveInstance inst;
    inst.graph = edges(2, {{0, 1}});
    inst.frozen.set(0, 1);
    inst.free_lists[1] = {2, 3};
    inst.b1 = 1;
    inst.cx = 1;
    auto r = solve_finite(inst);
    CHECK(r.colouring.at(1) == 2);
    CHECK(audit(inst, r).avoids_cx);
  }
  SUBCASE("free K2 gets two colours") {
    SolveInstance inst;
    inst.graph = edges(2, {{0, 1}});
    inst.free_lists[0] = {1, 2};
    inst.free_lists[1] = {1, 2};
    auto r = solve_finite(inst);
    CHECK(r.colouring.at(0) != r.colouring.at(1));
    CHECK(r.objective == brute_force_max(inst));
    CHECK(r.objective == 1);
  }
  SUBCASE("triangle with one frozen vertex") {
    SolveInstance inst;
    inst.graph = edges(3, {{0, 1}, {0, 2}, {1, 2}});
    inst.frozen.set(0, 1);
    inst.free_lists[1] = {1, 2};
    inst.free_lists[2] = {1, 2};
    auto r = solve_finite(inst);
    auto best = exhaustive_max_cross(inst);
    CHECK(best.objective == brute_force_max(inst));
    CHECK(best.objective == 2);  // two colours on a triangle leave one edge monochromatic
    CHECK(r.objective == best.objective);
    require_conditions(inst, r.colouring);
  }
}

TEST_CASE("exhaustive maximum examples") {
  SUBCASE("single free vertex follows the frozen majority") {
    SolveInstance inst;
    inst.graph = edges(4, {{0, 1}, {0, 2}, {0, 3}});
    inst.frozen.set(1, 1);
    inst.frozen.set(2, 1);
    inst.frozen.set(3, 2);
    inst.free_lists[0] = {1, 2};
    auto r = exhaustive_max_cross(inst);
    CHECK(r.colouring.at(0) == 2);
    CHECK(r.objective == 2);
  }
  SUBCASE("C4 is properly 2-coloured") {
    SolveInstance inst;
    inst.graph = edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (Vertex v = 0; v < 4; ++v) inst.free_lists[v] = {1, 2};
    auto r = exhaustive_max_cross(inst);
    CHECK(r.objective == 4);
    CHECK(r.colouring.at(0) == 1);  // lexicographically first maximum
    CHECK(r.colouring.at(1) == 2);
  }
  SUBCASE("guard") {
    SolveInstance inst;
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < 30; ++v) e.emplace_back(v, v + 1);
    inst.graph = edges(30, e);
    for (Vertex v = 0; v < 30; ++v) inst.free_lists[v] = {1, 2};
    CHECK_THROWS_AS(exhaustive_max_cross(inst), Error);
  }
}

TEST_CASE("random instances: audits, local optimality, agreement with exhaustive search") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    SolveInstance inst = ts::random_instance(rng);
    auto r = solve_finite(inst);
    REQUIRE(audit(inst, r).ok());
    require_conditions(inst, r.colouring);
    REQUIRE_FALSE(has_improving_move(inst, r.colouring));
    REQUIRE(r.objective == ts::recount_cross(inst.graph, r.colouring));
    REQUIRE(r == solve_finite(inst));

    auto best = exhaustive_max_cross(inst);
    REQUIRE(best.objective == brute_force_max(inst));
    REQUIRE(best.objective >= r.objective);
    require_conditions(inst, best.colouring);
  }
}

TEST_CASE("instance validation") {
  SolveInstance inst;
  inst.graph = edges(2, {{0, 1}});
  inst.free_lists[0] = {1, 2};
  CHECK_THROWS_AS(solve_finite(inst), Error);  // vertex 1 is neither frozen nor free
  inst.frozen.set(1, 1);
  inst.free_lists[1] = {1, 2};
  CHECK_THROWS_AS(solve_finite(inst), Error);  // vertex 1 is both
  inst.free_lists.erase(1);
  inst.free_lists[0] = {1};
  CHECK_THROWS_AS(solve_finite(inst), Error);  // a free vertex needs two colours
  inst.free_lists[0] = {1, 2};
  inst.b1 = 0;
  inst.cx = 1;
  CHECK_THROWS_AS(solve_finite(inst), Error);  // b1 would keep one colour
}

TEST_CASE("majority list colouring search examples") {
  FiniteGraph k2 = edges(2, {{0, 1}});
  ListSystem same;
  same.set(0, {1});
  same.set(1, {1});
  CHECK_FALSE(exists_majority_list_colouring(k2, same).has_value());
  ListSystem apart;
  apart.set(0, {1});
  apart.set(1, {2});
  auto w = exists_majority_list_colouring(k2, apart);
  REQUIRE(w.has_value());
  CHECK(w->at(0) == 1);
  CHECK(w->at(1) == 2);

  FiniteGraph c5 = edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto c5w = exists_majority_list_colouring(c5, ListSystem(make_list({1, 2})));
  REQUIRE(c5w.has_value());
  for (Vertex v = 0; v < 5; ++v) {
    auto counts = ts::recount(c5, *c5w, v);
    CHECK(counts.same <= counts.diff);
  }
}

TEST_CASE("search returns none only when a list has one colour") {
  std::mt19937_64 rng(99);
  std::size_t nones = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + ts::draw(rng, 7);
    FiniteGraph g = ts::random_graph(n, 0.5, rng);
    ListSystem lists;
    bool singleton = false;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t size = 1 + ts::draw(rng, 2);
      singleton = singleton || size == 1;
      std::vector<Colour> l;
      while (l.size() < size) {
        Colour c = static_cast<Colour>(ts::draw(rng, 3));
        if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
      }
      lists.set(v, l);
    }
    auto w = exists_majority_list_colouring(g, lists);
    if (!w) {
      ++nones;
      REQUIRE(singleton);
    } else {
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(list_contains(lists.at(v), w->at(v)));
        auto counts = ts::recount(g, *w, v);
        REQUIRE(counts.same <= counts.diff);
      }
    }
  }
  CHECK(nones > 0);
}

TEST_CASE("connected graph enumeration counts") {
  std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("canonical list systems are one per renaming class") {
  struct Shape {
    std::size_t vertices, ell, palette;
  };
  for (Shape s : {Shape{2, 1, 3}, Shape{3, 2, 4}, Shape{3, 1, 4}, Shape{2, 2, 5}}) {
    CAPTURE(s.vertices);
    CAPTURE(s.ell);
    CAPTURE(s.palette);
    // every raw system, reduced by brute-force renaming
    std::vector<ColourList> subsets;
    for (std::uint32_t mask = 0; mask < (1U << s.palette); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != s.ell) continue;
      ColourList l;
      for (std::size_t c = 0; c < s.palette; ++c)
        if (mask >> c & 1U) l.push_back(static_cast<Colour>(c));
      subsets.push_back(l);
    }
    std::set<std::vector<ColourList>> classes;
    std::vector<std::size_t> digit(s.vertices, 0);
    while (true) {
      std::vector<ColourList> sys;
      for (std::size_t d : digit) sys.push_back(subsets[d]);
      classes.insert(canonical_by_permutation(sys, s.palette));
      std::size_t i = 0;
      while (i < s.vertices && ++digit[i] == subsets.size()) digit[i++] = 0;
      if (i == s.vertices) break;
    }
    auto systems = canonical_list_systems(s.vertices, s.ell, s.palette);
    std::set<std::vector<ColourList>> mine;
    for (const auto& ls : systems) {
      std::vector<ColourList> sys;
      for (Vertex v = 0; v < s.vertices; ++v) sys.push_back(ls.at(v));
      mine.insert(canonical_by_permutation(sys, s.palette));
    }
    CHECK(systems.size() == classes.size());
    CHECK(mine == classes);
  }
}

TEST_CASE("choosability oracle examples") {
  FiniteGraph p2 = edges(2, {{0, 1}});
  auto v = majority_choosable_oracle(p2, 1, 4, {});
  CHECK_FALSE(v.choosable);
  REQUIRE(v.failing.has_value());
  CHECK(v.failing->at(0) == v.failing->at(1));

  FiniteGraph k4 = edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto k4v = majority_choosable_oracle(k4, 3, 6, {.threads = 2});
  CHECK(k4v.choosable);
  CHECK(k4v.systems_checked > 0);

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : connected_graphs(n))
      CHECK(majority_choosable_oracle(g, 2, 4, {}).choosable);
}

TEST_CASE("sampled oracle") {
  FiniteGraph c7 = edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});
  OracleOptions o{.mode = OracleMode::sampled, .samples = 200, .seed = 5, .threads = 3};
  auto a = majority_choosable_oracle(c7, 2, 5, o);
  CHECK(a.choosable);
  CHECK(a.systems_checked == 200);
  auto b = majority_choosable_oracle(edges(2, {{0, 1}}), 1, 2, {.mode = OracleMode::sampled, .samples = 50, .seed = 1});
  CHECK_FALSE(b.choosable);

  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < 11; ++v) e.emplace_back(v, v + 1);
  CHECK_THROWS_AS(majority_choosable_oracle(edges(11, e), 2, 4, o), Error);
  CHECK_THROWS_AS(majority_choosable_oracle(c7, 2, 4, {}), Error);  // exhaustive needs <= 4 vertices
}
