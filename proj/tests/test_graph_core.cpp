#include <doctest.h>

#include <random>

#include "majc/choosability.hpp"
#include "majc/error.hpp"
#include "majc/generators.hpp"
#include "majc/happiness.hpp"
#include "majc/lazy_graph.hpp"
#include "support.hpp"

using namespace majc;
namespace ts = testing_support;

namespace {

FiniteGraph named(std::vector<std::string> names,
                  std::vector<std::pair<std::string, std::string>> edges,
                  GraphOptions options = {}) {
  return FiniteGraph::from_named(std::move(names), edges, options);
}

FiniteGraph triangle() { return named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
FiniteGraph path3() { return named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::io_error;
}

PartialColouring colours(std::initializer_list<Colour> cs) {
  PartialColouring c;
  Vertex v = 0;
  for (Colour x : cs) c.set(v++, x);
  return c;
}

std::shared_ptr<LazyGraph> make(Family f, std::size_t degree = 3) {
  GeneratorSpec spec;
  spec.family = f;
  spec.degree = degree;
  return instantiate_generator(spec);
}

}  // namespace

TEST_CASE("card order and addition") {
  CHECK(Card::finite(2) < Card::finite(3));
  CHECK(Card::finite(1'000'000) < Card::aleph0());
  CHECK(Card::aleph0() == Card::aleph0());
  CHECK(Card::finite(2) + Card::finite(5) == Card::finite(7));
  CHECK(Card::finite(2) + Card::aleph0() == Card::aleph0());
  CHECK(Card::aleph0().to_string() == "aleph0");
  CHECK(Card::finite(4).to_string() == "4");
}

TEST_CASE("finite graph construction errors are distinct") {
  CHECK(code_of([] { named({"a", "a"}, {}); }) == ErrorCode::duplicate_vertex);
  CHECK(code_of([] { named({"a", "b"}, {{"a", "z"}}); }) == ErrorCode::dangling_endpoint);
  CHECK(code_of([] { named({"a", "b"}, {{"a", "a"}, {"a", "b"}}); }) == ErrorCode::self_loop);
  CHECK(code_of([] { named({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::duplicate_edge);
  CHECK(code_of([] { named({"a", "b", "c"}, {{"a", "b"}}); }) == ErrorCode::isolated_vertex);
  CHECK_NOTHROW(named({"a", "b", "c"}, {{"a", "b"}}, {.allow_isolated = true}));
}

TEST_CASE("finite graph queries") {
  FiniteGraph g = triangle();
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 2));
  CHECK(g.find("b") == Vertex{1});
  CHECK_FALSE(g.find("z").has_value());
  CHECK(code_of([&] { g.at("z"); }) == ErrorCode::unknown_vertex);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("colour lists and colourings") {
  CHECK(make_list({3, 1, 3, 2}) == ColourList{1, 2, 3});
  CHECK_THROWS_AS(make_list({}), Error);
  PartialColouring c = colours({1, 2});
  CHECK(code_of([&] { c.at(5); }) == ErrorCode::not_in_domain);
  PartialColouring more = c;
  more.set(2, 3);
  CHECK(more.extends(c));
  CHECK_FALSE(c.extends(more));

  ListSystem lists(make_list({1, 2, 3}));
  lists.set(1, {4, 5});
  CHECK(lists.at(0) == ColourList{1, 2, 3});
  CHECK(lists.at(1) == ColourList{4, 5});
  CHECK(lists.universe() == ColourList{1, 2, 3, 4, 5});
  CHECK_FALSE(lists.respects(c));  // vertex 1 has colour 2, not in {4,5}
  ListSystem strict;
  strict.set(0, {1});
  CHECK(code_of([&] { strict.at(7); }) == ErrorCode::unknown_vertex);
}

TEST_CASE("happiness examples") {
  SUBCASE("monochromatic triangle") {
    auto st = happiness_status(triangle(), colours({1, 1, 1}), 1);
    CHECK(st == HappinessStatus{Happiness::unhappy, 2, 0});
  }
  SUBCASE("path 1-2-1, middle vertex") {
    auto st = happiness_status(path3(), colours({1, 2, 1}), 1);
    CHECK(st == HappinessStatus{Happiness::happy, 0, 2});
  }
  SUBCASE("uncoloured neighbours are skipped") {
    PartialColouring c;
    c.set(0, 1);
    c.set(1, 1);
    auto st = happiness_status(path3(), c, 1);
    CHECK(st == HappinessStatus{Happiness::unhappy, 1, 0});
  }
  SUBCASE("vertex outside the domain") {
    CHECK(code_of([] { happiness_status(path3(), colours({1}), 2); }) ==
          ErrorCode::not_in_domain);
  }
  SUBCASE("infinite star centre") {
    auto star = make(Family::star);
    PartialColouring c;
    c.set(star->at("c"), 1);
    for (int i = 0; i < 10; ++i) c.set(star->at("l" + std::to_string(i)), 2);
    auto st = happiness_status(*star, c, star->at("c"), 10);
    CHECK(st == HappinessStatus{Happiness::pending, 0, 10});
    CHECK(code_of([&] { happiness_status(*star, c, star->at("c")); }) ==
          ErrorCode::horizon_required);
    CHECK(happiness_status(*star, c, star->at("c"), 10, true).verdict == Happiness::happy);
    // a leaf has finite degree and is decided exactly
    CHECK(happiness_status(*star, c, star->at("l3")).verdict == Happiness::happy);
  }
}

TEST_CASE("cross edge count examples") {
  FiniteGraph k4 = FiniteGraph::from_edges(
      4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(cross_edge_count(k4, colours({1, 1, 2, 2})) == 4);
  CHECK(cross_edge_count(k4, colours({7, 7, 7, 7})) == 0);
  FiniteGraph c5 = FiniteGraph::from_edges(
      5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(cross_edge_count(c5, colours({1, 2, 1, 2, 1})) == 4);
  CHECK(code_of([&] { cross_edge_count(c5, colours({1, 2})); }) ==
        ErrorCode::partial_colouring);
}

TEST_CASE("happiness agrees with a recount on 1000 random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + ts::draw(rng, 11);
    FiniteGraph g = ts::random_graph(n, 0.4, rng);
    PartialColouring c;
    for (Vertex v = 0; v < n; ++v)
      if (ts::draw(rng, 5) != 0) c.set(v, static_cast<Colour>(ts::draw(rng, 3)));
    for (const auto& [v, colour] : c) {
      auto st = happiness_status(g, c, v);
      auto want = ts::recount(g, c, v);
      REQUIRE(st.same == want.same);
      REQUIRE(st.diff == want.diff);
      REQUIRE((st.verdict == Happiness::happy) == (want.same <= want.diff));
    }
  }
}

TEST_CASE("cross plus monochromatic edges is the edge count") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + ts::draw(rng, 15);
    FiniteGraph g = ts::random_graph(n, 0.3, rng);
    PartialColouring c;
    for (Vertex v = 0; v < n; ++v) c.set(v, static_cast<Colour>(ts::draw(rng, 4)));
    REQUIRE(cross_edge_count(g, c) + monochromatic_edge_count(g, c) == g.edge_count());
    REQUIRE(cross_edge_count(g, c) == ts::recount_cross(g, c));
  }
}

TEST_CASE("flip gain equals diff minus same, all graphs up to 6 vertices") {
  // connected_graphs lists one graph per isomorphism class; with all
  // 3-colourings that covers every labelled case up to symmetry.
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const FiniteGraph& g : connected_graphs(n)) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        PartialColouring c;
        std::size_t rest = code;
        for (Vertex v = 0; v < n; ++v, rest /= 3) c.set(v, static_cast<Colour>(rest % 3));
        const auto base = static_cast<std::int64_t>(ts::recount_cross(g, c));
        for (Vertex v = 0; v < n; ++v) {
          Colour old = c.at(v);
          // diff - same counted against the colour v moves to
          for (Colour to = 0; to < 3; ++to) {
            if (to == old) continue;
            std::int64_t same_old = 0, same_new = 0;
            for (Vertex w : g.neighbours(v)) {
              same_old += c.at(w) == old;
              same_new += c.at(w) == to;
            }
            PartialColouring flipped = c;
            flipped.set(v, to);
            const auto after = static_cast<std::int64_t>(ts::recount_cross(g, flipped));
            REQUIRE(after - base == same_old - same_new);
            ++checked;
          }
          // two colours: the move to the other colour gains diff - same
          if (old != 2) {
            auto st = happiness_status(g, c, v);
            bool two_coloured = true;
            for (Vertex w : g.neighbours(v)) two_coloured = two_coloured && c.at(w) != 2;
            if (two_coloured) {
              PartialColouring flipped = c;
              flipped.set(v, 1 - old);
              const auto after = static_cast<std::int64_t>(ts::recount_cross(g, flipped));
              REQUIRE(after - base == static_cast<std::int64_t>(st.same) -
                                          static_cast<std::int64_t>(st.diff));
            }
          }
        }
      }
    }
  }
  CHECK(checked > 100000);
}

TEST_CASE("generator examples") {
  SUBCASE("path") {
    auto p = make(Family::path);
    CHECK(p->degree(0) == Card::finite(1));
    CHECK(p->neighbours(0, 10) == std::vector<Vertex>{1});
    auto n5 = p->neighbours(5, 10);
    CHECK(VertexSet(n5.begin(), n5.end()) == VertexSet{4, 6});
    CHECK(p->name(5) == "v5");
    CHECK(p->at("v17") == 17);
    CHECK_FALSE(p->find("v017").has_value());
  }
  SUBCASE("regular tree") {
    auto t = make(Family::regular_tree, 3);
    CHECK(t->degree(t->at("t0")) == Card::finite(3));
    for (Vertex v = 0; v < 200; ++v) CHECK(t->degree(v) == Card::finite(3));
    CHECK_THROWS_AS(make(Family::regular_tree, 1), Error);
  }
  SUBCASE("star") {
    auto s = make(Family::star);
    CHECK(s->degree(s->at("c")).is_aleph0());
    CHECK(s->degree(s->at("l42")) == Card::finite(1));
    CHECK(s->neighbours(s->at("c"), 3).size() == 3);
    CHECK_THROWS_AS(full_neighbourhood(*s, s->at("c")), Error);
  }
  SUBCASE("grid") {
    auto g = make(Family::grid);
    for (Vertex v = 0; v < 300; ++v) {
      Card d = g->degree(v);
      CHECK(d.is_finite());
      CHECK(d.value() >= 2);
      CHECK(d.value() <= 4);
    }
    CHECK(g->degree(g->at("g0_0")) == Card::finite(2));
    CHECK(g->degree(g->at("g3_4")) == Card::finite(4));
  }
  SUBCASE("dominating vertex") {
    GeneratorSpec spec{Family::dominating_vertex};
    auto d = instantiate_generator(spec);
    CHECK(d->degree(d->at("d")).is_aleph0());
    CHECK(d->degree(d->at("v3")) == Card::finite(3));
    spec.rest = DominatedFamily::matching;
    auto m = instantiate_generator(spec);
    CHECK(m->degree(m->at("v3")) == Card::finite(2));
  }
  SUBCASE("family names") {
    CHECK(parse_family("star-aleph0") == Family::star);
    CHECK(parse_family("tree") == Family::regular_tree);
    CHECK_FALSE(parse_family("hypercube").has_value());
  }
}

TEST_CASE("generators are symmetric, declare their degrees and replay") {
  std::vector<GeneratorSpec> specs = {
      {Family::path}, {Family::grid}, {Family::regular_tree, 4},
      {Family::star}, {Family::seeded_locally_finite, 3, 6, DominatedFamily::path, 7},
      {Family::dominating_vertex}, {Family::dominating_vertex, 3, 4, DominatedFamily::matching}};
  for (const auto& spec : specs) {
    CAPTURE(family_name(spec.family));
    auto g = instantiate_generator(spec);
    auto again = instantiate_generator(spec);
    for (Vertex v = 0; v < 200; ++v) {
      Card d = g->degree(v);
      auto nbrs = g->neighbours(v, 64);
      REQUIRE(nbrs == again->neighbours(v, 64));
      if (d.is_finite()) REQUIRE(nbrs.size() == d.value());
      else REQUIRE(nbrs.size() == 64);
      REQUIRE(std::set<Vertex>(nbrs.begin(), nbrs.end()).size() == nbrs.size());
      for (Vertex w : nbrs) {
        REQUIRE(w != v);
        REQUIRE(adjacent(*g, w, v, 4096) == std::optional<bool>(true));
      }
      REQUIRE(g->find(g->name(v)) == v);
    }
  }
}

TEST_CASE("seeded locally finite generator replays on 1000 vertices") {
  GeneratorSpec spec{Family::seeded_locally_finite, 3, 4, DominatedFamily::path, 7};
  auto a = instantiate_generator(spec);
  auto b = instantiate_generator(spec);
  std::size_t chords = 0;
  for (Vertex v = 0; v < 1000; ++v) {
    REQUIRE(a->degree(v) == b->degree(v));
    REQUIRE(a->neighbours(v, 100) == b->neighbours(v, 100));
    REQUIRE(a->degree(v).value() <= 4);
    chords += a->degree(v).value();
  }
  CHECK(chords > 2 * 999);  // some chords beyond the spine
  spec.seed = 8;
  auto c = instantiate_generator(spec);
  bool differs = false;
  for (Vertex v = 0; v < 1000 && !differs; ++v)
    differs = a->neighbours(v, 100) != c->neighbours(v, 100);
  CHECK(differs);
}

TEST_CASE("induced finite subgraphs") {
  SUBCASE("path window") {
    auto p = make(Family::path);
    auto sub = induced_finite_subgraph(*p, {0, 1, 2});
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(sub.graph.names() == std::vector<std::string>{"v0", "v1", "v2"});
  }
  SUBCASE("tree root and children is K_{1,3}") {
    auto t = make(Family::regular_tree, 3);
    VertexSet s{t->at("t0")};
    for (Vertex w : t->neighbours(t->at("t0"), 3)) s.insert(w);
    auto sub = induced_finite_subgraph(*t, s);
    CHECK(sub.graph.edge_count() == 3);
    CHECK(sub.graph.degree(0) == 3);
  }
  SUBCASE("grid 2x2 window is C4") {
    auto g = make(Family::grid);
    VertexSet s{g->at("g0_0"), g->at("g1_0"), g->at("g0_1"), g->at("g1_1")};
    auto sub = induced_finite_subgraph(*g, s);
    CHECK(sub.graph.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(sub.graph.degree(v) == 2);
  }
  SUBCASE("infinite-degree member needs a horizon") {
    auto s = make(Family::star);
    VertexSet vs{s->at("c"), s->at("l0"), s->at("l5")};
    CHECK(code_of([&] { induced_finite_subgraph(*s, vs); }) == ErrorCode::horizon_required);
    auto sub = induced_finite_subgraph(*s, vs, 16);
    CHECK(sub.graph.edge_count() == 2);
    CHECK_FALSE(sub.truncated);
  }
}
