#include "majc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "majc/error.hpp"

namespace majc {

namespace {

std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  // Reject leading zeros so that names are canonical.
  if (s.size() > 1 && s.front() == '0') return std::nullopt;
  return value;
}

std::optional<std::size_t> parse_prefixed(std::string_view name,
                                          std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  return parse_index(name.substr(prefix.size()));
}

std::vector<Vertex> take(std::vector<Vertex> all, std::size_t limit) {
  if (all.size() > limit) all.resize(limit);
  return all;
}

class PathGraph final : public LazyGraph {
 public:
  std::optional<std::size_t> order() const override { return std::nullopt; }
  Card degree(Vertex v) const override { return Card::finite(v == 0 ? 1 : 2); }
  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override {
    if (v == 0) return take({1}, limit);
    return take({v - 1, v + 1}, limit);
  }
  std::string name(Vertex v) const override { return "v" + std::to_string(v); }
  std::optional<Vertex> find(std::string_view name) const override {
    return parse_prefixed(name, "v");
  }
};

// Quarter plane N x N, enumerated along anti-diagonals.
class GridGraph final : public LazyGraph {
 public:
  std::optional<std::size_t> order() const override { return std::nullopt; }

  Card degree(Vertex v) const override {
    auto [x, y] = coords(v);
    return Card::finite(2 + (x > 0 ? 1 : 0) + (y > 0 ? 1 : 0));
  }

  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override {
    auto [x, y] = coords(v);
    std::vector<Vertex> out;
    if (y > 0) out.push_back(index(x, y - 1));
    if (x > 0) out.push_back(index(x - 1, y));
    out.push_back(index(x + 1, y));
    out.push_back(index(x, y + 1));
    return take(std::move(out), limit);
  }

  std::string name(Vertex v) const override {
    auto [x, y] = coords(v);
    return "g" + std::to_string(x) + "_" + std::to_string(y);
  }

  std::optional<Vertex> find(std::string_view name) const override {
    if (name.empty() || name.front() != 'g') return std::nullopt;
    auto sep = name.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    auto x = parse_index(name.substr(1, sep - 1));
    auto y = parse_index(name.substr(sep + 1));
    if (!x || !y) return std::nullopt;
    return index(*x, *y);
  }

 private:
  static Vertex index(std::size_t x, std::size_t y) {
    std::size_t s = x + y;
    return s * (s + 1) / 2 + y;
  }

  static std::pair<std::size_t, std::size_t> coords(Vertex k) {
    auto s = static_cast<std::size_t>(
        (std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
    while (s * (s + 1) / 2 > k) --s;
    while ((s + 1) * (s + 2) / 2 <= k) ++s;
    std::size_t y = k - s * (s + 1) / 2;
    return {s - y, y};
  }
};

// Breadth-first numbering: the root has children 1..d, vertex i >= 1 has
// the d-1 children d+1+(i-1)(d-1) .. d+(i)(d-1).
class RegularTree final : public LazyGraph {
 public:
  explicit RegularTree(std::size_t d) : d_(d) {}

  std::optional<std::size_t> order() const override { return std::nullopt; }
  Card degree(Vertex) const override { return Card::finite(d_); }

  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override {
    std::vector<Vertex> out;
    if (v == 0) {
      for (std::size_t c = 1; c <= d_; ++c) out.push_back(c);
      return take(std::move(out), limit);
    }
    out.push_back(parent(v));
    Vertex first = d_ + 1 + (v - 1) * (d_ - 1);
    for (std::size_t c = 0; c + 1 < d_; ++c) out.push_back(first + c);
    return take(std::move(out), limit);
  }

  std::string name(Vertex v) const override { return "t" + std::to_string(v); }
  std::optional<Vertex> find(std::string_view name) const override {
    return parse_prefixed(name, "t");
  }

 private:
  Vertex parent(Vertex v) const {
    if (v <= d_) return 0;
    return (v - d_ - 1) / (d_ - 1) + 1;
  }

  std::size_t d_;
};

class StarGraph final : public LazyGraph {
 public:
  std::optional<std::size_t> order() const override { return std::nullopt; }
  Card degree(Vertex v) const override {
    return v == 0 ? Card::aleph0() : Card::finite(1);
  }
  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override {
    if (v != 0) return take({0}, limit);
    std::vector<Vertex> out(limit);
    for (std::size_t i = 0; i < limit; ++i) out[i] = i + 1;
    return out;
  }
  std::string name(Vertex v) const override {
    return v == 0 ? std::string("c") : "l" + std::to_string(v - 1);
  }
  std::optional<Vertex> find(std::string_view name) const override {
    if (name == "c") return Vertex{0};
    if (auto i = parse_prefixed(name, "l")) return *i + 1;
    return std::nullopt;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// v_i ~ v_{i+1} always; v_i ~ v_{i+k} for 2 <= k <= max_degree/2 when a
// hash of (seed, i, i+k) says so. Degrees stay within max_degree and the
// graph is connected.
class SeededLocallyFinite final : public LazyGraph {
 public:
  SeededLocallyFinite(std::size_t max_degree, std::uint64_t seed)
      : reach_(max_degree / 2), seed_(seed) {}

  std::optional<std::size_t> order() const override { return std::nullopt; }

  Card degree(Vertex v) const override {
    return Card::finite(all_neighbours(v).size());
  }
  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override {
    return take(all_neighbours(v), limit);
  }
  std::string name(Vertex v) const override { return "v" + std::to_string(v); }
  std::optional<Vertex> find(std::string_view name) const override {
    return parse_prefixed(name, "v");
  }

 private:
  bool chord(Vertex lo, Vertex hi) const {
    if (hi - lo == 1) return true;
    std::uint64_t h = splitmix64(seed_ ^ splitmix64(lo * 0x100000001b3ULL + hi));
    return (h & 1U) != 0;
  }

  std::vector<Vertex> all_neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (std::size_t k = std::min<std::size_t>(reach_, v); k >= 1; --k)
      if (chord(v - k, v)) out.push_back(v - k);
    for (std::size_t k = 1; k <= reach_; ++k)
      if (chord(v, v + k)) out.push_back(v + k);
    return out;
  }

  std::size_t reach_;
  std::uint64_t seed_;
};

class DominatingVertexGraph final : public LazyGraph {
 public:
  explicit DominatingVertexGraph(DominatedFamily rest) : rest_(rest) {}

  std::optional<std::size_t> order() const override { return std::nullopt; }

  Card degree(Vertex v) const override {
    if (v == 0) return Card::aleph0();
    return Card::finite(1 + rest_neighbours(v - 1).size());
  }

  std::vector<Vertex> neighbours(Vertex v, std::size_t limit) const override {
    if (v == 0) {
      std::vector<Vertex> out(limit);
      for (std::size_t i = 0; i < limit; ++i) out[i] = i + 1;
      return out;
    }
    std::vector<Vertex> out{0};
    for (std::size_t i : rest_neighbours(v - 1)) out.push_back(i + 1);
    return take(std::move(out), limit);
  }

  std::string name(Vertex v) const override {
    return v == 0 ? std::string("d") : "v" + std::to_string(v - 1);
  }
  std::optional<Vertex> find(std::string_view name) const override {
    if (name == "d") return Vertex{0};
    if (auto i = parse_prefixed(name, "v")) return *i + 1;
    return std::nullopt;
  }

 private:
  std::vector<std::size_t> rest_neighbours(std::size_t i) const {
    if (rest_ == DominatedFamily::matching) return {i ^ 1U};
    if (i == 0) return {1};
    return {i - 1, i + 1};
  }

  DominatedFamily rest_;
};

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::grid: return "grid";
    case Family::regular_tree: return "regular-tree";
    case Family::star: return "star";
    case Family::seeded_locally_finite: return "seeded-locally-finite";
    case Family::dominating_vertex: return "dominating-vertex";
  }
  return "path";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "grid") return Family::grid;
  if (name == "regular-tree" || name == "tree") return Family::regular_tree;
  if (name == "star" || name == "star-aleph0") return Family::star;
  if (name == "seeded-locally-finite" ||
      name == "seeded-random-locally-finite")
    return Family::seeded_locally_finite;
  if (name == "dominating-vertex" || name == "dominating-vertex-plus-family")
    return Family::dominating_vertex;
  return std::nullopt;
}

std::unique_ptr<LazyGraph> instantiate_generator(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::path: return std::make_unique<PathGraph>();
    case Family::grid: return std::make_unique<GridGraph>();
    case Family::regular_tree:
      if (spec.degree < 2)
        throw Error(ErrorCode::invalid_argument,
                    "regular-tree needs degree >= 2");
      return std::make_unique<RegularTree>(spec.degree);
    case Family::star: return std::make_unique<StarGraph>();
    case Family::seeded_locally_finite:
      if (spec.max_degree < 2)
        throw Error(ErrorCode::invalid_argument,
                    "seeded-locally-finite needs max_degree >= 2");
      return std::make_unique<SeededLocallyFinite>(spec.max_degree, spec.seed);
    case Family::dominating_vertex:
      return std::make_unique<DominatingVertexGraph>(spec.rest);
  }
  throw Error(ErrorCode::invalid_argument, "unknown generator family");
}

}  // namespace majc
