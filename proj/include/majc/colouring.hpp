#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "majc/graph.hpp"

namespace majc {

using Colour = std::int64_t;
/// Sorted, duplicate-free colour list.
using ColourList = std::vector<Colour>;

/// Sorts and deduplicates; throws on an empty list.
ColourList make_list(std::vector<Colour> colours);

bool list_contains(const ColourList& list, Colour c);

/// Assignment of colours to a subset of the vertices.
class PartialColouring {
 public:
  using Map = std::map<Vertex, Colour>;

  PartialColouring() = default;
  explicit PartialColouring(Map assignment) : assignment_(std::move(assignment)) {}

  std::optional<Colour> get(Vertex v) const;
  Colour at(Vertex v) const;  // throws not_in_domain
  bool contains(Vertex v) const { return assignment_.count(v) != 0; }
  void set(Vertex v, Colour c) { assignment_[v] = c; }
  void erase(Vertex v) { assignment_.erase(v); }

  std::size_t size() const { return assignment_.size(); }
  bool empty() const { return assignment_.empty(); }
  VertexSet domain() const;
  const Map& assignment() const { return assignment_; }

  Map::const_iterator begin() const { return assignment_.begin(); }
  Map::const_iterator end() const { return assignment_.end(); }

  /// True when every vertex of `other` is coloured identically here.
  bool extends(const PartialColouring& other) const;

  bool operator==(const PartialColouring&) const = default;

 private:
  Map assignment_;
};

/// Per-vertex colour lists, with an optional default list for every vertex
/// that has no explicit entry (needed for infinite graphs).
class ListSystem {
 public:
  ListSystem() = default;
  explicit ListSystem(ColourList default_list);

  void set(Vertex v, std::vector<Colour> colours);
  bool has(Vertex v) const;
  const ColourList& at(Vertex v) const;  // throws unknown_vertex

  const std::optional<ColourList>& default_list() const { return default_; }
  const std::map<Vertex, ColourList>& explicit_lists() const { return lists_; }

  /// Union of the default list and every explicit list.
  ColourList universe() const;

  /// Every coloured vertex that has a list uses a colour from it.
  bool respects(const PartialColouring& colouring) const;

 private:
  std::optional<ColourList> default_;
  std::map<Vertex, ColourList> lists_;
};

}  // namespace majc
