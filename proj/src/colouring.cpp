#include "majc/colouring.hpp"

#include <algorithm>
#include <string>

#include "majc/error.hpp"

namespace majc {

ColourList make_list(std::vector<Colour> colours) {
  if (colours.empty())
    throw Error(ErrorCode::invalid_argument, "colour lists must be non-empty");
  std::sort(colours.begin(), colours.end());
  colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
  return colours;
}

bool list_contains(const ColourList& list, Colour c) {
  return std::binary_search(list.begin(), list.end(), c);
}

std::optional<Colour> PartialColouring::get(Vertex v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

Colour PartialColouring::at(Vertex v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end())
    throw Error(ErrorCode::not_in_domain,
                "vertex " + std::to_string(v) + " is not coloured");
  return it->second;
}

VertexSet PartialColouring::domain() const {
  VertexSet out;
  for (const auto& [v, c] : assignment_) out.insert(out.end(), v);
  return out;
}

bool PartialColouring::extends(const PartialColouring& other) const {
  for (const auto& [v, c] : other) {
    auto mine = get(v);
    if (!mine || *mine != c) return false;
  }
  return true;
}

ListSystem::ListSystem(ColourList default_list)
    : default_(make_list(std::move(default_list))) {}

void ListSystem::set(Vertex v, std::vector<Colour> colours) {
  lists_[v] = make_list(std::move(colours));
}

bool ListSystem::has(Vertex v) const {
  return default_.has_value() || lists_.count(v) != 0;
}

const ColourList& ListSystem::at(Vertex v) const {
  auto it = lists_.find(v);
  if (it != lists_.end()) return it->second;
  if (default_) return *default_;
  throw Error(ErrorCode::unknown_vertex,
              "no colour list for vertex " + std::to_string(v));
}

ColourList ListSystem::universe() const {
  ColourList out;
  if (default_) out = *default_;
  for (const auto& [v, list] : lists_) out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ListSystem::respects(const PartialColouring& colouring) const {
  for (const auto& [v, c] : colouring) {
    if (!has(v)) continue;
    if (!list_contains(at(v), c)) return false;
  }
  return true;
}

}  // namespace majc
