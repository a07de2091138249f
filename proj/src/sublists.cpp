#include "majc/sublists.hpp"

#include <algorithm>

#include "majc/error.hpp"

namespace majc {

ColourList SublistTable::sublist(Vertex v) const {
  if (auto it = derived_.find(v); it != derived_.end()) return it->second;
  ColourList list = base_.at(v);
  if (list.size() != ell_ + 1)
    throw Error(ErrorCode::hypothesis_violated,
                "list of vertex " + std::to_string(v) + " has " +
                    std::to_string(list.size()) + " colours, expected " +
                    std::to_string(ell_ + 1));
  list.pop_back();
  return list;
}

std::size_t SublistTable::coverage_counter(std::size_t set_index,
                                           Colour c) const {
  if (set_index >= set_names_.size() || !list_contains(colours_, c))
    throw Error(ErrorCode::invalid_argument,
                "unknown (set, colour) pair (" + std::to_string(set_index) +
                    ", " + std::to_string(c) + ")");
  std::size_t count = 0;
  for (std::size_t i = 0; i < log_.size(); ++i) {
    if (!membership_[i][set_index]) continue;
    if (!list_contains(derived_.at(log_[i].vertex), c)) ++count;
  }
  return count;
}

SublistEngine::SublistEngine(SublistRequest request)
    : request_(std::move(request)) {
  if (!request_.vertex_at || request_.vertex_at(0) != request_.x)
    throw Error(ErrorCode::invalid_argument,
                "x must be the first vertex of the enumeration");
  const ColourList& lx = request_.lists.at(request_.x);
  if (!list_contains(lx, request_.cx))
    throw Error(ErrorCode::invalid_argument, "c_x is not in the list of x");

  request_.family.insert(request_.family.begin(),
                         TrackedSet{"V", [](Vertex) { return true; }});

  table_.base_ = request_.lists;
  table_.ell_ = request_.ell;
  table_.colours_ = request_.lists.universe();
  for (const auto& s : request_.family) table_.set_names_.push_back(s.name);
  cursors_.assign(request_.family.size(), 0);
  cx_index_ = static_cast<std::size_t>(
      std::lower_bound(table_.colours_.begin(), table_.colours_.end(),
                       request_.cx) -
      table_.colours_.begin());
}

SublistEngine::Triple SublistEngine::next_triple() {
  if (!forced_done_) {
    forced_done_ = true;
    return {0, cx_index_, 1};
  }
  const std::size_t sets = request_.family.size();
  const std::size_t colours = table_.colours_.size();
  while (true) {
    const std::size_t s = diag_, xi = diag_x_, ci = diag_c_;
    if (diag_c_ < std::min(s - diag_x_, colours - 1)) {
      ++diag_c_;
    } else if (diag_x_ < std::min(s, sets - 1)) {
      ++diag_x_;
      diag_c_ = 0;
    } else {
      ++diag_;
      diag_x_ = 0;
      diag_c_ = 0;
    }
    const std::size_t n = s - xi - ci + 1;
    if (xi == 0 && ci == cx_index_ && n == 1) continue;  // already emitted
    return {xi, ci, n};
  }
}

void SublistEngine::process(const Triple& t) {
  const TrackedSet& set = request_.family[t.set_index];
  std::size_t& pos = cursors_[t.set_index];
  std::size_t scanned = 0;
  Vertex v = 0;
  while (true) {
    if (scanned++ >= request_.scan_limit)
      throw Error(ErrorCode::stalled_stream,
                  "set '" + set.name + "' has no unchosen member within the scan limit");
    v = request_.vertex_at(pos);
    if (set.contains(v) && !table_.chosen(v)) break;
    ++pos;
  }

  const Colour c = table_.colours_[t.colour_index];
  ColourList list = request_.lists.at(v);
  if (list.size() != request_.ell + 1)
    throw Error(ErrorCode::hypothesis_violated,
                "list of vertex " + std::to_string(v) + " has " +
                    std::to_string(list.size()) + " colours, expected " +
                    std::to_string(request_.ell + 1));
  bool struck = list_contains(list, c);
  if (struck) list.erase(std::lower_bound(list.begin(), list.end(), c));
  else list.pop_back();

  table_.derived_.emplace(v, std::move(list));
  table_.log_.push_back({t.set_index, c, t.n, v, struck});
  std::vector<bool> row(request_.family.size());
  for (std::size_t s = 0; s < row.size(); ++s)
    row[s] = request_.family[s].contains(v);
  table_.membership_.push_back(std::move(row));
}

const SublistTable& SublistEngine::advance_to(std::size_t horizon) {
  while (table_.horizon() < horizon) process(next_triple());
  return table_;
}

std::optional<std::size_t> SublistEngine::horizon_for_coverage(
    std::size_t set_index, Colour c, std::size_t m, std::size_t max_horizon) {
  while (table_.coverage_counter(set_index, c) < m) {
    if (table_.horizon() >= max_horizon) return std::nullopt;
    process(next_triple());
  }
  return table_.horizon();
}

SublistTable select_sublists(SublistRequest request, std::size_t horizon) {
  if (horizon < 1)
    throw Error(ErrorCode::invalid_argument, "horizon must be at least 1");
  SublistEngine engine(std::move(request));
  return engine.advance_to(horizon);
}

}  // namespace majc
