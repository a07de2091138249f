#include "majc/saturation.hpp"

#include <algorithm>

#include "majc/error.hpp"

namespace majc {

std::string to_string(SaturationVerdict v) {
  switch (v) {
    case SaturationVerdict::saturated: return "saturated";
    case SaturationVerdict::violated: return "violated";
    case SaturationVerdict::unknown: return "unknown";
  }
  return "unknown";
}

SaturationResult saturate(const LazyGraph& g, const VertexSet& a,
                          const VertexSet& b, Card mu, std::size_t budget) {
  if (mu.is_finite())
    throw Error(ErrorCode::invalid_argument,
                "saturation is only constructed for mu = aleph0");
  if (b.size() > budget)
    throw Error(ErrorCode::budget_exhausted,
                "seed set is larger than the vertex budget");

  SaturationResult r;
  r.a = a;
  for (Vertex v : b) {
    r.members.push_back(v);
    r.generation[v] = 0;
  }

  std::vector<Vertex> round(b.begin(), b.end());
  while (!round.empty()) {
    const std::size_t next_gen = r.rounds + 1;
    ++r.rounds;
    std::vector<Vertex> added;
    std::vector<Card> degrees;
    std::vector<std::vector<Vertex>> prefixes(round.size());
    for (Vertex v : round) degrees.push_back(g.degree(v));
    // k-th neighbour of every vertex in the round, for k = 0, 1, ...
    for (std::size_t k = 0;; ++k) {
      bool any = false;
      for (std::size_t i = 0; i < round.size(); ++i) {
        if (degrees[i].is_finite() && k >= degrees[i].value()) continue;
        any = true;
        if (prefixes[i].size() <= k)
          prefixes[i] = g.neighbours(round[i], std::max<std::size_t>(16, 2 * k + 1));
        Vertex w = prefixes[i][k];
        if (a.count(w) || r.contains(w)) continue;
        if (r.members.size() >= budget) {
          r.complete = false;
          return r;
        }
        r.members.push_back(w);
        r.generation[w] = next_gen;
        added.push_back(w);
      }
      if (!any) break;
    }
    std::sort(added.begin(), added.end());
    round = std::move(added);
  }
  return r;
}

namespace {

struct MemberScan {
  std::vector<Vertex> nbrs;
  bool full = true;
};

MemberScan scan(const LazyGraph& g, Vertex b, std::size_t horizon) {
  Card d = g.degree(b);
  if (d.is_finite()) return {full_neighbourhood(g, b), true};
  return {g.neighbours(b, horizon), false};
}

}  // namespace

SaturationCheck is_saturated(const LazyGraph& g, const VertexSet& a,
                             const VertexSet& b_star, std::size_t horizon) {
  SaturationCheck out;
  const std::uint64_t size = b_star.size();
  for (Vertex b : b_star) {
    ++out.checked;
    MemberScan s = scan(g, b, horizon);
    std::uint64_t outside = 0;
    for (Vertex w : s.nbrs)
      if (!a.count(w) && !b_star.count(w)) ++outside;

    Card outside_card = Card::finite(outside);
    if (!s.full) {
      // An infinite neighbourhood minus two finite sets stays infinite.
      outside_card = Card::aleph0();
    }
    if (outside_card == Card::finite(0)) continue;

    if (!(outside_card > Card::finite(size))) {
      out.verdict = SaturationVerdict::violated;
      out.witness = b;
      out.reason = "|N(b) \\ (A u B*)| = " + outside_card.to_string() +
                   " is not larger than |B*| = " + std::to_string(size);
      return out;
    }

    std::uint64_t inside = 0;
    bool decided = true;
    for (Vertex m : b_star) {
      if (a.count(m)) continue;
      auto adj = adjacent(g, b, m, horizon);
      if (!adj) {
        decided = false;
        ++out.undecided;
      } else if (*adj) {
        ++inside;
      }
    }
    if (!decided) {
      out.verdict = SaturationVerdict::unknown;
      out.witness = b;
      out.reason = "adjacency inside B* undecided within horizon";
      continue;
    }
    if (inside != size) {
      out.verdict = SaturationVerdict::violated;
      out.witness = b;
      out.reason = "|(N(b) \\ A) n B*| = " + std::to_string(inside) +
                   " differs from |B*| = " + std::to_string(size);
      return out;
    }
  }
  return out;
}

SaturationCheck is_saturated(const LazyGraph& g, const SaturationResult& r,
                             std::size_t horizon) {
  if (r.complete) {
    VertexSet b_star(r.members.begin(), r.members.end());
    return is_saturated(g, r.a, b_star, horizon);
  }

  // Incomplete run: B* is the infinite union of all rounds, so no member can
  // have |N(b) \ (A u B*)| > |B*|; saturation holds iff no member has an
  // outside neighbour.
  SaturationCheck out;
  auto member_neighbour = [&](Vertex w) -> std::optional<bool> {
    MemberScan s = scan(g, w, horizon);
    for (Vertex u : s.nbrs)
      if (r.contains(u)) return true;
    if (s.full) return false;
    return std::nullopt;
  };

  for (Vertex b : r.members) {
    ++out.checked;
    MemberScan s = scan(g, b, horizon);
    for (Vertex w : s.nbrs) {
      if (r.a.count(w) || r.contains(w)) continue;
      auto in = member_neighbour(w);
      if (!in) {
        ++out.undecided;
        out.verdict = SaturationVerdict::unknown;
        out.witness = b;
        out.reason = "membership of a neighbour undecided within horizon";
      } else if (!*in) {
        out.verdict = SaturationVerdict::violated;
        out.witness = b;
        out.reason = "neighbour '" + g.name(w) + "' lies outside A u B*";
        return out;
      }
    }
  }
  return out;
}

}  // namespace majc
