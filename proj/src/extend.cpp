#include "majc/extend.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <limits>

#include "majc/closure.hpp"
#include "majc/error.hpp"
#include "majc/happiness.hpp"

namespace majc {

BPrime compute_B_prime(const FiniteGraph& g, const VertexSet& a,
                       const VertexSet& b_star) {
  BPrime out;
  VertexSet inside = a;
  inside.insert(b_star.begin(), b_star.end());
  ClosureResult cl = closure(g, inside);
  out.closure = cl.closed;
  out.boundary = cl.boundary();
  for (Vertex b : b_star) {
    std::uint64_t on_boundary = 0, in = 0;
    for (Vertex w : g.neighbours(b)) {
      if (out.boundary.count(w)) ++on_boundary;
      else if (inside.count(w)) ++in;
    }
    BPrimeEntry e{b, Card::finite(on_boundary), Card::finite(in), false};
    e.included = e.boundary_neighbours > e.inside_neighbours;
    if (e.included) out.members.insert(b);
    out.entries.push_back(e);
  }
  return out;
}

std::optional<Vertex> FFamily::owner(Vertex z) const {
  for (const auto& [b, set] : sets)
    if (std::binary_search(set.begin(), set.end(), z)) return b;
  return std::nullopt;
}

namespace {

// Edmonds-Karp on a small bipartite network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add(std::size_t u, std::size_t v, std::size_t cap) {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0});
  }

  std::size_t max_flow(std::size_t s, std::size_t t) {
    std::size_t total = 0;
    while (true) {
      std::vector<std::size_t> via(adj_.size(), npos);
      std::vector<bool> seen(adj_.size(), false);
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t e : adj_[u]) {
          std::size_t v = edges_[e].to;
          if (!seen[v] && edges_[e].cap > 0) {
            seen[v] = true;
            via[v] = e;
            queue.push_back(v);
          }
        }
      }
      if (!seen[t]) return total;
      std::size_t push = std::numeric_limits<std::size_t>::max();
      for (std::size_t v = t; v != s; v = edges_[via[v] ^ 1].to)
        push = std::min(push, edges_[via[v]].cap);
      for (std::size_t v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= push;
        edges_[via[v] ^ 1].cap += push;
      }
      total += push;
    }
  }

  std::vector<bool> residual_reach(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[u])
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          stack.push_back(edges_[e].to);
        }
    }
    return seen;
  }

  // Flow on the forward edge u -> v (given as the edge index).
  std::size_t flow(std::size_t e) const { return edges_[e ^ 1].cap; }
  const std::vector<std::size_t>& out(std::size_t u) const { return adj_[u]; }
  std::size_t target(std::size_t e) const { return edges_[e].to; }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  struct Arc {
    std::size_t to;
    std::size_t cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> edges_;
};

}  // namespace

FFamily build_F_family(const FiniteGraph& g, const VertexSet& b_prime,
                       const VertexSet& boundary,
                       const std::map<Vertex, std::size_t>& required) {
  FFamily out;
  if (b_prime.empty()) return out;

  std::vector<Vertex> bs(b_prime.begin(), b_prime.end());
  std::vector<Vertex> zs(boundary.begin(), boundary.end());
  auto z_index = [&](Vertex z) {
    return static_cast<std::size_t>(std::lower_bound(zs.begin(), zs.end(), z) - zs.begin());
  };
  const std::size_t source = 0, sink = 1 + bs.size() + zs.size();
  FlowNetwork net(sink + 1);
  const std::size_t big = zs.size() + 1;

  std::size_t demand = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto it = required.find(bs[i]);
    std::size_t need = it == required.end() ? 0 : it->second;
    out.required[bs[i]] = need;
    demand += need;
    net.add(source, 1 + i, need);
    for (Vertex w : g.neighbours(bs[i]))
      if (boundary.count(w)) net.add(1 + i, 1 + bs.size() + z_index(w), big);
  }
  for (std::size_t j = 0; j < zs.size(); ++j) net.add(1 + bs.size() + j, sink, 1);

  const std::size_t flow = net.max_flow(source, sink);
  out.meets_requirements = flow == demand;
  if (!out.meets_requirements) {
    auto reach = net.residual_reach(source);
    HallCertificate cert;
    for (std::size_t i = 0; i < bs.size(); ++i)
      if (reach[1 + i]) {
        cert.deficient.insert(bs[i]);
        cert.demand += out.required[bs[i]];
        for (Vertex w : g.neighbours(bs[i]))
          if (boundary.count(w)) cert.neighbourhood.insert(w);
      }
    out.hall = std::move(cert);
  }

  std::vector<bool> taken(zs.size(), false);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto& set = out.sets[bs[i]];
    for (std::size_t e : net.out(1 + i)) {
      std::size_t node = net.target(e);
      if (node <= bs.size() || node == sink || net.flow(e) == 0) continue;
      std::size_t j = node - 1 - bs.size();
      taken[j] = true;
      set.push_back(zs[j]);
    }
  }

  // Hand out the rest, smallest F_b first.
  while (true) {
    std::optional<std::size_t> best_b;
    std::size_t best_z = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      std::optional<std::size_t> free_z;
      for (Vertex w : g.neighbours(bs[i]))
        if (boundary.count(w) && !taken[z_index(w)]) {
          free_z = z_index(w);
          break;
        }
      if (!free_z) continue;
      if (!best_b || out.sets[bs[i]].size() < out.sets[bs[*best_b]].size()) {
        best_b = i;
        best_z = *free_z;
      }
    }
    if (!best_b) break;
    taken[best_z] = true;
    out.sets[bs[*best_b]].push_back(zs[best_z]);
  }
  for (auto& [b, set] : out.sets) std::sort(set.begin(), set.end());
  return out;
}

std::map<Vertex, std::size_t> half_closure_requirement(const FiniteGraph& g,
                                                       const BPrime& bp) {
  std::map<Vertex, std::size_t> out;
  for (Vertex b : bp.members) {
    std::size_t d = 0;
    for (Vertex w : g.neighbours(b)) d += bp.closure.count(w);
    out[b] = (d + 1) / 2;
  }
  return out;
}

std::vector<std::vector<Element>> f_family_prefixes(LazySetFamily streams,
                                                    std::size_t k,
                                                    std::uint64_t seed) {
  const std::size_t members = streams.size.value_or(0);
  if (!streams.size)
    throw Error(ErrorCode::invalid_argument, "F families are indexed by a finite B'");
  DisjointRefinement refinement(std::move(streams), seed);
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < members; ++i)
    out.push_back(refinement.prefix(i, k, k * members + members));
  return out;
}

ExtensionPlan make_plan(const FiniteGraph& g, const VertexSet& a,
                        const PartialColouring& base, const ListSystem& lists) {
  VertexSet domain = base.domain();
  for (Vertex v : a)
    if (!domain.count(v))
      throw Error(ErrorCode::invalid_argument, "every vertex of A must be coloured");
  VertexSet b_star;
  std::set_difference(domain.begin(), domain.end(), a.begin(), a.end(),
                      std::inserter(b_star, b_star.end()));

  ExtensionPlan plan;
  plan.graph = g;
  plan.base = base;
  plan.lists = lists;
  ClosureResult cl = closure(g, domain);
  plan.order = elimination_order(cl).order;
  BPrime bp = compute_B_prime(g, a, b_star);
  plan.family = build_F_family(g, bp.members, bp.boundary,
                               half_closure_requirement(g, bp));
  return plan;
}

ExtensionResult extend_over_boundary(const ExtensionPlan& plan) {
  const FiniteGraph& g = plan.graph;

  // Plan checks: disjoint F sets within N(b), and the elimination invariant.
  std::map<Vertex, Vertex> owner;
  for (const auto& [b, set] : plan.family.sets)
    for (Vertex z : set) {
      if (!owner.emplace(z, b).second)
        throw Error(ErrorCode::invalid_argument,
                    "boundary vertex '" + g.name(z) + "' lies in two F sets");
      if (!g.adjacent(b, z))
        throw Error(ErrorCode::invalid_argument,
                    "F set of '" + g.name(b) + "' contains a non-neighbour");
    }

  ExtensionResult r;
  r.colouring = plan.base;
  for (Vertex z : plan.order) {
    if (r.colouring.contains(z))
      throw Error(ErrorCode::invalid_argument,
                  "boundary vertex '" + g.name(z) + "' is already coloured");
    if (g.degree(z) == 0)
      throw Error(ErrorCode::isolated_vertex,
                  "boundary vertex '" + g.name(z) + "' is isolated");
    std::map<Colour, std::size_t> seen;
    std::size_t coloured = 0;
    for (Vertex w : g.neighbours(z)) {
      auto c = r.colouring.get(w);
      if (!c)
        throw Error(ErrorCode::hypothesis_violated,
                    "neighbour '" + g.name(w) + "' of '" + g.name(z) +
                        "' is uncoloured at its turn; not an elimination order");
      ++seen[*c];
      ++coloured;
    }

    const ColourList& list = plan.lists.at(z);
    if (list.size() != 3)
      throw Error(ErrorCode::hypothesis_violated,
                  "boundary vertex '" + g.name(z) + "' needs a list of 3 colours");
    ExtensionStep step{z, {}, std::nullopt, 0};
    for (Colour c : list) {
      std::size_t same = seen.count(c) ? seen[c] : 0;
      if (same <= coloured - same) step.safe.push_back(c);
    }
    MAJC_CHECK(step.safe.size() + 1 >= list.size(),
               "two colours are unsafe at '" + g.name(z) + "'");
    MAJC_CHECK(step.safe.size() >= 2,
               "fewer than two safe colours at '" + g.name(z) + "'");

    std::optional<Colour> pick;
    if (auto it = owner.find(z); it != owner.end()) {
      step.avoided = r.colouring.at(it->second);
      for (Colour c : step.safe)
        if (c != *step.avoided) {
          pick = c;
          break;
        }
    } else {
      pick = step.safe.front();
    }
    MAJC_CHECK(pick.has_value(), "no safe colour left at '" + g.name(z) + "'");
    step.chosen = *pick;
    r.colouring.set(z, *pick);
    r.steps.push_back(std::move(step));
  }

  for (Vertex z : plan.order)
    if (happiness_status(g, r.colouring, z).verdict != Happiness::happy)
      r.boundary_happy = false;

  for (const auto& [b, set] : plan.family.sets) {
    BPrimeAudit audit{b, set.size(), 0, false, false};
    for (Vertex w : g.neighbours(b)) audit.closure_degree += r.colouring.contains(w);
    audit.sufficient = 2 * audit.f_size >= audit.closure_degree;
    audit.happy = happiness_status(g, r.colouring, b).verdict == Happiness::happy;
    if (audit.sufficient && !audit.happy) r.audited_b_prime_happy = false;
    r.b_prime.push_back(audit);
  }
  return r;
}

}  // namespace majc
