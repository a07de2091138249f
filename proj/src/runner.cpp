#include "majc/runner.hpp"

#include <algorithm>
#include <thread>

#include "majc/closure.hpp"
#include "majc/error.hpp"
#include "majc/happiness.hpp"

namespace majc {

BEnumeration::BEnumeration(std::shared_ptr<const LazyGraph> graph, VertexSet a,
                           Vertex x)
    : graph_(std::move(graph)), a_(std::move(a)) {
  if (a_.count(x))
    throw Error(ErrorCode::invalid_argument, "x must lie in B, not in A");
  if (!graph_->contains(x))
    throw Error(ErrorCode::unknown_vertex, "x is not a vertex of the graph");
  seen_.insert(x);
  emit(x);
  queue_.emplace_back(x, 0);
}

void BEnumeration::emit(Vertex v) {
  position_.emplace(v, order_.size());
  order_.push_back(v);
}

void BEnumeration::grow() {
  const std::size_t before = order_.size();
  auto visit = [&](Vertex w) {
    if (!seen_.insert(w).second) return;
    if (!a_.count(w)) emit(w);
    queue_.emplace_back(w, 0);
  };
  while (order_.size() == before) {
    if (head_ == queue_.size()) {
      auto n = graph_->order();
      while (seen_.count(global_cursor_)) {
        ++global_cursor_;
        if (n && global_cursor_ >= *n)
          throw Error(ErrorCode::hypothesis_violated,
                      "B is finite; the construction needs an infinite B");
      }
      if (n && global_cursor_ >= *n)
        throw Error(ErrorCode::hypothesis_violated,
                    "B is finite; the construction needs an infinite B");
      visit(global_cursor_);
      continue;
    }
    auto [v, next] = queue_[head_++];
    Card d = graph_->degree(v);
    if (d.is_finite()) {
      auto nbrs = graph_->neighbours(v, d.value());
      for (std::size_t i = next; i < nbrs.size(); ++i) visit(nbrs[i]);
    } else {
      visit(graph_->neighbours(v, next + 1)[next]);
      queue_.emplace_back(v, next + 1);
    }
  }
}

Vertex BEnumeration::at(std::size_t i) {
  while (order_.size() <= i) grow();
  return order_[i];
}

std::optional<std::size_t> BEnumeration::position(Vertex v) const {
  auto it = position_.find(v);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

void validate(const RunConfig& config) {
  if (!config.graph) throw Error(ErrorCode::invalid_argument, "no graph");
  const LazyGraph& g = *config.graph;
  if (config.horizon < 1)
    throw Error(ErrorCode::invalid_argument, "horizon must be at least 1");
  if (config.prefix > config.horizon)
    throw Error(ErrorCode::invalid_argument, "prefix must not exceed the horizon");
  if (config.a.count(config.x))
    throw Error(ErrorCode::invalid_argument, "x must lie in B, not in A");
  if (!list_contains(config.lists.at(config.x), config.cx))
    throw Error(ErrorCode::invalid_argument, "c_x must belong to the list of x");

  ClosedCheck closed = is_closed(g, config.a, config.scan_horizon);
  if (closed.verdict == Closedness::not_closed)
    throw Error(ErrorCode::hypothesis_violated,
                "hypothesis violated: A must be closed, but '" +
                    g.name(*closed.witness) + "' has all its neighbours in A");
  if (closed.verdict == Closedness::undecided)
    throw Error(ErrorCode::hypothesis_violated,
                "hypothesis unverified: closedness of A is undecided within the "
                "scan horizon");

  if (config.h) {
    for (Vertex v : config.a)
      if (!config.h->contains(v))
        throw Error(ErrorCode::invalid_argument,
                    "h must colour every vertex of A");
    if (!config.lists.respects(*config.h))
      throw Error(ErrorCode::invalid_argument, "h must respect the lists");
  }
}

namespace {

PartialColouring colouring_of_a(const RunConfig& config) {
  PartialColouring h;
  for (Vertex v : config.a)
    h.set(v, config.h ? config.h->at(v) : config.lists.at(v).front());
  return h;
}

VertexSet a_neighbours(const LazyGraph& g, Vertex b, const VertexSet& a,
                       std::size_t horizon) {
  VertexSet out;
  Card d = g.degree(b);
  if (d.is_finite()) {
    for (Vertex w : full_neighbourhood(g, b))
      if (a.count(w)) out.insert(w);
    return out;
  }
  // Undecided pairs are kept: an extra frozen vertex in G_n is harmless.
  for (Vertex v : a)
    if (adjacent(g, b, v, horizon).value_or(true)) out.insert(v);
  return out;
}

}  // namespace

PreparedRun build_instances(const RunConfig& config) {
  validate(config);
  const LazyGraph& g = *config.graph;
  PreparedRun run;
  run.h = colouring_of_a(config);

  auto enumeration = std::make_shared<BEnumeration>(config.graph, config.a, config.x);
  for (std::size_t i = 0; i < config.horizon; ++i)
    run.b_order.push_back(enumeration->at(i));

  SublistRequest request;
  request.vertex_at = [enumeration](std::size_t p) { return enumeration->at(p); };
  for (Vertex b : run.b_order) {
    if (g.degree(b).is_finite()) continue;
    run.family_centres.push_back(b);
    request.family.push_back(TrackedSet{
        "N(" + g.name(b) + ") n B",
        [graph = config.graph, a = config.a, b, horizon = config.scan_horizon](Vertex v) {
          if (a.count(v)) return false;
          return adjacent(*graph, b, v, horizon).value_or(false);
        }});
  }
  request.lists = config.lists;
  request.x = config.x;
  request.cx = config.cx;
  request.ell = 2;
  run.sublists = select_sublists(std::move(request),
                                 config.sublist_horizon.value_or(2 * config.horizon));

  VertexSet vertices;
  for (std::size_t n = 1; n <= config.horizon; ++n) {
    Vertex b = run.b_order[n - 1];
    vertices.insert(b);
    for (Vertex v : a_neighbours(g, b, config.a, config.scan_horizon)) vertices.insert(v);

    InducedSubgraph sub = induced_finite_subgraph(g, vertices, config.scan_horizon);
    run.truncated = run.truncated || sub.truncated;
    SolveInstance inst;
    for (Vertex local = 0; local < sub.source.size(); ++local) {
      Vertex global = sub.source[local];
      if (config.a.count(global)) inst.frozen.set(local, run.h.at(global));
      else inst.free_lists[local] = run.sublists.sublist(global);
      if (global == config.x) inst.b1 = local;
    }
    inst.cx = config.cx;
    inst.graph = std::move(sub.graph);
    run.instances.push_back(std::move(inst));
    run.sources.push_back(std::move(sub.source));
  }
  return run;
}

DiagonalExtraction diagonal_extract(
    const std::vector<std::vector<Colour>>& colourings, std::size_t k) {
  const std::size_t n_max = colourings.size();
  if (k > n_max)
    throw Error(ErrorCode::invalid_argument, "k must not exceed the number of colourings");
  DiagonalExtraction out;
  std::vector<std::size_t> survivors(n_max);
  for (std::size_t n = 0; n < n_max; ++n) survivors[n] = n;  // 0-based instance ids

  for (std::size_t j = 0; j < k; ++j) {
    struct Vote {
      std::size_t last = 0;
      std::size_t count = 0;
    };
    std::map<Colour, Vote> votes;
    for (std::size_t n : survivors) {
      if (colourings[n].size() <= j) continue;
      Vote& v = votes[colourings[n][j]];
      v.last = std::max(v.last, n);
      ++v.count;
    }
    MAJC_CHECK(!votes.empty(), "no surviving colouring defines position " +
                                   std::to_string(j + 1));
    auto best = votes.begin();
    for (auto it = votes.begin(); it != votes.end(); ++it) {
      const Vote& a = it->second;
      const Vote& b = best->second;
      if (a.last > b.last || (a.last == b.last && a.count > b.count)) best = it;
    }
    const Colour chosen = best->first;
    std::vector<std::size_t> next;
    for (std::size_t n : survivors)
      if (colourings[n].size() > j && colourings[n][j] == chosen) next.push_back(n);
    survivors = std::move(next);
    out.prefix.push_back(chosen);
    out.survivors.push_back(survivors.size());
  }
  return out;
}

std::string_view to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::happy_certified: return "happy-certified";
    case CertVerdict::unhappy: return "unhappy";
    case CertVerdict::pending: return "pending";
  }
  return "pending";
}

std::vector<VertexVerdict> certify(
    const LazyGraph& g, const PartialColouring& colouring,
    const std::vector<Vertex>& prefix, std::size_t horizon,
    const std::map<Vertex, std::uint64_t>& opposite_witnesses) {
  std::vector<VertexVerdict> out;
  for (Vertex v : prefix) {
    const Colour own = colouring.at(v);
    Card d = g.degree(v);
    auto nbrs = d.is_finite() ? full_neighbourhood(g, v) : g.neighbours(v, horizon);
    VertexVerdict verdict{v, CertVerdict::pending, 0, 0, std::nullopt};
    bool all_coloured = true;
    for (Vertex w : nbrs) {
      auto c = colouring.get(w);
      if (!c) {
        all_coloured = false;
        continue;
      }
      (*c == own ? verdict.same : verdict.diff)++;
    }
    if (d.is_finite() && all_coloured)
      verdict.verdict = verdict.same <= verdict.diff ? CertVerdict::happy_certified
                                                     : CertVerdict::unhappy;
    if (auto it = opposite_witnesses.find(v); it != opposite_witnesses.end())
      verdict.opposite_witnesses = it->second;
    out.push_back(verdict);
  }
  return out;
}

namespace {

std::vector<SolveResult> solve_all(const std::vector<SolveInstance>& instances,
                                   unsigned threads) {
  std::vector<SolveResult> results(instances.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) results[i] = solve_finite(instances[i]);
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0, instances.size());
    return results;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (instances.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = std::min(instances.size(), t * chunk);
      std::size_t end = std::min(instances.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

PrefixCertificate run_prefix(const RunConfig& config) {
  PreparedRun run = build_instances(config);
  const LazyGraph& g = *config.graph;
  const std::size_t k = config.prefix;

  std::vector<SolveResult> results = solve_all(run.instances, config.threads);

  PrefixCertificate cert;
  std::vector<std::vector<Colour>> colourings(results.size());
  for (std::size_t n = 0; n < results.size(); ++n) {
    SolveAudit a = audit(run.instances[n], results[n]);
    MAJC_CHECK(a.ok(), "instance G_" + std::to_string(n + 1) +
                           " failed its audit: " + a.failure);
    ++cert.instances_audited;
    cert.instance_orders.push_back(run.instances[n].graph.order());
    const auto& source = run.sources[n];
    for (std::size_t j = 0; j < std::min(n + 1, k); ++j) {
      Vertex b = run.b_order[j];
      auto local = std::lower_bound(source.begin(), source.end(), b) - source.begin();
      colourings[n].push_back(results[n].colouring.at(static_cast<Vertex>(local)));
    }
  }

  DiagonalExtraction extraction = diagonal_extract(colourings, k);
  cert.survivors = extraction.survivors;
  cert.colouring = run.h;
  for (std::size_t j = 0; j < k; ++j) {
    Vertex b = run.b_order[j];
    cert.prefix.push_back(b);
    cert.colouring.set(b, extraction.prefix[j]);
    cert.sublists[b] = run.sublists.sublist(b);
    MAJC_CHECK(list_contains(cert.sublists[b], extraction.prefix[j]),
               "extracted colour outside the sublist of '" + g.name(b) + "'");
  }
  cert.gx_differs_from_cx = k == 0 || cert.colouring.at(config.x) != config.cx;
  MAJC_CHECK(cert.gx_differs_from_cx, "extracted colouring gives x the colour c_x");

  std::map<Vertex, std::uint64_t> witnesses;
  for (std::size_t i = 0; i < run.family_centres.size(); ++i) {
    Vertex c = run.family_centres[i];
    if (auto colour = cert.colouring.get(c))
      witnesses[c] = run.sublists.coverage_counter(i + 1, *colour);
  }
  cert.verdicts = certify(g, cert.colouring, cert.prefix, config.scan_horizon, witnesses);
  cert.truncated = run.truncated;

  if (config.compare_horizon) {
    RunConfig second = config;
    second.horizon = *config.compare_horizon;
    second.compare_horizon.reset();
    if (config.sublist_horizon)
      second.sublist_horizon = *config.sublist_horizon * second.horizon / config.horizon;
    PrefixCertificate other = run_prefix(second);
    StabilityReport report;
    report.compare_horizon = second.horizon;
    for (std::size_t j = 0; j < k; ++j) {
      Vertex b = cert.prefix[j];
      if (other.colouring.at(b) != cert.colouring.at(b)) {
        report.prefix_identical = false;
        report.first_divergence = j;
        break;
      }
    }
    for (std::size_t j = 0; j < cert.verdicts.size(); ++j) {
      const auto& mine = cert.verdicts[j].opposite_witnesses;
      const auto& theirs = other.verdicts[j].opposite_witnesses;
      if (mine && (!theirs || *theirs < *mine)) report.counters_monotone = false;
    }
    cert.stability = report;
  }
  return cert;
}

}  // namespace majc
