#include "majc/cli.hpp"

#include <chrono>
#include <cstdio>
#include <optional>

#include <CLI11.hpp>

#include "majc/choosability.hpp"
#include "majc/closure.hpp"
#include "majc/extend.hpp"
#include "majc/happiness.hpp"
#include "majc/saturation.hpp"
#include "majc/sublists.hpp"

namespace majc {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["subcommand"] = subcommand;
  j["config"] = config;
  j["config_hash"] = config_hash;
  j["outputs"] = outputs;
  j["artifacts"] = artifacts;
  j["timing"] = {{"elapsed_ms", elapsed_ms}};
  j["assertions"] = {{"checked", checks},
                     {"failed", failures.size()},
                     {"failures", failures},
                     {"warnings", warnings}};
  j["exit_code"] = exit_code;
  j["error"] = error.empty() ? Json(nullptr) : Json(error);
  return j;
}

namespace {

struct Options {
  std::string graph, set, generator, a, b, family, instance, base, lists, h, out, dot;
  std::optional<std::size_t> budget, sublist_horizon, compare_horizon, coverage;
  std::size_t k = 100;
  std::size_t horizon = 500;
  std::size_t prefix = 50;
  std::size_t check_horizon = 64;
  std::size_t scan_horizon = 4096;
  std::size_t family_scan = 64;
  std::size_t l = 2;
  std::size_t samples = 1000;
  std::size_t palette = 8;
  std::string mode = "exhaustive";
  std::string x;
  Colour cx = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

class Session {
 public:
  Session(RunReport& report, const Options& opt) : report_(report), opt_(opt) {}

  Json load(const std::string& key, const std::string& path) {
    Json j = parse_json(read_file(path));
    report_.config[key] = j;
    return j;
  }
  void param(const std::string& key, Json value) { report_.config[key] = std::move(value); }
  void check(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) report_.failures.push_back(what);
  }
  void warn(const std::string& what) { report_.warnings.push_back(what); }
  void emit(Json outputs) {
    if (!opt_.out.empty()) {
      write_file(opt_.out, outputs.dump(2) + "\n");
      report_.artifacts.push_back(opt_.out);
    }
    report_.outputs = std::move(outputs);
  }
  void dot(const FiniteGraph& g, const std::optional<PartialColouring>& colouring) {
    if (opt_.dot.empty()) return;
    write_file(opt_.dot, export_dot(g, colouring));
    report_.artifacts.push_back(opt_.dot);
  }

 private:
  RunReport& report_;
  const Options& opt_;
};

std::shared_ptr<const LazyGraph> load_generator(Session& s, const std::string& path) {
  return instantiate_generator(generator_from_json(s.load("generator", path)));
}

Json closure_trace_json(const ClosureResult& r, const LazyGraph& g) {
  Json stages = Json::array();
  for (const auto& st : r.trace.stages) stages.push_back(vertex_set_to_json(st, g));
  Json absorbed = Json::object();
  for (const auto& [v, i] : r.trace.absorbed_at) absorbed[g.name(v)] = i;
  return {{"stages", stages}, {"absorbed_at", absorbed}, {"complete", r.trace.complete}};
}

void run_closure(Session& s, const Options& opt) {
  FiniteGraph g = graph_from_json(s.load("graph", opt.graph));
  FiniteLazyGraph view(g);
  VertexSet a = vertex_set_from_json(s.load("set", opt.set), view);
  if (opt.budget) s.param("budget", *opt.budget);

  ClosureResult r = opt.budget ? closure(view, a, *opt.budget) : closure(g, a);
  Json out;
  out["closure"] = vertex_set_to_json(r.closed, view);
  out["trace"] = closure_trace_json(r, view);
  out["boundary"] = vertex_set_to_json(r.boundary(), view);
  ClosedCheck seed = is_closed(g, a);
  out["input_closed"] = seed.closed();
  if (seed.witness) out["input_witness"] = g.name(*seed.witness);

  if (r.trace.complete) {
    EliminationOrder order = elimination_order(r);
    Json names = Json::array();
    for (Vertex v : order.order) names.push_back(g.name(v));
    out["elimination_order"] = names;
    BoundaryDegreeReport report = boundary_degree_check(g, r);
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts)
      verdicts.push_back({{"vertex", g.name(v.vertex)}, {"pass", v.pass}});
    out["boundary_degree_check"] = {{"verdicts", verdicts}, {"all_pass", report.all_pass}};
    s.check(is_closed(g, r.closed).closed(), "closure is closed");
    s.check(!first_elimination_violation(g, a, order), "elimination order invariant");
    s.check(report.all_pass, "boundary degree check");
  }
  // seed set as colour 1, absorbed vertices as colour 2
  PartialColouring marks;
  for (Vertex v : r.closed) marks.set(v, a.count(v) ? 1 : 2);
  s.dot(g, marks);
  s.emit(std::move(out));
}

void run_saturate(Session& s, const Options& opt) {
  auto g = load_generator(s, opt.generator);
  VertexSet a = vertex_set_from_json(s.load("A", opt.a), *g);
  VertexSet b = vertex_set_from_json(s.load("B", opt.b), *g);
  const std::size_t budget = opt.budget.value_or(1000);
  s.param("budget", budget);
  s.param("check_horizon", opt.check_horizon);

  SaturationResult r = saturate(*g, a, b, Card::aleph0(), budget);
  SaturationCheck check = is_saturated(*g, r, opt.check_horizon);
  Json members = Json::array();
  for (Vertex v : r.members) members.push_back(g->name(v));
  Json generation = Json::object();
  for (const auto& [v, n] : r.generation) generation[g->name(v)] = n;
  Json out;
  out["b_star"] = members;
  out["generation"] = generation;
  out["rounds"] = r.rounds;
  out["complete"] = r.complete;
  out["check"] = {{"verdict", to_string(check.verdict)},
                  {"reason", check.reason},
                  {"checked", check.checked},
                  {"undecided", check.undecided}};
  if (check.witness) out["check"]["witness"] = g->name(*check.witness);
  s.check(check.verdict != SaturationVerdict::violated, "saturation predicate");
  bool seed_kept = true;
  for (Vertex v : b) seed_kept = seed_kept && r.contains(v);
  s.check(seed_kept, "B contained in B*");
  s.emit(std::move(out));
}

void run_disjointify(Session& s, const Options& opt) {
  FamilySpec family = family_from_json(s.load("family", opt.family));
  s.param("k", opt.k);
  s.param("seed", opt.seed);
  const std::size_t members = family.members.size();
  DisjointRefinement refinement(family.lazy(), opt.seed);
  std::vector<std::vector<Element>> prefixes;
  for (std::size_t i = 0; i < members; ++i)
    prefixes.push_back(refinement.prefix(i, opt.k, opt.k * members));

  bool subset = true, disjoint = true;
  std::set<Element> seen;
  for (std::size_t i = 0; i < members; ++i)
    for (Element e : prefixes[i]) {
      subset = subset && family.members[i].contains(e);
      disjoint = seen.insert(e).second && disjoint;
    }
  s.check(subset, "prefixes lie in their source sets");
  s.check(disjoint, "prefixes pairwise disjoint");
  s.emit({{"prefixes", prefixes}, {"steps", refinement.steps()}});
}

ListSystem default_lists(Session& s, const Options& opt, const LazyGraph& g) {
  if (opt.lists.empty()) return ListSystem(make_list({1, 2, 3}));
  return lists_from_json(s.load("lists", opt.lists), g);
}

void run_sublists(Session& s, const Options& opt) {
  auto g = load_generator(s, opt.generator);
  ListSystem lists = default_lists(s, opt, *g);
  const Vertex x = g->at(opt.x.empty() ? g->name(0) : opt.x);
  s.param("horizon", opt.horizon);
  s.param("x", g->name(x));
  s.param("cx", opt.cx);
  s.param("family_scan", opt.family_scan);
  s.param("scan_horizon", opt.scan_horizon);
  if (opt.coverage) s.param("coverage", *opt.coverage);

  auto enumeration = std::make_shared<BEnumeration>(g, VertexSet{}, x);
  SublistRequest request;
  request.vertex_at = [enumeration](std::size_t p) { return enumeration->at(p); };
  for (std::size_t p = 0; p < opt.family_scan; ++p) {
    Vertex c = enumeration->at(p);
    if (g->degree(c).is_finite()) continue;
    request.family.push_back(TrackedSet{
        "N(" + g->name(c) + ")", [g, c, horizon = opt.scan_horizon](Vertex v) {
          return adjacent(*g, c, v, horizon).value_or(false);
        }});
  }
  request.lists = lists;
  request.x = x;
  request.cx = opt.cx;
  SublistEngine engine(std::move(request));
  const SublistTable& t = engine.advance_to(opt.horizon);

  Json log = Json::array();
  std::set<Vertex> chosen;
  bool once = true;
  for (const auto& e : t.log()) {
    log.push_back({{"set", t.set_names()[e.set_index]},
                   {"colour", e.colour},
                   {"n", e.n},
                   {"vertex", g->name(e.vertex)},
                   {"struck", e.struck}});
    once = chosen.insert(e.vertex).second && once;
  }
  Json sublists = Json::object();
  for (Vertex v : chosen) sublists[g->name(v)] = t.sublist(v);
  Json coverage = Json::array();
  for (std::size_t i = 0; i < t.set_names().size(); ++i)
    for (Colour c : t.colours()) {
      Json row = {{"set", t.set_names()[i]},
                  {"colour", c},
                  {"counter", t.coverage_counter(i, c)}};
      coverage.push_back(std::move(row));
    }
  ColourList expected;
  for (Colour c : lists.at(x))
    if (c != opt.cx) expected.push_back(c);
  s.check(t.sublist(x) == expected, "L'(x) = L(x) minus c_x");
  s.check(once, "each vertex chosen at most once");

  Json out = {{"horizon", t.horizon()}, {"sets", t.set_names()}, {"log", log},
              {"sublists", sublists}, {"coverage", coverage},
              {"x_sublist", t.sublist(x)}};
  if (opt.coverage) {
    Json reached = Json::array();
    for (std::size_t i = 0; i < t.set_names().size(); ++i)
      for (Colour c : t.colours()) {
        auto h = engine.horizon_for_coverage(i, c, *opt.coverage, 1'000'000);
        reached.push_back({{"set", t.set_names()[i]}, {"colour", c},
                           {"horizon", h ? Json(*h) : Json()}});
        s.check(h.has_value(), "coverage reached for " + t.set_names()[i] + "/" +
                                   std::to_string(c));
      }
    out["coverage_horizons"] = reached;
  }
  s.emit(std::move(out));
}

void run_solve(Session& s, const Options& opt) {
  SolveInstance inst = instance_from_json(s.load("instance", opt.instance));
  FiniteLazyGraph view(inst.graph);
  SolveResult r = solve_finite(inst);
  SolveAudit a = audit(inst, r);
  s.check(a.agrees_with_frozen, "agrees with the frozen part");
  s.check(a.respects_sublists, "respects the sublists");
  s.check(a.avoids_cx, "b1 avoids c_x");
  s.check(a.free_vertices_happy, "free vertices happy");
  s.check(a.locally_optimal, "no improving recolouring");
  s.emit({{"colouring", colouring_to_json(r.colouring, view)},
          {"objective", r.objective},
          {"iterations", r.iterations},
          {"locally_optimal", r.locally_optimal},
          {"verdict", a.ok() ? "ok" : a.failure}});
  s.dot(inst.graph, r.colouring);
}

void run_check_choosable(Session& s, const Options& opt) {
  FiniteGraph g = graph_from_json(s.load("graph", opt.graph));
  FiniteLazyGraph view(g);
  OracleOptions o;
  if (opt.mode == "exhaustive") o.mode = OracleMode::exhaustive;
  else if (opt.mode == "sampled") o.mode = OracleMode::sampled;
  else throw Error(ErrorCode::invalid_argument, "--mode must be exhaustive or sampled");
  o.samples = opt.samples;
  o.seed = opt.seed;
  o.threads = opt.threads;
  s.param("l", opt.l);
  s.param("mode", opt.mode);
  s.param("palette", opt.palette);
  if (o.mode == OracleMode::sampled) {
    s.param("samples", opt.samples);
    s.param("seed", opt.seed);
  }
  ChoosabilityVerdict v = majority_choosable_oracle(g, opt.l, opt.palette, o);
  Json out = {{"choosable", v.choosable}, {"systems_checked", v.systems_checked}};
  if (v.failing) {
    out["witness"] = lists_to_json(*v.failing, view);
    s.check(!exists_majority_list_colouring(g, *v.failing).has_value(),
            "failing list system has no majority colouring");
  }
  s.emit(std::move(out));
}

void run_extend(Session& s, const Options& opt) {
  FiniteGraph g = graph_from_json(s.load("graph", opt.graph));
  FiniteLazyGraph view(g);
  PartialColouring base = colouring_from_json(s.load("base", opt.base), view);
  ListSystem lists = lists_from_json(s.load("lists", opt.lists), view);
  VertexSet a = opt.a.empty() ? base.domain() : vertex_set_from_json(s.load("A", opt.a), view);

  ExtensionPlan plan = make_plan(g, a, base, lists);
  ExtensionResult r = extend_over_boundary(plan);

  Json steps = Json::array();
  for (const auto& st : r.steps) {
    Json e = {{"vertex", g.name(st.z)}, {"safe", st.safe}, {"chosen", st.chosen}};
    e["avoided"] = st.avoided ? Json(*st.avoided) : Json();
    steps.push_back(std::move(e));
  }
  Json family = Json::object();
  for (const auto& [b, set] : plan.family.sets) {
    Json names = Json::array();
    for (Vertex z : set) names.push_back(g.name(z));
    family[g.name(b)] = names;
  }
  Json audits = Json::array();
  for (const auto& b : r.b_prime)
    audits.push_back({{"vertex", g.name(b.b)}, {"f_size", b.f_size},
                      {"closure_degree", b.closure_degree},
                      {"sufficient", b.sufficient}, {"happy", b.happy}});
  Json out = {{"colouring", colouring_to_json(r.colouring, view)},
              {"steps", steps},
              {"f_family", family},
              {"f_requirements_met", plan.family.meets_requirements},
              {"b_prime", audits},
              {"boundary_happy", r.boundary_happy}};
  if (plan.family.hall) {
    out["hall_certificate"] = {
        {"deficient", vertex_set_to_json(plan.family.hall->deficient, view)},
        {"neighbourhood", vertex_set_to_json(plan.family.hall->neighbourhood, view)},
        {"demand", plan.family.hall->demand}};
    s.warn("F family misses its requirements; see hall_certificate");
  }
  s.check(r.colouring.extends(base), "extension keeps the base colouring");
  s.check(r.boundary_happy, "every boundary vertex happy");
  s.check(r.audited_b_prime_happy, "every audited B' vertex happy");
  s.dot(g, r.colouring);
  s.emit(std::move(out));
}

void run_prefix_command(Session& s, const Options& opt) {
  auto g = load_generator(s, opt.generator);
  RunConfig config;
  config.graph = g;
  if (!opt.a.empty()) config.a = vertex_set_from_json(s.load("A", opt.a), *g);
  if (!opt.h.empty()) config.h = colouring_from_json(s.load("h", opt.h), *g);
  config.lists = default_lists(s, opt, *g);
  config.x = g->at(opt.x.empty() ? g->name(0) : opt.x);
  config.cx = opt.cx;
  config.horizon = opt.horizon;
  config.prefix = opt.prefix;
  config.sublist_horizon = opt.sublist_horizon;
  config.scan_horizon = opt.scan_horizon;
  config.compare_horizon = opt.compare_horizon;
  config.threads = opt.threads;
  config.seed = opt.seed;
  s.param("x", g->name(config.x));
  s.param("cx", opt.cx);
  s.param("horizon", opt.horizon);
  s.param("prefix", opt.prefix);
  s.param("seed", opt.seed);
  s.param("scan_horizon", opt.scan_horizon);
  if (opt.sublist_horizon) s.param("sublist_horizon", *opt.sublist_horizon);
  if (opt.compare_horizon) s.param("compare_horizon", *opt.compare_horizon);

  PrefixCertificate cert = run_prefix(config);
  s.check(cert.gx_differs_from_cx, "g(x) differs from c_x");
  s.check(cert.instances_audited == config.horizon, "every instance audited");
  bool sound = true;
  for (const auto& v : cert.verdicts) {
    if (v.verdict != CertVerdict::happy_certified) continue;
    HappinessStatus st = happiness_status(*g, cert.colouring, v.vertex, config.scan_horizon);
    sound = sound && st.verdict == Happiness::happy;
  }
  s.check(sound, "certified verdicts confirmed by recount");
  if (cert.truncated) s.warn("some instance missed an adjacency beyond the scan horizon");
  if (cert.stability) {
    if (!cert.stability->prefix_identical)
      s.warn("prefix differs at horizon " + std::to_string(cert.stability->compare_horizon));
    if (!cert.stability->counters_monotone)
      s.warn("an opposite-neighbour counter decreased at the larger horizon");
  }
  s.emit(certificate_to_json(cert, *g));
}

void add_threads(CLI::App* sub, Options& opt) {
  sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1U, 256U));
}

void add_seed(CLI::App* sub, Options& opt) {
  sub->add_option("--seed", opt.seed, "seed (default: $MAJC_SEED or 0)")->envname("MAJC_SEED");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::io_error:
    case ErrorCode::parse_error: return kExitIo;
    case ErrorCode::assertion_failed:
    case ErrorCode::hypothesis_violated:
    case ErrorCode::budget_exhausted:
    case ErrorCode::guard_exceeded:
    case ErrorCode::stalled_stream: return kExitVerification;
    default: return kExitUsage;
  }
}

}  // namespace

RunReport dispatch(const std::vector<std::string>& args) {
  RunReport report;
  report.command = args;
  report.config = Json::object();
  const auto start = std::chrono::steady_clock::now();

  Options opt;
  CLI::App app{"Majority list-colouring toolkit", "majc"};
  app.require_subcommand(1, 1);

  auto* closure_cmd = app.add_subcommand("closure", "closure, trace and elimination order of a set");
  closure_cmd->add_option("--graph", opt.graph, "graph JSON")->required();
  closure_cmd->add_option("--set", opt.set, "vertex set JSON")->required();
  closure_cmd->add_option("--budget", opt.budget, "bound on materialized vertices");
  closure_cmd->add_option("--dot", opt.dot, "write the graph as DOT, seed and closure marked");

  auto* saturate_cmd = app.add_subcommand("saturate", "A-saturated superset of B (mu = aleph0)");
  saturate_cmd->add_option("--generator", opt.generator, "generator JSON")->required();
  saturate_cmd->add_option("--A", opt.a, "vertex set JSON")->required();
  saturate_cmd->add_option("--B", opt.b, "vertex set JSON")->required();
  saturate_cmd->add_option("--budget", opt.budget, "bound on materialized vertices");
  saturate_cmd->add_option("--horizon", opt.check_horizon, "stream scan bound for the check");

  auto* disjointify_cmd = app.add_subcommand("disjointify", "disjoint refinement of a family of streams");
  disjointify_cmd->add_option("--family", opt.family, "family JSON")->required();
  disjointify_cmd->add_option("--k", opt.k, "prefix length");
  add_seed(disjointify_cmd, opt);

  auto* sublists_cmd = app.add_subcommand("sublists", "2-element sublist selection");
  sublists_cmd->add_option("--generator", opt.generator, "generator JSON")->required();
  sublists_cmd->add_option("--horizon", opt.horizon, "number of triples T");
  sublists_cmd->add_option("--x", opt.x, "distinguished vertex (default: vertex 0)");
  sublists_cmd->add_option("--cx", opt.cx, "colour forbidden at x");
  sublists_cmd->add_option("--lists", opt.lists, "list system JSON (default: all {1,2,3})");
  sublists_cmd->add_option("--coverage", opt.coverage, "report horizons reaching this counter");
  sublists_cmd->add_option("--family-scan", opt.family_scan, "vertices inspected for infinite degree");
  sublists_cmd->add_option("--scan-horizon", opt.scan_horizon, "stream scan bound");

  auto* solve_cmd = app.add_subcommand("solve", "local search on one finite instance");
  solve_cmd->add_option("--instance", opt.instance, "instance JSON")->required();
  solve_cmd->add_option("--dot", opt.dot, "write the coloured graph as DOT");

  auto* choosable_cmd = app.add_subcommand("check-choosable", "majority l-choosability oracle");
  choosable_cmd->add_option("--graph", opt.graph, "graph JSON")->required();
  choosable_cmd->add_option("--l", opt.l, "list size")->required();
  choosable_cmd->add_option("--mode", opt.mode, "exhaustive or sampled");
  choosable_cmd->add_option("--samples", opt.samples, "sampled list systems");
  choosable_cmd->add_option("--palette", opt.palette, "number of colours");
  add_seed(choosable_cmd, opt);

  auto* extend_cmd = app.add_subcommand("extend", "greedy extension over the boundary");
  extend_cmd->add_option("--graph", opt.graph, "graph JSON")->required();
  extend_cmd->add_option("--base", opt.base, "colouring of A and B* (JSON)")->required();
  extend_cmd->add_option("--lists", opt.lists, "list system JSON")->required();
  extend_cmd->add_option("--A", opt.a, "vertex set JSON (default: the whole base domain)");
  extend_cmd->add_option("--dot", opt.dot, "write the coloured graph as DOT");

  auto* prefix_cmd = app.add_subcommand("prefix", "certified prefix colouring of a countable graph");
  prefix_cmd->add_option("--generator", opt.generator, "generator JSON")->required();
  prefix_cmd->add_option("--A", opt.a, "closed vertex set JSON (default: empty)");
  prefix_cmd->add_option("--base", opt.h, "colouring h of A (default: lowest colours)");
  prefix_cmd->add_option("--lists", opt.lists, "list system JSON (default: all {1,2,3})");
  prefix_cmd->add_option("--x", opt.x, "distinguished vertex (default: vertex 0)");
  prefix_cmd->add_option("--cx", opt.cx, "colour forbidden at x");
  prefix_cmd->add_option("--horizon", opt.horizon, "number N of finite instances");
  prefix_cmd->add_option("--prefix", opt.prefix, "vertices k to certify");
  prefix_cmd->add_option("--sublist-horizon", opt.sublist_horizon, "triples processed (default 2N)");
  prefix_cmd->add_option("--scan-horizon", opt.scan_horizon, "stream scan bound");
  prefix_cmd->add_option("--compare-horizon", opt.compare_horizon, "second horizon for the stability report");
  add_seed(prefix_cmd, opt);

  for (CLI::App* sub : app.get_subcommands({})) {
    add_threads(sub, opt);
    sub->add_option("--out", opt.out, "write the outputs to this file");
  }

  std::vector<const char*> argv{"majc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    report.usage = app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    report.exit_code = kExitUsage;
    report.error = e.what();
    report.usage = app.help();
    return report;
  }

  CLI::App* sub = app.get_subcommands().front();
  report.subcommand = sub->get_name();
  Session session(report, opt);
  try {
    if (sub == closure_cmd) run_closure(session, opt);
    else if (sub == saturate_cmd) run_saturate(session, opt);
    else if (sub == disjointify_cmd) run_disjointify(session, opt);
    else if (sub == sublists_cmd) run_sublists(session, opt);
    else if (sub == solve_cmd) run_solve(session, opt);
    else if (sub == choosable_cmd) run_check_choosable(session, opt);
    else if (sub == extend_cmd) run_extend(session, opt);
    else run_prefix_command(session, opt);
    if (!report.failures.empty()) report.exit_code = kExitVerification;
  } catch (const Error& e) {
    report.exit_code = exit_code_for(e.code());
    report.error = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const Json::exception& e) {
    report.exit_code = kExitIo;
    report.error = std::string("parse_error: ") + e.what();
  }

  report.config_hash = hex64(fnv1a64(report.subcommand + "\n" + report.config.dump()));
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace majc
