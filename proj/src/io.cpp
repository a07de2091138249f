#include "majc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace majc {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::parse_error, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string id_of(const Json& j) {
  if (!j.is_string()) bad("vertex ids must be strings, got " + j.dump());
  return j.get<std::string>();
}

Colour colour_of(const Json& j) {
  if (!j.is_number_integer()) bad("colours must be integers, got " + j.dump());
  return j.get<Colour>();
}

std::uint64_t natural_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

ColourList list_of(const Json& j) {
  if (!j.is_array()) bad("colour lists must be arrays");
  std::vector<Colour> colours;
  for (const Json& c : j) colours.push_back(colour_of(c));
  return make_list(std::move(colours));
}

Vertex resolve(const LazyGraph& g, const Json& id) {
  return g.at(id_of(id));
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write to '" + path.string() + "' failed");
}

FiniteGraph graph_from_json(const Json& j, GraphOptions options) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) bad("'vertices' and 'edges' must be arrays");
  if (auto it = j.find("allow_isolated"); it != j.end()) {
    if (!it->is_boolean()) bad("'allow_isolated' must be a boolean");
    options.allow_isolated = it->get<bool>();
  }
  std::vector<std::string> names;
  for (const Json& v : vs) names.push_back(id_of(v));
  std::sort(names.begin(), names.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : es) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a pair of ids");
    edges.emplace_back(id_of(e[0]), id_of(e[1]));
  }
  return FiniteGraph::from_named(std::move(names), edges, options);
}

FiniteGraph parse_graph_json(std::string_view text, GraphOptions options) {
  return graph_from_json(parse_json(text), options);
}

Json graph_to_json(const FiniteGraph& g) {
  Json j;
  j["vertices"] = g.names();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  j["edges"] = std::move(edges);
  if (g.allows_isolated()) j["allow_isolated"] = true;
  return j;
}

std::string serialize_graph(const FiniteGraph& g) { return graph_to_json(g).dump(); }

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

constexpr const char* kPalette[] = {"red",    "blue",  "green", "orange",
                                    "purple", "brown", "cyan",  "magenta"};

}  // namespace

std::string export_dot(const FiniteGraph& g,
                       const std::optional<PartialColouring>& colouring) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << dot_id(g.name(v));
    if (colouring) {
      if (auto c = colouring->get(v)) {
        auto slot = static_cast<std::size_t>(((*c % 8) + 8) % 8);
        out << " [colour=" << *c << ", color=" << kPalette[slot] << "]";
      }
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges())
    out << "  " << dot_id(g.name(u)) << " -- " << dot_id(g.name(v)) << ";\n";
  out << "}\n";
  return out.str();
}

GeneratorSpec generator_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) bad("'family' must be a string");
  auto family = parse_family(fam.get<std::string>());
  if (!family)
    throw Error(ErrorCode::invalid_argument,
                "unknown generator family '" + fam.get<std::string>() + "'");
  GeneratorSpec spec;
  spec.family = *family;
  if (auto it = j.find("seed"); it != j.end()) spec.seed = natural_of(*it, "seed");
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) bad("'params' must be an object");
    for (const auto& [key, value] : it->items()) {
      if (key == "degree" || key == "d") {
        spec.degree = natural_of(value, "degree");
      } else if (key == "max_degree") {
        spec.max_degree = natural_of(value, "max_degree");
      } else if (key == "rest") {
        if (value == "path") spec.rest = DominatedFamily::path;
        else if (value == "matching") spec.rest = DominatedFamily::matching;
        else throw Error(ErrorCode::invalid_argument, "'rest' must be path or matching");
      } else if (key == "seed") {
        spec.seed = natural_of(value, "seed");
      } else {
        throw Error(ErrorCode::invalid_argument, "unknown generator parameter '" + key + "'");
      }
    }
  }
  return spec;
}

Json generator_to_json(const GeneratorSpec& spec) {
  Json params = Json::object();
  switch (spec.family) {
    case Family::regular_tree: params["degree"] = spec.degree; break;
    case Family::seeded_locally_finite: params["max_degree"] = spec.max_degree; break;
    case Family::dominating_vertex:
      params["rest"] = spec.rest == DominatedFamily::path ? "path" : "matching";
      break;
    default: break;
  }
  return {{"family", family_name(spec.family)}, {"params", params}, {"seed", spec.seed}};
}

VertexSet vertex_set_from_json(const Json& j, const LazyGraph& g) {
  if (!j.is_array()) bad("vertex sets must be arrays of ids");
  VertexSet out;
  for (const Json& id : j) out.insert(resolve(g, id));
  return out;
}

Json vertex_set_to_json(const VertexSet& s, const LazyGraph& g) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

PartialColouring colouring_from_json(const Json& j, const LazyGraph& g) {
  if (!j.is_object()) bad("colourings must be objects mapping ids to colours");
  PartialColouring out;
  for (const auto& [id, c] : j.items()) out.set(g.at(id), colour_of(c));
  return out;
}

Json colouring_to_json(const PartialColouring& c, const LazyGraph& g) {
  Json out = Json::object();
  for (const auto& [v, colour] : c) out[g.name(v)] = colour;
  return out;
}

ListSystem lists_from_json(const Json& j, const LazyGraph& g) {
  if (!j.is_object()) bad("list systems must be objects");
  ListSystem out;
  if (auto it = j.find("default"); it != j.end()) out = ListSystem(list_of(*it));
  if (auto it = j.find("lists"); it != j.end()) {
    if (!it->is_object()) bad("'lists' must map ids to colour lists");
    for (const auto& [id, list] : it->items()) out.set(g.at(id), list_of(list));
  }
  return out;
}

Json lists_to_json(const ListSystem& lists, const LazyGraph& g) {
  Json out = Json::object();
  if (lists.default_list()) out["default"] = *lists.default_list();
  Json explicit_lists = Json::object();
  for (const auto& [v, list] : lists.explicit_lists()) explicit_lists[g.name(v)] = list;
  out["lists"] = std::move(explicit_lists);
  return out;
}

SolveInstance instance_from_json(const Json& j) {
  SolveInstance inst;
  inst.graph = graph_from_json(field(j, "graph"));
  FiniteLazyGraph view(inst.graph);
  if (auto it = j.find("frozen"); it != j.end()) inst.frozen = colouring_from_json(*it, view);
  const Json& lists = field(j, "lists");
  if (!lists.is_object()) bad("'lists' must map ids to colour lists");
  for (const auto& [id, list] : lists.items())
    inst.free_lists[view.at(id)] = list_of(list);
  if (auto it = j.find("b1"); it != j.end()) inst.b1 = resolve(view, *it);
  if (auto it = j.find("cx"); it != j.end()) inst.cx = colour_of(*it);
  return inst;
}

Json instance_to_json(const SolveInstance& inst) {
  FiniteLazyGraph view(inst.graph);
  Json j;
  j["graph"] = graph_to_json(inst.graph);
  j["frozen"] = colouring_to_json(inst.frozen, view);
  Json lists = Json::object();
  for (const auto& [v, list] : inst.free_lists) lists[inst.graph.name(v)] = list;
  j["lists"] = std::move(lists);
  if (inst.b1) j["b1"] = inst.graph.name(*inst.b1);
  if (inst.cx) j["cx"] = *inst.cx;
  return j;
}

LazySet StreamSpec::lazy() const {
  if (kind == Kind::arithmetic) {
    return LazySet{Card::aleph0(), [start = start, step = step](std::size_t k) {
                     return std::optional<Element>(start + step * k);
                   }};
  }
  return LazySet{Card::finite(elements.size()), [elements = elements](std::size_t k) {
                   return k < elements.size() ? std::optional<Element>(elements[k])
                                              : std::nullopt;
                 }};
}

bool StreamSpec::contains(Element e) const {
  if (kind == Kind::arithmetic) return e >= start && (e - start) % step == 0;
  return std::find(elements.begin(), elements.end(), e) != elements.end();
}

LazySetFamily FamilySpec::lazy() const {
  std::vector<LazySet> sets;
  for (const auto& m : members) sets.push_back(m.lazy());
  return LazySetFamily::of(std::move(sets));
}

FamilySpec family_from_json(const Json& j) {
  const Json& sets = field(j, "sets");
  if (!sets.is_array()) bad("'sets' must be an array");
  FamilySpec out;
  for (const Json& s : sets) {
    const Json& kind = field(s, "kind");
    StreamSpec spec;
    if (kind == "arithmetic") {
      spec.start = natural_of(field(s, "start"), "start");
      spec.step = natural_of(field(s, "step"), "step");
      if (spec.step == 0)
        throw Error(ErrorCode::invalid_argument, "arithmetic streams need step >= 1");
    } else if (kind == "explicit") {
      spec.kind = StreamSpec::Kind::explicit_list;
      const Json& elements = field(s, "elements");
      if (!elements.is_array()) bad("'elements' must be an array");
      for (const Json& e : elements) spec.elements.push_back(natural_of(e, "element"));
    } else {
      throw Error(ErrorCode::invalid_argument, "unknown stream kind " + kind.dump());
    }
    out.members.push_back(std::move(spec));
  }
  return out;
}

Json family_to_json(const FamilySpec& f) {
  Json sets = Json::array();
  for (const auto& m : f.members) {
    if (m.kind == StreamSpec::Kind::arithmetic)
      sets.push_back({{"kind", "arithmetic"}, {"start", m.start}, {"step", m.step}});
    else
      sets.push_back({{"kind", "explicit"}, {"elements", m.elements}});
  }
  return {{"sets", sets}};
}

namespace {

std::optional<CertVerdict> parse_verdict(const std::string& s) {
  for (auto v : {CertVerdict::happy_certified, CertVerdict::unhappy, CertVerdict::pending})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

}  // namespace

Json certificate_to_json(const PrefixCertificate& cert, const LazyGraph& g) {
  Json j;
  j["version"] = PrefixCertificate::kVersion;
  Json prefix = Json::array();
  for (Vertex v : cert.prefix) prefix.push_back(g.name(v));
  j["prefix"] = std::move(prefix);
  j["colouring"] = colouring_to_json(cert.colouring, g);
  Json sublists = Json::object();
  for (const auto& [v, list] : cert.sublists) sublists[g.name(v)] = list;
  j["sublists"] = std::move(sublists);
  Json verdicts = Json::array();
  for (const auto& v : cert.verdicts) {
    Json e = {{"vertex", g.name(v.vertex)},
              {"verdict", to_string(v.verdict)},
              {"same", v.same},
              {"diff", v.diff}};
    if (v.opposite_witnesses) e["opposite_witnesses"] = *v.opposite_witnesses;
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  j["survivors"] = cert.survivors;
  j["instance_orders"] = cert.instance_orders;
  j["gx_differs_from_cx"] = cert.gx_differs_from_cx;
  j["instances_audited"] = cert.instances_audited;
  j["truncated"] = cert.truncated;
  if (cert.stability) {
    const StabilityReport& s = *cert.stability;
    j["stability"] = {{"compare_horizon", s.compare_horizon},
                      {"prefix_identical", s.prefix_identical},
                      {"first_divergence", s.first_divergence ? Json(*s.first_divergence) : Json()},
                      {"counters_monotone", s.counters_monotone}};
  } else {
    j["stability"] = nullptr;
  }
  return j;
}

PrefixCertificate certificate_from_json(const Json& j, const LazyGraph& g) {
  try {
    if (field(j, "version") != PrefixCertificate::kVersion)
      bad("unsupported certificate version " + field(j, "version").dump());
    PrefixCertificate cert;
    for (const Json& id : field(j, "prefix")) cert.prefix.push_back(resolve(g, id));
    cert.colouring = colouring_from_json(field(j, "colouring"), g);
    for (const auto& [id, list] : field(j, "sublists").items())
      cert.sublists[g.at(id)] = list_of(list);
    for (const Json& e : field(j, "verdicts")) {
      auto verdict = parse_verdict(field(e, "verdict").get<std::string>());
      if (!verdict) bad("unknown verdict " + field(e, "verdict").dump());
      VertexVerdict v{resolve(g, field(e, "vertex")), *verdict,
                      field(e, "same").get<std::uint64_t>(),
                      field(e, "diff").get<std::uint64_t>(), std::nullopt};
      if (auto it = e.find("opposite_witnesses"); it != e.end())
        v.opposite_witnesses = it->get<std::uint64_t>();
      cert.verdicts.push_back(v);
    }
    cert.survivors = field(j, "survivors").get<std::vector<std::size_t>>();
    cert.instance_orders = field(j, "instance_orders").get<std::vector<std::size_t>>();
    cert.gx_differs_from_cx = field(j, "gx_differs_from_cx").get<bool>();
    cert.instances_audited = field(j, "instances_audited").get<std::size_t>();
    cert.truncated = field(j, "truncated").get<bool>();
    const Json& s = field(j, "stability");
    if (!s.is_null()) {
      StabilityReport r;
      r.compare_horizon = field(s, "compare_horizon").get<std::size_t>();
      r.prefix_identical = field(s, "prefix_identical").get<bool>();
      if (!field(s, "first_divergence").is_null())
        r.first_divergence = field(s, "first_divergence").get<std::size_t>();
      r.counters_monotone = field(s, "counters_monotone").get<bool>();
      cert.stability = r;
    }
    return cert;
  } catch (const Json::exception& e) {
    bad(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace majc
