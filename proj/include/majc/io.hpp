#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "majc/colouring.hpp"
#include "majc/disjoint_refinement.hpp"
#include "majc/error.hpp"
#include "majc/generators.hpp"
#include "majc/graph.hpp"
#include "majc/lazy_graph.hpp"
#include "majc/runner.hpp"
#include "majc/solver.hpp"

namespace majc {

using Json = nlohmann::json;

/// Parses text as JSON; syntax errors become parse_error.
Json parse_json(std::string_view text);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// `{"vertices": [...], "edges": [[u, v], ...]}` with string ids. Vertices
/// are sorted by id. An optional `"allow_isolated": true` overrides the
/// option of the same name.
FiniteGraph graph_from_json(const Json& j, GraphOptions options = {});
FiniteGraph parse_graph_json(std::string_view text, GraphOptions options = {});
Json graph_to_json(const FiniteGraph& g);
std::string serialize_graph(const FiniteGraph& g);

/// Undirected DOT, nodes in vertex order, edges (u < v) in lexicographic
/// order. A colouring adds `colour` and `color` attributes.
std::string export_dot(const FiniteGraph& g,
                       const std::optional<PartialColouring>& colouring = {});

/// `{"family": ..., "params": {...}, "seed": n}`.
GeneratorSpec generator_from_json(const Json& j);
Json generator_to_json(const GeneratorSpec& spec);

/// Vertex sets are arrays of ids, colourings objects id -> colour.
VertexSet vertex_set_from_json(const Json& j, const LazyGraph& g);
Json vertex_set_to_json(const VertexSet& s, const LazyGraph& g);
PartialColouring colouring_from_json(const Json& j, const LazyGraph& g);
Json colouring_to_json(const PartialColouring& c, const LazyGraph& g);

/// `{"default": [...], "lists": {id: [...]}}`; both parts optional.
ListSystem lists_from_json(const Json& j, const LazyGraph& g);
Json lists_to_json(const ListSystem& lists, const LazyGraph& g);

/// `{"graph": {...}, "frozen": {id: c}, "lists": {id: [...]}, "b1": id,
/// "cx": c}`; b1 and cx are optional.
SolveInstance instance_from_json(const Json& j);
Json instance_to_json(const SolveInstance& inst);

/// Family of streams for the disjoint refinement. Each member is
/// `{"kind": "arithmetic", "start": a, "step": d}` (infinite) or
/// `{"kind": "explicit", "elements": [...]}` (finite).
struct StreamSpec {
  enum class Kind { arithmetic, explicit_list } kind = Kind::arithmetic;
  Element start = 0;
  Element step = 1;
  std::vector<Element> elements;

  LazySet lazy() const;
  bool contains(Element e) const;
};

struct FamilySpec {
  std::vector<StreamSpec> members;
  LazySetFamily lazy() const;
};

FamilySpec family_from_json(const Json& j);
Json family_to_json(const FamilySpec& f);

/// Versioned certificate document; see docs/schemas/certificate.schema.json.
Json certificate_to_json(const PrefixCertificate& cert, const LazyGraph& g);
PrefixCertificate certificate_from_json(const Json& j, const LazyGraph& g);

}  // namespace majc
