// Writes graph_<i>.json, graph_<i>.dot and graph_<i>_coloured.dot for a
// seeded corpus into the given directory, for the external validators.
#include <filesystem>
#include <iostream>
#include <random>

#include "majc/io.hpp"
#include "support.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: majc_dump_corpus DIR\n";
    return 2;
  }
  namespace ts = testing_support;
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + ts::draw(rng, 19);
    majc::FiniteGraph g = ts::random_graph(n, 0.25, rng);
    majc::PartialColouring c;
    for (majc::Vertex v = 0; v < n; ++v)
      if (ts::draw(rng, 4) != 0) c.set(v, 1 + static_cast<majc::Colour>(ts::draw(rng, 10)));
    const std::string stem = "graph_" + std::to_string(i);
    majc::write_file(dir / (stem + ".json"), majc::serialize_graph(g));
    majc::write_file(dir / (stem + ".dot"), majc::export_dot(g));
    majc::write_file(dir / (stem + "_coloured.dot"), majc::export_dot(g, c));
  }
  return 0;
}
