#include "snap/discovery/result_io.hpp"

#include <fstream>
#include <json.hpp>

#include "snap/error.hpp"
#include "snap/graph/edge_list.hpp"

namespace snap::discovery {

namespace {

std::string name_of(const std::vector<std::string>& names, Vertex v) {
  return v < names.size() ? names[v] : std::to_string(v);
}

}  // namespace

std::string metrics_json(const DiscoveryResult& result, const std::vector<std::string>& names,
                         const std::string& algorithm) {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm;
  j["ci_tests_total"] = result.tests.total;
  j["ci_tests_by_order"] = result.tests.by_order;
  j["queries"] = result.queries;
  j["max_order"] = result.max_order;
  auto remaining = nlohmann::json::array();
  for (Vertex v : result.to_original) remaining.push_back(name_of(names, v));
  j["remaining"] = remaining;
  auto rfci = nlohmann::json::array();
  for (const auto& s : result.rfci_calls) {
    rfci.push_back({{"triples_processed", s.triples_processed},
                    {"edges_deleted", s.edges_deleted},
                    {"max_sepset", s.max_sepset},
                    {"tests", s.tests}});
  }
  j["rfci_calls"] = rfci;
  j["wall_ms"] = std::chrono::duration<double, std::milli>(result.wall_time).count();
  return j.dump(2);
}

void save_result(const std::filesystem::path& prefix, const DiscoveryResult& result,
                 const std::vector<std::string>& names, const std::string& algorithm) {
  MixedGraph g = result.graph;
  std::vector<std::string> labels;
  for (Vertex v : result.to_original) labels.push_back(name_of(names, v));
  g.set_labels(std::move(labels));

  auto edges_path = prefix;
  edges_path += ".edges";
  save_edge_list(edges_path, g);

  auto json_path = prefix;
  json_path += ".json";
  std::ofstream out(json_path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + json_path.string());
  out << metrics_json(result, names, algorithm) << '\n';
}

}  // namespace snap::discovery
