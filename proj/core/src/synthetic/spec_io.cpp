#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "snap/error.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace snap::synthetic {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> labels_of(const Dag& dag) {
  return dag.labels().empty() ? default_labels(dag.n_vertices()) : dag.labels();
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

struct Vertices {
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;

  Vertex at(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw Error(Errc::ParseError, "unknown vertex '" + name + "'");
    return it->second;
  }
};

Vertices read_vertices(const ordered_json& doc) {
  Vertices v;
  v.names = doc.at("vertices").get<std::vector<std::string>>();
  for (std::size_t i = 0; i < v.names.size(); ++i)
    if (!v.index.emplace(v.names[i], i).second) throw Error(Errc::ParseError, "duplicate vertex " + v.names[i]);
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << text << '\n';
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed spec: ") + e.what());
  }
}

}  // namespace

std::string to_json(const SemSpec& spec) {
  validate(spec);
  const auto names = labels_of(spec.dag);
  ordered_json doc;
  doc["model"] = "linear_gaussian";
  doc["vertices"] = names;
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i < spec.dag.n_edges(); ++i) {
    const auto& e = spec.dag.edges()[i];
    edges.push_back({{"from", names[e.from]}, {"to", names[e.to]}, {"weight", spec.weights[i]}});
  }
  doc["edges"] = std::move(edges);
  doc["noise_sd"] = spec.noise_sd;
  return doc.dump(2);
}

std::string to_json(const CptSpec& spec) {
  validate(spec);
  const auto names = labels_of(spec.dag);
  ordered_json doc;
  doc["model"] = "binary_cpt";
  doc["vertices"] = names;
  ordered_json tables = ordered_json::array();
  for (Vertex v = 0; v < spec.dag.n_vertices(); ++v) {
    std::vector<std::string> parents;
    for (Vertex p : spec.dag.parents(v)) parents.push_back(names[p]);
    tables.push_back({{"vertex", names[v]}, {"parents", parents}, {"p1", spec.tables[v]}});
  }
  doc["tables"] = std::move(tables);
  return doc.dump(2);
}

SemSpec sem_from_json(const std::string& text) {
  return guarded([&] {
    const auto doc = parse(text);
    if (doc.at("model") != "linear_gaussian") throw Error(Errc::ParseError, "not a linear Gaussian spec");
    const auto vs = read_vertices(doc);
    std::vector<Edge> edges;
    std::map<Edge, double> weight;
    for (const auto& e : doc.at("edges")) {
      const Edge edge{vs.at(e.at("from").get<std::string>()), vs.at(e.at("to").get<std::string>())};
      edges.push_back(edge);
      weight[edge] = e.at("weight").get<double>();
    }
    SemSpec spec{Dag(vs.names.size(), std::move(edges), vs.names), {}, {}};
    for (const auto& e : spec.dag.edges()) spec.weights.push_back(weight.at(e));
    spec.noise_sd = doc.contains("noise_sd") ? doc.at("noise_sd").get<std::vector<double>>()
                                             : std::vector<double>(vs.names.size(), 1.0);
    validate(spec);
    return spec;
  });
}

CptSpec cpt_from_json(const std::string& text) {
  return guarded([&] {
    const auto doc = parse(text);
    if (doc.at("model") != "binary_cpt") throw Error(Errc::ParseError, "not a binary CPT spec");
    const auto vs = read_vertices(doc);
    std::vector<Edge> edges;
    std::vector<std::vector<double>> tables(vs.names.size());
    std::vector<bool> seen(vs.names.size(), false);
    for (const auto& t : doc.at("tables")) {
      const Vertex v = vs.at(t.at("vertex").get<std::string>());
      if (seen[v]) throw Error(Errc::ParseError, "two tables for " + vs.names[v]);
      seen[v] = true;
      std::vector<Vertex> parents;
      for (const auto& p : t.at("parents")) parents.push_back(vs.at(p.get<std::string>()));
      if (!std::is_sorted(parents.begin(), parents.end())) {
        throw Error(Errc::ParseError, "parents of " + vs.names[v] + " must be listed in vertex order");
      }
      for (Vertex p : parents) edges.push_back({p, v});
      tables[v] = t.at("p1").get<std::vector<double>>();
    }
    CptSpec spec{Dag(vs.names.size(), std::move(edges), vs.names), std::move(tables)};
    validate(spec);
    return spec;
  });
}

void save_spec(const std::filesystem::path& path, const SemSpec& spec) { write_file(path, to_json(spec)); }
void save_spec(const std::filesystem::path& path, const CptSpec& spec) { write_file(path, to_json(spec)); }
SemSpec load_sem(const std::filesystem::path& path) { return sem_from_json(read_file(path)); }
CptSpec load_cpt(const std::filesystem::path& path) { return cpt_from_json(read_file(path)); }

}  // namespace snap::synthetic
