#include "snap/graph/edge_list.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "snap/error.hpp"

namespace snap {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct ParsedEdge {
  std::string from;
  std::string to;
  EdgeKind kind;
};

}  // namespace

MixedGraph read_edge_list(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  std::vector<std::tuple<Vertex, Vertex, EdgeKind>> edges;
  std::size_t forced_count = 0;
  bool has_forced_count = false;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };

    if (line.rfind("vertices:", 0) == 0) {
      try {
        std::size_t used = 0;
        const std::string value = trim(line.substr(9));
        forced_count = std::stoul(value, &used);
        if (used != value.size()) fail("bad vertex count");
      } catch (const std::logic_error&) {
        fail("bad vertex count");
      }
      has_forced_count = true;
      continue;
    }

    std::istringstream tokens(line);
    std::string a, op, b, extra;
    tokens >> a >> op >> b >> extra;
    if (op.empty()) {
      intern(a);
      continue;
    }
    if (b.empty() || !extra.empty()) fail("expected `A -> B`, `A -- B` or `A <-> B`");
    EdgeKind kind;
    if (op == "->") {
      kind = EdgeKind::Forward;
    } else if (op == "--") {
      kind = EdgeKind::Undirected;
    } else if (op == "<->") {
      kind = EdgeKind::Bidirected;
    } else if (op == "<-") {
      kind = EdgeKind::Backward;
    } else {
      fail("unknown edge operator `" + op + "`");
    }
    if (a == b) fail("self-loop on " + a);
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    edges.emplace_back(u, v, kind);
  }

  if (has_forced_count) {
    if (forced_count < names.size()) {
      throw Error(Errc::ParseError, "header declares " + std::to_string(forced_count) +
                                        " vertices but " + std::to_string(names.size()) + " are named");
    }
    while (names.size() < forced_count) names.push_back(std::to_string(names.size()));
  }

  MixedGraph g(names.size(), names);
  for (auto [u, v, kind] : edges) {
    if (g.adjacent(u, v)) {
      throw Error(Errc::ParseError, "duplicate edge between " + names[u] + " and " + names[v]);
    }
    g.set_edge(u, v, kind);
  }
  return g;
}

MixedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const MixedGraph& g) {
  out << "vertices: " << g.n_vertices() << '\n';
  // Declare every vertex up front so that indices survive a round trip.
  for (Vertex v = 0; v < g.n_vertices(); ++v) out << g.label(v) << '\n';
  for (auto [u, v] : g.adjacent_pairs()) {
    switch (g.kind(u, v)) {
      case EdgeKind::Undirected: out << g.label(u) << " -- " << g.label(v) << '\n'; break;
      case EdgeKind::Forward: out << g.label(u) << " -> " << g.label(v) << '\n'; break;
      case EdgeKind::Backward: out << g.label(v) << " -> " << g.label(u) << '\n'; break;
      case EdgeKind::Bidirected: out << g.label(u) << " <-> " << g.label(v) << '\n'; break;
      case EdgeKind::None: break;
    }
  }
}

void save_edge_list(const std::filesystem::path& path, const MixedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  write_edge_list(out, g);
}

Dag to_dag(const MixedGraph& g) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.adjacent_pairs()) {
    switch (g.kind(u, v)) {
      case EdgeKind::Forward: edges.push_back({u, v}); break;
      case EdgeKind::Backward: edges.push_back({v, u}); break;
      default:
        throw Error(Errc::InvalidGraph,
                    "edge " + g.label(u) + " - " + g.label(v) + " is not directed");
    }
  }
  return Dag(g.n_vertices(), std::move(edges), g.labels());
}

}  // namespace snap
