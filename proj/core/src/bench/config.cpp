#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snap/bench/bench.hpp"
#include "snap/error.hpp"

namespace snap::bench {

std::string AlgorithmSpec::name() const {
  switch (kind) {
    case Algorithm::Pc:
      return "pc";
    case Algorithm::SnapInf:
      return "snap_inf";
    case Algorithm::SnapK:
      return "snap_k:" + std::to_string(k);
    case Algorithm::SnapKThenPc:
      return "snap_k+pc:" + std::to_string(k);
  }
  return "unknown";
}

AlgorithmSpec parse_algorithm(const std::string& text) {
  if (text == "pc") return {Algorithm::Pc, 0};
  if (text == "snap_inf") return {Algorithm::SnapInf, 0};
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec == std::errc() && ptr == tail.data() + tail.size() && !tail.empty()) {
      if (head == "snap_k") return {Algorithm::SnapK, k};
      if (head == "snap_k+pc") return {Algorithm::SnapKThenPc, k};
    }
  }
  throw Error(Errc::InvalidConfig, "unknown algorithm '" + text + "' (pc, snap_inf, snap_k:K, snap_k+pc:K)");
}

std::string to_string(TesterKind kind) {
  switch (kind) {
    case TesterKind::Oracle:
      return "oracle";
    case TesterKind::FisherZ:
      return "fisher_z";
    case TesterKind::ChiSquare:
      return "chi_square";
  }
  return "unknown";
}

std::string to_string(DataModel model) {
  return model == DataModel::Binary ? "binary" : "linear_gaussian";
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidConfig, msg); };
  if (cfg.replicates < 1) fail("replicates must be at least 1");
  if (!(cfg.trim >= 0.0 && cfg.trim < 0.4)) fail("trim must lie in [0, 0.4)");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) fail("alpha must lie in (0, 1)");
  if (cfg.algorithms.empty()) fail("no algorithms selected");
  if (cfg.n_targets.empty() || cfg.n_samples.empty()) fail("empty sweep axis");
  if (!cfg.graph_file && (cfg.n_vertices.empty() || cfg.expected_degree.empty())) fail("empty sweep axis");
  if (cfg.graph_file && cfg.fixed_targets.empty() && cfg.n_targets.empty()) fail("fixed graph needs targets");
  for (std::size_t t : cfg.n_targets)
    if (t == 0) fail("n_targets must be positive");
  if (cfg.tester == TesterKind::ChiSquare && cfg.data_model != DataModel::Binary) {
    fail("chi_square tester requires the binary data model");
  }
  if (cfg.tester == TesterKind::FisherZ && cfg.data_model != DataModel::LinearGaussian) {
    fail("fisher_z tester requires the linear_gaussian data model");
  }
  if (cfg.estimate_effects && cfg.truth_samples == 0) fail("truth_samples must be positive");
}

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> axis(const json& doc, const char* key, std::vector<T> fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

TesterKind parse_tester(const std::string& s) {
  if (s == "oracle") return TesterKind::Oracle;
  if (s == "fisher_z" || s == "fisher-z") return TesterKind::FisherZ;
  if (s == "chi_square" || s == "chi-sq") return TesterKind::ChiSquare;
  throw Error(Errc::InvalidConfig, "unknown tester '" + s + "'");
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON config: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.n_vertices = axis(doc, "n_vertices", cfg.n_vertices);
    cfg.expected_degree = axis(doc, "expected_degree", cfg.expected_degree);
    cfg.n_targets = axis(doc, "n_targets", cfg.n_targets);
    cfg.n_samples = axis(doc, "n_samples", cfg.n_samples);
    cfg.max_degree = doc.value("max_degree", cfg.max_degree);
    if (doc.contains("algorithms")) {
      cfg.algorithms.clear();
      for (const auto& a : doc.at("algorithms")) cfg.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    }
    cfg.tester = parse_tester(doc.value("tester", std::string("oracle")));
    const std::string model = doc.value("data_model", std::string(cfg.tester == TesterKind::ChiSquare ? "binary" : "linear_gaussian"));
    if (model == "binary") {
      cfg.data_model = DataModel::Binary;
    } else if (model == "linear_gaussian") {
      cfg.data_model = DataModel::LinearGaussian;
    } else {
      throw Error(Errc::InvalidConfig, "unknown data_model '" + model + "'");
    }
    cfg.alpha = doc.value("alpha", cfg.alpha);
    const std::string mode = doc.value("target_mode", std::string("random"));
    if (mode == "random") {
      cfg.target_mode = synthetic::TargetMode::Random;
    } else if (mode == "identifiable") {
      cfg.target_mode = synthetic::TargetMode::Identifiable;
    } else {
      throw Error(Errc::InvalidConfig, "unknown target_mode '" + mode + "'");
    }
    cfg.estimate_effects = doc.value("estimate_effects", cfg.estimate_effects);
    const long long replicates = doc.value("replicates", 1LL);
    if (replicates < 1) throw Error(Errc::InvalidConfig, "replicates must be at least 1");
    cfg.replicates = static_cast<std::size_t>(replicates);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.trim = doc.value("trim", cfg.trim);
    cfg.workers = doc.value("workers", cfg.workers);
    cfg.truth_samples = doc.value("truth_samples", cfg.truth_samples);
    if (doc.contains("graph")) {
      std::filesystem::path p = doc.at("graph").get<std::string>();
      cfg.graph_file = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    }
    if (doc.contains("targets")) cfg.fixed_targets = doc.at("targets").get<std::vector<std::string>>();
    if (doc.contains("output")) cfg.output = doc.at("output").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidConfig, std::string("bad config field: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

}  // namespace snap::bench
