#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "snap/bench/bench.hpp"
#include "snap/error.hpp"

namespace snap::bench {

namespace {

constexpr const char* kHeader =
    "n_vertices,expected_degree,n_targets,n_samples,replicate,seed,algorithm,tester,alpha,ci_tests_total,"
    "ci_tests_by_order,wall_ms,shd_on_possan,intervention_distance,n_remaining,n_true_possan,error";

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T number(const std::string& s) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(Errc::ParseError, "bad number '" + s + "' in CSV");
  return value;
}

std::string by_order(const ci::TestCounts& c) {
  std::string out;
  for (std::size_t i = 0; i < c.by_order.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(c.by_order[i]);
  }
  return out;
}

std::string optional_number(const std::optional<double>& v) { return v ? fmt::format("{}", *v) : ""; }

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.n_vertices, r.expected_degree,
                       r.n_targets, r.n_samples, r.replicate, r.seed, quote(r.algorithm), quote(r.tester), r.alpha,
                       r.tests.total, by_order(r.tests), r.wall_ms, r.shd_on_possan,
                       optional_number(r.intervention_distance), r.n_remaining, r.n_true_possan, quote(r.error));
  }
}

std::vector<MetricsRow> read_rows_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw Error(Errc::ParseError, "unexpected results header");
  std::vector<MetricsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 17) throw Error(Errc::ParseError, "results row has the wrong number of fields");
    MetricsRow r;
    r.n_vertices = number<std::size_t>(f[0]);
    r.expected_degree = number<double>(f[1]);
    r.n_targets = number<std::size_t>(f[2]);
    r.n_samples = number<std::size_t>(f[3]);
    r.replicate = number<std::size_t>(f[4]);
    r.seed = number<std::uint64_t>(f[5]);
    r.algorithm = f[6];
    r.tester = f[7];
    r.alpha = number<double>(f[8]);
    if (!f[10].empty()) {
      std::size_t start = 0;
      while (true) {
        const auto semi = f[10].find(';', start);
        const auto piece = f[10].substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        r.tests.by_order.push_back(number<std::uint64_t>(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
    }
    for (auto c : r.tests.by_order) r.tests.total += c;
    if (r.tests.total != number<std::uint64_t>(f[9])) throw Error(Errc::ParseError, "test total disagrees with per-order counts");
    r.wall_ms = number<double>(f[11]);
    r.shd_on_possan = number<std::size_t>(f[12]);
    if (!f[13].empty()) r.intervention_distance = number<double>(f[13]);
    r.n_remaining = number<std::size_t>(f[14]);
    r.n_true_possan = number<std::size_t>(f[15]);
    r.error = f[16];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "n_vertices,expected_degree,n_targets,n_samples,algorithm,n_rows,n_errors,ci_tests_total,wall_ms,"
         "shd_on_possan,intervention_distance,n_remaining,n_true_possan\n";
  for (const auto& s : rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", s.n_vertices, s.expected_degree, s.n_targets,
                       s.n_samples, quote(s.algorithm), s.n_rows, s.n_errors, s.ci_tests_total, s.wall_ms,
                       s.shd_on_possan, optional_number(s.intervention_distance), s.n_remaining, s.n_true_possan);
  }
}

void save_results(const std::filesystem::path& output, const std::vector<MetricsRow>& rows, double trim) {
  if (output.has_parent_path()) std::filesystem::create_directories(output.parent_path());
  std::ofstream out(output);
  if (!out) throw Error(Errc::ParseError, "cannot write " + output.string());
  write_rows_csv(out, rows);
  auto summary_path = output;
  summary_path.replace_filename(output.stem().string() + ".summary.csv");
  std::ofstream sum(summary_path);
  if (!sum) throw Error(Errc::ParseError, "cannot write " + summary_path.string());
  write_summary_csv(sum, summarize(rows, trim));
}

}  // namespace snap::bench
