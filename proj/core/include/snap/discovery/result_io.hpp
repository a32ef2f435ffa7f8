#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "snap/discovery/discovery.hpp"

namespace snap::discovery {

/// Metrics sidecar as a JSON document: per-order test counts, the remaining
/// vertices by name, and wall time in milliseconds.
std::string metrics_json(const DiscoveryResult& result, const std::vector<std::string>& names,
                         const std::string& algorithm);

/// Writes `<prefix>.edges` (graph labelled with `names`) and `<prefix>.json`.
void save_result(const std::filesystem::path& prefix, const DiscoveryResult& result,
                 const std::vector<std::string>& names, const std::string& algorithm);

}  // namespace snap::discovery
