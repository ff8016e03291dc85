#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "isogkm/gkm.hpp"

namespace isogkm {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kGraphSchema = "isogkm.graph/v1";
inline constexpr const char* kReportSchema = "isogkm.report/v1";

/// Provenance block embedded in every emitted report. The timestamp honors
/// SOURCE_DATE_EPOCH so that reruns with fixed inputs and seed are
/// byte-identical.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<double> lambda;
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::string timestamp;
};

RunManifest make_manifest(std::string command, std::vector<std::string> inputs,
                          std::vector<double> lambda, std::uint64_t seed);

nlohmann::ordered_json manifest_to_json(const RunManifest& m);

nlohmann::ordered_json graph_to_json(const GKMGraph& g);
GKMGraph graph_from_json(const nlohmann::ordered_json& j);

void write_graph_file(const GKMGraph& g, const std::string& path);
GKMGraph read_graph_file(const std::string& path);

/// DOT document with vertex labels "sigma;s" and edge labels like "e1-e2".
/// Ordering follows the canonical vertex/edge order, so output is stable.
std::string to_dot(const GKMGraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace isogkm
