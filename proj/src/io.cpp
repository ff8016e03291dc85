#include "isogkm/io.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace isogkm {

using json = nlohmann::ordered_json;

namespace {

std::string utc_timestamp() {
  std::time_t t;
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH"))
    t = static_cast<std::time_t>(std::strtoll(e, nullptr, 10));
  else
    t = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* component_name(Component c) {
  switch (c) {
    case Component::Plus: return "plus";
    case Component::Minus: return "minus";
    default: return "full";
  }
}

Component component_from(const std::string& s) {
  if (s == "plus") return Component::Plus;
  if (s == "minus") return Component::Minus;
  if (s == "full") return Component::Full;
  throw ParseError("unknown component tag '" + s + "'");
}

}  // namespace

RunManifest make_manifest(std::string command, std::vector<std::string> inputs,
                          std::vector<double> lambda, std::uint64_t seed) {
  RunManifest m;
  m.command = std::move(command);
  m.inputs = std::move(inputs);
  m.lambda = std::move(lambda);
  m.seed = seed;
  m.timestamp = utc_timestamp();
  return m;
}

json manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["inputs"] = m.inputs;
  j["lambda"] = m.lambda;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["timestamp"] = m.timestamp;
  return j;
}

json graph_to_json(const GKMGraph& g) {
  json j;
  j["schema"] = kGraphSchema;
  j["mode"] = mode_name(g.mode);
  j["n"] = g.n;
  j["component"] = component_name(g.component);
  if (g.mode == Mode::TypeD) j["axial"] = axial_rule_name(g.axial);
  if (g.lambda) j["lambda"] = g.lambda->values;
  json verts = json::array();
  for (const auto& v : g.vertices) {
    json jv;
    jv["sigma"] = v.sigma.images;
    if (v.s) jv["s"] = v.s->bits;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& e : g.edges) {
    json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["block"] = {e.block.first, e.block.second};
    je["weight"] = e.weight.coeffs;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

GKMGraph graph_from_json(const json& j) {
  if (!j.contains("schema") || j["schema"] != kGraphSchema)
    throw ParseError("unrecognized graph schema");
  GKMGraph g;
  std::string mode = j.at("mode");
  if (mode == "A") g.mode = Mode::TypeA;
  else if (mode == "D") g.mode = Mode::TypeD;
  else throw ParseError("unknown mode '" + mode + "'");
  g.n = j.at("n");
  if (j.contains("component")) g.component = component_from(j["component"]);
  if (j.contains("axial"))
    g.axial = j["axial"] == "geometric" ? AxialRule::Geometric : AxialRule::Paper;
  if (j.contains("lambda")) {
    std::vector<double> vals = j["lambda"];
    g.lambda = Spectrum{vals, g.mode};
  }
  for (const auto& jv : j.at("vertices")) {
    VertexLabel v;
    v.sigma.images = jv.at("sigma").get<std::vector<int>>();
    if (jv.contains("s")) v.s = SignVector{jv["s"].get<std::vector<std::uint8_t>>()};
    if (g.mode == Mode::TypeD && !v.s)
      throw ParseError("type-D vertex missing sign vector");
    g.vertices.push_back(std::move(v));
  }
  for (const auto& je : j.at("edges")) {
    GKMEdge e;
    e.u = je.at("u");
    e.v = je.at("v");
    auto blk = je.at("block").get<std::vector<int>>();
    if (blk.size() != 2) throw ParseError("edge block must be a pair");
    e.block = {blk[0], blk[1]};
    e.weight.coeffs = je.at("weight").get<std::vector<int>>();
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices() || e.v >= g.num_vertices())
      throw ParseError("edge endpoint out of range");
    g.edges.push_back(std::move(e));
  }
  return g;
}

void write_graph_file(const GKMGraph& g, const std::string& path) {
  write_text_file(path, graph_to_json(g).dump(2) + "\n");
}

GKMGraph read_graph_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph file: ") + e.what());
  }
  return graph_from_json(j);
}

std::string to_dot(const GKMGraph& g) {
  std::ostringstream out;
  out << "graph gkm {\n";
  for (int k = 0; k < g.num_vertices(); ++k) {
    const auto& v = g.vertices[k];
    out << "  v" << k << " [label=\"" << to_string(v.sigma);
    if (v.s) out << ";" << to_string(*v.s);
    out << "\"];\n";
  }
  for (const auto& e : g.edges)
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.weight.pretty() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace isogkm
