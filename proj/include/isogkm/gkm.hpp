#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isogkm/sparsity.hpp"
#include "isogkm/types.hpp"

namespace isogkm {

/// Which axial-function convention a type-D build uses.
///
/// Paper:     keep-edges (s'_i = s_i) get eps_i + eps_j, flip-edges get
///            eps_i - eps_j, following the construction's case split verbatim.
/// Geometric: the weight measured on the connecting sphere's tangent plane,
///            eps_i - eps_j when s'_i = s_j (the sign travels with the
///            eigenvalue) and eps_i + eps_j otherwise. The two conventions
///            coincide exactly on edges whose endpoints have s_i != s_j.
enum class AxialRule { Paper, Geometric };

inline const char* axial_rule_name(AxialRule r) {
  return r == AxialRule::Paper ? "paper" : "geometric";
}

/// Which part of the type-D manifold a graph describes.
enum class Component { Full, Plus, Minus };

struct GKMEdge {
  int u = 0;
  int v = 0;
  std::pair<int, int> block;  // {i,j}, i < j
  Weight weight;

  bool operator==(const GKMEdge&) const = default;
};

struct GKMGraph {
  Mode mode = Mode::TypeA;
  int n = 0;
  Component component = Component::Full;
  AxialRule axial = AxialRule::Paper;
  std::vector<VertexLabel> vertices;
  std::vector<GKMEdge> edges;              // canonical order, u < v
  std::optional<Spectrum> lambda;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> valences() const;
  int component_count() const;

  int vertex_index(const Permutation& sigma, const SignVector* s) const;
};

/// One row per vertex; column k holds lambda_{sigma(k)} (TypeA) or
/// (-1)^{s_k} lambda_{sigma(k)} (TypeD).
struct MomentImage {
  std::vector<std::vector<double>> points;
};

struct ValidationReport {
  std::vector<std::string> failures;  // each with a witness vertex/edge
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// n! vertices labeled by permutations; one edge per (sigma, {i,j} in Gamma)
/// pair with weight eps_i - eps_j.
GKMGraph build_type_A(const SparsityGraph& g);

/// 2^n n! vertices labeled (sigma, s); two edges per (vertex, {i,j} in Gamma):
/// the sign pair at {i,j} is either kept or flipped.
GKMGraph build_type_D(const SparsityGraph& g, AxialRule rule = AxialRule::Paper);

/// The doubling construction: each type-A vertex spawns 2^n vertices, each
/// type-A edge the 2^n admissible sign transitions. Label-for-label equal to
/// build_type_D of the same sparsity graph.
GKMGraph lift_to_type_D(const GKMGraph& a, AxialRule rule = AxialRule::Paper);

/// Induced subgraphs on even / odd sign parity. Throws ValidationError if any
/// edge crosses the parity classes.
std::pair<GKMGraph, GKMGraph> split_components(const GKMGraph& d);

/// The bijection (sigma, s) -> (sigma, s + e_1) from eta_plus onto eta_minus;
/// verified to be a graph isomorphism preserving block pairs and weights.
std::vector<int> component_isomorphism(const GKMGraph& plus, const GKMGraph& minus);

MomentImage moment_image(const GKMGraph& gr, const Spectrum& lambda);

/// Structural checks: regularity, per-vertex weight multiset, component count.
ValidationReport validate_gkm(const GKMGraph& gr);

bool graphs_equal(const GKMGraph& a, const GKMGraph& b);

/// Hard cap guard for type-D construction (2^n n! growth).
inline constexpr int kMaxTypeDVertices = 8;

}  // namespace isogkm
