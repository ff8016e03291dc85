#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isogkm/types.hpp"

namespace isogkm {

/// Parse an edge-list document: '#' comments, optional "n <count>" header,
/// one "i j" pair per line. Vertex count is inferred from the largest index
/// when no header is present. Throws ParseError (malformed text) or
/// ValidationError (self loop, duplicate edge, index out of range,
/// disconnected) naming the offending line.
SparsityGraph parse_graph(const std::string& text);

std::string serialize_graph(const SparsityGraph& g);

/// Check genericity: TypeA needs pairwise distinct values; TypeD needs all
/// values nonzero and pairwise distinct in absolute value. Comparison is
/// exact on the parsed doubles; only literal collisions are caught.
Spectrum validate_spectrum(const std::vector<double>& values, Mode mode);

struct VertexLabel {
  Permutation sigma;
  std::optional<SignVector> s;  // present iff TypeD
};

/// All n! permutations in lexicographic order (TypeA), or all 2^n * n! pairs
/// (sigma, s) in permutation-major, sign-vector binary order (TypeD).
std::vector<VertexLabel> enumerate_labels(int n, Mode mode);

std::vector<Permutation> all_permutations(int n);
std::vector<SignVector> all_sign_vectors(int n);

/// All connected simple graphs on [n], enumerated over edge subsets.
std::vector<SparsityGraph> connected_graphs(int n);

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges);

SparsityGraph complete_graph(int n);
SparsityGraph path_graph(int n);
SparsityGraph cycle_graph(int n);

}  // namespace isogkm
