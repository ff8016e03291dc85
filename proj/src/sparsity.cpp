#include "isogkm/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace isogkm {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::apply_transposition(int i, int j) const {
  Permutation out = *this;
  std::swap(out.images[i - 1], out.images[j - 1]);
  return out;
}

SignVector SignVector::flipped(int i, int j) const {
  SignVector out = *this;
  out.bits[i - 1] ^= 1;
  out.bits[j - 1] ^= 1;
  return out;
}

SignVector SignVector::flipped(int i) const {
  SignVector out = *this;
  out.bits[i - 1] ^= 1;
  return out;
}

void Weight::normalize() {
  for (int c : coeffs) {
    if (c > 0) return;
    if (c < 0) break;
  }
  for (int& c : coeffs) c = -c;
}

bool Weight::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

std::string Weight::pretty() const {
  std::string out;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += coeffs[k] > 0 ? "+" : "-";
    else if (coeffs[k] < 0) out += "-";
    int a = std::abs(coeffs[k]);
    if (a != 1) out += std::to_string(a) + "*";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

Weight Weight::pair(int n, int i, int j, int sign) {
  Weight w;
  w.coeffs.assign(n, 0);
  w.coeffs[i - 1] = 1;
  w.coeffs[j - 1] = sign;
  w.normalize();
  return w;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (size_t k = 0; k < p.images.size(); ++k) {
    if (k) out += p.images.size() > 9 ? "," : "";
    out += std::to_string(p.images[k]);
  }
  return out;
}

std::string to_string(const SignVector& s) {
  std::string out;
  for (auto b : s.bits) out += b ? '1' : '0';
  return out;
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) return false;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto& [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

SparsityGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int header_n = 0;
  std::set<std::pair<int, int>> edges;
  int max_index = 0;

  auto fail = [&](const std::string& kind, const std::string& msg) -> void {
    throw ValidationError(kind + " at line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first == "n") {
      int k;
      if (!(ls >> k) || k <= 0)
        throw ParseError("malformed header at line " + std::to_string(lineno));
      header_n = k;
      continue;
    }
    int i, j;
    try {
      size_t pos;
      i = std::stoi(first, &pos);
      if (pos != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError("expected vertex index at line " + std::to_string(lineno) + ": '" +
                       first + "'");
    }
    if (!(ls >> j)) throw ParseError("missing second index at line " + std::to_string(lineno));
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens at line " + std::to_string(lineno));

    if (i <= 0 || j <= 0) fail("IndexOutOfRange", "vertex indices are 1-based");
    if (i == j) fail("SelfLoop", "edge " + std::to_string(i) + " " + std::to_string(j));
    if (i > j) std::swap(i, j);
    if (!edges.insert({i, j}).second)
      fail("DuplicateEdge", "edge " + std::to_string(i) + " " + std::to_string(j));
    max_index = std::max(max_index, j);
  }

  lineno = 0;  // structural errors below are not tied to a line
  int n = header_n > 0 ? header_n : max_index;
  if (max_index > n)
    throw ValidationError("IndexOutOfRange: vertex " + std::to_string(max_index) +
                          " exceeds declared n " + std::to_string(n));
  if (edges.empty())
    throw ValidationError("Disconnected: graph has no edges");
  SparsityGraph g;
  g.n = n;
  g.edges.assign(edges.begin(), edges.end());
  if (!is_connected(g.n, g.edges))
    throw ValidationError("Disconnected: graph on " + std::to_string(n) +
                          " vertices is not connected");
  return g;
}

std::string serialize_graph(const SparsityGraph& g) {
  std::string out = "n " + std::to_string(g.n) + "\n";
  for (auto& [i, j] : g.edges)
    out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

Spectrum validate_spectrum(const std::vector<double>& values, Mode mode) {
  for (size_t a = 0; a < values.size(); ++a) {
    if (mode == Mode::TypeD && values[a] == 0.0)
      throw ValidationError("NotGeneric(zero): lambda_" + std::to_string(a + 1) + " = 0");
    for (size_t b = a + 1; b < values.size(); ++b) {
      if (values[a] == values[b])
        throw ValidationError("NotGeneric(repeat): lambda_" + std::to_string(a + 1) +
                              " = lambda_" + std::to_string(b + 1));
      if (mode == Mode::TypeD && std::abs(values[a]) == std::abs(values[b]))
        throw ValidationError("NotGeneric(abs-repeat): |lambda_" + std::to_string(a + 1) +
                              "| = |lambda_" + std::to_string(b + 1) + "|");
    }
  }
  return Spectrum{values, mode};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

std::vector<SignVector> all_sign_vectors(int n) {
  std::vector<SignVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    SignVector s;
    s.bits.resize(n);
    for (int k = 0; k < n; ++k) s.bits[k] = (mask >> (n - 1 - k)) & 1;  // s_1 most significant
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<VertexLabel> enumerate_labels(int n, Mode mode) {
  if (n < 1) throw ValidationError("enumerate_labels: n must be positive");
  std::vector<VertexLabel> out;
  auto perms = all_permutations(n);
  if (mode == Mode::TypeA) {
    for (auto& p : perms) out.push_back({p, std::nullopt});
  } else {
    auto svs = all_sign_vectors(n);
    for (auto& p : perms)
      for (auto& s : svs) out.push_back({p, s});
  }
  return out;
}

std::vector<SparsityGraph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  std::vector<SparsityGraph> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << all.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) es.push_back(all[b]);
    if (is_connected(n, es)) out.push_back(SparsityGraph{n, es});
  }
  return out;
}

SparsityGraph complete_graph(int n) {
  SparsityGraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.edges.push_back({i, j});
  return g;
}

SparsityGraph path_graph(int n) {
  SparsityGraph g;
  g.n = n;
  for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

SparsityGraph cycle_graph(int n) {
  SparsityGraph g = path_graph(n);
  if (n >= 3) g.edges.push_back({1, n});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace isogkm
