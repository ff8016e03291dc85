#include "isogkm/gkm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace isogkm {

namespace {

// Union-find over vertex indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void sort_edges(std::vector<GKMEdge>& edges) {
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const GKMEdge& a, const GKMEdge& b) {
    return std::tie(a.u, a.v, a.block, a.weight.coeffs) <
           std::tie(b.u, b.v, b.block, b.weight.coeffs);
  });
}

/// Weight of a type-D edge under the chosen convention. keep_pair means
/// s'_i = s_i (the sign pair at {i,j} is unchanged).
Weight type_d_weight(AxialRule rule, int n, int i, int j, bool keep_pair,
                     const SignVector& s) {
  bool plus;
  if (rule == AxialRule::Paper) {
    plus = keep_pair;
  } else {
    // The connecting sphere's off-diagonal block commutes with the block
    // rotations (weight eps_i - eps_j) exactly when s'_i = s_j.
    std::uint8_t spi = keep_pair ? s.bits[i - 1] : static_cast<std::uint8_t>(1 - s.bits[i - 1]);
    plus = spi != s.bits[j - 1];
  }
  return Weight::pair(n, i, j, plus ? 1 : -1);
}

}  // namespace

std::vector<int> GKMGraph::valences() const {
  std::vector<int> val(vertices.size(), 0);
  for (const auto& e : edges) {
    ++val[e.u];
    ++val[e.v];
  }
  return val;
}

int GKMGraph::component_count() const {
  Dsu dsu(num_vertices());
  for (const auto& e : edges) dsu.unite(e.u, e.v);
  std::set<int> roots;
  for (int v = 0; v < num_vertices(); ++v) roots.insert(dsu.find(v));
  return static_cast<int>(roots.size());
}

int GKMGraph::vertex_index(const Permutation& sigma, const SignVector* s) const {
  for (int k = 0; k < num_vertices(); ++k) {
    if (!(vertices[k].sigma == sigma)) continue;
    if (mode == Mode::TypeA) return k;
    if (s && vertices[k].s && *vertices[k].s == *s) return k;
  }
  return -1;
}

std::string ValidationReport::summary() const {
  if (ok()) return "all checks passed";
  std::string out = std::to_string(failures.size()) + " check(s) failed";
  for (const auto& f : failures) out += "\n  " + f;
  return out;
}

GKMGraph build_type_A(const SparsityGraph& g) {
  GKMGraph out;
  out.mode = Mode::TypeA;
  out.n = g.n;
  out.vertices = enumerate_labels(g.n, Mode::TypeA);

  std::map<std::vector<int>, int> index;
  for (int k = 0; k < out.num_vertices(); ++k) index[out.vertices[k].sigma.images] = k;

  for (int u = 0; u < out.num_vertices(); ++u) {
    const Permutation& sigma = out.vertices[u].sigma;
    for (auto [i, j] : g.edges) {
      int v = index.at(sigma.apply_transposition(i, j).images);
      if (u < v) out.edges.push_back({u, v, {i, j}, Weight::pair(g.n, i, j, -1)});
    }
  }
  sort_edges(out.edges);
  return out;
}

GKMGraph build_type_D(const SparsityGraph& g, AxialRule rule) {
  if (g.n > kMaxTypeDVertices)
    throw ValidationError("type-D construction capped at n = " +
                          std::to_string(kMaxTypeDVertices));
  GKMGraph out;
  out.mode = Mode::TypeD;
  out.n = g.n;
  out.axial = rule;
  out.vertices = enumerate_labels(g.n, Mode::TypeD);

  std::map<std::pair<std::vector<int>, std::vector<std::uint8_t>>, int> index;
  for (int k = 0; k < out.num_vertices(); ++k)
    index[{out.vertices[k].sigma.images, out.vertices[k].s->bits}] = k;

  for (int u = 0; u < out.num_vertices(); ++u) {
    const Permutation& sigma = out.vertices[u].sigma;
    const SignVector& s = *out.vertices[u].s;
    for (auto [i, j] : g.edges) {
      Permutation tau = sigma.apply_transposition(i, j);
      for (bool keep : {true, false}) {
        SignVector s2 = keep ? s : s.flipped(i, j);
        int v = index.at({tau.images, s2.bits});
        if (u < v)
          out.edges.push_back({u, v, {i, j}, type_d_weight(rule, g.n, i, j, keep, s)});
      }
    }
  }
  sort_edges(out.edges);
  return out;
}

GKMGraph lift_to_type_D(const GKMGraph& a, AxialRule rule) {
  if (a.mode != Mode::TypeA)
    throw ValidationError("ModeMismatch: lift_to_type_D expects a type-A graph");
  GKMGraph out;
  out.mode = Mode::TypeD;
  out.n = a.n;
  out.axial = rule;
  out.lambda = a.lambda;
  out.vertices = enumerate_labels(a.n, Mode::TypeD);

  std::map<std::pair<std::vector<int>, std::vector<std::uint8_t>>, int> index;
  for (int k = 0; k < out.num_vertices(); ++k)
    index[{out.vertices[k].sigma.images, out.vertices[k].s->bits}] = k;

  auto signs = all_sign_vectors(a.n);
  for (const auto& e : a.edges) {
    const Permutation& sigma = a.vertices[e.u].sigma;
    const Permutation& tau = a.vertices[e.v].sigma;
    auto [i, j] = e.block;
    // 2^n lifted edges: for each s, the two admissible completions s' are
    // s itself and s with bits i, j flipped; enumerating keep-transitions
    // and flip-transitions over all s covers each lifted edge exactly once.
    for (const auto& s : signs) {
      int u = index.at({sigma.images, s.bits});
      for (bool keep : {true, false}) {
        SignVector s2 = keep ? s : s.flipped(i, j);
        int v = index.at({tau.images, s2.bits});
        if (u < v)
          out.edges.push_back({u, v, {i, j}, type_d_weight(rule, a.n, i, j, keep, s)});
      }
    }
  }
  sort_edges(out.edges);
  return out;
}

std::pair<GKMGraph, GKMGraph> split_components(const GKMGraph& d) {
  if (d.mode != Mode::TypeD)
    throw ValidationError("ModeMismatch: split_components expects a type-D graph");
  GKMGraph parts[2];
  std::vector<int> remap(d.num_vertices(), -1);
  for (int k = 0; k < d.num_vertices(); ++k) {
    int p = d.vertices[k].s->parity();
    remap[k] = parts[p].num_vertices();
    parts[p].vertices.push_back(d.vertices[k]);
  }
  for (int p : {0, 1}) {
    parts[p].mode = Mode::TypeD;
    parts[p].n = d.n;
    parts[p].axial = d.axial;
    parts[p].component = p == 0 ? Component::Plus : Component::Minus;
    parts[p].lambda = d.lambda;
  }
  for (const auto& e : d.edges) {
    int pu = d.vertices[e.u].s->parity();
    int pv = d.vertices[e.v].s->parity();
    if (pu != pv)
      throw ValidationError("EdgeAcrossParity: edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " joins the two parity classes");
    parts[pu].edges.push_back({remap[e.u], remap[e.v], e.block, e.weight});
  }
  sort_edges(parts[0].edges);
  sort_edges(parts[1].edges);
  return {parts[0], parts[1]};
}

std::vector<int> component_isomorphism(const GKMGraph& plus, const GKMGraph& minus) {
  if (plus.num_vertices() != minus.num_vertices())
    throw ValidationError("NotIsomorphism: component orders differ");
  std::map<std::pair<std::vector<int>, std::vector<std::uint8_t>>, int> index;
  for (int k = 0; k < minus.num_vertices(); ++k)
    index[{minus.vertices[k].sigma.images, minus.vertices[k].s->bits}] = k;

  std::vector<int> image(plus.num_vertices());
  for (int k = 0; k < plus.num_vertices(); ++k) {
    SignVector s = plus.vertices[k].s->flipped(1);
    auto it = index.find({plus.vertices[k].sigma.images, s.bits});
    if (it == index.end())
      throw ValidationError("NotIsomorphism: image vertex missing for index " +
                            std::to_string(k));
    image[k] = it->second;
  }

  auto key = [](const GKMEdge& e) {
    int u = e.u, v = e.v;
    if (u > v) std::swap(u, v);
    return std::make_tuple(u, v, e.block, e.weight.coeffs);
  };
  std::set<std::tuple<int, int, std::pair<int, int>, std::vector<int>>> target;
  for (const auto& e : minus.edges) target.insert(key(e));
  for (const auto& e : plus.edges) {
    GKMEdge m{image[e.u], image[e.v], e.block, e.weight};
    if (!target.count(key(m)))
      throw ValidationError("NotIsomorphism: edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " has no image with matching block/weight");
  }
  return image;
}

MomentImage moment_image(const GKMGraph& gr, const Spectrum& lambda) {
  MomentImage mu;
  mu.points.reserve(gr.num_vertices());
  for (const auto& vl : gr.vertices) {
    std::vector<double> x(gr.n);
    for (int k = 1; k <= gr.n; ++k) {
      double v = lambda.values[vl.sigma(k) - 1];
      if (vl.s && vl.s->bits[k - 1]) v = -v;
      x[k - 1] = v;
    }
    mu.points.push_back(std::move(x));
  }
  return mu;
}

ValidationReport validate_gkm(const GKMGraph& gr) {
  ValidationReport rep;

  // Edge-derived sparsity pattern: every block pair seen in the graph.
  std::set<std::pair<int, int>> blocks;
  for (const auto& e : gr.edges) blocks.insert(e.block);

  int expected_valence =
      static_cast<int>(blocks.size()) * (gr.mode == Mode::TypeA ? 1 : 2);
  auto val = gr.valences();
  for (int v = 0; v < gr.num_vertices(); ++v) {
    if (val[v] != expected_valence) {
      rep.failures.push_back("regularity: vertex " + std::to_string(v) + " has valence " +
                             std::to_string(val[v]) + ", expected " +
                             std::to_string(expected_valence));
      break;
    }
  }

  // Per-vertex weight multiset.
  std::multiset<std::vector<int>> expected;
  for (auto [i, j] : blocks) {
    expected.insert(Weight::pair(gr.n, i, j, -1).coeffs);
    if (gr.mode == Mode::TypeD) expected.insert(Weight::pair(gr.n, i, j, 1).coeffs);
  }
  std::vector<std::multiset<std::vector<int>>> seen(gr.num_vertices());
  for (const auto& e : gr.edges) {
    if (e.weight.is_zero()) {
      rep.failures.push_back("axial: zero weight on edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v));
      continue;
    }
    seen[e.u].insert(e.weight.coeffs);
    seen[e.v].insert(e.weight.coeffs);
  }
  for (int v = 0; v < gr.num_vertices(); ++v) {
    if (seen[v] != expected) {
      rep.failures.push_back("weights: vertex " + std::to_string(v) +
                             " does not carry the expected weight multiset");
      break;
    }
  }

  int expected_components =
      (gr.mode == Mode::TypeD && gr.component == Component::Full) ? 2 : 1;
  int got = gr.component_count();
  if (got != expected_components)
    rep.failures.push_back("connectivity: " + std::to_string(got) + " component(s), expected " +
                           std::to_string(expected_components));
  return rep;
}

bool graphs_equal(const GKMGraph& a, const GKMGraph& b) {
  if (a.mode != b.mode || a.n != b.n) return false;
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (int k = 0; k < a.num_vertices(); ++k) {
    if (!(a.vertices[k].sigma == b.vertices[k].sigma)) return false;
    if (a.vertices[k].s.has_value() != b.vertices[k].s.has_value()) return false;
    if (a.vertices[k].s && !(*a.vertices[k].s == *b.vertices[k].s)) return false;
  }
  return a.edges == b.edges;  // both canonically sorted
}

}  // namespace isogkm
