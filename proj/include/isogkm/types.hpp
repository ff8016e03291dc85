#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace isogkm {

enum class Mode { TypeA, TypeD };

inline const char* mode_name(Mode m) { return m == Mode::TypeA ? "A" : "D"; }

/// Base class for all input/validation errors raised by the toolkit.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

/// Simple connected graph on vertices 1..n. Edges are stored as (i,j) with
/// i < j, sorted, no duplicates.
struct SparsityGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges)
      if (e.first == i && e.second == j) return true;
    return false;
  }
};

/// Eigenvalue parameters with the genericity mode they were validated under.
struct Spectrum {
  std::vector<double> values;
  Mode mode = Mode::TypeA;

  int n() const { return static_cast<int>(values.size()); }
};

/// Bijection of [n]; images[k] is the 1-based image of position k+1.
struct Permutation {
  std::vector<int> images;

  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }  // 1-based
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }

  static Permutation identity(int n);
  /// this * (i,j): swap the values at positions i and j (right multiplication
  /// by a transposition).
  Permutation apply_transposition(int i, int j) const;
};

/// Element of Z_2^n written as a bit vector.
struct SignVector {
  std::vector<std::uint8_t> bits;

  int n() const { return static_cast<int>(bits.size()); }
  int parity() const {
    int p = 0;
    for (auto b : bits) p ^= b;
    return p;
  }
  bool operator==(const SignVector&) const = default;
  bool operator<(const SignVector& o) const { return bits < o.bits; }

  static SignVector zero(int n) { return SignVector{std::vector<std::uint8_t>(n, 0)}; }
  SignVector flipped(int i, int j) const;  // 1-based positions
  SignVector flipped(int i) const;
};

/// Integer weight vector in the basis eps_1..eps_n, normalized so the first
/// nonzero coordinate is positive (weights are defined up to sign).
struct Weight {
  std::vector<int> coeffs;

  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return coeffs < o.coeffs; }

  void normalize();
  bool is_zero() const;
  std::string pretty() const;  // "e1-e2" style

  /// eps_i + sign*eps_j (sign = +1 or -1), i < j assumed after normalization.
  static Weight pair(int n, int i, int j, int sign);
};

std::string to_string(const Permutation& p);
std::string to_string(const SignVector& s);

}  // namespace isogkm
