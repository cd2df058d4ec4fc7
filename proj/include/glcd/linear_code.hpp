#pragma once

// Linear codes given by generator matrices: Galois inner products and duals,
// the determinant LCD criterion, the [I A A] / [I A eta*A] extensions and the
// exact minimum-distance engine.

#include <cstdint>
#include <span>
#include <vector>

#include "glcd/field.hpp"
#include "glcd/matrix.hpp"

namespace glcd {

class LinearCode {
 public:
  /// Requires full row rank. Zero rows (the zero code) are allowed.
  static LinearCode from_generator(Matrix generator);

  const Field& field() const { return gen_.field(); }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }
  /// Generator of the Euclidean dual.
  Matrix parity_check() const { return gen_.nullspace(); }

 private:
  explicit LinearCode(Matrix g) : gen_(std::move(g)) {}
  Matrix gen_;
};

/// Same row space.
bool same_code(const LinearCode& a, const LinearCode& b);

struct CodeParams {
  std::size_t n = 0;
  std::size_t dim = 0;
  unsigned d_lo = 0;
  unsigned d_hi = 0;

  bool exact() const { return d_lo == d_hi; }
  unsigned d() const { return d_lo; }
  unsigned singleton() const { return static_cast<unsigned>(n - dim + 1); }
  bool mds() const { return exact() && d_lo == singleton(); }
};

/// sum x_i y_i^(p^k).
Element galois_inner_product(std::span<const Element> x, std::span<const Element> y, GaloisParam k);

/// Entrywise p^j power of the generator.
LinearCode p_power_code(const LinearCode& code, unsigned j);

/// {x : [c, x]_k = 0 for all c}, the Euclidean dual of C^(p^(e-k)).
LinearCode galois_dual(const LinearCode& code, GaloisParam k);

struct LcdVerdict {
  bool lcd;
  /// det(G (G^(p^(e-k)))^T)
  Element det;
};

LcdVerdict is_galois_lcd(const LinearCode& code, GaloisParam k);

enum class ExtendMode { char2, pmod4 };

struct StandardForm {
  Matrix generator;                 // [I_l | A]
  std::vector<std::size_t> column_order;  // column j of the result is column column_order[j] of the input
};

/// Row reduction plus a column permutation to [I_l | A]. The permutation
/// changes the code but not its parameters.
StandardForm to_standard_form(const Matrix& generator);

/// [I_l A A] in characteristic 2, or [I_l A eta*A] with eta^2 = -1 when
/// p = 1 mod 4. Input must be in standard form.
LinearCode extend_lcd(const Matrix& standard_generator, GaloisParam k, ExtendMode mode);

enum class DistanceStrategy { automatic, messages, supports };

struct DistanceOptions {
  DistanceStrategy strategy = DistanceStrategy::automatic;
  std::uint64_t budget_messages = 100'000'000;
  std::uint64_t budget_supports = 10'000'000;
  /// A proven lower bound (e.g. BCH), used only for the interval reported
  /// when the search is refused.
  unsigned lower_bound = 1;
  bool parallel = true;
};

struct DistanceReport {
  CodeParams params;
  DistanceStrategy used = DistanceStrategy::automatic;
};

/// Exact minimum distance when a strategy fits its budget, otherwise an
/// interval [lower, n - l + 1]. Throws for the zero code.
DistanceReport min_distance(const LinearCode& code, const DistanceOptions& options = {});

const char* to_string(DistanceStrategy s);

}  // namespace glcd
