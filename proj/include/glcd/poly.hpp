#pragma once

// Dense univariate polynomials over a Field, and the splitting data of
// x^n - lambda: extension field, embedding, primitive rn-th root theta and
// the minimal polynomials of the q-cyclotomic cosets.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "glcd/cosets.hpp"
#include "glcd/field.hpp"

namespace glcd {

class Poly {
 public:
  using index_type = Field::index_type;

  explicit Poly(Field field) : field_(std::move(field)) {}
  /// Coefficient indices, constant term first; trailing zeros are dropped.
  Poly(Field field, std::vector<index_type> coeffs);
  static Poly from_elements(const Field& field, const std::vector<Element>& coeffs);
  static Poly monomial(const Field& field, const Element& c, std::size_t deg);
  /// x^n - c.
  static Poly binomial(const Field& field, std::size_t n, const Element& c);

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<index_type>& coeff_indices() const { return c_; }
  Element coeff(std::size_t i) const;
  Element leading() const;

  Element operator()(const Element& x) const;
  index_type eval_index(index_type x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Element& c) const;
  Poly monic() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

 private:
  void trim();
  void require_same_field(const Poly& o) const;
  Field field_;
  std::vector<index_type> c_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// a_0^{-1} x^deg f(1/x); throws if f = 0 or f(0) = 0.
Poly reciprocal(const Poly& f);

/// Coefficientwise p^j power.
Poly frobenius_poly(const Poly& f, unsigned j);

/// Monic irreducibility over the coefficient field (Rabin's test).
bool is_irreducible(const Poly& f);

/// The splitting data for x^n - lambda over a base field.
namespace detail {
struct MinimalPolyCache;
}

struct SplittingField {
  Field base;
  Field ext;  // GF(q^m) with m = ord_rn(q); equals base when m = 1
  Embedding embedding;
  std::uint32_t n;
  std::uint32_t r;  // multiplicative order of lambda
  Element lambda;   // in base
  Element theta;    // in ext: order rn, theta^n = embed(lambda)
  unsigned m;
  /// Minimal polynomials keyed by coset leader; filled lazily, thread-safe.
  /// Null disables caching.
  std::shared_ptr<detail::MinimalPolyCache> cache;

  std::uint64_t rn() const { return std::uint64_t{r} * n; }
  CosetContext context(unsigned k) const;
  /// theta^j in ext.
  Element theta_pow(std::uint64_t j) const;
  /// lambda^s in base.
  Element constant(std::uint32_t offset) const;
};

/// Builds the splitting field; throws if gcd(n, p) != 1 or lambda = 0.
std::shared_ptr<const SplittingField> make_splitting_field(const Field& base, std::uint32_t n, const Element& lambda);

/// prod_{i in Q} (x - theta^i), computed in ext and descended to base.
/// Throws std::logic_error if a coefficient is not in base (Q not q-closed).
Poly minimal_poly(const Residues& Q, const SplittingField& sf);

/// Product of minimal polynomials over a q-closed residue set.
Poly product_poly(const Residues& set, const SplittingField& sf);

struct CosetFactor {
  Residues coset;
  Poly factor;
};

/// x^n - lambda as the product of M_Q over q-cosets Q of 1 + rZ_rn.
std::vector<CosetFactor> factor_xn_minus_lambda(std::uint32_t n, const Element& lambda);
std::vector<CosetFactor> factor_xn_minus_lambda(const SplittingField& sf, std::uint32_t offset = 1);

}  // namespace glcd
