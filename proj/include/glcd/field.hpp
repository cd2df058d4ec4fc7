#pragma once

// Finite fields GF(p^e) in a polynomial basis over GF(p).
//
// An element is identified with its coefficient vector (c_0, ..., c_{e-1})
// relative to the modulus, constant term first. Internally the vector is
// packed into a single integer, its "index": sum c_i p^i. The index is a
// bijection onto [0, p^e) and gives the integer encoding used everywhere a
// deterministic "smallest element" is chosen.
//
// Fields of order <= 2^16 carry log/antilog/Zech tables; larger fields fall
// back to schoolbook multiplication modulo the defining polynomial.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace glcd {

class Element;

namespace detail {
struct FieldData;
}

class Field {
 public:
  using index_type = std::uint64_t;

  /// Builds GF(p^e). Without a modulus the smallest-encoded monic irreducible
  /// polynomial of degree e is used (see default_modulus).
  static Field make(std::uint32_t p, unsigned e,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Among monic irreducible degree-e polynomials over GF(p), the one whose
  /// coefficients read leading-to-constant as base-p digits give the smallest
  /// integer. Constant term first in the returned vector.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e);

  /// Rabin's irreducibility test over GF(p) for a monic polynomial.
  static bool is_irreducible_over_prime(std::uint32_t p, std::span<const std::uint32_t> monic);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  /// q = p^e.
  std::uint64_t order() const;
  const std::vector<std::uint32_t>& modulus() const;
  bool has_tables() const;

  friend bool operator==(const Field& a, const Field& b);
  std::string describe() const;

  Element zero() const;
  Element one() const;
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const;
  Element from_coeffs(std::span<const std::int64_t> coeffs) const;
  Element from_index(index_type idx) const;
  /// The class of x modulo the defining polynomial.
  Element generator() const;
  /// Smallest-index element of multiplicative order q - 1.
  Element primitive_element() const;

  // Index-level arithmetic for inner loops. Arguments must be valid indices.
  index_type add(index_type a, index_type b) const;
  index_type sub(index_type a, index_type b) const;
  index_type neg(index_type a) const;
  index_type mul(index_type a, index_type b) const;
  index_type inv(index_type a) const;
  index_type pow(index_type a, std::uint64_t exp) const;
  /// a^(p^j).
  index_type frobenius(index_type a, unsigned j) const;

  std::vector<std::uint32_t> digits(index_type a) const;
  index_type encode(std::span<const std::uint32_t> digits) const;

 private:
  friend class FieldKernel;
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

namespace kernel {

using index_type = std::uint64_t;

/// GF(p), p < 2^32.
struct PrimeOps {
  index_type p;
  const Field* f;
  index_type add(index_type a, index_type b) const {
    const index_type s = a + b;
    return s >= p ? s - p : s;
  }
  index_type neg(index_type a) const { return a == 0 ? 0 : p - a; }
  index_type sub(index_type a, index_type b) const { return add(a, neg(b)); }
  index_type mul(index_type a, index_type b) const { return a * b % p; }
  index_type inv(index_type a) const { return f->inv(a); }
};

/// Full q x q tables for tiny fields.
struct SmallOps {
  index_type q;
  const std::uint8_t* add_t;
  const std::uint8_t* mul_t;
  const std::uint8_t* neg_t;
  const std::uint8_t* inv_t;
  index_type add(index_type a, index_type b) const { return add_t[a * q + b]; }
  index_type neg(index_type a) const { return neg_t[a]; }
  index_type sub(index_type a, index_type b) const { return add_t[a * q + neg_t[b]]; }
  index_type mul(index_type a, index_type b) const { return mul_t[a * q + b]; }
  index_type inv(index_type a) const { return inv_t[a]; }
};

/// Log/antilog/Zech tables.
struct TableOps {
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};
  index_type p;
  index_type order1;  // q - 1
  const std::uint32_t* exp;
  const std::uint32_t* log;
  const std::uint32_t* zech;
  index_type add(index_type a, index_type b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (p == 2) return a ^ b;
    const std::uint32_t la = log[a], lb = log[b];
    const std::uint32_t diff = lb >= la ? lb - la : static_cast<std::uint32_t>(lb + order1 - la);
    const std::uint32_t z = zech[diff];
    return z == kNone ? 0 : exp[la + z];
  }
  index_type neg(index_type a) const { return a == 0 || p == 2 ? a : exp[log[a] + order1 / 2]; }
  index_type sub(index_type a, index_type b) const { return add(a, neg(b)); }
  index_type mul(index_type a, index_type b) const { return a == 0 || b == 0 ? 0 : exp[log[a] + log[b]]; }
  index_type inv(index_type a) const { return exp[(order1 - log[a]) % order1]; }
};

/// Anything else: forwards to Field.
struct GenericOps {
  const Field* f;
  index_type add(index_type a, index_type b) const { return f->add(a, b); }
  index_type neg(index_type a) const { return f->neg(a); }
  index_type sub(index_type a, index_type b) const { return f->sub(a, b); }
  index_type mul(index_type a, index_type b) const { return f->mul(a, b); }
  index_type inv(index_type a) const { return f->inv(a); }
};

}  // namespace kernel

/// Inlined index arithmetic for hot loops. Holds raw pointers into the field's
/// tables, so the Field must outlive the kernel. Results agree with Field.
/// visit() hands a branch-free ops object to a generic callable.
class FieldKernel {
 public:
  using index_type = Field::index_type;
  explicit FieldKernel(const Field& f);

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    switch (mode_) {
      case Mode::small: return fn(small_);
      case Mode::prime: return fn(prime_);
      case Mode::tables: return fn(tables_);
      default: return fn(generic_);
    }
  }

  index_type add(index_type a, index_type b) const {
    return visit([&](const auto& o) { return o.add(a, b); });
  }
  index_type neg(index_type a) const {
    return visit([&](const auto& o) { return o.neg(a); });
  }
  index_type sub(index_type a, index_type b) const { return add(a, neg(b)); }
  index_type mul(index_type a, index_type b) const {
    return visit([&](const auto& o) { return o.mul(a, b); });
  }
  index_type inv(index_type a) const {
    if (a == 0) return generic_.inv(a);  // throws
    return visit([&](const auto& o) { return o.inv(a); });
  }

 private:
  enum class Mode { small, prime, tables, generic };
  Mode mode_ = Mode::generic;
  kernel::SmallOps small_{};
  kernel::PrimeOps prime_{};
  kernel::TableOps tables_{};
  kernel::GenericOps generic_{};
};

class Element {
 public:
  using index_type = Field::index_type;

  Element(Field field, index_type idx);

  const Field& field() const { return field_; }
  index_type index() const { return idx_; }
  std::vector<std::uint32_t> coeffs() const { return field_.digits(idx_); }
  bool is_zero() const { return idx_ == 0; }
  bool is_one() const { return idx_ == 1; }

  Element operator-() const { return {field_, field_.neg(idx_)}; }
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.idx_ == b.idx_ && a.field_ == b.field_;
  }

  Element pow(std::uint64_t exp) const { return {field_, field_.pow(idx_, exp)}; }
  Element inverse() const;

 private:
  void require_same_field(const Element& o) const;
  Field field_;
  index_type idx_;
};

/// Galois parameter k with 0 <= k < e, selecting the form sum x_i y_i^(p^k).
struct GaloisParam {
  unsigned k = 0;
  static GaloisParam checked(unsigned k, const Field& f);
  /// e - k, the Frobenius exponent that turns the Galois dual into a Euclidean one.
  unsigned complement(const Field& f) const { return f.degree() - k; }
};

/// x^(p^j).
Element frobenius_pow(const Element& x, unsigned j);

/// Smallest r >= 1 with x^r = 1. Throws for x = 0.
std::uint64_t mult_order(const Element& x);

/// The smallest-index eta with eta^2 = -1. Throws std::domain_error when -1
/// is not a square (q = 3 mod 4).
Element sqrt_minus_one(const Field& f);

/// Field embedding GF(p^e) -> GF(p^(e*m)) sending x to the smallest-index
/// root of the source modulus in the destination.
class Embedding {
 public:
  Embedding(Field src, Field dst);

  const Field& source() const { return src_; }
  const Field& target() const { return dst_; }
  /// Image of the class of x.
  const Element& root() const { return root_; }

  Element operator()(const Element& x) const;
  /// Preimage of y if y lies in the image of the embedding.
  std::optional<Element> preimage(const Element& y) const;

 private:
  Field src_;
  Field dst_;
  Element root_;
  std::vector<Field::index_type> root_powers_;  // root^0 .. root^(e-1)
};

/// theta of multiplicative order rn with theta^n = lambda. Let g be the
/// smallest primitive element of ext; candidates g^(u (|ext|-1)/rn) are tried
/// for u coprime to rn in ascending order.
Element primitive_rn_root(const Field& ext, std::uint64_t rn, std::uint64_t n, const Element& lambda);

}  // namespace glcd
