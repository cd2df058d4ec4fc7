#pragma once

// Constacyclic codes as ideals of GF(q)[x]/<x^n - c>. A code is stored by its
// zero set relative to the theta of its SplittingField and by the class
// `offset` mod r of those zeros; the constant is c = lambda^offset. Codes
// built from a defining set have offset 1 (c = lambda); Galois duals may land
// in another class when lambda^(1 + p^(e-k)) != 1.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "glcd/cosets.hpp"
#include "glcd/linear_code.hpp"
#include "glcd/poly.hpp"

namespace glcd {

class ConstacyclicCode {
 public:
  /// Zero set must be q-closed inside the class `offset` mod r.
  static ConstacyclicCode from_defining_set(std::shared_ptr<const SplittingField> sf, Residues zeros,
                                            std::uint32_t offset = 1);
  /// Validates g | x^n - c (monic) and recovers the zero set by testing theta^j.
  static ConstacyclicCode from_generator_polynomial(std::shared_ptr<const SplittingField> sf, const Poly& g,
                                                    std::uint32_t offset = 1);

  const SplittingField& splitting() const { return *sf_; }
  const std::shared_ptr<const SplittingField>& splitting_ptr() const { return sf_; }
  const Field& field() const { return sf_->base; }
  std::uint32_t length() const { return sf_->n; }
  std::uint32_t offset() const { return offset_; }
  /// The constant c with x^n - c the ambient modulus.
  Element constant() const { return sf_->constant(offset_); }
  const Residues& zeros() const { return zeros_; }
  DefiningSet defining_set(unsigned k = 0) const;
  const Poly& generator() const { return g_; }
  /// (x^n - c) / g.
  Poly check_polynomial() const;
  std::size_t dimension() const { return sf_->n - zeros_.size(); }

 private:
  ConstacyclicCode(std::shared_ptr<const SplittingField> sf, Residues zeros, std::uint32_t offset, Poly g)
      : sf_(std::move(sf)), zeros_(std::move(zeros)), offset_(offset), g_(std::move(g)) {}
  std::shared_ptr<const SplittingField> sf_;
  Residues zeros_;
  std::uint32_t offset_;
  Poly g_;
};

/// lambda-constacyclic code with defining set P inside 1 + rZ_rn.
ConstacyclicCode code_from_defining_set(const Field& base, std::uint32_t n, const Element& lambda, const Residues& P);

/// The k-Galois dual. The generator is frobenius_poly(reciprocal(h), e - k);
/// the zero set is dual_defining_set(P). Throws std::logic_error if the two
/// routes disagree.
ConstacyclicCode galois_dual_code(const ConstacyclicCode& code, GaloisParam k);

/// c^(1 + p^(e-k)) != 1, or -p^k P = P.
bool is_lcd(const ConstacyclicCode& code, GaloisParam k);

/// Rows x^i g(x), i < dim. Throws for the zero code.
LinearCode to_generator_matrix(const ConstacyclicCode& code);

struct CatalogEntry {
  Residues defining_set;
  Poly generator;
  CodeParams params;  // dim 0 (zero code) carries d_lo = d_hi = 0
  bool lcd = false;
  bool mds = false;
  unsigned bch_bound = 0;  // 0 for the zero code
};

struct Catalog {
  CosetContext ctx;
  Element lambda;
  Element theta;
  /// lambda^(1 + p^(e-k)) = 1. When false every code is LCD and all q-closed
  /// sets are listed.
  bool self_dual_constant = true;
  std::optional<OrbitCensus> census;
  std::vector<CatalogEntry> entries;  // sorted by defining set

  std::size_t stable_count() const { return entries.size(); }
  /// Excludes the full set (the zero code).
  std::size_t nonzero_count() const { return entries.empty() ? 0 : entries.size() - 1; }
  /// 2^(t+h) - 1 when the orbit structure is involutive.
  std::optional<std::uint64_t> formula_count() const;
};

struct ClassifyOptions {
  DistanceOptions distance{};
  /// When false, distances are reported as [bch, singleton].
  bool exact_distance = true;
  unsigned max_log2 = 20;
  /// Refuse when (number of sets) * n exceeds this; each entry stores a
  /// defining set and a generator polynomial of size O(n).
  std::uint64_t max_cells = std::uint64_t{1} << 25;
};

Catalog classify_all_lcd(const Field& base, std::uint32_t n, const Element& lambda, GaloisParam k,
                         const ClassifyOptions& options = {});

/// Hermitian LCD MDS lambda-constacyclic code [n, n + 1 - d, d] over
/// GF(p^(2a)) with defining set {1 + r i : 0 <= i <= d - 2}. Requires
/// ord_rn(p^a) = 2 and a unique involution in Z_rn^*.
ConstacyclicCode hermitian_mds_family(const Element& lambda, std::uint32_t n, unsigned d);

}  // namespace glcd
