#pragma once

// Residue combinatorics modulo rn for lambda-constacyclic codes of length n
// over GF(q), q = p^e, where lambda has multiplicative order r.
//
// The roots of x^n - lambda are theta^j for j in 1 + rZ_rn; the q-cyclotomic
// cosets on that set index its irreducible factors. Galois duality with
// parameter k acts on residues by multiplication with -p^k (or -p^(e-k)).

#include <cstdint>
#include <optional>
#include <vector>

namespace glcd {

/// Sorted residues in [0, rn).
using Residues = std::vector<std::uint32_t>;

struct CosetContext {
  std::uint32_t p = 2;
  unsigned e = 1;
  unsigned k = 0;
  std::uint32_t n = 1;
  std::uint32_t r = 1;

  /// Validates: p prime, e >= 1, 0 <= k < e, gcd(n, p) = 1, r | q - 1.
  static CosetContext make(std::uint32_t p, unsigned e, unsigned k, std::uint32_t n, std::uint32_t r);

  std::uint64_t q() const;
  std::uint64_t rn() const { return std::uint64_t{r} * n; }
  std::uint64_t q_mod_rn() const;
  /// -p^k mod rn, the stabilizer test multiplier.
  std::uint64_t minus_pk() const;
  /// -p^(e-k) mod rn, the dual defining-set multiplier.
  std::uint64_t minus_pek() const;
  /// r | 1 + p^(e-k), i.e. lambda^(1 + p^(e-k)) = 1; only then does -p^k
  /// permute 1 + rZ_rn.
  bool self_dual_constant() const;
  /// 1 + rZ_rn in ascending order (residues that are 1 mod r).
  Residues root_residues() const { return residue_class(1); }
  /// Residues congruent to s mod r.
  Residues residue_class(std::uint32_t s) const;

  friend bool operator==(const CosetContext&, const CosetContext&) = default;
};

/// A set of root exponents relative to a fixed primitive rn-th root theta.
/// `offset` is the class mod r the residues live in: 1 for the defining set
/// of a lambda-constacyclic code, other values for constants lambda^offset
/// (duals whose constant differs from lambda).
struct DefiningSet {
  CosetContext ctx;
  Residues residues;
  std::uint32_t offset = 1;

  /// Validates residues (range, class, q-closure) and sorts them.
  static DefiningSet make(const CosetContext& ctx, Residues residues, std::uint32_t offset = 1);
  std::size_t size() const { return residues.size(); }
  bool contains(std::uint32_t x) const;
  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

/// q-cyclotomic cosets partitioning the class `offset` mod r, each listed as
/// the mu_q orbit of its smallest member, sorted by smallest member.
std::vector<Residues> cyclotomic_cosets(const CosetContext& ctx, std::uint32_t offset = 1);

/// The coset containing x.
Residues coset_of(const CosetContext& ctx, std::uint32_t x);

/// Elementwise s*x mod rn, sorted. Throws if gcd(s, rn) != 1.
Residues act_scale(const Residues& set, std::int64_t s, std::uint64_t rn);

/// True iff the set is closed under multiplication by q mod rn.
bool is_q_closed(const CosetContext& ctx, const Residues& set);

/// Defining set of the k-Galois dual: -p^(e-k) times the complement inside
/// the residue class of P.
DefiningSet dual_defining_set(const DefiningSet& P);

/// -p^k P = P.
bool is_lcd_defining_set(const DefiningSet& P);

/// Smallest j >= 1 with p^(ej - k) = -1 mod rn, if any.
std::optional<unsigned> all_lcd_exponent(const CosetContext& ctx);

/// -p^k lies in the q-coset of 1.
bool q1_fixed_test(const CosetContext& ctx);

/// Orbits of the -p^k action on the q-cosets of 1 + rZ_rn.
struct OrbitCensus {
  std::vector<Residues> cosets;
  /// Each orbit lists coset indices, starting at its smallest index and then
  /// following the action.
  std::vector<std::vector<std::size_t>> orbits;
  std::size_t fixed = 0;    // t: orbits of length 1
  std::size_t swapped = 0;  // h: orbits of length 2
  std::size_t longer = 0;   // orbits of length >= 3 (never in the Hermitian case)

  /// Stable defining sets are exactly the unions of orbits.
  std::size_t stable_set_exponent() const { return orbits.size(); }
  bool involutive() const { return longer == 0; }
};

/// Throws std::invalid_argument unless ctx.self_dual_constant().
OrbitCensus stable_orbit_census(const CosetContext& ctx);

/// Every -p^k-stable q-closed subset of 1 + rZ_rn, sorted lexicographically
/// by residue list. Throws std::length_error when there are more than 2^max_log2.
std::vector<Residues> stable_defining_sets(const CosetContext& ctx, unsigned max_log2 = 20);

/// Every q-closed subset of the class `offset` (unions of cosets), same order.
std::vector<Residues> all_defining_sets(const CosetContext& ctx, std::uint32_t offset = 1, unsigned max_log2 = 20);

/// 1 + length of the longest cyclic run of consecutive indices i (mod n)
/// with offset + r*i in P. Throws if P is the whole class.
unsigned bch_lower_bound(const DefiningSet& P);

/// Exactly one u mod rn with u^2 = 1, u != 1.
bool unique_order2_unit(std::uint64_t rn);

/// r | p^a + 1 and 2^(b1 + b2) | p^a + 1 where r = 2^b1 r', n = 2^b2 n'.
/// Throws when r or n is odd.
bool hermitian_necessary_check(std::uint32_t p, unsigned a, std::uint32_t r, std::uint32_t n);

/// Smallest q-closed, -p^k-stable superset of A.
DefiningSet lcd_closure(const DefiningSet& A);

/// Coset Q_s is -p^k-fixed iff s(1 + p^(ej-k)) = 0 mod rn for some j >= 1.
bool coset_fixed_by_exponent(const CosetContext& ctx, std::uint32_t s);

/// For P = Q_s u -p^k Q_s: stable iff p^(2k) s = q^j s mod rn for some j.
bool pair_stable_by_exponent(const CosetContext& ctx, std::uint32_t s);

}  // namespace glcd
