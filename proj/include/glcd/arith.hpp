#pragma once

// Integer helpers shared by the field and coset layers. All routines work on
// 64-bit unsigned values; products go through 128-bit intermediates.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace glcd::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 gcd(u64 a, u64 b);

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod(u64 base, u64 exp, u64 m);

/// Reduces a signed value into [0, m).
u64 mod(std::int64_t a, u64 m);

/// Exact integer power; throws std::overflow_error if the result does not fit.
u64 ipow(u64 base, unsigned exp);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1, m >= 1).
u64 mult_order_mod(u64 a, u64 m);

/// Modular inverse of a mod m, if it exists.
std::optional<u64> inverse_mod(u64 a, u64 m);

/// Binomial coefficient saturated at UINT64_MAX.
u64 binomial_saturating(unsigned n, unsigned k);

/// a + b saturated at UINT64_MAX.
inline u64 add_saturating(u64 a, u64 b) { return a + b < a ? ~u64{0} : a + b; }
/// a * b saturated at UINT64_MAX.
inline u64 mul_saturating(u64 a, u64 b) {
  const u128 p = static_cast<u128>(a) * b;
  return p > ~u64{0} ? ~u64{0} : static_cast<u64>(p);
}

}  // namespace glcd::arith
