#include "glcd/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace glcd::arith {

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 mod(std::int64_t a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN
  const u64 neg = (static_cast<u64>(-(a + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

u64 ipow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    const u128 next = static_cast<u128>(result) * base;
    if (next > ~u64{0}) throw std::overflow_error("integer power overflows 64 bits");
    result = static_cast<u64>(next);
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Pollard-Brent; n is odd composite.
u64 find_divisor(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = find_divisor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::map<u64, unsigned> found;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

u64 mult_order_mod(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  if (gcd(a, m) != 1) throw std::invalid_argument("element is not a unit");
  // order of the unit group via Carmichael-free route: phi(m)
  u64 phi = m;
  for (const auto& [p, _] : factorize(m)) phi = phi / p * (p - 1);
  u64 order = phi;
  for (const auto& [p, _] : factorize(phi)) {
    while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
  }
  return order;
}

std::optional<u64> inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) return std::nullopt;
  return mod(t, m);
}

u64 binomial_saturating(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > ~u64{0}) return ~u64{0};
  }
  return static_cast<u64>(result);
}

}  // namespace glcd::arith
