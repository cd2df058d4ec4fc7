#include "glcd/cosets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "glcd/arith.hpp"

namespace glcd {

namespace {

std::uint64_t period(const CosetContext& ctx) { return arith::mult_order_mod(ctx.q_mod_rn(), ctx.rn()); }

Residues sorted_unique(Residues v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Residues orbit_of(std::uint64_t x, std::uint64_t mult, std::uint64_t rn) {
  Residues orbit;
  std::uint64_t y = x % rn;
  do {
    orbit.push_back(static_cast<std::uint32_t>(y));
    y = arith::mulmod(y, mult, rn);
  } while (y != x % rn);
  return sorted_unique(std::move(orbit));
}

std::vector<Residues> unions_of(const std::vector<std::vector<Residues>>& blocks, unsigned max_log2) {
  if (blocks.size() > max_log2)
    throw std::length_error("2^" + std::to_string(blocks.size()) + " defining sets exceed the enumeration budget 2^" +
                            std::to_string(max_log2));
  std::vector<Residues> out;
  const std::uint64_t count = std::uint64_t{1} << blocks.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Residues s;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask >> b & 1)
        for (const auto& c : blocks[b]) s.insert(s.end(), c.begin(), c.end());
    out.push_back(sorted_unique(std::move(s)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- context

CosetContext CosetContext::make(std::uint32_t p, unsigned e, unsigned k, std::uint32_t n, std::uint32_t r) {
  if (!arith::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("e must be at least 1");
  if (k >= e) throw std::invalid_argument("k must satisfy 0 <= k < e");
  if (n == 0 || r == 0) throw std::invalid_argument("n and r must be positive");
  if (n % p == 0) throw std::invalid_argument("gcd(n, p) must be 1");
  if (arith::powmod(p, e, r) != 1 % r) throw std::invalid_argument("r must divide q - 1");
  return CosetContext{p, e, k, n, r};
}

std::uint64_t CosetContext::q() const { return arith::ipow(p, e); }
std::uint64_t CosetContext::q_mod_rn() const { return arith::powmod(p, e, rn()); }
std::uint64_t CosetContext::minus_pk() const {
  const std::uint64_t m = rn();
  return (m - arith::powmod(p, k, m)) % m;
}
std::uint64_t CosetContext::minus_pek() const {
  const std::uint64_t m = rn();
  return (m - arith::powmod(p, e - k, m)) % m;
}
bool CosetContext::self_dual_constant() const { return (arith::powmod(p, e - k, r) + 1) % r == 0; }

Residues CosetContext::residue_class(std::uint32_t s) const {
  Residues out;
  out.reserve(n);
  const std::uint64_t base = s % r;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint32_t>(base + i * r));
  return out;
}

DefiningSet DefiningSet::make(const CosetContext& ctx, Residues residues, std::uint32_t offset) {
  offset %= ctx.r;
  residues = sorted_unique(std::move(residues));
  for (auto x : residues) {
    if (x >= ctx.rn()) throw std::invalid_argument("residue " + std::to_string(x) + " is not below rn");
    if (x % ctx.r != offset)
      throw std::invalid_argument("residue " + std::to_string(x) + " is not " + std::to_string(offset) + " mod r");
  }
  if (!is_q_closed(ctx, residues)) throw std::invalid_argument("defining set is not closed under multiplication by q");
  return DefiningSet{ctx, std::move(residues), offset};
}

bool DefiningSet::contains(std::uint32_t x) const { return std::binary_search(residues.begin(), residues.end(), x); }

// ---------------------------------------------------------------- cosets

std::vector<Residues> cyclotomic_cosets(const CosetContext& ctx, std::uint32_t offset) {
  const std::uint64_t rn = ctx.rn();
  const std::uint64_t q = ctx.q_mod_rn();
  std::vector<bool> seen(rn, false);
  std::vector<Residues> out;
  for (auto x : ctx.residue_class(offset)) {
    if (seen[x]) continue;
    Residues orbit = orbit_of(x, q, rn);
    for (auto y : orbit) seen[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

Residues coset_of(const CosetContext& ctx, std::uint32_t x) { return orbit_of(x, ctx.q_mod_rn(), ctx.rn()); }

Residues act_scale(const Residues& set, std::int64_t s, std::uint64_t rn) {
  const std::uint64_t m = arith::mod(s, rn);
  if (arith::gcd(m, rn) != 1) throw std::invalid_argument("multiplier " + std::to_string(s) + " is not a unit mod rn");
  Residues out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(static_cast<std::uint32_t>(arith::mulmod(x, m, rn)));
  return sorted_unique(std::move(out));
}

bool is_q_closed(const CosetContext& ctx, const Residues& set) {
  const Residues s = sorted_unique(set);
  return act_scale(s, static_cast<std::int64_t>(ctx.q_mod_rn()), ctx.rn()) == s;
}

DefiningSet dual_defining_set(const DefiningSet& P) {
  const auto& ctx = P.ctx;
  Residues complement;
  for (auto x : ctx.residue_class(P.offset))
    if (!P.contains(x)) complement.push_back(x);
  const std::uint64_t u = ctx.minus_pek();
  const auto offset = static_cast<std::uint32_t>(arith::mulmod(P.offset, u, ctx.r));
  return DefiningSet{ctx, act_scale(complement, static_cast<std::int64_t>(u), ctx.rn()), offset};
}

bool is_lcd_defining_set(const DefiningSet& P) {
  return act_scale(P.residues, static_cast<std::int64_t>(P.ctx.minus_pk()), P.ctx.rn()) == P.residues;
}

std::optional<unsigned> all_lcd_exponent(const CosetContext& ctx) {
  const std::uint64_t rn = ctx.rn();
  const std::uint64_t minus_one = (rn - 1) % rn;
  const std::uint64_t per = period(ctx);
  for (std::uint64_t j = 1; j <= per; ++j) {
    if (arith::powmod(ctx.p, ctx.e * j - ctx.k, rn) == minus_one) return static_cast<unsigned>(j);
  }
  return std::nullopt;
}

bool q1_fixed_test(const CosetContext& ctx) {
  const Residues q1 = coset_of(ctx, static_cast<std::uint32_t>(1 % ctx.rn()));
  return std::binary_search(q1.begin(), q1.end(), static_cast<std::uint32_t>(ctx.minus_pk()));
}

OrbitCensus stable_orbit_census(const CosetContext& ctx) {
  if (!ctx.self_dual_constant())
    throw std::invalid_argument("-p^k does not preserve 1 + rZ_rn (r does not divide 1 + p^(e-k))");
  OrbitCensus census;
  census.cosets = cyclotomic_cosets(ctx);
  const std::uint64_t rn = ctx.rn();
  std::vector<std::size_t> owner(rn, 0);
  for (std::size_t i = 0; i < census.cosets.size(); ++i)
    for (auto x : census.cosets[i]) owner[x] = i;
  const std::uint64_t mult = ctx.minus_pk();
  std::vector<std::size_t> image(census.cosets.size());
  for (std::size_t i = 0; i < census.cosets.size(); ++i)
    image[i] = owner[arith::mulmod(census.cosets[i].front(), mult, rn)];
  std::vector<bool> seen(census.cosets.size(), false);
  for (std::size_t i = 0; i < census.cosets.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    switch (orbit.size()) {
      case 1: ++census.fixed; break;
      case 2: ++census.swapped; break;
      default: ++census.longer; break;
    }
    census.orbits.push_back(std::move(orbit));
  }
  return census;
}

std::vector<Residues> stable_defining_sets(const CosetContext& ctx, unsigned max_log2) {
  const OrbitCensus census = stable_orbit_census(ctx);
  std::vector<std::vector<Residues>> blocks;
  for (const auto& orbit : census.orbits) {
    std::vector<Residues> block;
    for (auto i : orbit) block.push_back(census.cosets[i]);
    blocks.push_back(std::move(block));
  }
  return unions_of(blocks, max_log2);
}

std::vector<Residues> all_defining_sets(const CosetContext& ctx, std::uint32_t offset, unsigned max_log2) {
  std::vector<std::vector<Residues>> blocks;
  for (auto& c : cyclotomic_cosets(ctx, offset)) blocks.push_back({std::move(c)});
  return unions_of(blocks, max_log2);
}

unsigned bch_lower_bound(const DefiningSet& P) {
  const auto& ctx = P.ctx;
  const std::uint32_t n = ctx.n;
  if (P.size() >= n) throw std::invalid_argument("BCH bound is undefined for the zero code");
  std::vector<bool> hit(n, false);
  for (auto x : P.residues) hit[(x - P.offset) / ctx.r] = true;
  unsigned best = 0, run = 0;
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    if (hit[i % n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return 1 + std::min(best, n - 1);
}

bool unique_order2_unit(std::uint64_t rn) {
  if (rn < 2) throw std::invalid_argument("rn must be at least 2");
  unsigned count = 0;
  for (std::uint64_t u = 2; u < rn; ++u)
    if (arith::gcd(u, rn) == 1 && arith::mulmod(u, u, rn) == 1) ++count;
  return count == 1;
}

bool hermitian_necessary_check(std::uint32_t p, unsigned a, std::uint32_t r, std::uint32_t n) {
  if (r % 2 != 0 || n % 2 != 0) throw std::invalid_argument("hypotheses not met: r and n must both be even");
  if (n % p == 0) throw std::invalid_argument("hypotheses not met: gcd(n, p) must be 1");
  unsigned b1 = 0, b2 = 0;
  for (std::uint32_t v = r; v % 2 == 0; v /= 2) ++b1;
  for (std::uint32_t v = n; v % 2 == 0; v /= 2) ++b2;
  const std::uint64_t pa1 = arith::ipow(p, a) + 1;
  return pa1 % r == 0 && pa1 % (std::uint64_t{1} << (b1 + b2)) == 0;
}

DefiningSet lcd_closure(const DefiningSet& A) {
  const auto& ctx = A.ctx;
  if (!ctx.self_dual_constant())
    throw std::invalid_argument("-p^k does not preserve 1 + rZ_rn (r does not divide 1 + p^(e-k))");
  const std::uint64_t rn = ctx.rn();
  std::vector<bool> in(rn, false);
  std::vector<std::uint32_t> todo(A.residues.begin(), A.residues.end());
  for (auto x : todo) in[x] = true;
  const std::uint64_t mults[2] = {ctx.q_mod_rn(), ctx.minus_pk()};
  while (!todo.empty()) {
    const std::uint32_t x = todo.back();
    todo.pop_back();
    for (auto m : mults) {
      const auto y = static_cast<std::uint32_t>(arith::mulmod(x, m, rn));
      if (!in[y]) {
        in[y] = true;
        todo.push_back(y);
      }
    }
  }
  Residues out;
  for (std::uint32_t x = 0; x < rn; ++x)
    if (in[x]) out.push_back(x);
  return DefiningSet{ctx, std::move(out), A.offset};
}

bool coset_fixed_by_exponent(const CosetContext& ctx, std::uint32_t s) {
  const std::uint64_t rn = ctx.rn();
  const std::uint64_t per = period(ctx);
  for (std::uint64_t j = 1; j <= per; ++j) {
    const std::uint64_t t = (1 + arith::powmod(ctx.p, ctx.e * j - ctx.k, rn)) % rn;
    if (arith::mulmod(s, t, rn) == 0) return true;
  }
  return false;
}

bool pair_stable_by_exponent(const CosetContext& ctx, std::uint32_t s) {
  const std::uint64_t rn = ctx.rn();
  const std::uint64_t lhs = arith::mulmod(arith::powmod(ctx.p, 2 * ctx.k, rn), s, rn);
  const std::uint64_t q = ctx.q_mod_rn();
  std::uint64_t qj = 1 % rn;
  for (std::uint64_t j = 0; j < period(ctx); ++j, qj = arith::mulmod(qj, q, rn))
    if (arith::mulmod(qj, s, rn) == lhs) return true;
  return false;
}

}  // namespace glcd
