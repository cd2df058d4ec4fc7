#include <doctest.h>

#include <map>

#include "contexts.hpp"
#include "glcd/arith.hpp"
#include "glcd/cosets.hpp"

using namespace glcd;
using testctx::contexts;

namespace {

const CosetContext ex314 = CosetContext::make(5, 3, 1, 13, 2);
const CosetContext ex38 = CosetContext::make(11, 3, 1, 5, 2);
const CosetContext ex315 = CosetContext::make(13, 3, 2, 9, 2);
const CosetContext ex45 = CosetContext::make(11, 2, 1, 10, 1);

DefiningSet ds(const CosetContext& ctx, Residues r) { return DefiningSet::make(ctx, std::move(r)); }

}  // namespace

TEST_SUITE("cosets") {
  TEST_CASE("context validation") {
    CHECK_THROWS(CosetContext::make(4, 1, 0, 3, 1));
    CHECK_THROWS(CosetContext::make(3, 2, 2, 4, 1));
    CHECK_THROWS(CosetContext::make(3, 1, 0, 6, 1));
    CHECK_THROWS(CosetContext::make(5, 1, 0, 3, 3));  // 3 does not divide 4
    CHECK_NOTHROW(CosetContext::make(5, 1, 0, 3, 4));
  }

  TEST_CASE("cyclotomic coset examples") {
    CHECK(cyclotomic_cosets(ex314) == std::vector<Residues>{{1, 5, 21, 25}, {3, 11, 15, 23}, {7, 9, 17, 19}, {13}});
    CHECK(cyclotomic_cosets(ex38) == std::vector<Residues>{{1}, {3}, {5}, {7}, {9}});
    std::vector<Residues> singles;
    for (std::uint32_t i = 0; i < 10; ++i) singles.push_back({i});
    CHECK(cyclotomic_cosets(ex45) == singles);
  }

  TEST_CASE("act_scale examples") {
    CHECK(act_scale({}, 3, 10).empty());
    CHECK(act_scale({1}, -169, 18) == Residues{11});
    CHECK(act_scale({3, 5, 7}, -11, 10) == Residues{3, 5, 7});
    CHECK_THROWS(act_scale({1}, 2, 10));
  }

  TEST_CASE("dual_defining_set examples") {
    CHECK(dual_defining_set(ds(ex38, {})).residues == ex38.root_residues());
    CHECK(dual_defining_set(ds(ex38, ex38.root_residues())).residues.empty());
    CHECK(dual_defining_set(ds(ex38, {3, 5, 7})).residues == Residues{1, 9});
  }

  TEST_CASE("is_lcd_defining_set examples") {
    CHECK(is_lcd_defining_set(ds(ex38, {3, 5, 7})));
    CHECK_FALSE(is_lcd_defining_set(ds(ex38, {1})));
    CHECK(is_lcd_defining_set(ds(ex38, {})));
  }

  TEST_CASE("all_lcd_exponent and q1_fixed_test examples") {
    CHECK(all_lcd_exponent(ex314) == std::optional<unsigned>{1});
    CHECK_FALSE(all_lcd_exponent(ex315).has_value());
    const auto rn2 = CosetContext::make(3, 1, 0, 1, 2);
    CHECK(all_lcd_exponent(rn2) == std::optional<unsigned>{1});
    CHECK(q1_fixed_test(ex314));
    CHECK_FALSE(q1_fixed_test(ex315));
    CHECK(q1_fixed_test(rn2));
  }

  TEST_CASE("orbit census examples") {
    const auto c45 = stable_orbit_census(ex45);
    CHECK(c45.fixed == 2);
    CHECK(c45.swapped == 4);
    CHECK(c45.longer == 0);
    const auto c314 = stable_orbit_census(ex314);
    CHECK(c314.fixed == 4);
    CHECK(c314.swapped == 0);
    // -13^2 = 11 mod 18: {9} fixed, {3} <-> {15}, and a 6-cycle through 1
    const auto c315 = stable_orbit_census(ex315);
    CHECK(c315.fixed == 1);
    CHECK(c315.swapped == 1);
    CHECK(c315.longer == 1);
    CHECK(c315.orbits.size() == 3);
    CHECK_FALSE(c315.involutive());
    CHECK_THROWS(stable_orbit_census(CosetContext::make(7, 2, 1, 2, 3)));
  }

  TEST_CASE("bch_lower_bound examples") {
    CHECK(bch_lower_bound(ds(ex38, {})) == 1);
    CHECK(bch_lower_bound(ds(ex38, {3, 5, 7})) == 4);
    CHECK(bch_lower_bound(ds(ex38, {1, 3, 5, 7})) == 5);
    CHECK_THROWS(bch_lower_bound(ds(ex38, ex38.root_residues())));
  }

  TEST_CASE("bch_lower_bound counts cyclic runs") {
    for (const auto& ctx : contexts({2, 3, 5}, 2, 24)) {
      if (ctx.k != 0) continue;
      const auto cosets = testctx::brute_cosets(ctx);
      if (cosets.size() > 10) continue;
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << cosets.size()); ++mask) {
        const Residues P = testctx::union_of(cosets, mask);
        std::vector<bool> in(ctx.n, false);
        for (auto x : P) in[((x + ctx.rn() - 1) % ctx.rn()) / ctx.r] = true;
        // longest run of consecutive indices, wrapping around
        unsigned best = 0;
        for (std::uint32_t start = 0; start < ctx.n; ++start) {
          unsigned len = 0;
          while (len < ctx.n && in[(start + len) % ctx.n]) ++len;
          best = std::max(best, len);
        }
        CHECK(bch_lower_bound(ds(ctx, P)) == best + 1);
      }
    }
  }

  TEST_CASE("unique_order2_unit matches a unit scan") {
    CHECK(unique_order2_unit(10));
    CHECK_FALSE(unique_order2_unit(8));
    CHECK(unique_order2_unit(26));
    for (std::uint64_t rn = 3; rn <= 300; ++rn) {
      unsigned count = 0;
      for (std::uint64_t u = 2; u < rn; ++u)
        if (oracle::gcd(u, rn) == 1 && u * u % rn == 1) ++count;
      CHECK(unique_order2_unit(rn) == (count == 1));
    }
  }

  TEST_CASE("hermitian_necessary_check") {
    CHECK_FALSE(hermitian_necessary_check(3, 2, 2, 2));
    CHECK(hermitian_necessary_check(3, 1, 2, 2));
    CHECK_THROWS(hermitian_necessary_check(3, 2, 2, 5));
    CHECK_THROWS(hermitian_necessary_check(3, 2, 1, 2));
  }

  TEST_CASE("lcd_closure examples") {
    CHECK(lcd_closure(ds(ex315, {1})).residues == Residues{1, 5, 7, 11, 13, 17});
    CHECK(lcd_closure(ds(ex315, {3})).residues == Residues{3, 15});
    CHECK(lcd_closure(ds(ex315, {3, 9, 15})).residues == Residues{3, 9, 15});
  }

  TEST_CASE("cosets partition the class and are mu_q orbits") {
    for (const auto& ctx : contexts({2, 3, 5, 7}, 3, 40)) {
      if (ctx.k != 0) continue;
      for (std::uint32_t offset = 0; offset < std::min<std::uint32_t>(ctx.r, 3); ++offset)
        CHECK(cyclotomic_cosets(ctx, offset) == testctx::brute_cosets(ctx, offset));
    }
  }

  TEST_CASE("-p^(e-k) preserves 1 + rZ_rn when r | 1 + p^(e-k)") {
    for (const auto& ctx : contexts({2, 3, 5, 7, 11, 13}, 3, 40)) {
      if (!ctx.self_dual_constant()) continue;
      const Residues cls = ctx.root_residues();
      CHECK(testctx::scale(cls, testctx::minus_p_pow(ctx, ctx.e - ctx.k), ctx.rn()) == cls);
    }
  }

  TEST_CASE("-p^k stability equals -p^(e-k) stability on q-closed sets") {
    for (const auto& ctx : contexts({2, 3, 5, 7}, 3, 40)) {
      const auto cosets = testctx::brute_cosets(ctx);
      if (cosets.size() > 12) continue;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
        const Residues P = testctx::union_of(cosets, mask);
        const bool a = testctx::scale(P, testctx::minus_p_pow(ctx, ctx.k), ctx.rn()) == P;
        const bool b = testctx::scale(P, testctx::minus_p_pow(ctx, ctx.e - ctx.k), ctx.rn()) == P;
        CHECK(a == b);
        CHECK(is_lcd_defining_set(ds(ctx, P)) == a);
      }
    }
  }

  TEST_CASE("dual defining set: size, closure, and double dual at the matched parameter") {
    std::size_t checked = 0;
    for (const auto& ctx : contexts({2, 3, 5, 7}, 3, 40)) {
      const auto cosets = testctx::brute_cosets(ctx);
      if (cosets.size() > 12) continue;
      const unsigned k2 = (ctx.e - ctx.k) % ctx.e;
      const CosetContext ctx2 = CosetContext::make(ctx.p, ctx.e, k2, ctx.n, ctx.r);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
        const DefiningSet P = ds(ctx, testctx::union_of(cosets, mask));
        const DefiningSet D = dual_defining_set(P);
        CHECK(D.size() == ctx.n - P.size());
        CHECK(is_q_closed(ctx, D.residues));
        for (auto x : D.residues) CHECK(x % ctx.r == D.offset % ctx.r);
        // (C^{perp k})^{perp (e-k)} = C
        const DefiningSet back = dual_defining_set(DefiningSet{ctx2, D.residues, D.offset});
        CHECK(back.residues == P.residues);
        CHECK(back.offset % ctx.r == 1 % ctx.r);
        // Euclidean and Hermitian duality are involutions at the same parameter
        if (2 * ctx.k % ctx.e == 0) CHECK(dual_defining_set(D).residues == P.residues);
        ++checked;
      }
    }
    CHECK(checked > 10000);
  }

  TEST_CASE("all-LCD exponent, Q1 fixed test and the exhaustive stability check agree") {
    for (const auto& ctx : contexts({2, 3, 5, 7}, 3, 40)) {
      const auto cosets = testctx::brute_cosets(ctx);
      if (cosets.size() > 14) continue;
      bool all = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()) && all; ++mask)
        all = is_lcd_defining_set(ds(ctx, testctx::union_of(cosets, mask)));
      CAPTURE(ctx.p);
      CAPTURE(ctx.e);
      CAPTURE(ctx.k);
      CAPTURE(ctx.n);
      CAPTURE(ctx.r);
      CHECK(all_lcd_exponent(ctx).has_value() == all);
      CHECK(q1_fixed_test(ctx) == all);
    }
  }

  TEST_CASE("all_lcd_exponent returns the smallest exponent") {
    for (const auto& ctx : contexts({3, 5, 7}, 3, 40)) {
      const auto got = all_lcd_exponent(ctx);
      std::optional<unsigned> expected;
      for (unsigned j = 1; j <= 2 * ctx.rn() && !expected; ++j) {
        if (ctx.e * j < ctx.k) continue;
        std::uint64_t v = 1;
        for (unsigned i = 0; i < ctx.e * j - ctx.k; ++i) v = v * ctx.p % ctx.rn();
        if ((v + 1) % ctx.rn() == 0) expected = j;
      }
      CHECK(got == expected);
    }
  }

  TEST_CASE("closed-form all-LCD conditions agree with direct action") {
    for (const auto& ctx : contexts({2, 3, 5, 7}, 3, 40)) {
      if (!ctx.self_dual_constant()) continue;
      const std::int64_t s_act = testctx::minus_p_pow(ctx, ctx.k);
      for (const auto& Q : testctx::brute_cosets(ctx)) {
        const Residues image = testctx::scale(Q, s_act, ctx.rn());
        const bool fixed = image == Q;
        for (auto s : Q) {
          CHECK(coset_fixed_by_exponent(ctx, s) == fixed);
          if (fixed) continue;
          Residues pair = Q;
          pair.insert(pair.end(), image.begin(), image.end());
          std::sort(pair.begin(), pair.end());
          const bool stable = testctx::scale(pair, s_act, ctx.rn()) == pair;
          CHECK(pair_stable_by_exponent(ctx, s) == stable);
        }
      }
    }
  }

  TEST_CASE("odd-order Hermitian contexts fix every coset") {
    std::size_t hits = 0;
    for (const auto& ctx : contexts({2, 3, 5, 7, 11, 13}, 4, 60)) {
      if (ctx.e % 2 != 0 || ctx.k != ctx.e / 2 || ctx.rn() < 3) continue;
      const std::uint64_t pa = oracle::ipow(ctx.p, ctx.k) % ctx.rn();
      if (oracle::gcd(pa, ctx.rn()) != 1) continue;
      const std::uint64_t ord = oracle::order_mod(pa, ctx.rn());
      if (ord % 4 != 2 || !unique_order2_unit(ctx.rn())) continue;
      if (!ctx.self_dual_constant()) continue;
      ++hits;
      const auto census = stable_orbit_census(ctx);
      CHECK(census.swapped == 0);
      CHECK(census.longer == 0);
      CHECK(census.fixed == census.cosets.size());
      CHECK(coset_of(ctx, 1 % ctx.rn()).size() == ord / 2);
    }
    CHECK(hits > 0);
  }

  TEST_CASE("Hermitian census: non-fixed cosets pair up and stable sets are orbit unions") {
    for (const auto& ctx : contexts({2, 3, 5, 7}, 4, 40)) {
      if (ctx.e % 2 != 0 || ctx.k != ctx.e / 2 || !ctx.self_dual_constant()) continue;
      const auto census = stable_orbit_census(ctx);
      CHECK(census.longer == 0);
      CHECK(census.fixed + 2 * census.swapped == census.cosets.size());
      const auto cosets = testctx::brute_cosets(ctx);
      if (cosets.size() > 12) continue;
      std::vector<Residues> brute;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
        const Residues P = testctx::union_of(cosets, mask);
        if (testctx::scale(P, testctx::minus_p_pow(ctx, ctx.k), ctx.rn()) == P) brute.push_back(P);
      }
      std::sort(brute.begin(), brute.end());
      CHECK(stable_defining_sets(ctx) == brute);
      CHECK(brute.size() == (std::size_t{1} << (census.fixed + census.swapped)));
    }
  }

  TEST_CASE("lcd_closure is the smallest stable q-closed superset") {
    for (const auto& ctx : contexts({2, 3, 5, 7}, 3, 30)) {
      if (!ctx.self_dual_constant()) continue;
      const auto cosets = testctx::brute_cosets(ctx);
      if (cosets.size() > 8) continue;
      const std::uint64_t full = std::uint64_t{1} << cosets.size();
      std::vector<std::uint64_t> stable;
      for (std::uint64_t mask = 0; mask < full; ++mask) {
        const Residues P = testctx::union_of(cosets, mask);
        if (testctx::scale(P, testctx::minus_p_pow(ctx, ctx.k), ctx.rn()) == P) stable.push_back(mask);
      }
      for (std::uint64_t a = 0; a < full; ++a) {
        std::uint64_t meet = full - 1;
        for (auto s : stable)
          if ((s & a) == a) meet &= s;
        CHECK(lcd_closure(ds(ctx, testctx::union_of(cosets, a))).residues == testctx::union_of(cosets, meet));
      }
    }
  }

  TEST_CASE("enumerators are sorted and refuse oversized requests") {
    const auto sets = all_defining_sets(ex314);
    CHECK(sets.size() == 16);
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    CHECK_THROWS_AS(all_defining_sets(CosetContext::make(5, 2, 0, 24, 1), 1, 20), std::length_error);
    CHECK(stable_defining_sets(ex45).size() == 64);
  }

  TEST_CASE("DefiningSet validation") {
    CHECK_THROWS(DefiningSet::make(ex314, {1}));        // not q-closed
    CHECK_THROWS(DefiningSet::make(ex314, {2}));        // wrong class
    CHECK_THROWS(DefiningSet::make(ex314, {27}));       // out of range
    CHECK(DefiningSet::make(ex314, {25, 1, 21, 5}).residues == Residues{1, 5, 21, 25});
  }
}
