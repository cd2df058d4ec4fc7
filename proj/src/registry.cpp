#include "glcd/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "glcd/arith.hpp"
#include "glcd/constacyclic.hpp"

namespace glcd {

namespace detail {
extern const char* const kDiscrepancyManifest;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::match: return "match";
    case ClaimStatus::flagged: return "flagged";
    case ClaimStatus::mismatch: return "MISMATCH";
  }
  return "?";
}

bool ExampleReport::passed() const { return count(ClaimStatus::mismatch) == 0; }

std::size_t ExampleReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

const json& discrepancy_manifest() {
  static const json manifest = json::parse(detail::kDiscrepancyManifest);
  return manifest;
}

const std::vector<std::string>& catalogued_operations() {
  static const std::vector<std::string> ops = {
      "make_field",         "frobenius_pow",        "mult_order",          "sqrt_minus_one",
      "embed",              "primitive_rn_root",    "reciprocal",          "frobenius_poly",
      "minimal_poly",       "factor_xn_minus_lambda", "cyclotomic_cosets", "act_scale",
      "dual_defining_set",  "is_lcd_defining_set",  "all_lcd_exponent",    "q1_fixed_test",
      "stable_orbit_census", "bch_lower_bound",     "unique_order2_unit",  "hermitian_necessary_check",
      "lcd_closure",        "galois_inner_product", "p_power_code",        "galois_dual",
      "is_galois_lcd",      "extend_lcd",           "min_distance",        "code_from_defining_set",
      "galois_dual_code",   "is_lcd",               "to_generator_matrix", "classify_all_lcd",
      "hermitian_mds_family"};
  return ops;
}

json to_json(const ExampleReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    json item{{"claim", c.what}, {"paper", c.paper}, {"computed", c.computed}, {"status", to_string(c.status)}};
    if (!c.note.empty()) item["note"] = c.note;
    claims.push_back(std::move(item));
  }
  return json{{"id", report.id},
              {"title", report.title},
              {"inputs", report.inputs},
              {"claims", std::move(claims)},
              {"passed", report.passed()}};
}

namespace {

std::string params_str(const CodeParams& p) {
  std::ostringstream os;
  os << '[' << p.n << ',' << p.dim << ',';
  if (p.exact()) os << p.d_lo;
  else os << p.d_lo << ".." << p.d_hi;
  os << ']';
  return os.str();
}

std::string set_str(const Residues& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::string cosets_str(const std::vector<Residues>& cosets) {
  std::string out;
  for (std::size_t i = 0; i < cosets.size(); ++i) out += (i ? "," : "") + set_str(cosets[i]);
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

class Builder {
 public:
  Builder(std::string id, std::string title) {
    report_.id = std::move(id);
    report_.title = std::move(title);
  }

  void claim(const std::string& what, const std::string& paper, const std::string& computed, std::string note = {}) {
    Claim c{what, paper, computed, ClaimStatus::match, std::move(note)};
    const json* entry = manifest_entry(what);
    if (paper == computed) {
      if (entry) {
        c.status = ClaimStatus::mismatch;
        c.note = "manifest lists a discrepancy that no longer occurs";
      }
    } else if (entry && entry->at("paper") == paper && entry->at("oracle") == computed) {
      c.status = ClaimStatus::flagged;
      if (c.note.empty()) c.note = entry->at("formula").get<std::string>();
    } else {
      c.status = ClaimStatus::mismatch;
    }
    report_.claims.push_back(std::move(c));
  }

  void used(std::initializer_list<const char*> ops) {
    for (const char* op : ops) report_.operations.insert(op);
  }

  json& inputs() { return report_.inputs; }
  ExampleReport take() { return std::move(report_); }

 private:
  const json* manifest_entry(const std::string& what) const {
    for (const auto& e : discrepancy_manifest().at("entries"))
      if (e.at("example") == report_.id && e.at("claim") == what) return &e;
    return nullptr;
  }
  ExampleReport report_;
};

json context_inputs(const Field& f, unsigned k, std::uint32_t n, const Element& lambda) {
  return json{{"field", to_json(f)}, {"k", k}, {"n", n}, {"lambda", to_json(lambda)}};
}

// "Q<smallest member>" of s * Q_x, where Q_x is the q-coset of x.
std::string image_label(const CosetContext& ctx, std::uint32_t x, std::int64_t s) {
  const auto image = act_scale(coset_of(ctx, x), s, ctx.rn());
  return "Q" + std::to_string(image.front());
}

std::string degrees_str(const std::vector<CosetFactor>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + std::to_string(factors[i].factor.degree());
  return out;
}

// Exponent name of x relative to a, as printed in the GF(8) table.
std::string power_name(const Element& x, const Element& a) {
  if (x.is_zero()) return "0";
  Element acc = x.field().one();
  for (std::uint64_t i = 0; i + 1 < x.field().order(); ++i, acc *= a) {
    if (acc == x) return i == 0 ? "1" : i == 1 ? "alpha" : "alpha^" + std::to_string(i);
  }
  return "?";
}

DistanceReport distance_of(const ConstacyclicCode& code, const DistanceOptions& options) {
  DistanceOptions opt = options;
  if (code.zeros().size() < code.length()) opt.lower_bound = bch_lower_bound(code.defining_set());
  return min_distance(to_generator_matrix(code), opt);
}

// ---------------------------------------------------------------- examples

ExampleReport example_2_4(const DistanceOptions& options) {
  Builder b("2.4", "Galois LCD MDS [4,2,3] code over GF(8), k = 1");
  const Field f = Field::make(2, 3);
  const Element a = f.generator(), o = f.one(), z = f.zero();
  const Matrix g = Matrix::from_elements(f, {{o, z, a, a}, {z, o, o, a}}, 4);
  const GaloisParam k{1};
  b.inputs() = json{{"field", to_json(f)}, {"k", k.k}, {"generator", to_json(g)}};
  b.used({"make_field", "mult_order", "frobenius_pow", "p_power_code", "galois_inner_product", "is_galois_lcd",
          "galois_dual", "min_distance", "extend_lcd"});

  b.claim("alpha^3", "1+alpha", a.pow(3) == o + a ? "1+alpha" : power_name(a.pow(3), a));
  b.claim("order of alpha", "7", std::to_string(mult_order(a)));
  const std::uint64_t pek = arith::ipow(2, k.complement(f));
  b.claim("p^(e-k)", "4", std::to_string(pek));

  const LinearCode code = LinearCode::from_generator(g);
  const Matrix g4 = p_power_code(code, k.complement(f)).generator();
  std::string row;
  for (std::size_t j = 0; j < 4; ++j) {
    const Element entry = g4.element(0, j);
    if (!(entry == frobenius_pow(g.element(0, j), k.complement(f)))) row = "inconsistent";
    if (row != "inconsistent") row += (j ? "," : "") + power_name(entry, a);
  }
  b.claim("first row of G^(4)", "1,0,alpha^4,alpha^4", row);

  const LcdVerdict verdict = is_galois_lcd(code, k);
  b.claim("det[G (G^(4))^T]", "alpha", power_name(verdict.det, a));
  // the same Gram matrix from [g_i, g_j]_(e-k)
  std::vector<std::vector<Element>> rows(2, std::vector<Element>(4, z));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) rows[i][j] = g.element(i, j);
  const GaloisParam kc{k.complement(f) % f.degree()};
  const Element gram_det = galois_inner_product(rows[0], rows[0], kc) * galois_inner_product(rows[1], rows[1], kc) -
                           galois_inner_product(rows[0], rows[1], kc) * galois_inner_product(rows[1], rows[0], kc);
  b.claim("det from Galois inner products", "alpha", power_name(gram_det, a));
  b.claim("Galois LCD", "true", bool_str(verdict.lcd));
  const LinearCode dual = galois_dual(code, k);
  b.claim("dim(C intersect C^perp1)", "0",
          std::to_string(intersection_dimension(code.generator(), dual.generator())));

  const DistanceReport dist = min_distance(code, options);
  b.claim("parameters", "[4,2,3]", params_str(dist.params));
  b.claim("MDS", "true", bool_str(dist.params.mds()));

  const LinearCode ext = extend_lcd(g, k, ExtendMode::char2);
  const CodeParams ep = min_distance(ext, options).params;
  const bool ext_ok = ep.exact() && ep.d() >= 3 && is_galois_lcd(ext, k).lcd;
  b.claim("[I A A] extension", "[6,2,>=3] LCD", ext_ok ? "[6,2,>=3] LCD" : params_str(ep),
          "computed " + params_str(ep));
  return b.take();
}

ExampleReport example_3_8(const DistanceOptions& options) {
  Builder b("3.8", "negacyclic n = 5 over GF(1331), k = 1");
  const Field f = Field::make(11, 3);
  const Element lambda = f.from_int(-1);
  const GaloisParam k{1};
  b.inputs() = context_inputs(f, k.k, 5, lambda);
  b.used({"make_field", "mult_order", "cyclotomic_cosets", "factor_xn_minus_lambda", "act_scale",
          "is_lcd_defining_set", "code_from_defining_set", "is_lcd", "to_generator_matrix", "min_distance",
          "dual_defining_set", "galois_dual_code", "reciprocal", "frobenius_poly"});

  b.claim("r", "2", std::to_string(mult_order(lambda)));
  const auto ctx = CosetContext::make(11, 3, k.k, 5, 2);
  b.claim("cosets", "{1},{3},{5},{7},{9}", cosets_str(cyclotomic_cosets(ctx)));
  b.claim("factor degrees of x^5+1", "1,1,1,1,1", degrees_str(factor_xn_minus_lambda(5, lambda)));
  const std::int64_t s = -11;
  for (auto [x, y] : std::vector<std::pair<std::uint32_t, const char*>>{{1, "Q9"}, {9, "Q1"}, {3, "Q7"}, {7, "Q3"}, {5, "Q5"}})
    b.claim("-11 Q" + std::to_string(x), y, image_label(ctx, x, s));

  const Residues P{3, 5, 7};
  const auto set = DefiningSet::make(ctx, P);
  b.claim("-11P = P", "true", bool_str(is_lcd_defining_set(set)));
  const auto code = code_from_defining_set(f, 5, lambda, P);
  b.claim("Galois LCD", "true", bool_str(is_lcd(code, k)));
  const DistanceReport dist = distance_of(code, options);
  b.claim("parameters of C_P", "[10,7,4]", params_str(dist.params));
  b.claim("MDS", "true", bool_str(dist.params.mds()));

  // -p^(e-k) times the complement
  Residues expected;
  for (std::uint32_t x : {1u, 9u}) expected.push_back(static_cast<std::uint32_t>(arith::mod(-121LL * x, 10)));
  std::sort(expected.begin(), expected.end());
  const auto dual = galois_dual_code(code, k);
  b.claim("dual defining set", set_str(expected), set_str(dual_defining_set(set).residues));
  b.claim("dual code defining set", set_str(expected), set_str(dual.zeros()));
  const Poly h_dual = frobenius_poly(reciprocal(code.check_polynomial()), k.complement(f));
  b.claim("dual generator from h", "equal", h_dual == dual.generator() ? "equal" : "different");
  return b.take();
}

ExampleReport example_3_14(const DistanceOptions& options) {
  Builder b("3.14", "negacyclic n = 13 over GF(125), k = 1");
  const Field f = Field::make(5, 3);
  const Element lambda = f.from_int(-1);
  const GaloisParam k{1};
  b.inputs() = context_inputs(f, k.k, 13, lambda);
  b.used({"make_field", "cyclotomic_cosets", "factor_xn_minus_lambda", "minimal_poly", "embed", "primitive_rn_root",
          "all_lcd_exponent", "q1_fixed_test", "classify_all_lcd", "stable_orbit_census", "sqrt_minus_one",
          "extend_lcd", "min_distance", "code_from_defining_set", "to_generator_matrix", "is_galois_lcd"});

  const auto ctx = CosetContext::make(5, 3, k.k, 13, 2);
  b.claim("cosets", "{1,5,21,25},{3,11,15,23},{7,9,17,19},{13}", cosets_str(cyclotomic_cosets(ctx)));
  b.claim("factor degrees of x^13+1", "4,4,4,1", degrees_str(factor_xn_minus_lambda(13, lambda)));

  const auto sf = make_splitting_field(f, 13, lambda);
  const bool theta_ok = mult_order(sf->theta) == 26 && sf->theta.pow(13) == sf->embedding(lambda);
  b.claim("theta", "order 26, theta^13 = lambda", theta_ok ? "order 26, theta^13 = lambda" : "invalid");
  const Poly m1 = minimal_poly(Residues{1, 5, 21, 25}, *sf);
  b.claim("M_Q1 irreducible of degree 4", "true", bool_str(m1.degree() == 4 && is_irreducible(m1)));

  const auto j = all_lcd_exponent(ctx);
  b.claim("p^(ej-k) = -1 mod 26", "5^2", j ? "5^" + std::to_string(3 * *j - k.k) : "none");
  b.claim("Q1 = Q_(-p^k)", "true", bool_str(q1_fixed_test(ctx)));

  ClassifyOptions copt;
  copt.distance = options;
  const Catalog cat = classify_all_lcd(f, 13, lambda, k, copt);
  b.claim("Galois LCD codes", "15", std::to_string(cat.nonzero_count()));
  b.claim("all stable codes LCD", "true",
          bool_str(std::all_of(cat.entries.begin(), cat.entries.end(), [](const auto& e) { return e.lcd; })));
  std::set<std::string> types;
  for (const auto& e : cat.entries)
    if (e.params.dim > 0) types.insert(params_str(e.params));
  for (const char* t : {"[13,12,2]", "[13,9,4]", "[13,8,4]", "[13,4,8]", "[13,5,7]"})
    b.claim(std::string("type ") + t, "present", types.count(t) ? "present" : "absent");
  std::string listing;
  for (const auto& t : types) listing += (listing.empty() ? "" : " ") + t;
  b.claim("number of parameter types", "5", std::to_string(types.size()), "computed types " + listing);

  // [I A eta*A] on the [13,9,4] code, eta^2 = -1 in GF(125)
  const auto code = code_from_defining_set(f, 13, lambda, Residues{1, 5, 21, 25});
  const StandardForm sform = to_standard_form(to_generator_matrix(code).generator());
  const Element eta = sqrt_minus_one(f);
  const LinearCode ext = extend_lcd(sform.generator, k, ExtendMode::pmod4);
  const CodeParams ep = min_distance(ext, options).params;
  const bool ext_ok = eta * eta == f.from_int(-1) && ep.exact() && ep.d() >= 4 && is_galois_lcd(ext, k).lcd;
  b.claim("[I A eta*A] extension of [13,9,4]", "[17,9,>=4] LCD", ext_ok ? "[17,9,>=4] LCD" : params_str(ep),
          "computed " + params_str(ep));
  return b.take();
}

ExampleReport example_3_15(const DistanceOptions& options) {
  Builder b("3.15", "negacyclic n = 9 over GF(2197), k = 2");
  const Field f = Field::make(13, 3);
  const Element lambda = f.from_int(-1);
  const GaloisParam k{2};
  b.inputs() = context_inputs(f, k.k, 9, lambda);
  b.used({"make_field", "cyclotomic_cosets", "act_scale", "is_lcd_defining_set", "lcd_closure", "q1_fixed_test",
          "all_lcd_exponent", "code_from_defining_set", "is_lcd", "min_distance", "to_generator_matrix"});

  const auto ctx = CosetContext::make(13, 3, k.k, 9, 2);
  b.claim("cosets", "{1},{3},{5},{7},{9},{11},{13},{15},{17}", cosets_str(cyclotomic_cosets(ctx)));
  const std::int64_t s = -169;
  for (auto [x, y] : std::vector<std::pair<std::uint32_t, const char*>>{
           {1, "Q11"}, {11, "Q13"}, {13, "Q17"}, {17, "Q7"}, {7, "Q5"}, {5, "Q1"}, {3, "Q15"}, {15, "Q3"}, {9, "Q9"}})
    b.claim("-13^2 Q" + std::to_string(x), y, image_label(ctx, x, s));
  b.claim("Q1 = Q_(-p^k)", "false", bool_str(q1_fixed_test(ctx)));
  b.claim("every code LCD", "false", bool_str(all_lcd_exponent(ctx).has_value()));

  const std::vector<Residues> sets = {{1, 5, 7, 11, 13, 17}, {1, 5, 7, 9, 11, 13, 17}, {1, 3, 5, 7, 11, 13, 15, 17},
                                      {3, 15},               {3, 9, 15},               {9}};
  const char* params[] = {"[9,3,3]", "[9,2,6]", "[9,1,9]", "[9,7,2]", "[9,6,2]", "[9,8,2]"};
  b.claim("closure of Q1", set_str(sets[0]), set_str(lcd_closure(DefiningSet::make(ctx, {1})).residues));
  b.claim("closure of Q3", set_str(sets[3]), set_str(lcd_closure(DefiningSet::make(ctx, {3})).residues));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name = "P" + std::to_string(i + 1);
    b.claim("-13^2 " + name + " = " + name, "true", bool_str(is_lcd_defining_set(DefiningSet::make(ctx, sets[i]))));
    const auto code = code_from_defining_set(f, 9, lambda, sets[i]);
    b.claim(name + " Galois LCD", "true", bool_str(is_lcd(code, k)));
    const DistanceReport dist = distance_of(code, options);
    b.claim(name + " parameters", params[i], params_str(dist.params));
    if (i == 2 || i == 5) b.claim(name + " MDS", "true", bool_str(dist.params.mds()));
  }
  return b.take();
}

ExampleReport example_4_5(const DistanceOptions& options) {
  Builder b("4.5", "Hermitian LCD cyclic codes of length 10 over GF(121)");
  const Field f = Field::make(11, 2);
  const Element lambda = f.one();
  const GaloisParam k{1};
  b.inputs() = context_inputs(f, k.k, 10, lambda);
  b.used({"make_field", "cyclotomic_cosets", "act_scale", "stable_orbit_census", "classify_all_lcd",
          "code_from_defining_set", "is_lcd", "is_galois_lcd", "to_generator_matrix", "min_distance",
          "bch_lower_bound"});

  const auto ctx = CosetContext::make(11, 2, k.k, 10, 1);
  b.claim("cosets", "{0},{1},{2},{3},{4},{5},{6},{7},{8},{9}", cosets_str(cyclotomic_cosets(ctx)));
  const std::int64_t s = -11;
  for (auto [x, y] : std::vector<std::pair<std::uint32_t, const char*>>{{1, "Q1"}, {2, "Q8"}, {3, "Q7"}, {4, "Q6"}, {5, "Q5"}})
    b.claim("-11 Q" + std::to_string(x), y, image_label(ctx, x, s));

  const OrbitCensus census = stable_orbit_census(ctx);
  b.claim("non-fixed cosets pair up", "true", bool_str(census.involutive()),
          "t = " + std::to_string(census.fixed) + ", h = " + std::to_string(census.swapped));
  ClassifyOptions copt;
  copt.distance = options;
  copt.exact_distance = false;
  const Catalog cat = classify_all_lcd(f, 10, lambda, k, copt);
  b.claim("Hermitian LCD cyclic codes", "63", std::to_string(cat.nonzero_count()));
  const auto formula = cat.formula_count();
  b.claim("2^(t+h) - 1", "63", formula ? std::to_string(*formula) : "undefined");

  const std::vector<Residues> sets = {{4, 5, 6}, {3, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 7, 8}};
  const char* params[] = {"[10,7,4]", "[10,5,6]", "[10,3,7]"};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name = "P" + std::to_string(i + 1);
    const auto code = code_from_defining_set(f, 10, lambda, sets[i]);
    const bool coset_lcd = is_lcd(code, k);
    const bool matrix_lcd = is_galois_lcd(to_generator_matrix(code), k).lcd;
    b.claim(name + " Hermitian LCD", "true", coset_lcd == matrix_lcd ? bool_str(coset_lcd) : "inconsistent");
    const DistanceReport dist = distance_of(code, options);
    const std::string note =
        i == 2 ? "BCH bound " + std::to_string(bch_lower_bound(code.defining_set())) + ", exact via " +
                     to_string(dist.used)
               : std::string{};
    b.claim("parameters of C_" + name, params[i], params_str(dist.params), note);
    b.claim(name + " MDS", "true", bool_str(dist.params.mds()));
  }
  return b.take();
}

ExampleReport example_4_8(const DistanceOptions& options) {
  Builder b("4.8", "Hermitian LCD MDS negacyclic codes of length 5 over GF(81)");
  const Field f = Field::make(3, 4);
  const Element lambda = f.from_int(-1);
  const GaloisParam k{2};
  b.inputs() = context_inputs(f, k.k, 5, lambda);
  b.used({"make_field", "unique_order2_unit", "hermitian_mds_family", "to_generator_matrix", "is_galois_lcd",
          "min_distance", "all_lcd_exponent", "hermitian_necessary_check"});

  b.claim("p^(2a) mod 10", "1", std::to_string(f.order() % 10));
  Residues units, involutions;
  for (std::uint32_t u = 1; u < 10; ++u) {
    if (arith::gcd(u, 10) != 1) continue;
    units.push_back(u);
    if (u != 1 && u * u % 10 == 1) involutions.push_back(u);
  }
  b.claim("Z_10^*", "{1,3,7,9}", set_str(units));
  b.claim("elements of order 2", "{9}", set_str(involutions));
  b.claim("unique element of order 2", "true", bool_str(unique_order2_unit(10)));

  std::size_t produced = 0;
  for (unsigned d = 5; d >= 2; --d) {
    const auto code = hermitian_mds_family(lambda, 5, d);
    const LinearCode lc = to_generator_matrix(code);
    const DistanceReport dist = min_distance(lc, options);
    const std::string expect = "[5," + std::to_string(6 - d) + "," + std::to_string(d) + "]";
    b.claim("code " + expect, expect, params_str(dist.params));
    b.claim(expect + " Hermitian LCD", "true", bool_str(is_galois_lcd(lc, k).lcd));
    b.claim(expect + " MDS", "true", bool_str(dist.params.mds()));
    ++produced;
  }
  b.claim("number of codes produced", "9", std::to_string(produced));

  // Even companion length n = 2: if every negacyclic code
  // were Hermitian LCD, r | p^a + 1 and 2^(b1+b2) | p^a + 1 would follow.
  const auto ctx2 = CosetContext::make(3, 4, k.k, 2, 2);
  const bool all_lcd = all_lcd_exponent(ctx2).has_value();
  const bool necessary = hermitian_necessary_check(3, 2, 2, 2);
  b.claim("all-LCD at n = 2 implies the divisibility conditions", "consistent", !all_lcd || necessary ? "consistent" : "violated",
          "all LCD: " + bool_str(all_lcd) + ", divisibility: " + bool_str(necessary));
  return b.take();
}

const std::map<std::string, std::function<ExampleReport(const DistanceOptions&)>>& registry() {
  static const std::map<std::string, std::function<ExampleReport(const DistanceOptions&)>> table = {
      {"2.4", example_2_4},   {"3.8", example_3_8}, {"3.14", example_3_14},
      {"3.15", example_3_15}, {"4.5", example_4_5}, {"4.8", example_4_8}};
  return table;
}

}  // namespace

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"2.4", "3.8", "3.14", "3.15", "4.5", "4.8"};
  return ids;
}

ExampleReport reproduce_example(const std::string& id, const DistanceOptions& options) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown example id: " + id);
  return it->second(options);
}

}  // namespace glcd
