// glcd: command-line front end for the Galois LCD code library.
//
// Exit codes: 0 success, 1 usage error, 2 computation refused (budget),
// 3 reproduction mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "glcd/arith.hpp"
#include "glcd/constacyclic.hpp"
#include "glcd/registry.hpp"
#include "glcd/serialize.hpp"

using namespace glcd;

namespace {

constexpr int kUsage = 1;
constexpr int kRefused = 2;
constexpr int kMismatch = 3;

struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t budget_messages = 100'000'000;
  std::uint64_t budget_supports = 10'000'000;
  std::string format = "text";
  std::string modulus;

  std::uint32_t p = 0;
  unsigned e = 1;
  unsigned k = 0;
  std::uint32_t n = 0;
  std::int64_t lambda = 1;
  std::string lambda_coeffs;
  std::string set;
  bool has_set = false;
  std::string generator_file;
  std::string output;
  bool exact_distance = false;
  std::string strategy = "auto";
  std::string mode;
  std::string example = "all";
};

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    const std::int64_t v = std::stoll(token.substr(first), &used);
    if (token.find_first_not_of(" \t", first + used) != std::string::npos)
      throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

Field make_field(const Options& o) {
  if (o.p == 0) throw std::invalid_argument("-p is required");
  if (o.modulus.empty()) return Field::make(o.p, o.e);
  std::vector<std::uint32_t> m;
  for (auto v : parse_ints(o.modulus)) {
    if (v < 0) throw std::invalid_argument("modulus coefficients must be non-negative");
    m.push_back(static_cast<std::uint32_t>(v));
  }
  return Field::make(o.p, o.e, m);
}

Element make_lambda(const Field& f, const Options& o) {
  if (o.lambda_coeffs.empty()) return f.from_int(o.lambda);
  const auto c = parse_ints(o.lambda_coeffs);
  if (c.size() != f.degree()) throw std::invalid_argument("--lambda-coeffs needs e coefficients");
  for (auto v : c)
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.characteristic())
      throw std::invalid_argument("--lambda-coeffs entries must lie in [0, p)");
  return f.from_coeffs(c);
}

Residues parse_set(const std::string& text) {
  Residues out;
  for (auto v : parse_ints(text)) {
    if (v < 0) throw std::invalid_argument("residues must be non-negative");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DistanceOptions distance_options(const Options& o) {
  DistanceOptions d;
  d.budget_messages = o.budget_messages;
  d.budget_supports = o.budget_supports;
  if (o.strategy == "messages") d.strategy = DistanceStrategy::messages;
  else if (o.strategy == "supports") d.strategy = DistanceStrategy::supports;
  return d;
}

LinearCode read_generator(const Field& f, const std::string& path) {
  json j;
  if (path == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    j = json::parse(in);
  }
  if (j.is_object()) {
    if (j.contains("field") && !(field_from_json(j.at("field")) == f))
      throw std::invalid_argument("generator file field differs from -p/-e/--modulus");
    j = j.at("generator");
  }
  return LinearCode::from_generator(matrix_from_json(f, j));
}

std::string set_text(const Residues& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string params_text(const CodeParams& p) {
  std::string d = p.exact() ? std::to_string(p.d_lo) : std::to_string(p.d_lo) + ".." + std::to_string(p.d_hi);
  return "[" + std::to_string(p.n) + "," + std::to_string(p.dim) + "," + d + "]";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------- commands

int cmd_cosets(const Options& o) {
  const Field f = make_field(o);
  const GaloisParam k = GaloisParam::checked(o.k, f);
  const Element lambda = make_lambda(f, o);
  const auto sf = make_splitting_field(f, o.n, lambda);
  const CosetContext ctx = sf->context(k.k);
  const auto cosets = cyclotomic_cosets(ctx);
  const bool constrained = ctx.self_dual_constant();
  std::optional<OrbitCensus> census;
  if (constrained) census = stable_orbit_census(ctx);
  const auto j = all_lcd_exponent(ctx);
  const bool all_lcd = !constrained || j.has_value();

  if (o.format == "json") {
    json out{{"field", to_json(f)},   {"k", k.k},          {"n", o.n},
             {"lambda", to_json(lambda)}, {"r", ctx.r},   {"rn", ctx.rn()},
             {"theta", to_json(sf->theta)}, {"cosets", cosets}};
    out["self_dual_constant"] = constrained;
    if (census) {
      out["orbits"] = census->orbits;
      out["t"] = census->fixed;
      out["h"] = census->swapped;
      out["longer_orbits"] = census->longer;
    }
    out["all_lcd"] = all_lcd;
    out["q1_fixed"] = q1_fixed_test(ctx);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << f.describe() << "  k=" << k.k << "  n=" << o.n << "  r=" << ctx.r << "  rn=" << ctx.rn()
            << "  q mod rn=" << ctx.q_mod_rn() << "  -p^k mod rn=" << ctx.minus_pk() << '\n';
  std::cout << "cosets (" << cosets.size() << "):\n";
  for (const auto& c : cosets) {
    std::cout << "  Q" << c.front() << " = " << set_text(c);
    if (constrained) std::cout << "  -> Q" << act_scale(c, static_cast<std::int64_t>(ctx.minus_pk()), ctx.rn()).front();
    std::cout << '\n';
  }
  if (census) {
    std::cout << "orbits under -p^k: t=" << census->fixed << " h=" << census->swapped;
    if (census->longer) std::cout << " longer=" << census->longer;
    std::cout << "  (" << census->orbits.size() << " orbits, 2^" << census->orbits.size() << " stable sets)\n";
  } else {
    std::cout << "lambda^(1+p^(e-k)) != 1: -p^k does not preserve the root class\n";
  }
  std::cout << "all-LCD: " << (all_lcd ? "yes" : "no");
  if (constrained && j) std::cout << " (p^(ej-k) = -1 mod rn at j=" << *j << ")";
  if (!constrained) std::cout << " (constant condition)";
  std::cout << '\n';
  return 0;
}

int cmd_classify(const Options& o) {
  const Field f = make_field(o);
  const GaloisParam k = GaloisParam::checked(o.k, f);
  const Element lambda = make_lambda(f, o);
  ClassifyOptions copt;
  copt.distance = distance_options(o);
  copt.exact_distance = o.exact_distance;
  const Catalog cat = classify_all_lcd(f, o.n, lambda, k, copt);
  const bool csv = o.format == "csv" || (o.format != "json" && o.output.size() > 4 &&
                                         o.output.compare(o.output.size() - 4, 4, ".csv") == 0);
  emit(csv ? catalog_to_csv(cat, k) : catalog_to_json(cat, k).dump(2) + "\n", o.output);

  std::ostream& log = o.output.empty() ? std::cerr : std::cout;
  std::size_t inexact = 0;
  for (const auto& e : cat.entries)
    if (e.params.dim > 0 && !e.params.exact()) ++inexact;
  if (cat.self_dual_constant) {
    log << "stable defining sets: " << cat.stable_count() << "; LCD codes excluding the zero code: "
        << cat.nonzero_count() << " (zero code excluded)";
    if (const auto formula = cat.formula_count())
      log << "; 2^(t+h)-1 = " << *formula << (*formula == cat.nonzero_count() ? " (agree)" : " (DISAGREE)");
    else
      log << "; -p^k has orbits longer than 2, 2^(t+h)-1 does not apply";
  } else {
    log << "lambda^(1+p^(e-k)) != 1: all " << cat.stable_count() << " q-closed defining sets give LCD codes";
  }
  log << '\n';
  if (o.exact_distance && inexact) {
    log << inexact << " distance(s) left as intervals: search exceeded --budget-messages/--budget-supports\n";
    return kRefused;
  }
  return 0;
}

// A constacyclic code from -n/--lambda/--set, or nothing when --generator is given.
std::optional<ConstacyclicCode> constacyclic_from(const Field& f, const Options& o) {
  if (!o.generator_file.empty()) return std::nullopt;
  if (!o.has_set) throw std::invalid_argument("give --set (with -n, --lambda) or --generator");
  return code_from_defining_set(f, o.n, make_lambda(f, o), parse_set(o.set));
}

int cmd_lcd_check(const Options& o) {
  const Field f = make_field(o);
  const GaloisParam k = GaloisParam::checked(o.k, f);
  json out;
  std::optional<bool> coset_verdict;
  LcdVerdict verdict{false, f.zero()};
  if (const auto code = constacyclic_from(f, o)) {
    coset_verdict = is_lcd(*code, k);
    out["defining_set"] = to_json(code->defining_set(k.k));
    if (code->dimension() > 0) verdict = is_galois_lcd(to_generator_matrix(*code), k);
    else verdict = {true, f.one()};
  } else {
    verdict = is_galois_lcd(read_generator(f, o.generator_file), k);
  }
  out["k"] = k.k;
  if (coset_verdict) out["coset_criterion"] = *coset_verdict;
  out["determinant"] = to_json(verdict.det);
  out["determinant_criterion"] = verdict.lcd;
  if (o.format == "json") {
    std::cout << out.dump(2) << '\n';
  } else {
    if (coset_verdict) std::cout << "coset criterion: " << (*coset_verdict ? "LCD" : "not LCD") << '\n';
    std::cout << "det(G (G^(p^(e-k)))^T) = " << to_json(verdict.det).dump() << " -> "
              << (verdict.lcd ? "LCD" : "not LCD") << '\n';
  }
  if (coset_verdict && *coset_verdict != verdict.lcd) {
    std::cerr << "criteria disagree\n";
    return kMismatch;
  }
  return 0;
}

int cmd_dual(const Options& o) {
  const Field f = make_field(o);
  const GaloisParam k = GaloisParam::checked(o.k, f);
  json out{{"k", k.k}};
  if (const auto code = constacyclic_from(f, o)) {
    const auto dual = galois_dual_code(*code, k);
    out["constant"] = to_json(dual.constant());
    out["defining_set"] = to_json(dual.defining_set(k.k));
    out["generator_polynomial"] = to_json(dual.generator());
    out["dimension"] = dual.dimension();
    if (o.format != "json") {
      std::cout << "dual constant " << out["constant"].dump() << ", defining set " << set_text(dual.zeros())
                << ", dim " << dual.dimension() << "\ngenerator " << out["generator_polynomial"].dump() << '\n';
      return 0;
    }
  } else {
    const LinearCode dual = galois_dual(read_generator(f, o.generator_file), k);
    out["dimension"] = dual.dimension();
    out["generator"] = to_json(dual.generator());
    if (o.format != "json") {
      std::cout << "dim " << dual.dimension() << "\ngenerator " << out["generator"].dump() << '\n';
      return 0;
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_genpoly(const Options& o) {
  const Field f = make_field(o);
  const Element lambda = make_lambda(f, o);
  if (!o.has_set) {
    json out = json::array();
    for (const auto& [coset, factor] : factor_xn_minus_lambda(o.n, lambda)) {
      out.push_back(json{{"coset", coset}, {"factor", to_json(factor)}});
      if (o.format != "json") std::cout << "M_Q" << coset.front() << " " << set_text(coset) << ": " << to_json(factor).dump() << '\n';
    }
    if (o.format == "json") std::cout << out.dump(2) << '\n';
    return 0;
  }
  const auto code = code_from_defining_set(f, o.n, lambda, parse_set(o.set));
  json out{{"defining_set", to_json(code.defining_set())},
           {"generator", to_json(code.generator())},
           {"check", to_json(code.check_polynomial())},
           {"dimension", code.dimension()}};
  if (o.format == "json") std::cout << out.dump(2) << '\n';
  else
    std::cout << "g = " << out["generator"].dump() << "\nh = " << out["check"].dump() << "\ndim " << code.dimension()
              << '\n';
  return 0;
}

int cmd_mindist(const Options& o) {
  const Field f = make_field(o);
  DistanceOptions dopt = distance_options(o);
  std::optional<LinearCode> code;
  if (const auto cc = constacyclic_from(f, o)) {
    if (cc->dimension() == 0) throw std::invalid_argument("the zero code has no minimum distance");
    if (cc->zeros().size() < cc->length()) dopt.lower_bound = bch_lower_bound(cc->defining_set());
    code = to_generator_matrix(*cc);
  } else {
    code = read_generator(f, o.generator_file);
  }
  const DistanceReport rep = min_distance(*code, dopt);
  if (o.format == "json") {
    json out = to_json(rep.params);
    out["strategy"] = to_string(rep.used);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << params_text(rep.params) << (rep.params.mds() ? " MDS" : "") << "  (" << to_string(rep.used) << ")\n";
  }
  if (!rep.params.exact()) throw Refused("distance search exceeded its budget; reported an interval");
  return 0;
}

int cmd_extend(const Options& o) {
  const Field f = make_field(o);
  const GaloisParam k = GaloisParam::checked(o.k, f);
  const LinearCode input = read_generator(f, o.generator_file);
  const StandardForm sf = to_standard_form(input.generator());
  const ExtendMode mode = o.mode == "char2" ? ExtendMode::char2 : ExtendMode::pmod4;
  const LinearCode ext = extend_lcd(sf.generator, k, mode);
  const DistanceOptions dopt = distance_options(o);
  const CodeParams before = min_distance(LinearCode::from_generator(sf.generator), dopt).params;
  const CodeParams after = min_distance(ext, dopt).params;
  json out{{"column_order", sf.column_order},
           {"generator", to_json(ext.generator())},
           {"input_params", to_json(before)},
           {"params", to_json(after)},
           {"lcd", is_galois_lcd(ext, k).lcd}};
  if (o.format == "json" || !o.output.empty()) emit(out.dump(2) + "\n", o.output);
  if (o.format != "json")
    std::cout << params_text(before) << " -> " << params_text(after) << (out["lcd"].get<bool>() ? " LCD" : " not LCD")
              << '\n';
  if (!before.exact() || !after.exact()) throw Refused("distance search exceeded its budget");
  return 0;
}

int cmd_reproduce(const Options& o) {
  std::vector<std::string> ids;
  if (o.example == "all") ids = example_ids();
  else ids.push_back(o.example);
  bool ok = true;
  json all = json::array();
  for (const auto& id : ids) {
    const ExampleReport rep = reproduce_example(id, distance_options(o));
    ok = ok && rep.passed();
    if (o.format == "json") {
      all.push_back(to_json(rep));
      continue;
    }
    std::cout << "Example " << rep.id << ": " << rep.title << '\n';
    for (const auto& c : rep.claims) {
      std::cout << "  [" << to_string(c.status) << "] " << c.what << ": paper " << c.paper;
      if (c.status != ClaimStatus::match) std::cout << ", computed " << c.computed;
      if (!c.note.empty() && c.status != ClaimStatus::match) std::cout << " (" << c.note << ")";
      std::cout << '\n';
    }
    std::cout << "  " << rep.count(ClaimStatus::match) << " match, " << rep.count(ClaimStatus::flagged)
              << " flagged, " << rep.count(ClaimStatus::mismatch) << " mismatch\n";
  }
  if (o.format == "json") std::cout << all.dump(2) << '\n';
  return ok ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois LCD codes: cosets, constacyclic classification, duals and exact distances"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--budget-messages", o.budget_messages, "Max projective messages for distance enumeration");
  app.add_option("--budget-supports", o.budget_supports, "Max column-subset tests for distance search");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--modulus", o.modulus, "Field modulus coefficients, constant term first, e.g. 1,1,0,1");

  auto field_opts = [&](CLI::App* c, bool with_k) {
    c->add_option("-p", o.p, "Characteristic")->required();
    c->add_option("-e", o.e, "Extension degree");
    if (with_k) c->add_option("-k", o.k, "Galois parameter, 0 <= k < e");
  };
  auto code_opts = [&](CLI::App* c) {
    c->add_option("-n", o.n, "Code length");
    c->add_option("--lambda", o.lambda, "Constant as a signed integer in the prime subfield");
    c->add_option("--lambda-coeffs", o.lambda_coeffs, "Constant as e coefficients, constant term first");
  };

  auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets, -p^k orbits and the all-LCD test");
  field_opts(cosets, true);
  code_opts(cosets);
  cosets->get_option("-n")->required();

  auto* classify = app.add_subcommand("classify", "Enumerate LCD constacyclic codes with parameters");
  field_opts(classify, true);
  code_opts(classify);
  classify->get_option("-n")->required();
  classify->add_flag("--exact-distance", o.exact_distance, "Compute exact distances (otherwise [BCH, Singleton])");
  classify->add_option("--output,-o", o.output, "Catalog file (.json or .csv)");
  classify->add_option("--strategy", o.strategy)->check(CLI::IsMember({"auto", "messages", "supports"}));

  auto code_source = [&](CLI::App* c) {
    code_opts(c);
    c->add_option("--set", o.set, "Defining set, comma-separated residues")->each([&](const std::string&) {
      o.has_set = true;
    });
    c->add_option("--generator", o.generator_file, "JSON generator matrix file ('-' for stdin)");
  };

  auto* lcd = app.add_subcommand("lcd-check", "Galois LCD test by coset and determinant criteria");
  field_opts(lcd, true);
  code_source(lcd);
  auto* dual = app.add_subcommand("dual", "Galois dual of a constacyclic or matrix code");
  field_opts(dual, true);
  code_source(dual);
  auto* genpoly = app.add_subcommand("genpoly", "Generator polynomial, or the factorization of x^n - lambda");
  field_opts(genpoly, false);
  code_opts(genpoly);
  genpoly->get_option("-n")->required();
  genpoly->add_option("--set", o.set, "Defining set")->each([&](const std::string&) { o.has_set = true; });
  auto* mindist = app.add_subcommand("mindist", "Exact minimum distance");
  field_opts(mindist, false);
  code_source(mindist);
  mindist->add_option("--strategy", o.strategy)->check(CLI::IsMember({"auto", "messages", "supports"}));
  auto* extend = app.add_subcommand("extend", "[I A A] or [I A eta*A] LCD extension");
  field_opts(extend, true);
  extend->add_option("--generator", o.generator_file, "JSON generator matrix file")->required();
  extend->add_option("--mode", o.mode, "char2 or pmod4")->required()->check(CLI::IsMember({"char2", "pmod4"}));
  extend->add_option("--output,-o", o.output, "Write the extended code as JSON");
  auto* reproduce = app.add_subcommand("reproduce", "Recompute the worked examples");
  reproduce->add_option("example", o.example, "Example id or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*cosets) return cmd_cosets(o);
    if (*classify) return cmd_classify(o);
    if (*lcd) return cmd_lcd_check(o);
    if (*dual) return cmd_dual(o);
    if (*genpoly) return cmd_genpoly(o);
    if (*mindist) return cmd_mindist(o);
    if (*extend) return cmd_extend(o);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const Refused& ex) {
    std::cerr << "refused: " << ex.what() << '\n';
    return kRefused;
  } catch (const std::length_error& ex) {
    std::cerr << "refused: " << ex.what() << '\n';
    return kRefused;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
