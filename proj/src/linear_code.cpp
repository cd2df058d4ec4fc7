#include "glcd/linear_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "glcd/distance.hpp"

namespace glcd {

LinearCode LinearCode::from_generator(Matrix generator) {
  if (generator.rows() > generator.cols()) throw std::invalid_argument("generator has more rows than columns");
  if (generator.rank() != generator.rows()) throw std::invalid_argument("generator rows are linearly dependent");
  return LinearCode(std::move(generator));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  return a.length() == b.length() && same_row_space(a.generator(), b.generator());
}

Element galois_inner_product(std::span<const Element> x, std::span<const Element> y, GaloisParam k) {
  if (x.size() != y.size()) throw std::invalid_argument("inner product of vectors with different lengths");
  if (x.empty()) throw std::invalid_argument("inner product of empty vectors");
  const Field& f = x.front().field();
  GaloisParam::checked(k.k, f);
  Element acc = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i].field() == f) || !(y[i].field() == f)) throw std::invalid_argument("vectors over different fields");
    acc += x[i] * frobenius_pow(y[i], k.k);
  }
  return acc;
}

LinearCode p_power_code(const LinearCode& code, unsigned j) {
  return LinearCode::from_generator(code.generator().frobenius(j));
}

LinearCode galois_dual(const LinearCode& code, GaloisParam k) {
  const Field& f = code.field();
  GaloisParam::checked(k.k, f);
  return LinearCode::from_generator(code.generator().frobenius(k.complement(f)).nullspace());
}

LcdVerdict is_galois_lcd(const LinearCode& code, GaloisParam k) {
  const Field& f = code.field();
  GaloisParam::checked(k.k, f);
  const Matrix& g = code.generator();
  const Element det = (g * g.frobenius(k.complement(f)).transpose()).det();
  return {!det.is_zero(), det};
}

StandardForm to_standard_form(const Matrix& generator) {
  Matrix m = generator;
  const auto pivots = m.rref();
  if (pivots.size() != generator.rows()) throw std::invalid_argument("generator rows are linearly dependent");
  std::vector<std::size_t> order = pivots;
  for (std::size_t c = 0; c < generator.cols(); ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) order.push_back(c);
  return {m.select_columns(order), order};
}

namespace {

bool is_standard_form(const Matrix& g) {
  if (g.rows() > g.cols()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.rows(); ++j)
      if (g.at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

}  // namespace

LinearCode extend_lcd(const Matrix& standard_generator, GaloisParam k, ExtendMode mode) {
  const Field& f = standard_generator.field();
  GaloisParam::checked(k.k, f);
  if (!is_standard_form(standard_generator)) throw std::invalid_argument("generator is not in standard form [I | A]");
  Field::index_type scale = 1;
  if (mode == ExtendMode::char2) {
    if (f.characteristic() != 2) throw std::invalid_argument("char2 mode requires characteristic 2");
  } else {
    if (f.characteristic() % 4 != 1) throw std::invalid_argument("pmod4 mode requires p = 1 mod 4");
    scale = sqrt_minus_one(f).index();
  }
  const std::size_t l = standard_generator.rows(), n = standard_generator.cols();
  const std::size_t redundancy = n - l;
  Matrix out(f, l, n + redundancy);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = standard_generator.at(i, j);
    for (std::size_t j = 0; j < redundancy; ++j) out.at(i, n + j) = f.mul(scale, standard_generator.at(i, l + j));
  }
  return LinearCode::from_generator(std::move(out));
}

const char* to_string(DistanceStrategy s) {
  switch (s) {
    case DistanceStrategy::automatic: return "auto";
    case DistanceStrategy::messages: return "messages";
    case DistanceStrategy::supports: return "supports";
  }
  return "?";
}

DistanceReport min_distance(const LinearCode& code, const DistanceOptions& options) {
  const std::size_t n = code.length(), l = code.dimension();
  if (l == 0) throw std::invalid_argument("the zero code has no minimum distance");
  DistanceReport report;
  CodeParams& params = report.params;
  params.n = n;
  params.dim = l;
  params.d_lo = std::max(1u, options.lower_bound);
  params.d_hi = params.singleton();

  const std::uint64_t msg_cost = distance::message_cost(code.field().order(), l);
  const auto max_w = static_cast<unsigned>(n - l);
  const std::uint64_t sup_cost = distance::support_cost(n, max_w);
  const bool msg_ok = msg_cost <= options.budget_messages;

  auto run_messages = [&] {
    report.used = DistanceStrategy::messages;
    const unsigned d = options.parallel ? distance::min_weight_messages_parallel(code.generator())
                                        : distance::min_weight_messages_serial(code.generator());
    params.d_lo = params.d_hi = d;
  };
  auto run_supports = [&] {
    report.used = DistanceStrategy::supports;
    const Matrix h = code.parity_check();
    const auto search = options.parallel ? distance::min_dependency_parallel(h, max_w, options.budget_supports)
                                         : distance::min_dependency_serial(h, max_w, options.budget_supports);
    if (search.found) {
      params.d_lo = params.d_hi = *search.found;
    } else if (search.checked_through == max_w) {
      // every n - l columns independent: Singleton bound is attained
      params.d_lo = params.d_hi = max_w + 1;
    } else {
      params.d_lo = std::max(params.d_lo, search.checked_through + 1);
      return false;
    }
    return true;
  };

  switch (options.strategy) {
    case DistanceStrategy::messages:
      if (msg_ok) run_messages();
      else report.used = DistanceStrategy::messages;
      break;
    case DistanceStrategy::supports:
      run_supports();
      break;
    case DistanceStrategy::automatic:
      if (msg_ok && msg_cost <= sup_cost) {
        run_messages();
      } else if (!run_supports() && msg_ok) {
        run_messages();
      }
      break;
  }
  return report;
}

}  // namespace glcd
