#include "glcd/constacyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "glcd/arith.hpp"

namespace glcd {

ConstacyclicCode ConstacyclicCode::from_defining_set(std::shared_ptr<const SplittingField> sf, Residues zeros,
                                                     std::uint32_t offset) {
  const CosetContext ctx = sf->context(0);
  DefiningSet set = DefiningSet::make(ctx, std::move(zeros), offset);
  Poly g = product_poly(set.residues, *sf);
  return ConstacyclicCode(std::move(sf), std::move(set.residues), set.offset, std::move(g));
}

ConstacyclicCode ConstacyclicCode::from_generator_polynomial(std::shared_ptr<const SplittingField> sf, const Poly& g,
                                                             std::uint32_t offset) {
  if (!(g.field() == sf->base)) throw std::invalid_argument("generator polynomial over the wrong field");
  if (!g.is_monic()) throw std::invalid_argument("generator polynomial must be monic");
  offset %= sf->r;
  const Poly modulus = Poly::binomial(sf->base, sf->n, sf->constant(offset));
  if (!modulus.divmod(g).second.is_zero()) throw std::invalid_argument("generator polynomial does not divide x^n - c");
  // evaluate g at theta^j inside the extension
  std::vector<Element> lifted;
  for (long i = 0; i <= g.degree(); ++i) lifted.push_back(sf->embedding(g.coeff(static_cast<std::size_t>(i))));
  const Poly g_ext = Poly::from_elements(sf->ext, lifted);
  Residues zeros;
  for (auto j : sf->context(0).residue_class(offset))
    if (g_ext(sf->theta_pow(j)).is_zero()) zeros.push_back(j);
  if (static_cast<long>(zeros.size()) != g.degree())
    throw std::logic_error("root count of the generator polynomial does not match its degree");
  return ConstacyclicCode(std::move(sf), std::move(zeros), offset, g);
}

DefiningSet ConstacyclicCode::defining_set(unsigned k) const {
  return DefiningSet{sf_->context(k), zeros_, offset_};
}

Poly ConstacyclicCode::check_polynomial() const {
  return Poly::binomial(sf_->base, sf_->n, constant()).divmod(g_).first;
}

ConstacyclicCode code_from_defining_set(const Field& base, std::uint32_t n, const Element& lambda, const Residues& P) {
  return ConstacyclicCode::from_defining_set(make_splitting_field(base, n, lambda), P, 1);
}

ConstacyclicCode galois_dual_code(const ConstacyclicCode& code, GaloisParam k) {
  const Field& f = code.field();
  GaloisParam::checked(k.k, f);
  const Poly h = code.check_polynomial();
  const Poly g_dual = frobenius_poly(reciprocal(h), k.complement(f));
  const DefiningSet dual = dual_defining_set(code.defining_set(k.k));
  ConstacyclicCode out = ConstacyclicCode::from_defining_set(code.splitting_ptr(), dual.residues, dual.offset);
  if (!(out.generator() == g_dual))
    throw std::logic_error("dual generator polynomial and dual defining set disagree");
  return out;
}

bool is_lcd(const ConstacyclicCode& code, GaloisParam k) {
  const Field& f = code.field();
  GaloisParam::checked(k.k, f);
  const Element c = code.constant();
  const std::uint64_t exponent = 1 + arith::ipow(f.characteristic(), k.complement(f));
  if (!c.pow(exponent).is_one()) return true;
  return is_lcd_defining_set(code.defining_set(k.k));
}

LinearCode to_generator_matrix(const ConstacyclicCode& code) {
  const std::size_t n = code.length();
  const std::size_t dim = code.dimension();
  if (dim == 0) throw std::invalid_argument("the zero code has no generator matrix");
  const auto& g = code.generator().coeff_indices();
  Matrix m(code.field(), dim, n);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m.at(i, i + j) = g[j];
  return LinearCode::from_generator(std::move(m));
}

std::optional<std::uint64_t> Catalog::formula_count() const {
  if (!census || !census->involutive()) return std::nullopt;
  return (std::uint64_t{1} << (census->fixed + census->swapped)) - 1;
}

Catalog classify_all_lcd(const Field& base, std::uint32_t n, const Element& lambda, GaloisParam k,
                         const ClassifyOptions& options) {
  GaloisParam::checked(k.k, base);
  const auto sf = make_splitting_field(base, n, lambda);
  const CosetContext ctx = sf->context(k.k);
  Catalog catalog{ctx, lambda, sf->theta, ctx.self_dual_constant(), std::nullopt, {}};
  if (catalog.self_dual_constant) catalog.census = stable_orbit_census(ctx);
  const std::size_t blocks =
      catalog.census ? catalog.census->orbits.size() : cyclotomic_cosets(ctx).size();
  if (blocks <= options.max_log2 && arith::mul_saturating(std::uint64_t{1} << blocks, n) > options.max_cells)
    throw std::length_error("catalog of 2^" + std::to_string(blocks) + " codes of length " + std::to_string(n) +
                            " exceeds the size limit");
  const std::vector<Residues> sets = catalog.self_dual_constant ? stable_defining_sets(ctx, options.max_log2)
                                                                : all_defining_sets(ctx, 1, options.max_log2);
  std::vector<std::optional<CatalogEntry>> slots(sets.size());
  DistanceOptions inner = options.distance;
  inner.parallel = false;
  const auto count = static_cast<std::int64_t>(sets.size());
  // first failure wins; exceptions must not escape the parallel region
  std::string failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto code = ConstacyclicCode::from_defining_set(sf, sets[i], 1);
      CatalogEntry entry{sets[i], code.generator(), {}, is_lcd(code, k), false, 0};
      entry.params.n = n;
      entry.params.dim = code.dimension();
      if (code.dimension() > 0) {
        entry.bch_bound = sets[i].size() < n ? bch_lower_bound(code.defining_set(k.k)) : 0;
        if (options.exact_distance) {
          DistanceOptions opt = inner;
          opt.lower_bound = entry.bch_bound;
          entry.params = min_distance(to_generator_matrix(code), opt).params;
        } else {
          entry.params.d_lo = entry.bch_bound;
          entry.params.d_hi = entry.params.singleton();
        }
      }
      entry.mds = entry.params.dim > 0 && entry.params.mds();
      slots[static_cast<std::size_t>(i)] = std::move(entry);
    } catch (const std::exception& ex) {
#pragma omp critical
      if (failure.empty()) failure = ex.what();
    }
  }
  if (!failure.empty()) throw std::runtime_error("classification failed: " + failure);
  for (auto& s : slots) catalog.entries.push_back(std::move(*s));
  return catalog;
}

ConstacyclicCode hermitian_mds_family(const Element& lambda, std::uint32_t n, unsigned d) {
  const Field& f = lambda.field();
  if (f.degree() % 2 != 0) throw std::invalid_argument("Hermitian duality needs an even extension degree");
  const unsigned a = f.degree() / 2;
  if (d < 2 || d > n) throw std::invalid_argument("designed distance must satisfy 2 <= d <= n");
  const auto sf = make_splitting_field(f, n, lambda);
  const std::uint64_t rn = sf->rn();
  const std::uint64_t pa = arith::ipow(f.characteristic(), a) % rn;
  if (rn < 2 || arith::gcd(pa, rn) != 1 || arith::mult_order_mod(pa, rn) != 2)
    throw std::invalid_argument("hypothesis failure: ord_rn(p^a) != 2");
  if (!unique_order2_unit(rn)) throw std::invalid_argument("hypothesis failure: Z_rn^* has more than one involution");
  Residues P;
  for (unsigned i = 0; i + 2 <= d; ++i) P.push_back(static_cast<std::uint32_t>((1 + std::uint64_t{sf->r} * i) % rn));
  return ConstacyclicCode::from_defining_set(sf, P, 1);
}

}  // namespace glcd
