#include "glcd/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <mutex>
#include <stdexcept>
#include <string>

#include "glcd/arith.hpp"

namespace glcd {

namespace detail {
struct MinimalPolyCache {
  std::mutex mu;
  std::map<std::uint32_t, Poly> by_leader;
};
}  // namespace detail

Poly::Poly(Field field, std::vector<index_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= field_.order()) throw std::out_of_range("polynomial coefficient out of range");
  trim();
}

Poly Poly::from_elements(const Field& field, const std::vector<Element>& coeffs) {
  std::vector<index_type> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) {
    if (!(x.field() == field)) throw std::invalid_argument("coefficient from a different field");
    c.push_back(x.index());
  }
  return Poly(field, std::move(c));
}

Poly Poly::monomial(const Field& field, const Element& c, std::size_t deg) {
  std::vector<index_type> v(deg + 1, 0);
  v[deg] = c.index();
  return Poly(field, std::move(v));
}

Poly Poly::binomial(const Field& field, std::size_t n, const Element& c) {
  std::vector<index_type> v(n + 1, 0);
  v[n] = 1;
  v[0] = field.add(v[0], field.neg(c.index()));
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
}

Element Poly::coeff(std::size_t i) const { return field_.from_index(i < c_.size() ? c_[i] : 0); }

Element Poly::leading() const { return field_.from_index(c_.empty() ? 0 : c_.back()); }

Poly::index_type Poly::eval_index(index_type x) const {
  const FieldKernel f(field_);
  index_type acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
  return acc;
}

Element Poly::operator()(const Element& x) const {
  if (!(x.field() == field_)) throw std::invalid_argument("evaluation point from a different field");
  return field_.from_index(eval_index(x.index()));
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const FieldKernel f(a.field_);
  std::vector<Poly::index_type> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(out));
}

Poly Poly::scaled(const Element& c) const {
  if (!(c.field() == field_)) throw std::invalid_argument("scalar from a different field");
  std::vector<index_type> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.mul(c_[i], c.index());
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  require_same_field(d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldKernel f(field_);
  std::vector<index_type> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  if (rem.size() <= dd) return {Poly(field_), *this};
  std::vector<index_type> quot(rem.size() - dd, 0);
  const index_type inv_lead = f.inv(d.c_.back());
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const index_type c = f.mul(rem[i], inv_lead);
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, d.c_[j]));
  }
  rem.resize(dd);
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
  const auto& c = f.coeff_indices();
  if (c.front() == 0) throw std::invalid_argument("reciprocal requires f(0) != 0");
  std::vector<Poly::index_type> rev(c.rbegin(), c.rend());
  return Poly(f.field(), std::move(rev)).scaled(f.coeff(0).inverse());
}

Poly frobenius_poly(const Poly& f, unsigned j) {
  std::vector<Poly::index_type> out;
  out.reserve(f.coeff_indices().size());
  for (auto c : f.coeff_indices()) out.push_back(f.field().frobenius(c, j));
  return Poly(f.field(), std::move(out));
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b).divmod(m).second; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly(m.field(), {1}).divmod(m).second;
  base = base.divmod(m).second;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// x^(q^j) mod m
Poly frobenius_x(const Poly& m, unsigned j) {
  Poly h = Poly(m.field(), {0, 1}).divmod(m).second;
  for (unsigned i = 0; i < j; ++i) h = powmod(h, m.field().order(), m);
  return h;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const Poly g = f.monic();
  const auto d = static_cast<unsigned>(g.degree());
  if (d == 1) return true;
  const Poly x(g.field(), {0, 1});
  if (!(frobenius_x(g, d) - x).divmod(g).second.is_zero()) return false;
  for (const auto& [ell, _] : arith::factorize(d)) {
    if (gcd(g, frobenius_x(g, d / static_cast<unsigned>(ell)) - x).degree() != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- splitting

CosetContext SplittingField::context(unsigned k) const {
  return CosetContext::make(base.characteristic(), base.degree(), k, n, r);
}

Element SplittingField::theta_pow(std::uint64_t j) const { return theta.pow(j % rn()); }

Element SplittingField::constant(std::uint32_t offset) const { return lambda.pow(offset % r); }

std::shared_ptr<const SplittingField> make_splitting_field(const Field& base, std::uint32_t n, const Element& lambda) {
  if (!(lambda.field() == base)) throw std::invalid_argument("lambda must lie in the base field");
  if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n % base.characteristic() == 0) throw std::invalid_argument("gcd(n, p) must be 1");
  const auto r = static_cast<std::uint32_t>(mult_order(lambda));
  const std::uint64_t rn = std::uint64_t{r} * n;
  const auto m = static_cast<unsigned>(arith::mult_order_mod(base.order() % rn, rn));
  Field ext = m == 1 ? base : Field::make(base.characteristic(), base.degree() * m);
  Embedding emb(base, ext);
  const Element theta = primitive_rn_root(ext, rn, n, emb(lambda));
  return std::make_shared<const SplittingField>(SplittingField{base, ext, emb, n, r, lambda, theta, m, std::make_shared<detail::MinimalPolyCache>()});
}

Poly minimal_poly(const Residues& Q, const SplittingField& sf) {
  const Field& ext = sf.ext;
  Poly prod(ext, {1});
  for (auto i : Q) {
    const Element root = sf.theta_pow(i);
    prod = prod * Poly(ext, {ext.neg(root.index()), 1});
  }
  std::vector<Element> coeffs;
  for (long i = 0; i <= prod.degree(); ++i) {
    const Element c = prod.coeff(static_cast<std::size_t>(i));
    // descent: fixed by the q-power Frobenius
    if (!(frobenius_pow(c, sf.base.degree()) == c))
      throw std::logic_error("minimal polynomial coefficient is not in the base field");
    auto pre = sf.embedding.preimage(c);
    if (!pre) throw std::logic_error("minimal polynomial coefficient has no preimage in the base field");
    coeffs.push_back(*pre);
  }
  return Poly::from_elements(sf.base, coeffs);
}

Poly product_poly(const Residues& set, const SplittingField& sf) {
  CosetContext ctx = sf.context(0);
  Poly g(sf.base, {1});
  std::vector<bool> done(sf.rn(), false);
  for (auto x : set) {
    if (done[x]) continue;
    const Residues Q = coset_of(ctx, x);
    for (auto y : Q) done[y] = true;
    if (!sf.cache) {
      g = g * minimal_poly(Q, sf);
      continue;
    }
    const std::uint32_t leader = *std::min_element(Q.begin(), Q.end());
    std::optional<Poly> hit;
    {
      std::lock_guard lock(sf.cache->mu);
      if (auto it = sf.cache->by_leader.find(leader); it != sf.cache->by_leader.end()) hit = it->second;
    }
    if (!hit) {
      hit = minimal_poly(Q, sf);
      std::lock_guard lock(sf.cache->mu);
      sf.cache->by_leader.emplace(leader, *hit);
    }
    g = g * *hit;
  }
  return g;
}

std::vector<CosetFactor> factor_xn_minus_lambda(const SplittingField& sf, std::uint32_t offset) {
  std::vector<CosetFactor> out;
  for (auto& Q : cyclotomic_cosets(sf.context(0), offset)) {
    Poly m = minimal_poly(Q, sf);
    out.push_back({std::move(Q), std::move(m)});
  }
  return out;
}

std::vector<CosetFactor> factor_xn_minus_lambda(std::uint32_t n, const Element& lambda) {
  const auto sf = make_splitting_field(lambda.field(), n, lambda);
  return factor_xn_minus_lambda(*sf, 1);
}

}  // namespace glcd
