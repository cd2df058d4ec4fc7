#include "glcd/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "glcd/arith.hpp"

namespace glcd {

namespace detail {

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr std::uint32_t kNoLog = ~std::uint32_t{0};
constexpr unsigned kMaxDegree = 64;
constexpr std::uint64_t kSmallLimit = 256;

struct FieldData {
  std::uint32_t p = 2;
  unsigned e = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;  // monic, size e + 1
  std::vector<std::uint64_t> pw;       // p^0 .. p^(e-1)

  bool tables = false;
  std::vector<std::uint32_t> exp;  // g^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log;  // log_g(a) for a != 0
  std::vector<std::uint32_t> zech; // log_g(1 + g^i), kNoLog when 1 + g^i = 0
  std::uint64_t primitive = 0;

  // full operation tables for q <= kSmallLimit
  std::vector<std::uint8_t> add_t, mul_t, neg_t, inv_t;

  using Digits = std::array<std::uint32_t, kMaxDegree>;

  void decode(std::uint64_t a, Digits& d) const {
    for (unsigned i = 0; i < e; ++i) {
      d[i] = static_cast<std::uint32_t>(a % p);
      a /= p;
    }
  }
  std::uint64_t encode(const Digits& d) const {
    std::uint64_t a = 0;
    for (unsigned i = e; i-- > 0;) a = a * p + d[i];
    return a;
  }

  std::uint64_t add_plain(std::uint64_t a, std::uint64_t b) const {
    if (e == 1) {
      const std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Digits da, db;
    decode(a, da);
    decode(b, db);
    for (unsigned i = 0; i < e; ++i) {
      const std::uint32_t s = da[i] + db[i];
      da[i] = s >= p ? s - p : s;
    }
    return encode(da);
  }

  std::uint64_t neg_plain(std::uint64_t a) const {
    if (e == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Digits da;
    decode(a, da);
    for (unsigned i = 0; i < e; ++i) da[i] = da[i] == 0 ? 0 : p - da[i];
    return encode(da);
  }

  std::uint64_t mul_plain(std::uint64_t a, std::uint64_t b) const {
    if (e == 1) return arith::mulmod(a, b, p);
    if (a == 0 || b == 0) return 0;
    Digits da, db;
    decode(a, da);
    decode(b, db);
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < e; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
      // keep accumulators bounded
      if (p >= (1u << 28) || (i & 7) == 7)
        for (unsigned j = 0; j < 2 * e - 1; ++j) prod[j] %= p;
    }
    for (unsigned j = 0; j < 2 * e - 1; ++j) prod[j] %= p;
    for (unsigned i = 2 * e - 2; i >= e; --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < e; ++j) {
        if (modulus[j] == 0) continue;
        prod[i - e + j] = (prod[i - e + j] + c * (p - modulus[j])) % p;
      }
    }
    Digits out;
    for (unsigned i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

  std::uint64_t pow_plain(std::uint64_t a, std::uint64_t n) const {
    std::uint64_t r = 1;
    while (n > 0) {
      if (n & 1) r = mul_plain(r, a);
      a = mul_plain(a, a);
      n >>= 1;
    }
    return r;
  }

  bool is_primitive_plain(std::uint64_t a, const std::vector<std::pair<std::uint64_t, unsigned>>& fac) const {
    if (a == 0) return false;
    for (const auto& [ell, _] : fac)
      if (pow_plain(a, (q - 1) / ell) == 1) return false;
    return true;
  }

  void build_small() {
    add_t.resize(q * q);
    mul_t.resize(q * q);
    neg_t.resize(q);
    inv_t.assign(q, 0);
    for (std::uint64_t a = 0; a < q; ++a) {
      neg_t[a] = static_cast<std::uint8_t>(neg_plain(a));
      for (std::uint64_t b = 0; b < q; ++b) {
        add_t[a * q + b] = static_cast<std::uint8_t>(add_plain(a, b));
        mul_t[a * q + b] = static_cast<std::uint8_t>(mul_plain(a, b));
        if (mul_t[a * q + b] == 1) inv_t[a] = static_cast<std::uint8_t>(b);
      }
    }
  }

  void build_tables() {
    const std::uint64_t n = q - 1;
    const auto fac = arith::factorize(n);
    std::uint64_t g = 1;
    while (!is_primitive_plain(g, fac)) ++g;
    primitive = g;
    exp.assign(2 * n, 0);
    log.assign(q, kNoLog);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp[i] = exp[i + n] = static_cast<std::uint32_t>(v);
      log[v] = static_cast<std::uint32_t>(i);
      v = mul_plain(v, g);
    }
    zech.assign(n, kNoLog);
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t s = add_plain(1, exp[i]);
      zech[i] = s == 0 ? kNoLog : log[s];
    }
    tables = true;
  }
};

}  // namespace detail

namespace {

using PolyP = std::vector<std::uint64_t>;  // over GF(p), constant first

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lead = *arith::inverse_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = arith::mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - arith::mulmod(c, m[j], p))) % p;
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + arith::mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(prod), m, p);
}

PolyP poly_powmod(PolyP base, std::uint64_t n, const PolyP& m, std::uint64_t p) {
  PolyP r{1};
  base = poly_mod(std::move(base), m, p);
  while (n > 0) {
    if (n & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return r;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^j) mod f
PolyP frobenius_x(const PolyP& f, std::uint64_t p, unsigned j) {
  PolyP h{0, 1};
  h = poly_mod(h, f, p);
  for (unsigned i = 0; i < j; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

PolyP minus_x(PolyP h, std::uint64_t p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  trim(h);
  return h;
}

}  // namespace

bool Field::is_irreducible_over_prime(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const unsigned e = static_cast<unsigned>(monic.size() - 1);
  if (e == 1) return true;
  if (monic[0] == 0) return false;
  PolyP f(monic.begin(), monic.end());
  if (!minus_x(frobenius_x(f, p, e), p).empty()) return false;
  for (const auto& [ell, _] : arith::factorize(e)) {
    const PolyP g = poly_gcd(f, minus_x(frobenius_x(f, p, e / static_cast<unsigned>(ell)), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, unsigned e) {
  if (e == 1) return {0, 1};
  const std::uint64_t span = arith::ipow(p, e);
  std::vector<std::uint32_t> f(e + 1, 0);
  f[e] = 1;
  for (std::uint64_t c = 0; c < span; ++c) {
    std::uint64_t v = c;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible_over_prime(p, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!arith::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("characteristic too large");
  if (e == 0) throw std::invalid_argument("extension degree must be at least 1");
  if (e > detail::kMaxDegree) throw std::invalid_argument("extension degree too large");
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->e = e;
  try {
    d->q = arith::ipow(p, e);
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("field order does not fit in 64 bits");
  }
  if (d->q > (std::uint64_t{1} << 63)) throw std::invalid_argument("field order does not fit in 63 bits");
  if (modulus) {
    if (modulus->size() != e + 1) throw std::invalid_argument("modulus must have degree e");
    if (modulus->back() != 1) throw std::invalid_argument("modulus must be monic");
    for (auto c : *modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (!is_irreducible_over_prime(p, *modulus)) throw std::invalid_argument("modulus is reducible over GF(p)");
    d->modulus = *modulus;
  } else {
    d->modulus = default_modulus(p, e);
  }
  d->pw.resize(e);
  for (unsigned i = 0; i < e; ++i) d->pw[i] = arith::ipow(p, i);
  if (e > 1 && d->q <= detail::kTableLimit) d->build_tables();
  if (d->q <= detail::kSmallLimit) d->build_small();
  return Field(std::move(d));
}

std::uint32_t Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->e; }
std::uint64_t Field::order() const { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }
bool Field::has_tables() const { return d_->tables; }

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << d_->p;
  if (d_->e > 1) os << "^" << d_->e;
  os << ")";
  return os.str();
}

Element Field::zero() const { return {*this, 0}; }
Element Field::one() const { return {*this, 1}; }
Element Field::from_int(std::int64_t v) const { return {*this, arith::mod(v, d_->p)}; }

Element Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > d_->e) throw std::invalid_argument("too many coefficients for " + describe());
  detail::FieldData::Digits dg{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) dg[i] = static_cast<std::uint32_t>(arith::mod(coeffs[i], d_->p));
  return {*this, d_->encode(dg)};
}

Element Field::from_index(index_type idx) const {
  if (idx >= d_->q) throw std::out_of_range("element index out of range for " + describe());
  return {*this, idx};
}

Element Field::generator() const {
  if (d_->e == 1) return from_int(-static_cast<std::int64_t>(d_->modulus[0]));
  return {*this, d_->p};
}

Element Field::primitive_element() const {
  if (d_->q == 2) return one();
  if (d_->tables) return {*this, d_->primitive};
  const auto fac = arith::factorize(d_->q - 1);
  std::uint64_t g = 1;
  while (!d_->is_primitive_plain(g, fac)) ++g;
  return {*this, g};
}

FieldKernel::FieldKernel(const Field& f) {
  const auto& d = *f.d_;
  generic_ = {&f};
  if (!d.add_t.empty()) {
    mode_ = Mode::small;
    small_ = {d.q, d.add_t.data(), d.mul_t.data(), d.neg_t.data(), d.inv_t.data()};
  } else if (d.tables) {
    mode_ = Mode::tables;
    tables_ = {d.p, d.q - 1, d.exp.data(), d.log.data(), d.zech.data()};
  } else if (d.e == 1) {
    mode_ = Mode::prime;
    prime_ = {d.p, &f};
  }
}

Field::index_type Field::add(index_type a, index_type b) const {
  const auto& d = *d_;
  if (!d.add_t.empty()) return d.add_t[a * d.q + b];
  if (!d.tables) return d.add_plain(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  if (d.p == 2) return a ^ b;
  const std::uint64_t n = d.q - 1;
  const std::uint32_t la = d.log[a], lb = d.log[b];
  const std::uint32_t diff = lb >= la ? lb - la : static_cast<std::uint32_t>(lb + n - la);
  const std::uint32_t z = d.zech[diff];
  if (z == detail::kNoLog) return 0;
  return d.exp[la + z];
}

Field::index_type Field::neg(index_type a) const {
  const auto& d = *d_;
  if (!d.neg_t.empty()) return d.neg_t[a];
  if (!d.tables || a == 0 || d.p == 2) return d.neg_plain(a);
  return d.exp[d.log[a] + (d.q - 1) / 2];
}

Field::index_type Field::sub(index_type a, index_type b) const { return add(a, neg(b)); }

Field::index_type Field::mul(index_type a, index_type b) const {
  const auto& d = *d_;
  if (!d.mul_t.empty()) return d.mul_t[a * d.q + b];
  if (!d.tables) return d.mul_plain(a, b);
  if (a == 0 || b == 0) return 0;
  return d.exp[d.log[a] + d.log[b]];
}

Field::index_type Field::inv(index_type a) const {
  const auto& d = *d_;
  if (a == 0) throw std::domain_error("inverse of zero");
  if (d.e == 1) return *arith::inverse_mod(a, d.p);
  if (d.tables) return d.exp[(d.q - 1 - d.log[a]) % (d.q - 1)];
  return d.pow_plain(a, d.q - 2);
}

Field::index_type Field::pow(index_type a, std::uint64_t n) const {
  const auto& d = *d_;
  if (a == 0) return n == 0 ? 1 : 0;
  if (d.e == 1) return arith::powmod(a, n, d.p);
  if (d.tables) {
    const std::uint64_t e = n % (d.q - 1);
    return d.exp[arith::mulmod(d.log[a], e, d.q - 1)];
  }
  return d.pow_plain(a, n % (d.q - 1));
}

Field::index_type Field::frobenius(index_type a, unsigned j) const {
  j %= d_->e;
  if (j == 0) return a;
  return pow(a, d_->pw[j]);
}

std::vector<std::uint32_t> Field::digits(index_type a) const {
  detail::FieldData::Digits dg;
  d_->decode(a, dg);
  return {dg.begin(), dg.begin() + d_->e};
}

Field::index_type Field::encode(std::span<const std::uint32_t> digits) const {
  if (digits.size() != d_->e) throw std::invalid_argument("digit vector has wrong length");
  detail::FieldData::Digits dg{};
  for (unsigned i = 0; i < d_->e; ++i) {
    if (digits[i] >= d_->p) throw std::invalid_argument("digit out of range");
    dg[i] = digits[i];
  }
  return d_->encode(dg);
}

// ---------------------------------------------------------------- Element

Element::Element(Field field, index_type idx) : field_(std::move(field)), idx_(idx) {}

void Element::require_same_field(const Element& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("elements belong to different fields");
}

Element& Element::operator+=(const Element& o) {
  require_same_field(o);
  idx_ = field_.add(idx_, o.idx_);
  return *this;
}
Element& Element::operator-=(const Element& o) {
  require_same_field(o);
  idx_ = field_.sub(idx_, o.idx_);
  return *this;
}
Element& Element::operator*=(const Element& o) {
  require_same_field(o);
  idx_ = field_.mul(idx_, o.idx_);
  return *this;
}
Element& Element::operator/=(const Element& o) {
  require_same_field(o);
  idx_ = field_.mul(idx_, field_.inv(o.idx_));
  return *this;
}

Element Element::inverse() const { return {field_, field_.inv(idx_)}; }

GaloisParam GaloisParam::checked(unsigned k, const Field& f) {
  if (k >= f.degree())
    throw std::invalid_argument("Galois parameter k=" + std::to_string(k) + " must satisfy 0 <= k < e=" +
                                std::to_string(f.degree()));
  return GaloisParam{k};
}

Element frobenius_pow(const Element& x, unsigned j) { return {x.field(), x.field().frobenius(x.index(), j)}; }

std::uint64_t mult_order(const Element& x) {
  if (x.is_zero()) throw std::domain_error("multiplicative order of zero");
  const Field& f = x.field();
  std::uint64_t order = f.order() - 1;
  for (const auto& [ell, _] : arith::factorize(order)) {
    while (order % ell == 0 && f.pow(x.index(), order / ell) == 1) order /= ell;
  }
  return order;
}

Element sqrt_minus_one(const Field& f) {
  if (f.characteristic() == 2) return f.one();
  if (f.order() % 4 == 3) throw std::domain_error("no square root of -1 in " + f.describe());
  const std::uint64_t half = (f.order() - 1) / 2;
  const Field::index_type minus_one = f.neg(1);
  for (Field::index_type z = 2;; ++z) {
    if (f.pow(z, half) != minus_one) continue;
    const Field::index_type eta = f.pow(z, half / 2);
    return f.from_index(std::min(eta, f.neg(eta)));
  }
}

// ---------------------------------------------------------------- Embedding

namespace {

Field::index_type eval_prime_poly(const Field& f, std::span<const std::uint32_t> coeffs, Field::index_type z) {
  Field::index_type acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, z), coeffs[i]);
  return acc;
}

}  // namespace

Embedding::Embedding(Field src, Field dst) : src_(std::move(src)), dst_(std::move(dst)), root_(dst_.zero()) {
  if (src_.characteristic() != dst_.characteristic())
    throw std::invalid_argument("embedding requires equal characteristic");
  if (dst_.degree() % src_.degree() != 0)
    throw std::invalid_argument("embedding requires the target degree to be a multiple of the source degree");
  const unsigned e = src_.degree();
  if (e == 1) {
    root_ = dst_.from_int(-static_cast<std::int64_t>(src_.modulus()[0]));
  } else {
    // roots of an irreducible degree-e polynomial lie in the unique subfield
    // of order p^e, generated by an element of order p^e - 1
    const std::uint64_t s = src_.order() - 1;
    const std::uint64_t big = dst_.order() - 1;
    const auto fac = arith::factorize(s);
    Field::index_type gamma = 0;
    for (Field::index_type x = 1;; ++x) {
      const Field::index_type y = dst_.pow(x, big / s);
      bool full = true;
      for (const auto& [ell, _] : fac)
        if (dst_.pow(y, s / ell) == 1) full = false;
      if (full) {
        gamma = y;
        break;
      }
    }
    Field::index_type best = ~Field::index_type{0};
    Field::index_type z = 1;
    for (std::uint64_t i = 0; i < s; ++i, z = dst_.mul(z, gamma))
      if (eval_prime_poly(dst_, src_.modulus(), z) == 0) best = std::min(best, z);
    if (best == ~Field::index_type{0}) throw std::logic_error("source modulus has no root in target field");
    root_ = dst_.from_index(best);
  }
  root_powers_.resize(e);
  Field::index_type acc = 1;
  for (unsigned i = 0; i < e; ++i, acc = dst_.mul(acc, root_.index())) root_powers_[i] = acc;
}

Element Embedding::operator()(const Element& x) const {
  if (!(x.field() == src_)) throw std::invalid_argument("element is not in the embedding source");
  const auto c = x.coeffs();
  Field::index_type acc = 0;
  for (unsigned i = 0; i < c.size(); ++i)
    if (c[i] != 0) acc = dst_.add(acc, dst_.mul(c[i], root_powers_[i]));
  return dst_.from_index(acc);
}

std::optional<Element> Embedding::preimage(const Element& y) const {
  if (!(y.field() == dst_)) throw std::invalid_argument("element is not in the embedding target");
  const unsigned e = src_.degree();
  const unsigned rows = dst_.degree();
  const std::uint64_t p = dst_.characteristic();
  // augmented system: columns = digits(root^i), rhs = digits(y)
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(e + 1, 0));
  for (unsigned i = 0; i < e; ++i) {
    const auto dg = dst_.digits(root_powers_[i]);
    for (unsigned r = 0; r < rows; ++r) m[r][i] = dg[r];
  }
  const auto rhs = y.coeffs();
  for (unsigned r = 0; r < rows; ++r) m[r][e] = rhs[r];
  unsigned row = 0;
  std::vector<unsigned> pivot_col;
  for (unsigned c = 0; c < e && row < rows; ++c) {
    unsigned piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const std::uint64_t inv = *arith::inverse_mod(m[row][c], p);
    for (auto& v : m[row]) v = arith::mulmod(v, inv, p);
    for (unsigned r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (unsigned j = 0; j <= e; ++j) m[r][j] = (m[r][j] + p - arith::mulmod(f, m[row][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (unsigned r = row; r < rows; ++r)
    if (m[r][e] != 0) return std::nullopt;
  std::vector<std::int64_t> sol(e, 0);
  for (unsigned r = 0; r < row; ++r) sol[pivot_col[r]] = static_cast<std::int64_t>(m[r][e]);
  return src_.from_coeffs(sol);
}

Element primitive_rn_root(const Field& ext, std::uint64_t rn, std::uint64_t n, const Element& lambda) {
  if (!(lambda.field() == ext)) throw std::invalid_argument("lambda must be given in the extension field");
  if (rn == 0 || n == 0) throw std::invalid_argument("rn and n must be positive");
  const std::uint64_t big = ext.order() - 1;
  if (big % rn != 0)
    throw std::invalid_argument(std::to_string(rn) + " does not divide |" + ext.describe() + "*|");
  const Element base = ext.primitive_element().pow(big / rn);
  for (std::uint64_t u = 1; u <= rn; ++u) {
    if (arith::gcd(u, rn) != 1) continue;
    const Element theta = base.pow(u);
    if (theta.pow(n) == lambda) return theta;
  }
  throw std::invalid_argument("no primitive " + std::to_string(rn) + "-th root theta with theta^" + std::to_string(n) +
                              " = lambda");
}

}  // namespace glcd
