#include "glcd/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace glcd {

json to_json(const Element& x) {
  json out = json::array();
  for (auto c : x.coeffs()) out.push_back(c);
  return out;
}

Element element_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != f.degree())
    throw std::invalid_argument("element must be an array of " + std::to_string(f.degree()) + " integers");
  std::vector<std::int64_t> coeffs;
  for (const auto& c : j) {
    const auto v = c.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.characteristic())
      throw std::invalid_argument("element coefficient out of range");
    coeffs.push_back(v);
  }
  return f.from_coeffs(coeffs);
}

json to_json(const Field& f) {
  return json{{"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
  return Field::make(j.at("p").get<std::uint32_t>(), j.at("e").get<unsigned>(),
                     j.at("modulus").get<std::vector<std::uint32_t>>());
}

json to_json(const Poly& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.coeff_indices().size(); ++i) out.push_back(to_json(f.coeff(i)));
  return out;
}

Poly poly_from_json(const Field& f, const json& j) {
  std::vector<Element> coeffs;
  for (const auto& c : j) coeffs.push_back(element_from_json(f, c));
  return Poly::from_elements(f, coeffs);
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.element(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const std::size_t cols = j.front().size();
  std::vector<std::vector<Element>> rows;
  for (const auto& row : j) {
    if (row.size() != cols) throw std::invalid_argument("matrix rows have different lengths");
    std::vector<Element> r;
    for (const auto& x : row) r.push_back(element_from_json(f, x));
    rows.push_back(std::move(r));
  }
  return Matrix::from_elements(f, rows, cols);
}

json to_json(const DefiningSet& P) {
  return json{{"rn", P.ctx.rn()}, {"r", P.ctx.r}, {"residues", P.residues}};
}

DefiningSet defining_set_from_json(const CosetContext& ctx, const json& j) {
  if (j.at("rn").get<std::uint64_t>() != ctx.rn() || j.at("r").get<std::uint32_t>() != ctx.r)
    throw std::invalid_argument("defining set belongs to a different context");
  return DefiningSet::make(ctx, j.at("residues").get<Residues>());
}

json to_json(const CodeParams& params) {
  json d;
  if (params.dim == 0) d = nullptr;
  else if (params.exact()) d = params.d_lo;
  else d = json::array({params.d_lo, params.d_hi});
  return json{{"n", params.n},
              {"dim", params.dim},
              {"d", d},
              {"exact", params.dim == 0 || params.exact()},
              {"mds", params.dim > 0 && params.mds()}};
}

json catalog_to_json(const Catalog& catalog, GaloisParam k) {
  json out = json::array();
  for (const auto& entry : catalog.entries) {
    json rec;
    rec["p"] = catalog.ctx.p;
    rec["e"] = catalog.ctx.e;
    rec["k"] = k.k;
    rec["n"] = catalog.ctx.n;
    rec["lambda"] = to_json(catalog.lambda);
    rec["r"] = catalog.ctx.r;
    rec["theta"] = to_json(catalog.theta);
    rec["defining_set"] = entry.defining_set;
    rec["generator"] = to_json(entry.generator);
    rec["params"] = to_json(entry.params);
    rec["lcd"] = entry.lcd;
    rec["mds"] = entry.mds;
    rec["bch_bound"] = entry.bch_bound;
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

template <typename Range>
std::string spaced(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string catalog_to_csv(const Catalog& catalog, GaloisParam k) {
  std::ostringstream os;
  os << "p,e,k,n,lambda,r,defining_set,dim,d,exact,bch,lcd,mds\n";
  const std::string lambda = spaced(catalog.lambda.coeffs());
  for (const auto& entry : catalog.entries) {
    const auto& pr = entry.params;
    std::string d;
    if (pr.dim == 0) d = "";
    else if (pr.exact()) d = std::to_string(pr.d_lo);
    else d = std::to_string(pr.d_lo) + "-" + std::to_string(pr.d_hi);
    os << catalog.ctx.p << ',' << catalog.ctx.e << ',' << k.k << ',' << catalog.ctx.n << ',' << lambda << ','
       << catalog.ctx.r << ',' << spaced(entry.defining_set) << ',' << pr.dim << ',' << d << ','
       << (pr.dim == 0 || pr.exact() ? "true" : "false") << ',' << entry.bch_bound << ','
       << (entry.lcd ? "true" : "false") << ',' << (entry.mds ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace glcd
