#pragma once

// JSON and CSV forms of fields, elements, polynomials, matrices, defining
// sets, code parameters and classification catalogs.

#include <string>

#include <json.hpp>

#include "glcd/constacyclic.hpp"

namespace glcd {

using json = nlohmann::ordered_json;

json to_json(const Element& x);
Element element_from_json(const Field& f, const json& j);

json to_json(const Field& f);
Field field_from_json(const json& j);

json to_json(const Poly& f);
Poly poly_from_json(const Field& f, const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

json to_json(const DefiningSet& P);
/// Residues are validated against ctx (class and q-closure).
DefiningSet defining_set_from_json(const CosetContext& ctx, const json& j);

/// {"n","dim","d","exact","mds"}; an inexact distance is written as [lo, hi],
/// the zero code's as null.
json to_json(const CodeParams& params);

/// One record per catalog entry, in catalog order.
json catalog_to_json(const Catalog& catalog, GaloisParam k);

/// Header p,e,k,n,lambda,r,defining_set,dim,d,exact,bch,lcd,mds. Set-valued
/// and element-valued cells use space-separated integers.
std::string catalog_to_csv(const Catalog& catalog, GaloisParam k);

}  // namespace glcd
