#pragma once

#include <json.hpp>

#include <string>

#include "matcat/equivalence.hpp"
#include "matcat/phi.hpp"

namespace matcat {

using json = nlohmann::ordered_json;

// Malformed input: bad JSON, missing keys, out-of-range indices, ill-typed matrices.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Field field_from_json(const json& j);
json field_to_json(const Field& f);
Scalar scalar_from_json(const Field& f, const json& j);
json scalar_to_json(const Scalar& s);

AlgElement elem_from_json(const GradedAlgebra& a, const json& j);
json elem_to_json(const AlgElement& x);

BlockMatrix matrix_from_json(const AlgebraPtr& alg, const json& j);
json matrix_to_json(const BlockMatrix& x);

Quadruple quadruple_from_json(const json& j);
json quadruple_to_json(const Quadruple& q);

EtaWitness eta_from_json(const Quadruple& q, const json& j);
json eta_to_json(const Quadruple& q, const EtaWitness& eta);
EquivWitness equiv_from_json(const Quadruple& qa, const Quadruple& qb, const json& j);
json equiv_to_json(const Quadruple& qa, const EquivWitness& w);

json read_json_file(const std::string& path);
Quadruple load_quadruple(const std::string& path);

// "0,1,0,0" or "(0,1,0,0)" or a unit name "e3"
ObjVec parse_obj(const std::string& s, int n);

}  // namespace matcat
