// Serialization: the coefficient string grammar ("t^{3/2}+1", "U^2",
// "(t+1)/t"), JSON documents for matrices / complexes / modules / derivation
// logs, and a small TOML subset for family and knot specs.
#pragma once

#include "complex.hpp"
#include "excision.hpp"
#include "knots.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace thf {

// coefficient grammar --------------------------------------------------------
std::string print_coeff(const BigInt& x);
std::string print_coeff(const F2Poly& x);
std::string print_coeff(const LaurentPoly& x);
std::string print_coeff(const RatFunc& x);
std::string print_coeff(const UPoly& x);
std::string print_coeff(const NovikovElem& x);

BigInt parse_bigint_coeff(const std::string& s);
F2Poly parse_f2poly(const std::string& s);
LaurentPoly parse_laurent(const std::string& s);
RatFunc parse_ratfunc(const std::string& s);
UPoly parse_upoly(const std::string& s);
NovikovElem parse_novikov(const std::string& s);

// matrices -------------------------------------------------------------------
using AnyMatrix =
    std::variant<Matrix<BigInt>, Matrix<F2Poly>, Matrix<LaurentPoly>, Matrix<UPoly>>;

struct MatrixDoc {
    std::string ring;
    AnyMatrix matrix;
};
MatrixDoc parse_matrix_json(const nlohmann::json& j);
nlohmann::json snf_to_json(const MatrixDoc& doc);  // runs SNF, reports diag/rank

// complexes ------------------------------------------------------------------
using AnyComplex = std::variant<ChainComplex<F2>, ChainComplex<RatFunc>, ChainComplex<UPoly>>;

struct ComplexDoc {
    std::string ring;
    AnyComplex complex;
};
ComplexDoc parse_complex_json(const nlohmann::json& j);
nlohmann::json homology_to_json(const ComplexDoc& doc);

nlohmann::json knot_complex_to_json(const KnotComplex& k);

// modules and logs -----------------------------------------------------------
nlohmann::json module_to_json(const GradedModule& m);
nlohmann::json log_to_json(const DerivationLog& log);
nlohmann::json dims_to_json(const GradedDims& d);

// specs ----------------------------------------------------------------------
ThinKnotSpec parse_thin_spec(const std::string& text, bool toml);
FamilySpec parse_family_spec(const std::string& text, bool toml);

}  // namespace thf
