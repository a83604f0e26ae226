#pragma once

#include <string>

#include "adem/divided_powers.hpp"
#include "adem/lie_super2.hpp"
#include "adem/milnor.hpp"
#include "adem/oracle.hpp"
#include "adem/pbw.hpp"
#include "adem/steenrod.hpp"

namespace adem::jsonio {

/// { "p": int, "terms": [ { "coeff": int, "exponents": [int],
///   "bocksteins": [int] } ] }, terms in canonical order.
std::string element_json(const steenrod::Element& e);

/// { "p": int, "k_max": int, "dims": [int], "mismatches": [...] }
std::string verify_report_json(const oracle::VerifyReport& r);

std::string obstruction_report_json(const pbw::ObstructionReport& r);

/// Tensor element as arrays of (exponents, exponents, coeff).
std::string tensor_json(const milnor::TensorElement& e);
std::string coassoc_report_json(const milnor::CoassocReport& r);

std::string dp_element_json(const dpow::DPElement& e);
std::string derivation_json(const dpow::Derivation& d);

std::string axiom_report_json(const lie2::AxiomReport& r);

/// { "field": "F2"|"F4", "basis": [{"name","parity","degree"}],
///   "bracket": [{"i","j","coeffs":[...]}], "squaring": [{"i","coeffs":[...]}] }
lie2::LieSuperData lie_data_from_json(const std::string& text);
std::string lie_data_json(const lie2::LieSuperData& g);

}  // namespace adem::jsonio
