#pragma once

#include <json.hpp>

#include "qmd/field.hpp"

namespace qmd {

/// JSON conventions: complex numbers emit as [re, im] pairs of doubles.
/// On input a complex value may be a JSON number, a literal string
/// ("3/8+1/2j"), or an [re, im] pair whose elements are numbers or strings.
/// Exact mode accepts integer numbers only; fractional values must use the
/// string form so no precision is invented.
nlohmann::ordered_json complex_to_json(const ComplexScalar& c);
ComplexScalar complex_from_json(const nlohmann::json& j, ArithMode m);

nlohmann::ordered_json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j, ArithMode m);

nlohmann::ordered_json matrix_to_json(const Matrix4& m);

/// Field literal: {"terms": [{"amp": [c0,c1,c2,c3], "k": [k1,k2,k3]}, ...]}.
nlohmann::ordered_json field_to_json(const AnalyticField& f);
AnalyticField field_from_json(const nlohmann::json& j, ArithMode m);

}  // namespace qmd
