#include "qmd/json_io.hpp"

namespace qmd {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json complex_to_json(const ComplexScalar& c) {
    auto z = c.to_complex();
    return ordered_json::array({z.real(), z.imag()});
}

namespace {

ComplexScalar real_from_json(const json& j, ArithMode m) {
    if (j.is_string()) return parse_complex(j.get<std::string>(), m);
    if (j.is_number_integer()) return ComplexScalar::integer(j.get<long>(), m);
    if (j.is_number_float()) {
        if (m == ArithMode::Exact)
            throw std::invalid_argument(
                "exact mode requires integer JSON numbers or string literals, got " + j.dump());
        return ComplexScalar::floating(j.get<double>());
    }
    throw std::invalid_argument("expected a number or literal string, got " + j.dump());
}

}  // namespace

ComplexScalar complex_from_json(const json& j, ArithMode m) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("complex pair must have two entries");
        auto re = real_from_json(j[0], m);
        auto im = real_from_json(j[1], m);
        return re + ComplexScalar::imaginary(m) * im;
    }
    return real_from_json(j, m);
}

ordered_json quaternion_to_json(const Quaternion& q) {
    auto a = ordered_json::array();
    for (int i = 0; i < 4; ++i) a.push_back(complex_to_json(q[i]));
    return a;
}

Quaternion quaternion_from_json(const json& j, ArithMode m) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("quaternion literal must be an array of four complex values");
    return {complex_from_json(j[0], m), complex_from_json(j[1], m), complex_from_json(j[2], m),
            complex_from_json(j[3], m)};
}

ordered_json matrix_to_json(const Matrix4& m) {
    auto rows = ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        auto row = ordered_json::array();
        for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json field_to_json(const AnalyticField& f) {
    auto terms = ordered_json::array();
    const auto canonical = f.normalized();
    for (const auto& t : canonical.terms()) {
        ordered_json term;
        auto amp = ordered_json::array();
        for (const auto& a : t.amp) amp.push_back(complex_to_json(a));
        auto k = ordered_json::array();
        for (const auto& w : t.wave) k.push_back(complex_to_json(w));
        term["amp"] = amp;
        term["k"] = k;
        terms.push_back(term);
    }
    ordered_json out;
    out["terms"] = terms;
    return out;
}

AnalyticField field_from_json(const json& j, ArithMode m) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("field literal must be an object with a 'terms' array");
    std::vector<PlaneWaveTerm> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("amp") || !t.contains("k"))
            throw std::invalid_argument("field term needs 'amp' and 'k'");
        const auto& amp = t["amp"];
        const auto& k = t["k"];
        if (!amp.is_array() || amp.size() != 4 || !k.is_array() || k.size() != 3)
            throw std::invalid_argument("field term needs 4 amplitude and 3 wave components");
        PlaneWaveTerm term{{complex_from_json(amp[0], m), complex_from_json(amp[1], m),
                            complex_from_json(amp[2], m), complex_from_json(amp[3], m)},
                           {complex_from_json(k[0], m), complex_from_json(k[1], m),
                            complex_from_json(k[2], m)}};
        terms.push_back(std::move(term));
    }
    return AnalyticField(m, std::move(terms));
}

}  // namespace qmd
