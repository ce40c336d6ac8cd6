#include "virc1/json_io.hpp"

#include "virc1/errors.hpp"

namespace virc1 {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw structural_error(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string()) throw structural_error(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

} // namespace

Json to_json(const Rational& r) {
    return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw structural_error("rationals are serialized as strings");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw structural_error(e.what());
    }
}

Json to_json(const sector::Dim& d) {
    Json j = Json::object();
    if (d.is_infinite()) {
        j["infinite"] = true;
    } else {
        j["finite"] = to_json(d.value());
    }
    return j;
}

sector::Dim dim_from_json(const Json& j) {
    if (!j.is_object()) throw structural_error("dimension must be an object");
    if (j.contains("infinite")) {
        if (j.contains("finite") || j.at("infinite") != Json(true)) {
            throw structural_error("malformed infinite dimension");
        }
        return sector::Dim::infinite();
    }
    return sector::Dim::finite(rational_from_json(field(j, "finite")));
}

Json to_json(const characters::Character& ch) {
    Json j = Json::object();
    j["offset"] = to_json(ch.offset);
    j["coeffs"] = ch.series.coefficients();
    j["order"] = ch.series.order();
    return j;
}

characters::Character character_from_json(const Json& j) {
    const Rational offset = rational_from_json(field(j, "offset"));
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) {
        throw structural_error("character coefficients must be a nonempty array");
    }
    std::vector<std::int64_t> values;
    for (const Json& c : coeffs) {
        if (!c.is_number_integer()) throw structural_error("coefficients must be integers");
        values.push_back(c.get<std::int64_t>());
    }
    const Json& order = field(j, "order");
    if (!order.is_number_unsigned() && !order.is_number_integer()) {
        throw structural_error("order must be an integer");
    }
    if (order.get<std::int64_t>() != static_cast<std::int64_t>(values.size()) - 1) {
        throw structural_error("order does not match coefficient count");
    }
    characters::Character ch(offset, characters::QSeries(std::move(values)));
    if (!ch.is_zero() && ch.series.at(0) == 0) {
        throw structural_error("leading coefficient must be nonzero");
    }
    return ch;
}

Json to_json(const characters::BranchingResult& br) {
    Json comps = Json::array();
    for (const auto& [h, mult] : br.components) {
        Json c = Json::object();
        c["h"] = to_json(h);
        c["multiplicity"] = mult;
        comps.push_back(std::move(c));
    }
    Json j = Json::object();
    j["components"] = std::move(comps);
    j["residual"] = to_json(br.residual);
    j["residual_zero"] = br.succeeded();
    return j;
}

characters::BranchingResult branching_from_json(const Json& j) {
    const Json& comps = field(j, "components");
    if (!comps.is_array()) throw structural_error("components must be an array");
    std::vector<std::pair<Rational, std::int64_t>> components;
    for (const Json& c : comps) {
        const Rational h = rational_from_json(field(c, "h"));
        const Json& mult = field(c, "multiplicity");
        if (!mult.is_number_integer() && !mult.is_number_unsigned()) {
            throw structural_error("multiplicity must be an integer");
        }
        components.emplace_back(h, mult.get<std::int64_t>());
    }
    return characters::BranchingResult{std::move(components),
                                       character_from_json(field(j, "residual"))};
}

Json to_json(const sector::Verdict& v) {
    Json j = Json::object();
    j["h"] = to_json(v.h);
    j["dimension"] = to_json(v.dimension);
    j["conjectural"] = v.conjectural;
    j["justification"] = v.justification;
    return j;
}

sector::Verdict verdict_from_json(const Json& j) {
    const Json& just = field(j, "justification");
    if (!just.is_array()) throw structural_error("justification must be an array");
    std::vector<std::string> steps;
    for (const Json& s : just) {
        if (!s.is_string()) throw structural_error("justification steps must be strings");
        steps.push_back(s.get<std::string>());
    }
    const Json& conj = field(j, "conjectural");
    if (!conj.is_boolean()) throw structural_error("conjectural must be a boolean");
    return sector::Verdict{rational_from_json(field(j, "h")),
                           dim_from_json(field(j, "dimension")), conj.get<bool>(),
                           std::move(steps)};
}

} // namespace virc1
