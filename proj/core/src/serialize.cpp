#include "lpheat/serialize.hpp"

#include <cmath>
#include <json.hpp>
#include <string>

#include "lpheat/error.hpp"
#include "lpheat/io.hpp"

namespace lpheat {

namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
    if (!j.contains(key)) fail(ErrorKind::kDomain, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_real(v.get<std::string>());
    fail(ErrorKind::kDomain, std::string("field '") + key + "' must be a number");
}

double number_or(const json& j, const char* key, double fallback) { return j.contains(key) ? number(j, key) : fallback; }

double array_number(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_real(v.get<std::string>());
    fail(ErrorKind::kDomain, "array entries must be numbers");
}

json real_json(double v) {
    if (std::isfinite(v)) return v;
    return format_real(v);
}

PrimitiveFunction primitive_from(const json& j) {
    if (!j.is_object()) fail(ErrorKind::kDomain, "primitive must be a JSON object");
    if (!j.contains("type") || !j.at("type").is_string()) fail(ErrorKind::kDomain, "primitive needs a string 'type'");
    const auto type = j.at("type").get<std::string>();
    PrimitiveFunction f;
    if (type == "indicator") {
        f = PrimitiveFunction::indicator(number(j, "a"), number(j, "b"));
    } else if (type == "step_combo") {
        if (!j.contains("steps") || !j.at("steps").is_array()) fail(ErrorKind::kDomain, "step_combo needs 'steps'");
        std::vector<shape::Step> steps;
        for (const auto& s : j.at("steps")) {
            if (s.is_array() && s.size() == 3) {
                steps.push_back({array_number(s[0]), array_number(s[1]), array_number(s[2])});
            } else if (s.is_object()) {
                steps.push_back({number(s, "height"), number(s, "a"), number(s, "b")});
            } else {
                fail(ErrorKind::kDomain, "each step is [height, a, b] or {height, a, b}");
            }
        }
        f = PrimitiveFunction::step_combo(std::move(steps));
    } else if (type == "gaussian_power") {
        f = PrimitiveFunction::gaussian_power(number(j, "t"), number(j, "beta"));
    } else if (type == "tail_log") {
        f = PrimitiveFunction::tail_log(number(j, "p"));
    } else if (type == "truncated_sine") {
        f = PrimitiveFunction::truncated_sine(number(j, "p"));
    } else if (type == "samples") {
        if (!j.contains("values") || !j.at("values").is_array()) fail(ErrorKind::kDomain, "samples need 'values'");
        std::vector<double> values;
        for (const auto& v : j.at("values")) values.push_back(array_number(v));
        f = PrimitiveFunction::sampled(GridFunction(number(j, "x0"), number(j, "dx"), std::move(values)));
    } else if (type == "sum") {
        if (!j.contains("terms") || !j.at("terms").is_array()) fail(ErrorKind::kDomain, "sum needs 'terms'");
        for (const auto& term : j.at("terms")) f = f + primitive_from(term);
    } else {
        fail(ErrorKind::kDomain, "unknown primitive type '" + type + "'");
    }
    return f.scaled(number_or(j, "coef", 1.0)).shifted(number_or(j, "shift", 0.0));
}

json term_json(const PrimitiveFunction::Term& term) {
    json j = std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, shape::Indicator>) {
                return {{"type", "indicator"}, {"a", s.a}, {"b", s.b}};
            } else if constexpr (std::is_same_v<T, shape::StepCombo>) {
                json steps = json::array();
                for (const auto& st : s.steps) steps.push_back({st.height, st.a, st.b});
                return {{"type", "step_combo"}, {"steps", steps}};
            } else if constexpr (std::is_same_v<T, shape::GaussianPower>) {
                return {{"type", "gaussian_power"}, {"t", s.t}, {"beta", s.beta}};
            } else if constexpr (std::is_same_v<T, shape::TailLog>) {
                return {{"type", "tail_log"}, {"p", s.p}};
            } else if constexpr (std::is_same_v<T, shape::TruncatedSine>) {
                return {{"type", "truncated_sine"}, {"p", s.p}};
            } else {
                json values = json::array();
                for (double v : s.grid.values()) values.push_back(v);
                return {{"type", "samples"}, {"x0", s.grid.x0()}, {"dx", s.grid.dx()}, {"values", values}};
            }
        },
        term.shape);
    if (term.coef != 1.0) j["coef"] = term.coef;
    if (term.shift != 0.0) j["shift"] = term.shift;
    return j;
}

json primitive_json(const PrimitiveFunction& f) {
    const auto terms = f.terms();
    if (terms.size() == 1) return term_json(terms[0]);
    json list = json::array();
    for (const auto& term : terms) list.push_back(term_json(term));
    return {{"type", "sum"}, {"terms", list}};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        fail(ErrorKind::kDomain, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

PrimitiveFunction parse_primitive(std::string_view json_text) { return primitive_from(parse_json(json_text)); }

std::string primitive_to_json(const PrimitiveFunction& f) { return primitive_json(f).dump(); }

LprimeElement parse_element(std::string_view json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) fail(ErrorKind::kDomain, "element must be a JSON object");
    if (!j.contains("p")) fail(ErrorKind::kDomain, "element needs 'p'");
    const auto& pj = j.at("p");
    const Exponent p = pj.is_string() ? Exponent::parse(pj.get<std::string>()) : Exponent(array_number(pj));
    if (j.contains("atoms")) {
        if (!j.at("atoms").is_array()) fail(ErrorKind::kDomain, "'atoms' must be an array of [weight, x]");
        std::vector<Atom> atoms;
        for (const auto& a : j.at("atoms")) {
            if (!a.is_array() || a.size() != 2) fail(ErrorKind::kDomain, "each atom is [weight, x]");
            atoms.push_back({array_number(a[0]), array_number(a[1])});
        }
        return LprimeElement::from_atoms(std::move(atoms), p);
    }
    if (!j.contains("primitive")) fail(ErrorKind::kDomain, "element needs 'primitive' or 'atoms'");
    return LprimeElement(primitive_from(j.at("primitive")), p);
}

std::string element_to_json(const LprimeElement& f) {
    json j;
    j["p"] = real_json(f.p().value());
    if (f.atoms()) {
        json atoms = json::array();
        for (const auto& a : *f.atoms()) atoms.push_back({a.weight, a.location});
        j["atoms"] = atoms;
    } else {
        j["primitive"] = primitive_json(f.primitive());
    }
    return j.dump();
}

}  // namespace lpheat
