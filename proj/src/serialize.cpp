#include "novikov/serialize.hpp"

#include <stdexcept>

namespace novikov {

using nlohmann::json;

namespace {

std::string exact(const Rational& c) {
    return c.numerator().get_str() + "/" + c.denominator().get_str();
}

json term(const char* kind, std::int64_t index, const Rational& c) {
    return json{{"kind", kind}, {"index", index}, {"coeff", exact(c)}};
}

struct RawTerm {
    std::string kind;
    std::int64_t index;
    Rational coeff;
};

std::vector<RawTerm> read_terms(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("expected an object with a \"terms\" array");
    }
    std::vector<RawTerm> out;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("kind") || !t.contains("index") || !t.contains("coeff") ||
            !t["kind"].is_string() || !t["index"].is_number_integer() || !t["coeff"].is_string()) {
            throw std::invalid_argument("malformed term: " + t.dump());
        }
        const auto index = t["index"].get<std::int64_t>();
        if (index < 0) throw std::invalid_argument("negative index in term: " + t.dump());
        out.push_back({t["kind"].get<std::string>(), index,
                       Rational::parse(t["coeff"].get<std::string>())});
    }
    return out;
}

}  // namespace

json to_json(const Element& x) {
    json terms = json::array();
    for (const auto& [s, c] : x.terms()) {
        terms.push_back(term(s.kind == Kind::A ? "a" : "b", s.index, c));
    }
    return json{{"terms", std::move(terms)}};
}

Element element_from_json(const json& j) {
    Element x;
    for (const auto& t : read_terms(j)) {
        if (t.kind == "a") {
            x.add_signed(Kind::A, t.index, t.coeff);
        } else if (t.kind == "b") {
            x.add_term(BasisSymbol::b(t.index), t.coeff);
        } else {
            throw std::invalid_argument("unknown element kind '" + t.kind + "'");
        }
    }
    return x;
}

json to_json(const FunctionRepr& f) {
    json terms = json::array();
    auto s = f.sinh_terms().begin();
    auto c = f.cosh_terms().begin();
    while (s != f.sinh_terms().end() || c != f.cosh_terms().end()) {
        if (c != f.cosh_terms().end() && (s == f.sinh_terms().end() || c->first <= s->first)) {
            terms.push_back(term("cosh", c->first, c->second));
            ++c;
        } else {
            terms.push_back(term("sinh", s->first, s->second));
            ++s;
        }
    }
    return json{{"terms", std::move(terms)}};
}

FunctionRepr function_from_json(const json& j) {
    FunctionRepr f;
    for (const auto& t : read_terms(j)) {
        if (t.kind == "sinh") {
            f.add_sinh(t.index, t.coeff);
        } else if (t.kind == "cosh") {
            f.add_cosh(t.index, t.coeff);
        } else {
            throw std::invalid_argument("unknown function kind '" + t.kind + "'");
        }
    }
    return f;
}

json to_json(const MultiplierDerivation& d) { return json{{"multiplier", to_json(d.multiplier())}}; }

MultiplierDerivation derivation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("multiplier")) {
        throw std::invalid_argument("expected an object with a \"multiplier\" element");
    }
    return MultiplierDerivation(element_from_json(j["multiplier"]));
}

}  // namespace novikov
