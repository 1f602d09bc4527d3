#pragma once

// Serializable expression trees describing modular-form q-expansions:
// eta-quotient leaves, E2(m tau), the named level-1 forms, Hauptmodul and
// Faber leaves, and scalar/sum/product/power combinators.

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "mhecke/classical_series.hpp"

namespace mhecke {

using Json = nlohmann::ordered_json;

struct FormSpec;
using FormSpecPtr = std::shared_ptr<const FormSpec>;

struct FormSpec {
    enum class Kind {
        EtaQuotient,
        E2,
        Named, // e4, e6, delta, j
        Constant,
        Scale,
        Sum,
        Product,
        Power,
        Hauptmodul,
        Faber,
        HauptmodulPoly,
    };

    Kind kind;
    EtaQuotientSpec eta;                   // EtaQuotient
    long long m = 1;                       // E2: argument multiplier
    std::string name;                      // Named
    QuadTowerNumber value;                 // Constant, Scale
    std::vector<FormSpecPtr> children;     // Scale(1), Sum, Product, Power(1)
    long long exponent = 1;                // Power
    long long level = 1;                   // Hauptmodul, Faber, HauptmodulPoly
    long long index = 1;                   // Faber
    std::vector<QuadTowerNumber> poly;     // HauptmodulPoly: poly[k] ~ X^k

    static FormSpecPtr eta_quotient(EtaQuotientSpec spec) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::EtaQuotient;
        p->eta = std::move(spec);
        return p;
    }
    static FormSpecPtr e2(long long m) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::E2;
        p->m = m;
        return p;
    }
    static FormSpecPtr named(std::string n) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Named;
        p->name = std::move(n);
        return p;
    }
    static FormSpecPtr constant(QuadTowerNumber v) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Constant;
        p->value = std::move(v);
        return p;
    }
    static FormSpecPtr scale(QuadTowerNumber v, FormSpecPtr arg) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Scale;
        p->value = std::move(v);
        p->children = {std::move(arg)};
        return p;
    }
    static FormSpecPtr sum(std::vector<FormSpecPtr> terms) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Sum;
        p->children = std::move(terms);
        return p;
    }
    static FormSpecPtr product(std::vector<FormSpecPtr> terms) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Product;
        p->children = std::move(terms);
        return p;
    }
    static FormSpecPtr power(FormSpecPtr base, long long e) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Power;
        p->children = {std::move(base)};
        p->exponent = e;
        return p;
    }
    static FormSpecPtr hauptmodul_leaf(long long N) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Hauptmodul;
        p->level = N;
        return p;
    }
    static FormSpecPtr faber_leaf(long long N, long long n) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::Faber;
        p->level = N;
        p->index = n;
        return p;
    }
    static FormSpecPtr hauptmodul_poly(long long N, std::vector<QuadTowerNumber> coeffs) {
        auto p = std::make_shared<FormSpec>();
        p->kind = Kind::HauptmodulPoly;
        p->level = N;
        p->poly = std::move(coeffs);
        return p;
    }
};

inline QSeries expand(const FormSpec& spec, long long terms) {
    using K = FormSpec::Kind;
    switch (spec.kind) {
        case K::EtaQuotient:
            return eta_quotient_series(spec.eta, terms);
        case K::E2: {
            long long inner = (terms + spec.m - 1) / spec.m + 1;
            return eisenstein2(inner).substituted_power(spec.m).truncated(terms);
        }
        case K::Named: {
            if (spec.name == "e4") return eisenstein4(terms);
            if (spec.name == "e6") return eisenstein6(terms);
            if (spec.name == "delta") return delta_series(terms);
            if (spec.name == "j") return j_series(terms);
            throw BadInput("expand: unknown named form '" + spec.name + "'");
        }
        case K::Constant:
            return QSeries::constant(spec.value, terms);
        case K::Scale:
            return expand(*spec.children.at(0), terms).scaled(spec.value);
        case K::Sum: {
            QSeries acc = QSeries::constant(QuadTowerNumber(0), terms);
            for (const auto& ch : spec.children) acc = acc + expand(*ch, terms);
            return acc;
        }
        case K::Product: {
            QSeries acc = QSeries::one(terms);
            for (const auto& ch : spec.children) acc = acc * expand(*ch, terms);
            return acc;
        }
        case K::Power:
            return expand(*spec.children.at(0), terms).pow_int(spec.exponent);
        case K::Hauptmodul:
            return hauptmodul(spec.level, terms);
        case K::Faber:
            return faber(spec.level, spec.index, terms).expansion;
        case K::HauptmodulPoly: {
            long long deg = static_cast<long long>(spec.poly.size()) - 1;
            QSeries t = hauptmodul(spec.level, terms + std::max<long long>(deg, 0) + 2);
            QSeries acc = QSeries::constant(QuadTowerNumber(0), t.size());
            for (long long k = deg; k >= 0; --k) {
                acc = acc * t;
                const auto& c = spec.poly[static_cast<std::size_t>(k)];
                if (!c.is_zero()) acc = acc + QSeries::constant(c, t.size());
            }
            return acc.truncated(terms + std::max<long long>(deg, 0));
        }
    }
    throw BadInput("expand: corrupt FormSpec");
}

// Expansion for objects that must live on the integral q-power grid.
inline QSeries expand_integral(const FormSpec& spec, long long terms) {
    QSeries s = expand(spec, terms);
    if (!s.is_zero() && !is_integral(s.offset()))
        throw FractionalOffset("expand_integral: total leading power " + s.offset_str() +
                               " is fractional; package eta factors into an integral form");
    return s;
}

// If the spec is a polynomial in a single Hauptmodul, return (level, coeffs).
// Levels: 0 marks "no Hauptmodul yet" (pure constants).
namespace detail {

inline bool merge_level(long long& a, long long b) {
    if (b == 0) return true;
    if (a == 0) {
        a = b;
        return true;
    }
    return a == b;
}

inline std::vector<QuadTowerNumber> poly_mul(const std::vector<QuadTowerNumber>& p,
                                             const std::vector<QuadTowerNumber>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<QuadTowerNumber> out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

} // namespace detail

inline bool as_hauptmodul_poly(const FormSpec& spec, long long& level,
                               std::vector<QuadTowerNumber>& coeffs) {
    using K = FormSpec::Kind;
    switch (spec.kind) {
        case K::Constant:
            coeffs = {spec.value};
            return detail::merge_level(level, 0);
        case K::Hauptmodul:
            coeffs = {QuadTowerNumber(0), QuadTowerNumber(1)};
            return detail::merge_level(level, spec.level);
        case K::Faber: {
            if (!detail::merge_level(level, spec.level)) return false;
            coeffs = faber(spec.level, spec.index, 2).poly;
            return true;
        }
        case K::HauptmodulPoly:
            coeffs = spec.poly;
            return detail::merge_level(level, spec.level);
        case K::Scale: {
            if (!as_hauptmodul_poly(*spec.children.at(0), level, coeffs)) return false;
            for (auto& c : coeffs) c = c * spec.value;
            return true;
        }
        case K::Sum: {
            std::vector<QuadTowerNumber> acc;
            for (const auto& ch : spec.children) {
                std::vector<QuadTowerNumber> part;
                if (!as_hauptmodul_poly(*ch, level, part)) return false;
                if (part.size() > acc.size()) acc.resize(part.size());
                for (std::size_t i = 0; i < part.size(); ++i) acc[i] += part[i];
            }
            coeffs = acc;
            return true;
        }
        case K::Product: {
            std::vector<QuadTowerNumber> acc{QuadTowerNumber(1)};
            for (const auto& ch : spec.children) {
                std::vector<QuadTowerNumber> part;
                if (!as_hauptmodul_poly(*ch, level, part)) return false;
                acc = detail::poly_mul(acc, part);
            }
            coeffs = acc;
            return true;
        }
        case K::Power: {
            if (spec.exponent < 0) return false;
            std::vector<QuadTowerNumber> base;
            if (!as_hauptmodul_poly(*spec.children.at(0), level, base)) return false;
            std::vector<QuadTowerNumber> acc{QuadTowerNumber(1)};
            for (long long i = 0; i < spec.exponent; ++i) acc = detail::poly_mul(acc, base);
            coeffs = acc;
            return true;
        }
        default:
            return false;
    }
}

// ---- JSON ----

inline Json quadtower_to_json(const QuadTowerNumber& v) {
    auto rat_str = [](const Rational& r) {
        std::string s = rat_num(r).str();
        if (rat_den(r) != 1) s += "/" + rat_den(r).str();
        return s;
    };
    Json j;
    j["s1"] = v.s1();
    j["s2"] = v.s2();
    j["x0"] = rat_str(v.x0());
    j["x1"] = rat_str(v.x1());
    j["x2"] = rat_str(v.x2());
    j["x3"] = rat_str(v.x3());
    j["str"] = v.str();
    return j;
}

inline QuadTowerNumber quadtower_from_json(const Json& j) {
    if (j.is_string()) return QuadTowerNumber::parse(j.get<std::string>());
    if (j.is_number_integer()) return QuadTowerNumber(Rational(j.get<long long>()));
    if (!j.is_object()) throw BadInput("QuadTowerNumber: expected object or string");
    long long s1 = j.at("s1").get<long long>();
    long long s2 = j.at("s2").get<long long>();
    QuadTowerNumber out;
    out += QuadTowerNumber(detail::parse_rational(j.at("x0").get<std::string>()));
    out += QuadTowerNumber::root_term(detail::parse_rational(j.at("x1").get<std::string>()), s1);
    out += QuadTowerNumber::root_term(detail::parse_rational(j.at("x2").get<std::string>()), s2);
    // x3 multiplies sqrt of the signed squarefree part of s1*s2.
    if (s1 != 1 && s2 != 1)
        out += QuadTowerNumber::root_term(detail::parse_rational(j.at("x3").get<std::string>()),
                                          squarefree_part(s1 * s2));
    return out;
}

inline Json series_to_json(const QSeries& s) {
    Json j;
    j["offset"] = s.offset_str();
    Json coeffs = Json::array();
    for (long long k = 0; k < s.size(); ++k) coeffs.push_back(quadtower_to_json(s.coeff_rel(k)));
    j["coeffs"] = coeffs;
    j["truncation"] = s.size();
    return j;
}

inline Json formspec_to_json(const FormSpec& spec) {
    using K = FormSpec::Kind;
    Json j;
    switch (spec.kind) {
        case K::EtaQuotient: {
            j["type"] = "eta_quotient";
            j["level"] = spec.eta.level;
            Json t = Json::array();
            for (auto [m, r] : spec.eta.terms) t.push_back(Json::array({m, r}));
            j["terms"] = t;
            break;
        }
        case K::E2:
            j["type"] = "e2";
            j["m"] = spec.m;
            break;
        case K::Named:
            j["type"] = "named";
            j["name"] = spec.name;
            break;
        case K::Constant:
            j["type"] = "constant";
            j["value"] = quadtower_to_json(spec.value);
            break;
        case K::Scale:
            j["type"] = "scale";
            j["value"] = quadtower_to_json(spec.value);
            j["arg"] = formspec_to_json(*spec.children.at(0));
            break;
        case K::Sum: {
            j["type"] = "sum";
            Json t = Json::array();
            for (const auto& ch : spec.children) t.push_back(formspec_to_json(*ch));
            j["terms"] = t;
            break;
        }
        case K::Product: {
            j["type"] = "product";
            Json t = Json::array();
            for (const auto& ch : spec.children) t.push_back(formspec_to_json(*ch));
            j["terms"] = t;
            break;
        }
        case K::Power:
            j["type"] = "power";
            j["base"] = formspec_to_json(*spec.children.at(0));
            j["exp"] = spec.exponent;
            break;
        case K::Hauptmodul:
            j["type"] = "hauptmodul";
            j["level"] = spec.level;
            break;
        case K::Faber:
            j["type"] = "faber";
            j["level"] = spec.level;
            j["n"] = spec.index;
            break;
        case K::HauptmodulPoly: {
            j["type"] = "hauptmodul_poly";
            j["level"] = spec.level;
            Json c = Json::array();
            for (const auto& v : spec.poly) c.push_back(quadtower_to_json(v));
            j["coeffs"] = c;
            break;
        }
    }
    return j;
}

inline FormSpecPtr formspec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw BadInput("FormSpec: expected an object with a 'type' field");
    std::string type = j.at("type").get<std::string>();
    if (type == "eta_quotient") {
        EtaQuotientSpec spec;
        spec.level = j.at("level").get<long long>();
        for (const auto& t : j.at("terms"))
            spec.terms.emplace_back(t.at(0).get<long long>(), t.at(1).get<long long>());
        spec.validate_level();
        return FormSpec::eta_quotient(std::move(spec));
    }
    if (type == "e2") return FormSpec::e2(j.at("m").get<long long>());
    if (type == "named") return FormSpec::named(j.at("name").get<std::string>());
    if (type == "constant") return FormSpec::constant(quadtower_from_json(j.at("value")));
    if (type == "scale")
        return FormSpec::scale(quadtower_from_json(j.at("value")),
                               formspec_from_json(j.at("arg")));
    if (type == "sum" || type == "product") {
        std::vector<FormSpecPtr> terms;
        for (const auto& t : j.at("terms")) terms.push_back(formspec_from_json(t));
        return type == "sum" ? FormSpec::sum(std::move(terms))
                             : FormSpec::product(std::move(terms));
    }
    if (type == "power")
        return FormSpec::power(formspec_from_json(j.at("base")), j.at("exp").get<long long>());
    if (type == "hauptmodul") return FormSpec::hauptmodul_leaf(j.at("level").get<long long>());
    if (type == "faber")
        return FormSpec::faber_leaf(j.at("level").get<long long>(), j.at("n").get<long long>());
    if (type == "hauptmodul_poly") {
        std::vector<QuadTowerNumber> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(quadtower_from_json(c));
        return FormSpec::hauptmodul_poly(j.at("level").get<long long>(), std::move(coeffs));
    }
    throw BadInput("FormSpec: unknown type '" + type + "'");
}

// The weight-2 level-11 form -(1/10)(E2 - 11 E2(11.) + 24 eta^2 eta(11.)^2),
// normalized to leading coefficient 1.  Used throughout the tests.
inline FormSpecPtr level11_weight2_spec() {
    auto e2_1 = FormSpec::e2(1);
    auto e2_11 = FormSpec::scale(QuadTowerNumber(Rational(-11)), FormSpec::e2(11));
    auto etas = FormSpec::scale(QuadTowerNumber(Rational(24)),
                                FormSpec::eta_quotient(EtaQuotientSpec{11, {{1, 2}, {11, 2}}}));
    auto inner = FormSpec::sum({e2_1, e2_11, etas});
    return FormSpec::scale(QuadTowerNumber(Rational(-1, 10)), inner);
}

} // namespace mhecke
