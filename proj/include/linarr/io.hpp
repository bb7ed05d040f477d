#pragma once

// JSON encodings of the library's value types. Numbers travel as canonical Eisenstein strings.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "linarr/arrangement.hpp"
#include "linarr/catalan.hpp"
#include "linarr/milnor.hpp"
#include "linarr/pencils.hpp"
#include "linarr/resonance.hpp"

namespace linarr {

using json = nlohmann::json;

/// Input that is not valid for the expected JSON schema.
class FormatError : public Error {
public:
    using Error::Error;
};

inline void to_json(json& j, const Eisenstein& z) { j = to_string(z); }
inline void from_json(const json& j, Eisenstein& z) {
    if (!j.is_string()) throw FormatError("expected a number string, got " + j.dump());
    z = eis_parse(j.get<std::string>());
}

inline void to_json(json& j, const HomForm& f) {
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"exp", it->first}, {"c", it->second}});
    j = {{"degree", f.degree()}, {"terms", terms}};
}
inline void from_json(const json& j, HomForm& f) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms")) throw FormatError("form needs 'degree' and 'terms'");
    f = HomForm(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) f.add_term(t.at("exp").get<Exponent>(), t.at("c").get<Eisenstein>());
}

inline void to_json(json& j, const UniPoly& p) { j = {{"coeffs", p.coeffs()}}; }
inline void from_json(const json& j, UniPoly& p) {
    if (!j.is_object() || !j.contains("coeffs")) throw FormatError("univariate polynomial needs 'coeffs'");
    p = UniPoly(j.at("coeffs").get<std::vector<Eisenstein>>());
}

inline void to_json(json& j, const Arrangement& a) {
    json lines = json::array();
    for (const auto& l : a.lines()) lines.push_back(l.coeffs());
    j = {{"label", a.label()}, {"lines", lines}};
}
inline void from_json(const json& j, Arrangement& a) {
    if (!j.is_object() || !j.contains("lines")) throw FormatError("arrangement needs 'lines'");
    std::vector<Line> lines;
    for (const auto& l : j.at("lines")) {
        if (!l.is_array() || l.size() != 3) throw FormatError("a line is a list of three numbers");
        Point p;
        for (std::size_t i = 0; i < 3; ++i) p[i] = l[i].get<Eisenstein>();
        lines.emplace_back(p);
    }
    a = Arrangement(std::move(lines), j.value("label", std::string()));
}

inline void to_json(json& j, const IncidencePoint& p) {
    j = {{"point", p.point}, {"lines", p.incident_lines}, {"multiplicity", p.multiplicity()}};
}

inline void to_json(json& j, const PencilDecomposition& p) {
    j = {{"classes", p.classes}, {"lambdas", p.lambdas}, {"products", p.products}};
}
inline void from_json(const json& j, PencilDecomposition& p) {
    if (!j.is_object() || !j.contains("products") || !j.contains("lambdas"))
        throw FormatError("pencil needs 'products' and 'lambdas'");
    p.classes = j.value("classes", std::array<std::vector<std::size_t>, 3>{});
    p.lambdas = j.at("lambdas").get<std::array<Eisenstein, 3>>();
    p.products = j.at("products").get<std::array<HomForm, 3>>();
    if (!p.verify()) throw DomainError("pencil products and lambdas do not satisfy sum lambda_i F_i = 0");
}

inline void to_json(json& j, const CharPoly& p) { j = to_string(p); }

inline void to_json(json& j, const MilnorReport& m) {
    j = {{"r", m.r},
         {"s", m.s},
         {"char_poly", m.char_poly},
         {"char_poly_factors", {{"t-1", m.char_poly.exponent_t_minus_1}, {"t^2+t+1", m.char_poly.exponent_cyclotomic3}}},
         {"b1_milnor_fiber", m.b1_milnor_fiber},
         {"eigenspace_dims",
          {{"1", m.eigenspace_dims.one}, {"w", m.eigenspace_dims.omega}, {"w^2", m.eigenspace_dims.omega_squared}}},
         {"mw_rank", m.mw_rank}};
}

inline void to_json(json& j, const WeightVector& w) { j = w.values(); }
inline void from_json(const json& j, WeightVector& w) { w = WeightVector(j.get<Vector>()); }

inline void to_json(json& j, const CandidateResult& c) {
    j = {{"kind", to_string(c.candidate.kind)},
         {"support", c.candidate.support},
         {"basis", c.candidate.basis},
         {"isotropic", c.isotropic},
         {"generic_kernel_dim", c.generic_kernel_dim}};
}

template <RelationPoly P>
void to_json(json& j, const Relation<P>& r) {
    j = {{"univariate", Relation<P>::univariate}, {"F", r.F}, {"sol", r.sol}};
}
template <RelationPoly P>
void from_json(const json& j, Relation<P>& r) {
    r.F = j.at("F").get<std::array<P, 3>>();
    r.sol = j.at("sol").get<std::array<P, 3>>();
}

using AnyRelation = std::variant<PlaneRelation, UniRelation>;

inline AnyRelation relation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("F") || !j.contains("sol") || !j.contains("univariate"))
        throw FormatError("relation needs 'univariate', 'F' and 'sol'");
    if (j.at("univariate").get<bool>()) return j.get<UniRelation>();
    return j.get<PlaneRelation>();
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

/// Parses a JSON value into T, mapping library-level JSON errors to FormatError.
template <typename T>
T decode(const json& j) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    } catch (const ParseError& e) {
        throw FormatError(e.what());
    }
}

inline Arrangement read_arrangement(const std::string& path) { return decode<Arrangement>(read_json_file(path)); }

}  // namespace linarr
