#pragma once

// Homogeneous forms in x, y, z over Q(w), and their restriction to lines.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linarr/eisenstein.hpp"
#include "linarr/uni_poly.hpp"

namespace linarr {

using Exponent = std::array<int, 3>;
using Point = std::array<Eisenstein, 3>;

/// Homogeneous form of a fixed degree. The zero form keeps its degree and has no terms.
class HomForm {
public:
    using Terms = std::map<Exponent, Eisenstein>;

    HomForm() = default;
    explicit HomForm(int degree) : degree_(degree) {
        if (degree < 0) throw DomainError("negative form degree");
    }

    static HomForm constant(const Eisenstein& c) {
        HomForm f(0);
        f.add_term({0, 0, 0}, c);
        return f;
    }
    static HomForm x() { return linear(1, 0, 0); }
    static HomForm y() { return linear(0, 1, 0); }
    static HomForm z() { return linear(0, 0, 1); }
    static HomForm linear(const Eisenstein& a, const Eisenstein& b, const Eisenstein& c) {
        HomForm f(1);
        f.add_term({1, 0, 0}, a);
        f.add_term({0, 1, 0}, b);
        f.add_term({0, 0, 1}, c);
        return f;
    }
    static HomForm monomial(const Exponent& e, const Eisenstein& c) {
        HomForm f(e[0] + e[1] + e[2]);
        f.add_term(e, c);
        return f;
    }

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    Eisenstein coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Eisenstein() : it->second;
    }

    /// Accumulates c * x^i y^j z^k; zero results are erased.
    void add_term(const Exponent& e, const Eisenstein& c) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
            throw DegreeMismatch("exponent does not match form degree " + std::to_string(degree_));
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Eisenstein operator()(const Point& p) const {
        Eisenstein acc;
        for (const auto& [e, c] : terms_)
            acc += c * pow(p[0], static_cast<unsigned>(e[0])) * pow(p[1], static_cast<unsigned>(e[1])) *
                   pow(p[2], static_cast<unsigned>(e[2]));
        return acc;
    }

    HomForm operator-() const {
        HomForm r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    HomForm& operator+=(const HomForm& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (degree_ != o.degree_) throw DegreeMismatch("adding forms of different degrees");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    HomForm& operator-=(const HomForm& o) { return *this += -o; }

    friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
    friend HomForm operator-(HomForm a, const HomForm& b) { return a -= b; }

    friend HomForm operator*(const HomForm& a, const HomForm& b) {
        HomForm out(a.degree_ + b.degree_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }
    HomForm& operator*=(const HomForm& o) { return *this = *this * o; }

    friend HomForm operator*(const Eisenstein& s, const HomForm& f) {
        HomForm out(f.degree_);
        if (s.is_zero()) return out;
        for (const auto& [e, c] : f.terms_) out.terms_.emplace(e, s * c);
        return out;
    }

    /// Equality of forms; two zero forms are equal regardless of recorded degree.
    friend bool operator==(const HomForm& a, const HomForm& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_ = 0;
    Terms terms_;
};

inline HomForm pow(const HomForm& f, unsigned exponent) {
    HomForm result = HomForm::constant(1);
    HomForm base = f;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

enum class FormOp { add, sub, mul };

inline HomForm form_arith(const HomForm& p, const HomForm& q, FormOp op) {
    switch (op) {
        case FormOp::add: return p + q;
        case FormOp::sub: return p - q;
        case FormOp::mul: return p * q;
    }
    throw Error("unknown form operation");
}

inline HomForm product_of_linear_forms(std::span<const HomForm> lines) {
    HomForm out = HomForm::constant(1);
    for (const auto& l : lines) {
        if (l.degree() != 1 || l.is_zero()) throw DegreeMismatch("product_of_linear_forms expects nonzero linear forms");
        out *= l;
    }
    return out;
}

/// Coefficients (a, b, c) of a linear form a x + b y + c z.
inline Point linear_coefficients(const HomForm& l) {
    if (l.degree() != 1) throw DegreeMismatch("expected a linear form");
    return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
}

/// Affine parametrization t -> t*direction + base of a line.
struct LineChart {
    Point direction;
    Point base;
};

/// Chart used by restrict_to_line. For a x + b y + c z we solve for z when c != 0, else
/// for y, else for x; the two remaining coordinates become (t, 1). The parameter value
/// t = infinity corresponds to the point `direction`.
inline LineChart line_chart(const HomForm& l) {
    Point abc = linear_coefficients(l);
    const auto& [a, b, c] = abc;
    if (!c.is_zero()) return {{1, 0, -a / c}, {0, 1, -b / c}};
    if (!b.is_zero()) return {{1, -a / b, 0}, {0, -c / b, 1}};
    if (!a.is_zero()) return {{0, 1, 0}, {0, 0, 1}};
    throw DomainError("restriction to the zero line");
}

/// Restriction of `p` to the line l = 0 in the chart of line_chart().
inline UniPoly restrict_to_line(const HomForm& p, const HomForm& l) {
    LineChart chart = line_chart(l);
    std::array<UniPoly, 3> coord;
    for (std::size_t i = 0; i < 3; ++i)
        coord[i] = UniPoly(std::vector<Eisenstein>{chart.base[i], chart.direction[i]});
    std::array<std::vector<UniPoly>, 3> powers;
    for (std::size_t i = 0; i < 3; ++i) {
        powers[i].push_back(UniPoly(1));
        for (int k = 1; k <= p.degree(); ++k) powers[i].push_back(powers[i].back() * coord[i]);
    }
    UniPoly out;
    for (const auto& [e, c] : p.terms())
        out += UniPoly(c) * powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
               powers[2][static_cast<std::size_t>(e[2])];
    return out;
}

/// Order of vanishing of p|_l at the chart's point at infinity.
inline int infinity_multiplicity(const HomForm& p, const HomForm& l) {
    UniPoly r = restrict_to_line(p, l);
    return r.is_zero() ? p.degree() : p.degree() - r.degree();
}

/// Division p = q * l + rem where rem is free of the variable solved for in line_chart order.
struct FormDivision {
    HomForm quotient;
    HomForm remainder;
};

inline FormDivision divide_by_linear(const HomForm& p, const HomForm& l) {
    Point abc = linear_coefficients(l);
    std::size_t v = !abc[2].is_zero() ? 2 : (!abc[1].is_zero() ? 1 : 0);
    if (abc[v].is_zero()) throw DivisionByZero();
    Eisenstein lead_inv = abc[v].inverse();
    HomForm rem = p;
    HomForm quo(p.degree() > 0 ? p.degree() - 1 : 0);
    if (p.degree() == 0) return {quo, rem};
    for (;;) {
        // Highest power of the eliminated variable first; terms introduced have a lower power.
        const std::pair<const Exponent, Eisenstein>* pick = nullptr;
        for (const auto& term : rem.terms())
            if (term.first[v] > 0 && (pick == nullptr || term.first[v] > pick->first[v])) pick = &term;
        if (pick == nullptr) break;
        Exponent e = pick->first;
        Eisenstein c = pick->second * lead_inv;
        --e[v];
        HomForm step = HomForm::monomial(e, c);
        quo += step;
        rem -= step * l;
    }
    return {quo, rem};
}

inline bool divisible_by_linear(const HomForm& p, const HomForm& l) {
    return divide_by_linear(p, l).remainder.is_zero();
}

/// Readable text such as "x^3-y^3" (not the wire format).
inline std::string to_string(const HomForm& f) {
    if (f.is_zero()) return "0";
    static constexpr std::array<char, 3> names{'x', 'y', 'z'};
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = to_string(c);
        if (!c.is_rational() && sgn(c.re()) != 0) cs = "(" + cs + ")";
        std::string mono;
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!mono.empty()) {
            if (cs == "1")
                cs.clear();
            else if (cs == "-1")
                cs = "-";
            else
                cs += "*";
        }
        if (!out.empty() && (cs.empty() || cs.front() != '-')) out += '+';
        out += cs + mono;
    }
    return out;
}

}  // namespace linarr
