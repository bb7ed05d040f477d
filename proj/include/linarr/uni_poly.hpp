#pragma once

// Univariate polynomials in t over Q(w).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linarr/eisenstein.hpp"

namespace linarr {

/// Dense polynomial, lowest degree first; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Eisenstein constant) {  // NOLINT(google-explicit-constructor)
        coeffs_.push_back(std::move(constant));
        trim();
    }
    UniPoly(long constant) : UniPoly(Eisenstein(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<Eisenstein> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The polynomial t.
    static UniPoly t() { return UniPoly(std::vector<Eisenstein>{0, 1}); }

    /// t - root.
    static UniPoly linear(const Eisenstein& root) { return UniPoly(std::vector<Eisenstein>{-root, 1}); }

    static UniPoly monomial(const Eisenstein& c, std::size_t degree) {
        std::vector<Eisenstein> coeffs(degree + 1);
        coeffs[degree] = c;
        return UniPoly(std::move(coeffs));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Eisenstein>& coeffs() const noexcept { return coeffs_; }

    Eisenstein coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Eisenstein(); }

    Eisenstein leading() const { return is_zero() ? Eisenstein() : coeffs_.back(); }

    Eisenstein operator()(const Eisenstein& x) const {
        Eisenstein acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * UniPoly(leading().inverse());
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Eisenstein> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Eisenstein(static_cast<long>(k));
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Eisenstein> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Eisenstein> coeffs_;
};

inline UniPoly pow(const UniPoly& p, unsigned exponent) {
    UniPoly result = 1;
    UniPoly base = p;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

inline DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<Eisenstein> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Eisenstein> quo(static_cast<std::size_t>(a.degree() - db + 1));
    Eisenstein lead_inv = b.leading().inverse();
    for (int k = a.degree() - db; k >= 0; --k) {
        Eisenstein c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

/// Exact quotient; throws when `b` does not divide `a`.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    DivMod qr = divmod(a, b);
    if (!qr.remainder.is_zero()) throw DomainError("inexact polynomial division");
    return qr.quotient;
}

inline bool divides(const UniPoly& b, const UniPoly& a) { return divmod(a, b).remainder.is_zero(); }

/// Monic gcd by the Euclidean algorithm.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Result of splitting p = v^3 * A with A free of factors of multiplicity >= 3.
struct CubeSplit {
    UniPoly cube_root;  ///< monic v
    UniPoly remainder;  ///< A, carrying the leading coefficient of p
};

/// Square-free factors p = c * prod_i P_i^i (Yun); entry i-1 holds the monic P_i.
inline std::vector<UniPoly> squarefree_factors(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("square-free decomposition of zero");
    std::vector<UniPoly> factors;
    UniPoly a = p.monic();
    if (a.is_constant()) return factors;
    UniPoly da = a.derivative();
    UniPoly b = uni_gcd(a, da);
    UniPoly c = exact_div(a, b);
    UniPoly d = exact_div(da, b) - c.derivative();
    while (!c.is_constant()) {
        UniPoly factor = uni_gcd(c, d);
        factors.push_back(factor);
        c = exact_div(c, factor);
        d = exact_div(d, factor) - c.derivative();
    }
    return factors;
}

inline CubeSplit squarefree_cube_split(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("cube split of the zero polynomial");
    std::vector<UniPoly> factors = squarefree_factors(p);
    UniPoly v = 1;
    UniPoly rest = p.leading();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        unsigned multiplicity = static_cast<unsigned>(i + 1);
        v *= pow(factors[i], multiplicity / 3);
        rest *= pow(factors[i], multiplicity % 3);
    }
    return {v, rest};
}

/// Human readable form such as "t^2-1" or "(1+w)*t+2"; not the wire format.
inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Eisenstein& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        if (!c.is_rational() && sgn(c.re()) != 0) cs = "(" + cs + ")";
        if (!out.empty() && cs.front() != '-') out += '+';
        if (k == 0) {
            out += cs;
            continue;
        }
        if (cs == "1")
            cs.clear();
        else if (cs == "-1")
            cs = "-";
        else
            cs += "*";
        out += cs + "t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace linarr
