#pragma once

// Exact arithmetic in Q and in the Eisenstein field Q(w), w^2 + w + 1 = 0.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "linarr/errors.hpp"

namespace linarr {

/// Arbitrary precision rational. GMP keeps it canonical: reduced, denominator > 0.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

namespace detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Reads `int ("/" positive-int)?` starting at `pos`; the sign has already been consumed.
inline Rational read_unsigned_rational(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected digits", pos);
    mpz_class num(std::string(text.substr(start, pos - start)), 10);
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        if (pos == dstart) throw ParseError("expected denominator digits", pos);
        den = mpz_class(std::string(text.substr(dstart, pos - dstart)), 10);
        if (den == 0) throw ParseError("zero denominator", dstart);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Parses the rational grammar `[+-]? int ("/" int)?`.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    Rational q = detail::read_unsigned_rational(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    return negative ? Rational(-q) : q;
}

/// Element re + wc*w of Q(w).
///
/// Values are always stored in the reduced basis {1, w}; products fold w^2 = -1 - w,
/// so equality is component-wise.
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational re, Rational wc) : re_(std::move(re)), wc_(std::move(wc)) {}

    static Eisenstein omega() { return {0, 1}; }
    static Eisenstein omega_squared() { return {-1, -1}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& wc() const noexcept { return wc_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(wc_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(wc_) == 0; }
    bool is_rational() const { return sgn(wc_) == 0; }

    /// Galois conjugate, i.e. complex conjugation: w -> w^2 = -1 - w.
    Eisenstein conj() const { return {re_ - wc_, -wc_}; }

    /// a^2 - ab + b^2, the field norm down to Q.
    Rational norm() const { return re_ * re_ - re_ * wc_ + wc_ * wc_; }

    Eisenstein inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rational n = norm();
        Eisenstein c = conj();
        return {c.re_ / n, c.wc_ / n};
    }

    Eisenstein operator-() const { return {-re_, -wc_}; }

    Eisenstein& operator+=(const Eisenstein& o) {
        re_ += o.re_;
        wc_ += o.wc_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o) {
        re_ -= o.re_;
        wc_ -= o.wc_;
        return *this;
    }
    Eisenstein& operator*=(const Eisenstein& o) {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
        Rational bd = wc_ * o.wc_;
        Rational re = re_ * o.re_ - bd;
        Rational wc = re_ * o.wc_ + wc_ * o.re_ - bd;
        re_ = std::move(re);
        wc_ = std::move(wc);
        return *this;
    }
    Eisenstein& operator/=(const Eisenstein& o) { return *this *= o.inverse(); }

    friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
    friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
    friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
    friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }

    friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
        return a.re_ == b.re_ && a.wc_ == b.wc_;
    }

    /// Arbitrary but fixed total order (lexicographic on (re, wc)), for use as map keys.
    friend std::strong_ordering operator<=>(const Eisenstein& a, const Eisenstein& b) {
        int c = cmp(a.re_, b.re_);
        if (c == 0) c = cmp(a.wc_, b.wc_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational re_{0};
    Rational wc_{0};
};

enum class ArithOp { add, sub, mul, div };

inline Eisenstein eis_arith(const Eisenstein& x, const Eisenstein& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw Error("unknown arithmetic operation");
}

inline Eisenstein pow(Eisenstein base, unsigned exponent) {
    Eisenstein result = 1;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

/// True for 1, w and w^2.
inline bool is_cube_root_of_unity(const Eisenstein& z) {
    return z.is_one() || z == Eisenstein::omega() || z == Eisenstein::omega_squared();
}

/// Canonical text form, e.g. "0", "-3/2", "w", "1/2-w", "2+3/4*w".
inline std::string to_string(const Eisenstein& z) {
    const Rational& a = z.re();
    const Rational& b = z.wc();
    if (sgn(b) == 0) return a.get_str();
    std::string out;
    if (sgn(a) != 0) out = a.get_str();
    Rational mag = abs(b);
    if (sgn(b) < 0)
        out += '-';
    else if (!out.empty())
        out += '+';
    if (mag != 1) out += mag.get_str() + "*";
    out += 'w';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Eisenstein& z) { return os << to_string(z); }

/// Parses `rat ((+|-) rat? "*"? "w")?`; a bare `[+-]? rat? "*"? "w"` is also accepted.
inline Eisenstein eis_parse(std::string_view text) {
    std::size_t pos = 0;
    auto at_end = [&] { return pos == text.size(); };
    auto read_sign = [&] {
        if (!at_end() && (text[pos] == '+' || text[pos] == '-')) return text[pos++] == '-' ? -1 : 1;
        return 0;
    };
    // Reads `rat? "*"? "w"` after a sign; returns the w coefficient magnitude.
    auto read_w_term = [&](bool have_coeff, Rational coeff) {
        if (have_coeff && !at_end() && text[pos] == '*') ++pos;
        if (at_end() || text[pos] != 'w') throw ParseError("expected 'w'", pos);
        ++pos;
        return have_coeff ? coeff : Rational(1);
    };

    if (text.empty()) throw ParseError("empty number", 0);
    int sign = read_sign();
    if (at_end()) throw ParseError("expected number", pos);

    if (text[pos] == 'w') {
        Rational wc = read_w_term(false, 0);
        if (!at_end()) throw ParseError("trailing characters", pos);
        return {0, sign < 0 ? Rational(-wc) : wc};
    }
    Rational lead = detail::read_unsigned_rational(text, pos);
    if (sign < 0) lead = -lead;
    if (at_end()) return {lead};
    if (text[pos] == '*' || text[pos] == 'w') {
        Rational wc = read_w_term(true, lead);
        if (!at_end()) throw ParseError("trailing characters", pos);
        return {0, wc};
    }
    int wsign = read_sign();
    if (wsign == 0) throw ParseError("expected '+' or '-'", pos);
    Rational wc = 1;
    if (!at_end() && detail::is_digit(text[pos]))
        wc = read_w_term(true, detail::read_unsigned_rational(text, pos));
    else
        wc = read_w_term(false, 0);
    if (!at_end()) throw ParseError("trailing characters", pos);
    return {lead, wsign < 0 ? Rational(-wc) : wc};
}

}  // namespace linarr
