#pragma once

// Superabundance of the triple points and the invariants of the Milnor fiber it controls.

#include <cstddef>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/linalg.hpp"

namespace linarr {

/// Exponent vectors of all degree-d monomials in x, y, z (empty for d < 0), x-major descending.
inline std::vector<Exponent> monomials_of_degree(int d) {
    std::vector<Exponent> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

/// Rows: points; columns: monomials of degree d evaluated there.
inline Matrix evaluation_matrix(const std::vector<Point>& points, int degree) {
    std::vector<Exponent> monos = monomials_of_degree(degree);
    Matrix m(points.size(), monos.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j)
            m(i, j) = pow(points[i][0], static_cast<unsigned>(monos[j][0])) *
                      pow(points[i][1], static_cast<unsigned>(monos[j][1])) *
                      pow(points[i][2], static_cast<unsigned>(monos[j][2]));
    return m;
}

/// Failure s of the triple points to impose independent conditions on curves of degree
/// 2r/3 - 3. Zero when 3 does not divide r.
inline std::size_t superabundance(const Arrangement& arr) {
    require_admissible(arr);
    const std::size_t r = arr.size();
    if (r % 3 != 0) return 0;
    std::vector<Point> triples;
    for (const auto& p : triple_points(intersection_points(arr))) triples.push_back(p.point);
    const int degree = static_cast<int>(2 * r / 3) - 3;
    if (triples.empty()) return 0;
    if (degree < 0) return triples.size();
    return triples.size() - rank(evaluation_matrix(triples, degree));
}

/// (t-1)^a (t^2+t+1)^b.
struct CharPoly {
    int exponent_t_minus_1 = 0;
    int exponent_cyclotomic3 = 0;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

inline std::string to_string(const CharPoly& p) {
    std::string out;
    if (p.exponent_t_minus_1 != 0) out = "(t-1)^" + std::to_string(p.exponent_t_minus_1);
    if (p.exponent_cyclotomic3 != 0) {
        if (!out.empty()) out += '*';
        out += "(t^2+t+1)^" + std::to_string(p.exponent_cyclotomic3);
    }
    return out.empty() ? "1" : out;
}

/// Expanded polynomial, mostly for checking degrees and roots.
inline UniPoly expand(const CharPoly& p) {
    return pow(UniPoly(std::vector<Eisenstein>{-1, 1}), static_cast<unsigned>(p.exponent_t_minus_1)) *
           pow(UniPoly(std::vector<Eisenstein>{1, 1, 1}), static_cast<unsigned>(p.exponent_cyclotomic3));
}

/// Characteristic polynomial with the classical (t-1)^{r-2} exponent.
inline CharPoly monodromy_char_poly(const Arrangement& arr) {
    if (arr.size() < 2) throw DomainError("characteristic polynomial needs at least two lines");
    std::size_t s = superabundance(arr);
    return {static_cast<int>(arr.size()) - 2, static_cast<int>(s)};
}

struct EigenspaceDims {
    std::size_t one = 0;
    std::size_t omega = 0;
    std::size_t omega_squared = 0;

    friend bool operator==(const EigenspaceDims&, const EigenspaceDims&) = default;
};

struct MilnorReport {
    std::size_t r = 0;
    std::size_t s = 0;
    CharPoly char_poly;
    std::size_t b1_milnor_fiber = 0;
    EigenspaceDims eigenspace_dims;
    std::size_t mw_rank = 0;
};

/// Collects s, the characteristic polynomial and the Betti data.
///
/// The eigenvalue-1 part of H^1 of the Milnor fiber is H^1 of the complement, of rank r - 1,
/// so b1 = (r - 1) + 2s. The characteristic polynomial keeps the exponent r - 2 of the
/// classical formula; both are reported.
inline MilnorReport milnor_report(const Arrangement& arr) {
    MilnorReport rep;
    rep.r = arr.size();
    rep.char_poly = monodromy_char_poly(arr);
    rep.s = static_cast<std::size_t>(rep.char_poly.exponent_cyclotomic3);
    const std::size_t nontrivial = rep.r % 3 == 0 ? rep.s : 0;
    rep.eigenspace_dims = {rep.r - 1, nontrivial, nontrivial};
    rep.b1_milnor_fiber = rep.eigenspace_dims.one + rep.eigenspace_dims.omega + rep.eigenspace_dims.omega_squared;
    rep.mw_rank = 2 * rep.s;
    return rep;
}

}  // namespace linarr
