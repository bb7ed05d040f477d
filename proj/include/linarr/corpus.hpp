#pragma once

// Named arrangements used as fixtures, plus seeded random families.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/linalg.hpp"

namespace linarr::corpus {

inline Line line(long a, long b, long c) { return Line(a, b, c); }

/// Factors of (x^3 - y^3)(x^3 - z^3)(y^3 - z^3): 9 lines, 12 triple points.
inline Arrangement dual_hesse() {
    const Eisenstein roots[3] = {1, Eisenstein::omega(), Eisenstein::omega_squared()};
    std::vector<Line> lines;
    for (const auto& w : roots) lines.emplace_back(1, -w, 0);
    for (const auto& w : roots) lines.emplace_back(1, 0, -w);
    for (const auto& w : roots) lines.emplace_back(0, 1, -w);
    return {std::move(lines), "dual_hesse"};
}

/// The braid arrangement A3: x, y, z, x - y, x - z, y - z.
inline Arrangement braid() {
    return {{line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, -1, 0), line(1, 0, -1), line(0, 1, -1)}, "braid_a3"};
}

/// Factors of (x^2 - y^2)(x^2 - z^2)(y^2 - z^2).
inline Arrangement ceva2() {
    return {{line(1, -1, 0), line(1, 1, 0), line(1, 0, -1), line(1, 0, 1), line(0, 1, -1), line(0, 1, 1)}, "ceva_2"};
}

inline Arrangement concurrent_triple() { return {{line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)}, "concurrent_triple"}; }

inline Arrangement triangle() { return {{line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)}, "triangle"}; }

inline Arrangement four_concurrent() {
    return {{line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, -1, 0)}, "four_concurrent"};
}

/// Dual Hesse together with x, y, z: points of multiplicity 5.
inline Arrangement extended_ceva3() {
    Arrangement dh = dual_hesse();
    std::vector<Line> lines = dh.lines();
    lines.push_back(line(1, 0, 0));
    lines.push_back(line(0, 1, 0));
    lines.push_back(line(0, 0, 1));
    return {std::move(lines), "extended_ceva_3"};
}

/// Dual Hesse without the lines x - y, x - z, y - z.
inline Arrangement dual_hesse_minus_three() {
    const Arrangement dh = dual_hesse();
    const auto& all = dh.lines();
    return {{all[1], all[2], all[4], all[5], all[7], all[8]}, "dual_hesse_minus_three"};
}

inline Arrangement dual_hesse_minus_one() {
    std::vector<Line> lines = dual_hesse().lines();
    lines.pop_back();
    return {std::move(lines), "dual_hesse_minus_one"};
}

/// The Pappus configuration: A_i on y = 0, B_i on y = z, C_k = A_iB_j n A_jB_i, and the nine
/// lines through them.
inline Arrangement pappus() {
    const Point a[3] = {{0, 0, 1}, {1, 0, 1}, {3, 0, 1}};
    const Point b[3] = {{0, 1, 1}, {2, 1, 1}, {5, 1, 1}};
    auto join = [](const Point& p, const Point& q) { return Line(cross(p, q)); };
    auto meet = [](const Line& l, const Line& m) { return normalize_projective(cross(l.coeffs(), m.coeffs())); };
    std::vector<Line> lines{line(0, 1, 0), line(0, 1, -1)};
    Point c[3];
    const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int k = 0; k < 3; ++k) {
        int i = pairs[k][0], j = pairs[k][1];
        Line ab = join(a[i], b[j]);
        Line ba = join(a[j], b[i]);
        lines.push_back(ab);
        lines.push_back(ba);
        c[k] = meet(ab, ba);
    }
    lines.push_back(join(c[0], c[1]));
    return {std::move(lines), "pappus"};
}

/// Concurrent triple through [0:0:1] plus three further lines in general position.
inline Arrangement triple_plus_three() {
    return {{line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, 2, 5), line(3, -1, 7), line(2, 5, -11)},
            "triple_plus_three"};
}

/// Two concurrent triples, through [0:0:1] and through [1:1:1].
inline Arrangement two_triples() {
    return {{line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, -2, 1), line(2, 1, -3), line(1, 3, -4)},
            "two_triples"};
}

inline Arrangement braid_plus_line() {
    std::vector<Line> lines = braid().lines();
    lines.push_back(line(2, 3, 7));
    return {std::move(lines), "braid_plus_line"};
}

/// r random lines with small integer coefficients and only double points.
inline Arrangement generic(std::size_t r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-20, 20);
    std::vector<Line> lines;
    while (lines.size() < r) {
        Point c{coeff(rng), coeff(rng), coeff(rng)};
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
        Line cand(c);
        if (std::find(lines.begin(), lines.end(), cand) != lines.end()) continue;
        lines.push_back(cand);
        Arrangement trial(lines, "");
        for (const auto& p : intersection_points(trial))
            if (p.multiplicity() > 2) {
                lines.pop_back();
                break;
            }
    }
    return {std::move(lines), "generic_" + std::to_string(r) + "_seed" + std::to_string(seed)};
}

/// Random invertible 3x3 matrix with small entries; Eisenstein entries when `use_omega`.
inline Matrix random_invertible(std::mt19937_64& rng, bool use_omega = false) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (;;) {
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = use_omega ? Eisenstein(coeff(rng), coeff(rng)) : Eisenstein(coeff(rng));
        if (!determinant3(m).is_zero()) return m;
    }
}

/// Arrangements with multiplicities <= 3 that make up the shipped corpus.
inline std::vector<Arrangement> admissible_fixtures() {
    std::mt19937_64 rng(7);
    std::vector<Arrangement> out{dual_hesse(),        braid(),           ceva2(),           concurrent_triple(),
                                 triangle(),          pappus(),          triple_plus_three(), two_triples(),
                                 braid_plus_line(),   dual_hesse_minus_one(), dual_hesse_minus_three(),
                                 generic(6, 1),       generic(9, 2),     generic(12, 3)};
    auto image = [&](const Arrangement& a, const std::string& suffix, bool use_omega) {
        Arrangement t = proj_transform(a, random_invertible(rng, use_omega));
        return Arrangement(t.lines(), a.label() + suffix);
    };
    out.push_back(image(dual_hesse(), "_pgl", true));
    out.push_back(image(braid(), "_pgl", false));
    out.push_back(image(concurrent_triple(), "_pgl", false));
    out.push_back(image(pappus(), "_pgl", false));
    return out;
}

/// Fixtures that violate the multiplicity bound.
inline std::vector<Arrangement> inadmissible_fixtures() { return {four_concurrent(), extended_ceva3()}; }

}  // namespace linarr::corpus
