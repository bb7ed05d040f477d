#pragma once

// Decompositions of an arrangement into three equal classes whose products span a pencil.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/linalg.hpp"
#include "linarr/milnor.hpp"

namespace linarr {

/// Three classes of lines with products F_i and coefficients lambda_i (lambda_1 = 1, all
/// nonzero) such that sum lambda_i F_i = 0. Classes are ordered by their smallest line.
struct PencilDecomposition {
    std::array<std::vector<std::size_t>, 3> classes;
    std::array<HomForm, 3> products;
    std::array<Eisenstein, 3> lambdas;

    /// lambda_i F_i, which sum to zero.
    std::array<HomForm, 3> scaled_products() const {
        return {lambdas[0] * products[0], lambdas[1] * products[1], lambdas[2] * products[2]};
    }

    /// Re-checks the identity by direct summation.
    bool verify() const {
        auto g = scaled_products();
        return (g[0] + g[1] + g[2]).is_zero();
    }
};

/// Largest arrangement the exhaustive search accepts.
inline constexpr std::size_t kMaxPencilSearchLines = 15;

/// If F_1, F_2, F_3 span a 2-dimensional space with a relation involving all three, returns
/// the relation normalized to lambda_1 = 1.
inline std::optional<std::array<Eisenstein, 3>> pencil_relation(const std::array<HomForm, 3>& f) {
    const int d = f[0].degree();
    std::vector<Exponent> monos = monomials_of_degree(d);
    Matrix m(monos.size(), 3);
    for (std::size_t k = 0; k < monos.size(); ++k)
        for (std::size_t i = 0; i < 3; ++i) m(k, i) = f[i].coeff(monos[k]);
    std::vector<Vector> kernel = null_space(m);
    if (kernel.size() != 1) return std::nullopt;
    const Vector& v = kernel.front();
    if (v[0].is_zero() || v[1].is_zero() || v[2].is_zero()) return std::nullopt;
    Eisenstein inv = v[0].inverse();
    return std::array<Eisenstein, 3>{1, v[1] * inv, v[2] * inv};
}

namespace detail {

/// Calls `visit` for every unordered partition of {0..r-1} into three classes of size r/3,
/// each class given as a bitmask; the class containing the smallest free line comes first.
inline void for_each_equal_partition(std::size_t r, const std::function<void(std::array<std::uint32_t, 3>)>& visit) {
    const std::size_t m = r / 3;
    const std::uint32_t all = r == 32 ? ~0U : ((1U << r) - 1U);
    // Adds `need` more lines from `pool` with index >= `from` to `chosen`.
    std::function<void(std::uint32_t, std::uint32_t, std::size_t, std::size_t, const std::function<void(std::uint32_t)>&)>
        grow = [&](std::uint32_t chosen, std::uint32_t pool, std::size_t from, std::size_t need,
                   const std::function<void(std::uint32_t)>& done) {
            if (need == 0) {
                done(chosen);
                return;
            }
            for (std::size_t i = from; i < r; ++i)
                if (pool & (1U << i)) grow(chosen | (1U << i), pool, i + 1, need - 1, done);
        };
    auto lowest = [](std::uint32_t mask) {
        std::size_t i = 0;
        while ((mask & (1U << i)) == 0) ++i;
        return i;
    };
    grow(1U, all & ~1U, 1, m - 1, [&](std::uint32_t a) {
        std::uint32_t rest = all & ~a;
        std::size_t b0 = lowest(rest);
        grow(1U << b0, rest & ~(1U << b0), b0 + 1, m - 1, [&](std::uint32_t b) {
            visit({a, b, all & ~a & ~b});
        });
    });
}

}  // namespace detail

/// Every decomposition of the arrangement into a reduced pencil, by exhaustive search over
/// the r! / ((r/3)!^3 3!) equal partitions.
inline std::vector<PencilDecomposition> find_pencils(const Arrangement& arr) {
    require_admissible(arr);
    const std::size_t r = arr.size();
    std::vector<PencilDecomposition> out;
    if (r == 0 || r % 3 != 0) return out;
    if (r > kMaxPencilSearchLines)
        throw DomainError("pencil search is limited to " + std::to_string(kMaxPencilSearchLines) + " lines");

    std::vector<HomForm> forms = arr.forms();
    std::map<std::uint32_t, HomForm> product_cache;
    auto product = [&](std::uint32_t mask) -> const HomForm& {
        auto it = product_cache.find(mask);
        if (it != product_cache.end()) return it->second;
        HomForm p = HomForm::constant(1);
        for (std::size_t i : detail::mask_to_indices(mask)) p *= forms[i];
        return product_cache.emplace(mask, std::move(p)).first->second;
    };

    detail::for_each_equal_partition(r, [&](std::array<std::uint32_t, 3> masks) {
        std::array<HomForm, 3> f{product(masks[0]), product(masks[1]), product(masks[2])};
        auto lambdas = pencil_relation(f);
        if (!lambdas) return;
        PencilDecomposition dec;
        for (std::size_t i = 0; i < 3; ++i) dec.classes[i] = detail::mask_to_indices(masks[i]);
        dec.products = std::move(f);
        dec.lambdas = *lambdas;
        if (!dec.verify()) throw Error("pencil relation failed re-verification");
        out.push_back(std::move(dec));
    });
    return out;
}

inline bool is_composed_of_reduced_pencil(const Arrangement& arr) { return !find_pencils(arr).empty(); }

inline std::size_t pencil_count(const Arrangement& arr) { return find_pencils(arr).size(); }

/// Partition as a set of classes, independent of the order and labels of the classes.
inline std::vector<std::vector<std::size_t>> canonical_partition(const PencilDecomposition& p) {
    std::vector<std::vector<std::size_t>> classes(p.classes.begin(), p.classes.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace linarr
