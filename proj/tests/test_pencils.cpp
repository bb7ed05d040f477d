#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "linarr/corpus.hpp"
#include "linarr/milnor.hpp"
#include "linarr/pencils.hpp"
#include "oracles.hpp"

using linarr::Eisenstein;
using linarr::HomForm;
namespace corpus = linarr::corpus;

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

/// Every unordered partition into three classes of size r/3, by labelled assignment where
/// the first line of each class is smaller than the first line of the next.
std::vector<Partition> partitions_oracle(std::size_t r) {
    std::vector<Partition> out;
    const std::size_t m = r / 3;
    std::vector<int> label(r, -1);
    auto rec = [&](auto&& self, std::size_t i, std::array<std::size_t, 3> sizes, int opened) -> void {
        if (i == r) {
            Partition p(3);
            for (std::size_t k = 0; k < r; ++k) p[static_cast<std::size_t>(label[k])].push_back(k);
            out.push_back(p);
            return;
        }
        for (int c = 0; c <= std::min(opened, 2); ++c) {
            if (sizes[static_cast<std::size_t>(c)] == m) continue;
            label[i] = c;
            auto next = sizes;
            ++next[static_cast<std::size_t>(c)];
            self(self, i + 1, next, std::max(opened, c + 1));
        }
    };
    rec(rec, 0, {0, 0, 0}, 0);
    return out;
}

std::vector<Eisenstein> coefficient_row(const HomForm& f) {
    std::vector<Eisenstein> row;
    const int d = f.degree();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) row.push_back(f.coeff({i, j, d - i - j}));
    return row;
}

/// A true pencil: the three products have rank 2 and no two of them are proportional.
std::set<Partition> pencils_oracle(const linarr::Arrangement& arr) {
    std::set<Partition> out;
    if (arr.size() % 3 != 0) return out;
    auto forms = arr.forms();
    for (const auto& p : partitions_oracle(arr.size())) {
        std::vector<std::vector<Eisenstein>> rows;
        for (const auto& cls : p) {
            HomForm prod = HomForm::constant(1);
            for (std::size_t i : cls) prod = prod * forms[i];
            rows.push_back(coefficient_row(prod));
        }
        if (oracle::rank_eisenstein(rows) != 2) continue;
        bool pairwise = true;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b)
                if (oracle::rank_eisenstein({rows[a], rows[b]}) != 2) pairwise = false;
        if (pairwise) out.insert(p);
    }
    return out;
}

std::set<Partition> found(const linarr::Arrangement& arr) {
    std::set<Partition> out;
    for (const auto& p : linarr::find_pencils(arr)) out.insert(linarr::canonical_partition(p));
    return out;
}

std::set<Partition> relabel(const std::set<Partition>& ps, const std::vector<std::size_t>& order) {
    // Line k of the reordered arrangement is line order[k] of the original.
    std::vector<std::size_t> inverse(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;
    std::set<Partition> out;
    for (const auto& p : ps) {
        Partition q;
        for (const auto& cls : p) {
            std::vector<std::size_t> c;
            for (std::size_t i : cls) c.push_back(inverse[i]);
            std::sort(c.begin(), c.end());
            q.push_back(c);
        }
        std::sort(q.begin(), q.end());
        out.insert(q);
    }
    return out;
}

}  // namespace

TEST(Partitions, CountsMatchFormula) {
    std::size_t n6 = 0, n9 = 0, n12 = 0;
    linarr::detail::for_each_equal_partition(6, [&](auto) { ++n6; });
    linarr::detail::for_each_equal_partition(9, [&](auto) { ++n9; });
    linarr::detail::for_each_equal_partition(12, [&](auto) { ++n12; });
    EXPECT_EQ(n6, 15U);
    EXPECT_EQ(n9, 280U);
    EXPECT_EQ(n12, 5775U);
    EXPECT_EQ(partitions_oracle(9).size(), 280U);
}

TEST(FindPencils, DualHesse) {
    auto dh = corpus::dual_hesse();
    auto pencils = linarr::find_pencils(dh);
    EXPECT_EQ(pencils.size(), 4U);
    EXPECT_EQ(found(dh), pencils_oracle(dh));
    // The grouping by factors of x^3 - y^3, x^3 - z^3, y^3 - z^3.
    const HomForm x = HomForm::x(), y = HomForm::y(), z = HomForm::z();
    bool cubics = false;
    for (const auto& p : pencils) {
        if (p.products[0] == pow(x, 3) - pow(y, 3) && p.products[1] == pow(x, 3) - pow(z, 3) &&
            p.products[2] == pow(y, 3) - pow(z, 3)) {
            cubics = true;
            EXPECT_EQ(p.lambdas, (std::array<Eisenstein, 3>{1, -1, 1}));
        }
    }
    EXPECT_TRUE(cubics);
}

TEST(FindPencils, Braid) {
    auto pencils = linarr::find_pencils(corpus::braid());
    ASSERT_EQ(pencils.size(), 1U);
    // x(y - z) - y(x - z) + z(x - y) = 0.
    EXPECT_EQ(linarr::canonical_partition(pencils[0]), (Partition{{0, 5}, {1, 4}, {2, 3}}));
    EXPECT_EQ(found(corpus::braid()), pencils_oracle(corpus::braid()));
}

TEST(FindPencils, ConcurrentTriple) {
    auto pencils = linarr::find_pencils(corpus::concurrent_triple());
    ASSERT_EQ(pencils.size(), 1U);
    EXPECT_EQ(pencils[0].lambdas, (std::array<Eisenstein, 3>{1, 1, -1}));
    EXPECT_TRUE(linarr::is_composed_of_reduced_pencil(corpus::concurrent_triple()));
}

TEST(FindPencils, NegativeExamples) {
    EXPECT_TRUE(linarr::find_pencils(corpus::generic(6, 1)).empty());
    EXPECT_FALSE(linarr::is_composed_of_reduced_pencil(corpus::generic(9, 2)));
    EXPECT_EQ(linarr::pencil_count(corpus::triangle()), 0U);
    EXPECT_EQ(linarr::pencil_count(corpus::braid_plus_line()), 0U);
}

TEST(FindPencils, RejectsInadmissibleAndOversized) {
    EXPECT_THROW(linarr::find_pencils(corpus::four_concurrent()), linarr::MultiplicityViolation);
    EXPECT_THROW(linarr::find_pencils(corpus::generic(18, 4)), linarr::DomainError);
}

TEST(FindPencils, AgreesWithOracleOnCorpus) {
    for (const auto& arr : corpus::admissible_fixtures()) {
        if (arr.size() > 9) continue;
        EXPECT_EQ(found(arr), pencils_oracle(arr)) << arr.label();
    }
}

TEST(FindPencils, EveryDecompositionVerifies) {
    for (const auto& arr : corpus::admissible_fixtures())
        for (const auto& p : linarr::find_pencils(arr)) {
            EXPECT_TRUE(p.verify());
            EXPECT_EQ(p.lambdas[0], Eisenstein(1));
            auto forms = arr.forms();
            for (std::size_t c = 0; c < 3; ++c) {
                EXPECT_EQ(p.classes[c].size(), arr.size() / 3);
                HomForm prod = HomForm::constant(1);
                for (std::size_t i : p.classes[c]) prod = prod * forms[i];
                EXPECT_EQ(prod, p.products[c]);
            }
        }
}

TEST(FindPencils, InvariantUnderRelabelingAndTransforms) {
    std::mt19937_64 rng(41);
    for (const auto& arr : {corpus::dual_hesse(), corpus::braid(), corpus::pappus()}) {
        auto base = found(arr);
        std::vector<std::size_t> order(arr.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(found(linarr::reorder_lines(arr, order)), relabel(base, order)) << arr.label();
        EXPECT_EQ(found(linarr::proj_transform(arr, corpus::random_invertible(rng, true))), base) << arr.label();
    }
}

TEST(SuperabundanceVsPencils, PositiveIffPencil) {
    for (const auto& arr : corpus::admissible_fixtures()) {
        bool positive = linarr::superabundance(arr) > 0;
        EXPECT_EQ(positive, linarr::is_composed_of_reduced_pencil(arr)) << arr.label();
    }
}
