#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "linarr/corpus.hpp"
#include "linarr/milnor.hpp"
#include "oracles.hpp"

using linarr::Eisenstein;
namespace corpus = linarr::corpus;

namespace {

/// |S| - rank of cubic-or-whatever evaluation, built without the library's monomial helpers.
std::size_t superabundance_oracle(const linarr::Arrangement& arr) {
    const int r = static_cast<int>(arr.size());
    if (r % 3 != 0) return 0;
    std::vector<linarr::Point> s;
    for (const auto& p : linarr::intersection_points(arr))
        if (p.multiplicity() == 3) s.push_back(p.point);
    const int d = 2 * r / 3 - 3;
    if (d < 0) return s.size();
    std::vector<std::vector<Eisenstein>> rows;
    for (const auto& p : s) {
        std::vector<Eisenstein> row;
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                Eisenstein v = 1;
                for (int k = 0; k < i; ++k) v *= p[0];
                for (int k = 0; k < j; ++k) v *= p[1];
                for (int k = 0; k < d - i - j; ++k) v *= p[2];
                row.push_back(v);
            }
        rows.push_back(row);
    }
    return s.size() - oracle::rank_eisenstein(rows);
}

}  // namespace

TEST(Superabundance, DualHesse) {
    // 12 triple points impose only 10 conditions on cubics.
    EXPECT_EQ(superabundance_oracle(corpus::dual_hesse()), 2U);
    EXPECT_EQ(linarr::superabundance(corpus::dual_hesse()), 2U);
}

TEST(Superabundance, ConcurrentTriple) { EXPECT_EQ(linarr::superabundance(corpus::concurrent_triple()), 1U); }

TEST(Superabundance, Braid) {
    // Triple points [0:0:1], [0:1:0], [1:0:0], [1:1:1]; linear forms evaluated there.
    oracle::QMatrix m{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
    EXPECT_EQ(4 - oracle::rank_q(m), 1U);
    EXPECT_EQ(linarr::superabundance(corpus::braid()), 1U);
}

TEST(Superabundance, GenericIsZero) {
    EXPECT_EQ(linarr::superabundance(corpus::generic(6, 1)), 0U);
    EXPECT_EQ(linarr::superabundance(corpus::triangle()), 0U);
}

TEST(Superabundance, MatchesOracleOnCorpus) {
    for (const auto& arr : corpus::admissible_fixtures())
        EXPECT_EQ(linarr::superabundance(arr), superabundance_oracle(arr)) << arr.label();
}

TEST(Superabundance, RejectsHighMultiplicity) {
    EXPECT_THROW(linarr::superabundance(corpus::four_concurrent()), linarr::MultiplicityViolation);
}

TEST(Superabundance, BoundsAndDivisibility) {
    for (const auto& arr : corpus::admissible_fixtures()) {
        std::size_t s = linarr::superabundance(arr);
        std::size_t triples = linarr::triple_points(linarr::intersection_points(arr)).size();
        EXPECT_LE(s, triples) << arr.label();
        if (triples == 0 || arr.size() % 3 != 0) EXPECT_EQ(s, 0U) << arr.label();
    }
}

TEST(Superabundance, ProjectiveAndRelabelingInvariance) {
    std::mt19937_64 rng(31);
    for (const auto& arr : {corpus::dual_hesse(), corpus::braid(), corpus::pappus(), corpus::two_triples()}) {
        std::size_t s = linarr::superabundance(arr);
        for (int k = 0; k < 5; ++k) {
            EXPECT_EQ(linarr::superabundance(linarr::proj_transform(arr, corpus::random_invertible(rng, k % 2 == 0))), s);
            std::vector<std::size_t> order(arr.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            EXPECT_EQ(linarr::superabundance(linarr::reorder_lines(arr, order)), s);
        }
    }
}

TEST(CharPoly, Examples) {
    auto dh = linarr::monodromy_char_poly(corpus::dual_hesse());
    EXPECT_EQ(dh, (linarr::CharPoly{7, 2}));
    EXPECT_EQ(to_string(dh), "(t-1)^7*(t^2+t+1)^2");
    EXPECT_EQ(to_string(linarr::monodromy_char_poly(corpus::triangle())), "(t-1)^1");
    EXPECT_EQ(to_string(linarr::monodromy_char_poly(corpus::braid())), "(t-1)^4*(t^2+t+1)^1");
    EXPECT_EQ(linarr::expand(dh).degree(), 11);
    // w is a root exactly when s > 0.
    EXPECT_TRUE(linarr::expand(dh)(Eisenstein::omega()).is_zero());
    EXPECT_FALSE(linarr::expand(linarr::monodromy_char_poly(corpus::triangle()))(Eisenstein::omega()).is_zero());
}

TEST(MilnorReport, DualHesse) {
    auto rep = linarr::milnor_report(corpus::dual_hesse());
    EXPECT_EQ(rep.r, 9U);
    EXPECT_EQ(rep.s, 2U);
    EXPECT_EQ(rep.b1_milnor_fiber, 12U);
    EXPECT_EQ(rep.mw_rank, 4U);
    EXPECT_EQ(rep.eigenspace_dims, (linarr::EigenspaceDims{8, 2, 2}));
}

TEST(MilnorReport, Braid) {
    // b1 of the Milnor fiber of A3 is 7: 5 from H^1 of the complement plus 2 for the w, w^2 part.
    auto rep = linarr::milnor_report(corpus::braid());
    EXPECT_EQ(rep.r, 6U);
    EXPECT_EQ(rep.s, 1U);
    EXPECT_EQ(rep.b1_milnor_fiber, 7U);
    EXPECT_EQ(rep.mw_rank, 2U);
}

TEST(MilnorReport, GenericSix) {
    auto rep = linarr::milnor_report(corpus::generic(6, 1));
    EXPECT_EQ(rep.s, 0U);
    EXPECT_EQ(rep.b1_milnor_fiber, 5U);
    EXPECT_EQ(rep.mw_rank, 0U);
}

TEST(MilnorReport, InvariantsHoldOnCorpus) {
    for (const auto& arr : corpus::admissible_fixtures()) {
        auto rep = linarr::milnor_report(arr);
        EXPECT_EQ(rep.mw_rank, 2 * rep.s);
        EXPECT_EQ(rep.eigenspace_dims.omega, rep.eigenspace_dims.omega_squared);
        EXPECT_EQ(rep.eigenspace_dims.omega, arr.size() % 3 == 0 ? rep.s : 0U);
        EXPECT_EQ(rep.b1_milnor_fiber, rep.eigenspace_dims.one + 2 * rep.s);
    }
}
