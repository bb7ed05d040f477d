#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "linarr/analysis.hpp"
#include "linarr/corpus.hpp"
#include "linarr/io.hpp"

using linarr::Eisenstein;
using linarr::HomForm;
using linarr::json;
using linarr::UniPoly;
namespace corpus = linarr::corpus;
namespace fs = std::filesystem;

namespace {

const Eisenstein w = Eisenstein::omega();

class TempDir {
public:
    explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / ("linarr_io_" + name)) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

    void write(const std::string& file, const json& j) const { std::ofstream(path_ / file) << j.dump(2); }

private:
    fs::path path_;
};

}  // namespace

TEST(Json, EisensteinAndPolynomials) {
    json j = Eisenstein(linarr::Rational(1, 2), 3);
    EXPECT_EQ(j, "1/2+3*w");
    EXPECT_EQ(json("-w").get<Eisenstein>(), -w);
    EXPECT_THROW(json(3).get<Eisenstein>(), linarr::FormatError);

    HomForm f = HomForm::x() * HomForm::x() - w * HomForm::y() * HomForm::z();
    json jf = f;
    EXPECT_EQ(jf.at("degree"), 2);
    EXPECT_EQ(jf.at("terms").at(0).at("exp"), json::array({2, 0, 0}));
    EXPECT_EQ(jf.get<HomForm>(), f);

    UniPoly p = UniPoly::t() * UniPoly::t() - UniPoly(w);
    EXPECT_EQ(json(p).dump(), R"({"coeffs":["-w","0","1"]})");
    EXPECT_EQ(json(p).get<UniPoly>(), p);
}

TEST(Json, ArrangementRoundTrip) {
    for (const auto& arr : corpus::admissible_fixtures()) {
        json j = arr;
        auto back = j.get<linarr::Arrangement>();
        EXPECT_EQ(back.lines(), arr.lines());
        EXPECT_EQ(back.label(), arr.label());
        EXPECT_EQ(json(back).dump(), j.dump());
    }
}

TEST(Json, MalformedArrangements) {
    EXPECT_THROW(linarr::decode<linarr::Arrangement>(json::parse(R"({"label": "x"})")), linarr::FormatError);
    EXPECT_THROW(linarr::decode<linarr::Arrangement>(json::parse(R"({"lines": [["1","0"]]})")), linarr::FormatError);
    EXPECT_THROW(linarr::decode<linarr::Arrangement>(json::parse(R"({"lines": [["1","0","q"]]})")), linarr::FormatError);
    EXPECT_THROW(linarr::decode<linarr::Arrangement>(json::parse(R"({"lines": [[1,0,0]]})")), linarr::FormatError);
    EXPECT_THROW(linarr::decode<linarr::Arrangement>(json::parse(R"({"lines": [["1","0","0"],["2","0","0"]]})")),
                 linarr::DomainError);
}

TEST(Json, PencilAndRelationRoundTrip) {
    auto pencils = linarr::find_pencils(corpus::dual_hesse());
    for (const auto& p : pencils) {
        auto back = json(p).get<linarr::PencilDecomposition>();
        EXPECT_EQ(back.classes, p.classes);
        EXPECT_EQ(back.products, p.products);
        EXPECT_EQ(back.lambdas, p.lambdas);
    }
    json bad = pencils.front();
    bad["lambdas"][1] = "5";
    EXPECT_THROW(bad.get<linarr::PencilDecomposition>(), linarr::DomainError);

    auto rel = linarr::base_solution(pencils.front());
    auto any = linarr::relation_from_json(json(rel));
    ASSERT_TRUE(std::holds_alternative<linarr::PlaneRelation>(any));
    EXPECT_EQ(std::get<linarr::PlaneRelation>(any).F, rel.F);

    linarr::UniRelation u{{UniPoly::t(), UniPoly(1) - UniPoly::t(), UniPoly(-1)}, {UniPoly(1), UniPoly(1), UniPoly(1)}};
    json ju = u;
    EXPECT_EQ(ju.at("univariate"), true);
    auto uback = linarr::relation_from_json(ju);
    ASSERT_TRUE(std::holds_alternative<linarr::UniRelation>(uback));
    EXPECT_EQ(std::get<linarr::UniRelation>(uback).sol, u.sol);
    EXPECT_THROW(linarr::relation_from_json(json::parse(R"({"F": []})")), linarr::FormatError);
}

TEST(Json, MilnorReportKeys) {
    json j = linarr::milnor_report(corpus::dual_hesse());
    EXPECT_EQ(j.at("char_poly"), "(t-1)^7*(t^2+t+1)^2");
    EXPECT_EQ(j.at("mw_rank"), 4);
    EXPECT_EQ(j.at("b1_milnor_fiber"), 12);
    EXPECT_EQ(j.at("eigenspace_dims").at("w"), 2);
}

TEST(Analysis, ReportIsDeterministic) {
    auto a = json(linarr::analyze(corpus::dual_hesse())).dump();
    auto b = json(linarr::analyze(corpus::dual_hesse())).dump();
    EXPECT_EQ(a, b);
    json j = json::parse(a);
    EXPECT_EQ(j.at("pencil_count"), 4);
    EXPECT_EQ(j.at("point_census").at("3"), 12);
    EXPECT_EQ(j.at("theorem_1_2_consistent"), true);
    EXPECT_EQ(j.at("resonance").at("pencil_components"), 4);
}

TEST(Analysis, GenericSix) {
    auto rep = linarr::analyze(corpus::generic(6, 1));
    EXPECT_EQ(rep.milnor.s, 0U);
    EXPECT_TRUE(rep.pencils.empty());
    EXPECT_TRUE(rep.theorem_1_2_consistent);
}

TEST(Crosscheck, EmptyDirectory) {
    TempDir dir("empty");
    auto summary = linarr::crosscheck_directory(dir.path());
    EXPECT_TRUE(summary.rows.empty());
    EXPECT_TRUE(summary.consistent());
}

TEST(Crosscheck, ProjectiveTwinsAgree) {
    TempDir dir("twins");
    std::mt19937_64 rng(61);
    dir.write("a.json", corpus::dual_hesse());
    dir.write("b.json", linarr::proj_transform(corpus::dual_hesse(), corpus::random_invertible(rng, true)));
    dir.write("c.json", corpus::braid());
    dir.write("d.json", corpus::ceva2());
    dir.write("e.json", corpus::four_concurrent());
    std::ofstream(dir.path() / "f.json") << "{ not json";
    std::ofstream(dir.path() / "notes.txt") << "ignored";
    auto summary = linarr::crosscheck_directory(dir.path());
    EXPECT_EQ(summary.rows.size(), 4U);
    EXPECT_EQ(summary.errors.size(), 2U);
    EXPECT_EQ(summary.equivalent_pairs, 2U);
    EXPECT_TRUE(summary.consistent());
    EXPECT_EQ(summary.rows[0].s, summary.rows[1].s);
    EXPECT_EQ(summary.rows[0].pencil_count, 4U);
    EXPECT_EQ(summary.rows[1].pencil_count, 4U);
}

TEST(Crosscheck, AssertionsCatchDisagreement) {
    linarr::CrosscheckSummary summary;
    auto row = linarr::crosscheck_row(corpus::braid(), "braid.json");
    summary.rows.push_back(row);
    row.file = "tampered.json";
    row.s = 0;
    row.theorem_1_2_consistent = false;
    summary.rows.push_back(row);
    linarr::crosscheck_assertions(summary);
    EXPECT_FALSE(summary.consistent());
    EXPECT_EQ(summary.failures.size(), 2U);
}
