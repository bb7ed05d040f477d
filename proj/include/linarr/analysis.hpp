#pragma once

// Whole-arrangement reports and the corpus cross-check behind the command line tool.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "linarr/io.hpp"

namespace linarr {

/// Process exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitDomainError = 2, kExitInconsistent = 3 };

struct AnalysisReport {
    std::string label;
    std::size_t r = 0;
    std::map<std::size_t, std::size_t> census;
    MilnorReport milnor;
    std::vector<PencilDecomposition> pencils;
    std::vector<CandidateResult> candidates;
    std::size_t resonance_pencil_components = 0;
    bool theorem_1_2_consistent = false;
};

inline AnalysisReport analyze(const Arrangement& arr) {
    require_admissible(arr);
    AnalysisReport rep;
    rep.label = arr.label();
    rep.r = arr.size();
    rep.census = point_census(intersection_points(arr));
    rep.milnor = milnor_report(arr);
    rep.pencils = find_pencils(arr);
    rep.candidates = check_candidates(arr, rep.pencils);
    rep.resonance_pencil_components = pencil_component_count(rep.candidates);
    rep.theorem_1_2_consistent = (rep.milnor.s > 0) == !rep.pencils.empty();
    return rep;
}

inline void to_json(json& j, const AnalysisReport& rep) {
    json census = json::object();
    for (const auto& [m, n] : rep.census) census[std::to_string(m)] = n;
    j = {{"label", rep.label},
         {"r", rep.r},
         {"point_census", census},
         {"milnor", rep.milnor},
         {"pencils", rep.pencils},
         {"pencil_count", rep.pencils.size()},
         {"resonance", {{"candidates", rep.candidates}, {"pencil_components", rep.resonance_pencil_components}}},
         {"theorem_1_2_consistent", rep.theorem_1_2_consistent}};
}

struct CrosscheckRow {
    std::string file;
    std::string label;
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t pencil_count = 0;
    std::size_t resonance_pencil_components = 0;
    bool theorem_1_2_consistent = false;
    bool census_consistent = false;  ///< resonance pencil components == pencil count
    CombinatorialType type;
};

struct CrosscheckSummary {
    std::vector<CrosscheckRow> rows;
    std::map<std::string, std::string> errors;  ///< file -> message
    std::vector<std::string> failures;          ///< failed assertions, human readable
    std::size_t equivalent_pairs = 0;

    bool consistent() const { return failures.empty(); }
};

inline CrosscheckRow crosscheck_row(const Arrangement& arr, std::string file) {
    AnalysisReport rep = analyze(arr);
    CrosscheckRow row;
    row.file = std::move(file);
    row.label = rep.label;
    row.r = rep.r;
    row.s = rep.milnor.s;
    row.pencil_count = rep.pencils.size();
    row.resonance_pencil_components = rep.resonance_pencil_components;
    row.theorem_1_2_consistent = rep.theorem_1_2_consistent;
    row.census_consistent = rep.resonance_pencil_components == rep.pencils.size();
    row.type = combinatorial_type(arr);
    return row;
}

/// Checks every row and every combinatorially equivalent pair of rows.
inline void crosscheck_assertions(CrosscheckSummary& summary) {
    for (const auto& row : summary.rows) {
        if (!row.theorem_1_2_consistent)
            summary.failures.push_back(row.file + ": s > 0 and pencil existence disagree");
        if (!row.census_consistent)
            summary.failures.push_back(row.file + ": resonance pencil components differ from pencil count");
    }
    for (std::size_t i = 0; i < summary.rows.size(); ++i)
        for (std::size_t j = i + 1; j < summary.rows.size(); ++j) {
            const auto& a = summary.rows[i];
            const auto& b = summary.rows[j];
            if (a.type.weak || b.type.weak || !(a.type == b.type)) continue;
            ++summary.equivalent_pairs;
            if (a.s != b.s || a.pencil_count != b.pencil_count)
                summary.failures.push_back(a.file + " and " + b.file + " are combinatorially equivalent but differ in s or pencils");
        }
}

/// Runs the analysis on every *.json file of a directory (sorted by name).
inline CrosscheckSummary crosscheck_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw FormatError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    CrosscheckSummary summary;
    for (const auto& f : files) {
        std::string name = f.filename().string();
        try {
            summary.rows.push_back(crosscheck_row(read_arrangement(f.string()), name));
        } catch (const std::exception& e) {
            summary.errors[name] = e.what();
        }
    }
    crosscheck_assertions(summary);
    return summary;
}

inline void to_json(json& j, const CrosscheckRow& row) {
    j = {{"file", row.file},
         {"label", row.label},
         {"r", row.r},
         {"s", row.s},
         {"pencil_count", row.pencil_count},
         {"resonance_pencil_components", row.resonance_pencil_components},
         {"theorem_1_2_consistent", row.theorem_1_2_consistent},
         {"census_consistent", row.census_consistent},
         {"combinatorial_type_weak", row.type.weak}};
}

inline void to_json(json& j, const CrosscheckSummary& s) {
    j = {{"rows", s.rows},
         {"errors", s.errors},
         {"failures", s.failures},
         {"equivalent_pairs", s.equivalent_pairs},
         {"consistent", s.consistent()}};
}

}  // namespace linarr
