// Command line front end: JSON in, deterministic JSON out.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "linarr/analysis.hpp"
#include "linarr/corpus.hpp"

namespace {

using linarr::json;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int fail(int code, const std::string& message, json extra = json::object()) {
    extra["error"] = message;
    emit(extra);
    std::cerr << "error: " << message << '\n';
    return code;
}

int cmd_analyze(const std::string& path) {
    linarr::Arrangement arr = linarr::read_arrangement(path);
    emit(linarr::analyze(arr));
    return linarr::kExitOk;
}

int cmd_pencils(const std::string& path) {
    linarr::Arrangement arr = linarr::read_arrangement(path);
    auto pencils = linarr::find_pencils(arr);
    emit({{"label", arr.label()}, {"pencil_count", pencils.size()}, {"pencils", pencils}});
    return linarr::kExitOk;
}

int cmd_resonance(const std::string& path, const std::string& vector_text) {
    linarr::Arrangement arr = linarr::read_arrangement(path);
    linarr::OSDegree2 os = linarr::build_os2(arr);
    json out = {{"label", arr.label()},
                {"r", arr.size()},
                {"relations", os.relations().rows()},
                {"quotient_rank", os.quotient_rank()}};
    if (!vector_text.empty()) {
        json parsed;
        try {
            parsed = json::parse(vector_text);
        } catch (const json::exception& e) {
            throw linarr::FormatError(std::string("--vector: ") + e.what());
        }
        auto a = linarr::decode<linarr::WeightVector>(parsed);
        std::size_t dim = linarr::resonance_kernel_dim(os, a);
        out["vector"] = a;
        out["kernel_dim"] = dim;
        out["resonant"] = dim >= 2;
    } else {
        auto pencils = linarr::find_pencils(arr);
        auto results = linarr::check_candidates(arr, pencils);
        out["candidates"] = results;
        out["pencil_components"] = linarr::pencil_component_count(results);
    }
    emit(out);
    return linarr::kExitOk;
}

linarr::PlaneRelation generation_base(const json& input, std::size_t pencil_index, std::vector<linarr::HomForm>& forms) {
    if (input.contains("lines")) {
        auto arr = linarr::decode<linarr::Arrangement>(input);
        auto pencils = linarr::find_pencils(arr);
        if (pencil_index >= pencils.size())
            throw linarr::DomainError("arrangement has " + std::to_string(pencils.size()) + " pencils, index " +
                                      std::to_string(pencil_index) + " requested");
        forms = arr.forms();
        return linarr::base_solution(pencils[pencil_index]);
    }
    if (input.contains("products")) return linarr::base_solution(linarr::decode<linarr::PencilDecomposition>(input));
    auto rel = linarr::relation_from_json(input);
    if (!std::holds_alternative<linarr::PlaneRelation>(rel))
        throw linarr::FormatError("generate expects an arrangement, a pencil, or a plane relation");
    return std::get<linarr::PlaneRelation>(rel);
}

template <typename Rel>
json degree_ledger(const std::vector<Rel>& rels) {
    json degrees = json::array();
    for (const auto& r : rels) degrees.push_back(r.solution_degree());
    return degrees;
}

int cmd_catalan(const std::string& sub, const std::string& path, std::size_t steps, std::size_t pencil_index) {
    json input = linarr::read_json_file(path);
    if (sub == "verify") {
        auto rel = linarr::relation_from_json(input);
        bool ok = std::visit([](const auto& r) { return linarr::verify_relation(r); }, rel);
        emit({{"valid", ok}});
        return linarr::kExitOk;
    }
    if (sub == "generate") {
        std::vector<linarr::HomForm> forms;
        json out;
        if (input.contains("univariate") && input.at("univariate").get<bool>()) {
            auto base = linarr::decode<linarr::UniRelation>(input);
            auto rels = linarr::generate_solutions(base, steps);
            out = {{"relations", rels}, {"degrees", degree_ledger(rels)}};
        } else {
            auto base = generation_base(input, pencil_index, forms);
            auto rels = linarr::generate_solutions(base, steps, forms);
            out = {{"relations", rels}, {"degrees", degree_ledger(rels)}};
        }
        // Three branch values of the pencil map: the solution group is End(E), of rank 2.
        out["base_pencil_mw_rank"] = 2;
        emit(out);
        return linarr::kExitOk;
    }
    if (sub == "descend") {
        auto rel = linarr::decode<linarr::UniRelation>(input);
        auto known = linarr::decode<std::vector<linarr::UniPoly>>(input.value("known_factors", json::array()));
        try {
            auto out = linarr::descend_step(rel, known);
            emit({{"relation", out},
                  {"coefficients_dependent", linarr::linearly_dependent(out.F)},
                  {"solution_degree", out.solution_degree()}});
        } catch (const linarr::DescentObstruction& e) {
            return fail(linarr::kExitDomainError, e.what(), {{"obstruction", {{"index", e.index()}, {"leftover", e.leftover()}}}});
        }
        return linarr::kExitOk;
    }
    throw linarr::FormatError("unknown catalan subcommand " + sub);
}

int cmd_crosscheck(const std::string& dir) {
    auto summary = linarr::crosscheck_directory(dir);
    emit(summary);
    return summary.consistent() ? linarr::kExitOk : linarr::kExitInconsistent;
}

int cmd_write_corpus(const std::string& dir) {
    std::filesystem::create_directories(dir);
    json written = json::array();
    for (const auto& arr : linarr::corpus::admissible_fixtures()) {
        std::filesystem::path file = std::filesystem::path(dir) / (arr.label() + ".json");
        std::ofstream(file) << json(arr).dump(2) << '\n';
        written.push_back(file.filename().string());
    }
    emit({{"written", written}});
    return linarr::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor fiber invariants, pencils, resonance and Catalan relations of line arrangements"};
    app.require_subcommand(1);

    std::string path;
    std::string vector_text;
    std::string catalan_sub;
    std::size_t steps = 1;
    std::size_t pencil_index = 0;

    auto* analyze = app.add_subcommand("analyze", "full report for an arrangement file");
    analyze->add_option("file", path, "arrangement JSON")->required();

    auto* pencils = app.add_subcommand("pencils", "pencil decompositions of an arrangement");
    pencils->add_option("file", path, "arrangement JSON")->required();

    auto* resonance = app.add_subcommand("resonance", "resonance candidates, or the kernel for one weight vector");
    resonance->add_option("file", path, "arrangement JSON")->required();
    resonance->add_option("--vector", vector_text, "weight vector as a JSON list of numbers");

    auto* catalan = app.add_subcommand("catalan", "quasi-toric relations");
    catalan->add_option("action", catalan_sub, "verify | generate | descend")
        ->required()
        ->check(CLI::IsMember({"verify", "generate", "descend"}));
    catalan->add_option("file", path, "relation, pencil or arrangement JSON")->required();
    catalan->add_option("--steps", steps, "doubling steps for generate")->check(CLI::PositiveNumber);
    catalan->add_option("--pencil", pencil_index, "pencil index when generating from an arrangement");

    auto* crosscheck = app.add_subcommand("crosscheck", "cross-check a directory of arrangements");
    crosscheck->add_option("dir", path, "corpus directory")->required();

    auto* corpus = app.add_subcommand("write-corpus", "write the built-in fixture corpus as JSON files");
    corpus->add_option("dir", path, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? linarr::kExitOk : linarr::kExitInputError;
    }

    try {
        if (*analyze) return cmd_analyze(path);
        if (*pencils) return cmd_pencils(path);
        if (*resonance) return cmd_resonance(path, vector_text);
        if (*catalan) return cmd_catalan(catalan_sub, path, steps, pencil_index);
        if (*crosscheck) return cmd_crosscheck(path);
        if (*corpus) return cmd_write_corpus(path);
    } catch (const linarr::MultiplicityViolation& e) {
        return fail(linarr::kExitDomainError, e.what(), {{"violation", e.point()}});
    } catch (const linarr::FormatError& e) {
        return fail(linarr::kExitInputError, e.what());
    } catch (const linarr::ParseError& e) {
        return fail(linarr::kExitInputError, e.what());
    } catch (const json::exception& e) {
        return fail(linarr::kExitInputError, e.what());
    } catch (const linarr::DomainError& e) {
        return fail(linarr::kExitDomainError, e.what());
    } catch (const linarr::Error& e) {
        return fail(linarr::kExitDomainError, e.what());
    }
    return linarr::kExitOk;
}
