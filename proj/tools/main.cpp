// Command-line front end: analyze one family file, run named verification
// sweeps, export OBJ geometry for n <= 3.
//
// Exit codes: 0 = success / all assertions passed, 1 = a sweep found a
// counterexample, 2 = usage or input error. Standard output carries only
// JSON or OBJ payloads; diagnostics go to standard error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cubefam/cubefam.hpp"

namespace {

using cubefam::CheckReport;
using cubefam::Json;

int run_analyze(const std::string& path) {
    const cubefam::Family f = cubefam::load_family_file(path);
    std::cout << cubefam::analysis_report(f).dump(2) << "\n";
    return 0;
}

int run_export_obj(const std::string& path, const std::string& out_path) {
    const cubefam::Family f = cubefam::load_family_file(path);
    const std::string obj = cubefam::export_obj(f);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << obj;
    return 0;
}

CheckReport dispatch_check(const std::string& name, int n,
                           std::optional<std::uint32_t> samples,
                           std::uint64_t seed) {
    if (name == "theorem1") return cubefam::check_theorem1(n);
    if (name == "corollary1") return cubefam::check_corollary_eq1(n);
    if (name == "lemma-per-set") return cubefam::check_lemma_per_set(n);
    if (name == "prop-roots") return cubefam::check_prop_roots_phi(n);
    if (name == "prop-fa") return cubefam::check_prop_fa(n);
    if (name == "lemma33") return cubefam::check_lemma33(n);
    if (name == "intersections")
        return cubefam::check_intersections(n, samples.value_or(500), seed);
    if (name == "duality")
        return cubefam::check_duality(n, samples.value_or(10000), seed);
    if (name == "decomposition") return cubefam::check_decomposition(n);
    throw std::domain_error("unknown check \"" + name + "\"");
}

// The fixed battery behind "verify all", in dispatch order.
int run_verify_all(std::uint64_t seed) {
    const struct {
        const char* name;
        int n;
        std::optional<std::uint32_t> samples;
    } battery[] = {
        {"theorem1", 4, std::nullopt},      {"corollary1", 4, std::nullopt},
        {"lemma-per-set", 4, std::nullopt}, {"prop-roots", 4, std::nullopt},
        {"prop-fa", 4, std::nullopt},       {"lemma33", 5, std::nullopt},
        {"intersections", 5, 500},          {"duality", 3, std::nullopt},
        {"duality", 6, 10000},              {"decomposition", 4, std::nullopt},
    };
    Json reports = Json::array();
    bool ok = true;
    for (const auto& entry : battery) {
        const CheckReport rep =
            dispatch_check(entry.name, entry.n, entry.samples, seed);
        ok = ok && rep.passed();
        reports.push_back(cubefam::check_report_to_json(rep));
        std::cerr << entry.name << " n=" << entry.n << ": "
                  << (rep.passed() ? "ok" : "FAILED") << " (" << rep.families_tested
                  << " tested)\n";
    }
    std::cout << reports.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubical sets of set families: analysis, exact homology and "
                 "verification sweeps"};
    app.require_subcommand(1);

    std::string analyze_path;
    auto* analyze =
        app.add_subcommand("analyze", "print the JSON analysis of a family file");
    analyze->add_option("file", analyze_path, "family JSON file")->required();

    std::string check_name;
    std::optional<int> n;
    std::optional<std::uint32_t> samples;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run a named verification sweep");
    verify->add_option("check", check_name,
                       "one of: theorem1, corollary1, lemma-per-set, prop-roots, "
                       "prop-fa, lemma33, intersections, duality, decomposition, all")
        ->required();
    verify->add_option("--n", n, "ground set size (n_max for lemma33)");
    verify->add_option("--samples", samples, "sample count for randomized sweeps");
    verify->add_option("--seed", seed, "random seed for randomized sweeps");

    std::string export_path, export_out;
    auto* export_obj = app.add_subcommand(
        "export-obj", "write OBJ geometry for a family file (n <= 3)");
    export_obj->add_option("file", export_path, "family JSON file")->required();
    export_obj->add_option("--out", export_out, "output OBJ path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_path);
        if (*export_obj) return run_export_obj(export_path, export_out);
        if (check_name == "all") {
            if (n || samples) {
                std::cerr << "error: \"all\" runs the fixed battery; --n and "
                             "--samples are not accepted\n";
                return 2;
            }
            return run_verify_all(seed);
        }
        if (!n) {
            std::cerr << "error: verify requires --n\n";
            return 2;
        }
        const CheckReport rep = dispatch_check(check_name, *n, samples, seed);
        std::cout << cubefam::check_report_to_json(rep).dump(2) << "\n";
        return rep.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
