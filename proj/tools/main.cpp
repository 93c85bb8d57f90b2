#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "capelli/parse.hpp"
#include "capelli/suite.hpp"

using namespace capelli;

namespace {

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (auto& item : raw) {
        std::size_t start = 0;
        while (start <= item.size()) {
            auto comma = item.find(',', start);
            auto piece = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!piece.empty()) out.push_back(piece);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

int do_run(SuiteConfig config, const std::vector<std::string>& suite, const std::string& signs) {
    config.selection = split_ids(suite);
    if (signs == "plus") config.signs = SignSelection::plus;
    else if (signs == "minus") config.signs = SignSelection::minus;
    else config.signs = SignSelection::both;

    std::string started = utc_timestamp();
    SuiteResult result;
    try {
        result = run_suite(config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    std::size_t failures = 0;
    for (auto& r : result.reports) {
        bool counted = report_counts_as_failure(r, config.strict_conditional);
        const char* tag = r.residual_is_zero ? "PASS" : counted ? "FAIL" : "COND";
        if (counted) ++failures;
        std::cout << tag << "  " << r.id << " " << r.params.dump() << "  " << r.wall_millis << " ms";
        if (r.conditional) std::cout << "  (conditional)";
        std::cout << "\n";
        if (!r.residual_is_zero) std::cout << "      " << r.residual_rendering.substr(0, 200) << "\n";
    }
    std::cout << result.reports.size() << " reports, " << failures << " failed";
    if (result.stopped_early) std::cout << ", stopped early";
    std::cout << "\n";
    if (config.json_path) {
        std::ofstream out(*config.json_path);
        if (!out) {
            std::cerr << "cannot write " << *config.json_path << "\n";
            return 2;
        }
        out << suite_json(config, result, started).dump(2) << "\n";
    }
    return result.passed ? 0 : 1;
}

int do_expand(const std::string& ring, const std::string& text) {
    static const std::regex gl(R"(gl([1-9])(x2)?)");
    std::smatch m;
    try {
        if (ring == "weyl") {
            std::cout << parse_weyl(text).to_string() << "\n";
        } else if (std::regex_match(ring, m, gl)) {
            std::size_t n = std::stoul(m[1]);
            auto alg = make_pbw_algebra(m[2].matched ? build_doubled_gln(n) : build_gln(n));
            std::cout << parse_pbw(text, alg).to_string() << "\n";
        } else if (ring == "swap:bar") {
            std::cout << parse_swap(text, psi_phi_table()).to_string() << "\n";
        } else if (ring == "swap:coronfact") {
            std::cout << parse_swap(text, psi_phi_nilpotent_table()).to_string() << "\n";
        } else {
            std::cerr << "unknown ring: " << ring << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for Capelli-type determinant identities"};
    app.require_subcommand(1);

    SuiteConfig config;
    std::vector<std::string> suite{"all"};
    std::string signs = "both";
    std::string json_path;
    auto* run = app.add_subcommand("run", "Run verifier suites");
    run->add_option("--suite", suite, "Verifier ids (comma separated) or all");
    run->add_option("--max-n", config.max_n, "Size cap (default 2, 3 with --extended)")->check(CLI::Range(1, 3));
    run->add_option("--signs", signs, "Correction sign")->check(CLI::IsMember({"plus", "minus", "both"}));
    run->add_option("--json", json_path, "Write the JSON report here");
    run->add_flag("--extended", config.extended, "Raise the default size cap to 3");
    run->add_flag("--strict-conditional", config.strict_conditional, "Let conditional reports fail the run");
    run->add_flag("--fail-fast", config.fail_fast, "Stop scheduling after the first failure");
    run->add_option("--workers", config.workers, "Worker threads (fallback NC_CAPELLI_WORKERS)")
        ->check(CLI::PositiveNumber);
    auto* list = app.add_subcommand("list", "List verifier ids");

    std::string ring = "weyl", text;
    auto* expand = app.add_subcommand("expand", "Print the normal form of an expression");
    expand->add_option("--ring", ring, "weyl, gl<n>, gl<n>x2, swap:bar or swap:coronfact");
    expand->add_option("expression", text, "Expression to expand")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list->parsed()) {
        for (auto& id : verifier_ids()) std::cout << id << "\n";
        return 0;
    }
    if (expand->parsed()) return do_expand(ring, text);
    if (!json_path.empty()) config.json_path = json_path;
    return do_run(config, suite, signs);
}
