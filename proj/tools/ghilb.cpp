// SPDX-License-Identifier: Apache-2.0
//
// ghilb <command> --input <file> [--t-max N] [--s-max N] [--seed S]
//                 [--q <spec>] [--k N] [--format text|json] [--golden <file>]
//
// The input file is a JSON job description (see parse_input in
// ghilb/cli.hpp); the subcommand on the command line overrides the file's
// "command" field, and the flags override the corresponding parameters.
// GHILB_BUDGET overrides the per-computation reduction-step cap.
//
// Exit codes: 0 success, 1 check failed (including --golden mismatch),
// 2 budget or stabilization failure, 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ghilb/cli.hpp"

namespace {

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ok = true;
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Hilbert-Samuel functions of homogeneous ideals over F_p"};
    app.require_subcommand(1);

    std::string input, format, qspec, golden;
    int tmax = -1, smax = -1, kdepth = -1;
    long long seed = -1;

    const std::map<std::string, std::string> descriptions = {
        {"series", "generalized Hilbert series, raw and normalized"},
        {"jcoeffs", "normalized j-coefficients j_0..j_d"},
        {"jmult", "j-multiplicity j_0"},
        {"spread", "analytic spread of the ideal"},
        {"reduction", "search for a minimal reduction and its reduction number"},
        {"residual", "series of the residual module along general elements"},
        {"section", "cut by general hyperplanes and refit the series"},
        {"singh-check", "inductive length identity for a general element of I"},
        {"bigraded-fit", "bigraded length table and its polynomial fit"},
        {"verify-prop24", "compare fitted top-column coefficients with the series"},
        {"verify-invariance", "lower j-coefficients under hyperplane sections"},
        {"thm34-probe", "intersection identity for partial systems of general elements"},
    };

    for (const std::string& name : ghilb::cli_commands()) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--input", input, "JSON job description")->required();
        sub->add_option("--t-max", tmax, "largest degree t to compute");
        sub->add_option("--s-max", smax, "largest index s to compute");
        sub->add_option("--seed", seed, "seed for general-element choices");
        sub->add_option("--q", qspec, "q ideal: \"m\" or comma-separated generators");
        sub->add_option("--k", kdepth, "section depth (section command)");
        sub->add_option("--format", format, "output format: text or json");
        sub->add_option("--golden", golden, "file holding the expected normalized series");
    }

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    if (const char* env = std::getenv("GHILB_BUDGET")) {
        char* end = nullptr;
        long long cap = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || cap <= 0) {
            std::cerr << "input error: GHILB_BUDGET must be a positive integer\n";
            return 3;
        }
        ghilb::reduction_budget::set_cap(cap);
    }

    bool ok = false;
    const std::string text = read_file(input, ok);
    if (!ok) {
        std::cerr << "input error: cannot open input file: " << input << "\n";
        return 3;
    }

    ghilb::JobSpec spec;
    try {
        spec = ghilb::parse_input(text);
        spec.command = sub->get_name();
        if (sub->count("--t-max")) spec.tMax = tmax;
        if (sub->count("--s-max")) spec.sMax = smax;
        if (sub->count("--seed")) {
            if (seed < 0) throw std::invalid_argument("--seed must be non-negative");
            spec.seeds = {static_cast<unsigned long long>(seed)};
        }
        if (sub->count("--q")) spec.qSpec = qspec;
        if (sub->count("--k")) {
            if (kdepth < 0) throw std::invalid_argument("--k must be non-negative");
            spec.k = kdepth;
        }
        if (sub->count("--format")) {
            if (format != "text" && format != "json")
                throw std::invalid_argument("--format must be \"text\" or \"json\"");
            spec.format = format;
        }
        if (!golden.empty() && sub->get_name() != "series" &&
            sub->get_name() != "residual" && sub->get_name() != "section")
            throw std::invalid_argument("--golden only applies to series, residual, and section");
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    }

    ghilb::Report rep = ghilb::run_command(spec);
    std::cout << ghilb::emit_report(rep, spec.format);

    if (!golden.empty()) {
        bool gok = false;
        const std::string expected = read_file(golden, gok);
        if (!gok) {
            std::cerr << "input error: cannot open golden file: " << golden << "\n";
            return 3;
        }
        if (rep.goldenKey.empty()) {
            std::cerr << "golden: no stabilized series to compare against " << golden << "\n";
            return rep.exitCode != 0 ? rep.exitCode : 2;
        }
        const std::string actual = rep.goldenKey + "\n";
        if (actual == expected) {
            std::cerr << "golden: match (" << golden << ")\n";
        } else {
            std::cerr << "golden: MISMATCH (" << golden << ")\n"
                      << "  expected: " << expected << "  actual:   " << actual;
            return rep.exitCode != 0 ? rep.exitCode : 1;
        }
    }
    return rep.exitCode;
}
