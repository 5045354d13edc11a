// SPDX-License-Identifier: Apache-2.0
//
// Job-file front end: a JSON job description names a ring, an ideal (either
// explicit generators or the k x k minors of a matrix), an optional ambient
// quotient, a command, and parameters.  parse_input validates the description
// and returns a JobSpec; run_command executes it and returns a Report whose
// JSON payload is byte-deterministic for a fixed spec (timings are reported
// as reduction-step counts, not wall-clock, so reruns of the same job emit
// identical bytes).  print_spec is the inverse of parse_input on valid specs:
// parse_input(print_spec(s)) == s.
//
// Exit codes: 0 success, 1 a verified property failed to hold, 2 the
// computation could not stabilize within budget/window, 3 malformed input.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigraded.hpp"
#include "io.hpp"

namespace ghilb {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Job description
// ---------------------------------------------------------------------------

struct MinorsSpec {
    int size = 0; // 0 means "not a minors ideal"
    std::vector<std::vector<std::string>> matrix;
    bool operator==(const MinorsSpec&) const = default;
};

struct JobSpec {
    std::vector<std::string> vars;
    std::uint32_t characteristic = 32003;
    std::vector<std::string> gens; // used when minors.size == 0
    MinorsSpec minors;
    std::vector<std::string> module; // generators of A; empty means A = 0
    std::string command;             // empty allowed: filled in by the driver
    std::string format = "text";     // "text" | "json"
    int tMax = -1;                   // -1: command default
    int sMax = -1;                   // -1: command default
    int k = 1;                       // section depth for the section command
    std::vector<unsigned long long> seeds;
    std::string qSpec = "m"; // "m" or comma-separated generator list
    bool operator==(const JobSpec&) const = default;
};

inline const std::vector<std::string>& cli_commands() {
    static const std::vector<std::string> cmds = {
        "series",      "jcoeffs",       "jmult",
        "spread",      "reduction",     "residual",
        "section",     "singh-check",   "bigraded-fit",
        "verify-prop24", "verify-invariance", "thm34-probe"};
    return cmds;
}

inline bool is_cli_command(const std::string& name) {
    const auto& cmds = cli_commands();
    return std::find(cmds.begin(), cmds.end(), name) != cmds.end();
}

// ---------------------------------------------------------------------------
// Semantic construction: turn a JobSpec into live algebra objects.  Throws
// std::invalid_argument (or parse_error) with a human-readable message on any
// problem; run_command maps those to exit code 3.
// ---------------------------------------------------------------------------

struct BuiltJob {
    RingPtr ring;
    Ideal I;
    Ideal A;
    Ideal q;
    ModuleSpec spec; // {I, A, d}
};

namespace detail {

inline Polynomial parse_checked(const RingPtr& ring, const std::string& text,
                                const char* what) {
    Polynomial f = parse_polynomial(ring, text);
    if (!f.is_homogeneous())
        throw std::invalid_argument(std::string(what) +
                                    ": non-homogeneous generator \"" + text + "\"");
    return f;
}

} // namespace detail

inline BuiltJob build_job(const JobSpec& js) {
    BuiltJob b;
    b.ring = make_ring(js.vars, js.characteristic);

    if (js.minors.size > 0) {
        std::vector<std::vector<Polynomial>> M;
        for (const auto& row : js.minors.matrix) {
            std::vector<Polynomial> prow;
            for (const std::string& entry : row)
                prow.push_back(detail::parse_checked(b.ring, entry, "matrix"));
            M.push_back(std::move(prow));
        }
        b.I = minors(js.minors.size, M, b.ring);
    } else {
        std::vector<Polynomial> gens;
        for (const std::string& g : js.gens)
            gens.push_back(detail::parse_checked(b.ring, g, "ideal"));
        b.I = Ideal::make(b.ring, std::move(gens));
    }
    if (b.I.is_zero())
        throw std::invalid_argument("ideal: no nonzero generators");

    std::vector<Polynomial> agens;
    for (const std::string& g : js.module)
        agens.push_back(detail::parse_checked(b.ring, g, "module"));
    b.A = Ideal::make(b.ring, std::move(agens));

    b.spec = make_module_spec(b.I, b.A);

    if (js.qSpec == "m") {
        b.q = maximal_ideal(b.ring);
    } else {
        std::vector<Polynomial> qgens;
        std::string cur;
        for (char c : js.qSpec + ",") {
            if (c == ',') {
                if (!cur.empty())
                    qgens.push_back(detail::parse_checked(b.ring, cur, "q"));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (qgens.empty())
            throw std::invalid_argument("q: no generators given");
        b.q = Ideal::make(b.ring, std::move(qgens));
    }
    return b;
}

// ---------------------------------------------------------------------------
// Parsing and printing job files
// ---------------------------------------------------------------------------

inline JobSpec parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("input is not valid JSON (byte " +
                                    std::to_string(e.byte) + "): " + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("input must be a JSON object");

    auto need_string_array = [](const json& a, const char* what) {
        std::vector<std::string> out;
        if (!a.is_array())
            throw std::invalid_argument(std::string(what) + " must be an array of strings");
        for (const auto& e : a) {
            if (!e.is_string())
                throw std::invalid_argument(std::string(what) + " must be an array of strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    };

    JobSpec spec;

    // --- ring ---
    if (!j.contains("ring") || !j["ring"].is_object())
        throw std::invalid_argument("missing \"ring\" object");
    const json& ring = j["ring"];
    spec.vars = need_string_array(ring.value("vars", json::array()), "ring.vars");
    if (spec.vars.empty())
        throw std::invalid_argument("ring.vars must name at least one variable");
    for (std::size_t i = 0; i < spec.vars.size(); ++i) {
        const std::string& v = spec.vars[i];
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw std::invalid_argument("ring.vars: \"" + v + "\" is not a valid identifier");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("ring.vars: \"" + v + "\" is not a valid identifier");
        for (std::size_t k2 = 0; k2 < i; ++k2)
            if (spec.vars[k2] == v)
                throw std::invalid_argument("ring.vars: duplicate variable \"" + v + "\"");
    }
    if (ring.contains("char")) {
        const json& c = ring["char"];
        if (!c.is_number_integer() || c.get<long long>() <= 0)
            throw std::invalid_argument("ring.char must be a positive integer");
        long long p = c.get<long long>();
        if (!is_prime(p))
            throw std::invalid_argument("ring.char must be prime, got " + std::to_string(p));
        spec.characteristic = static_cast<std::uint32_t>(p);
    }

    // --- ideal ---
    if (!j.contains("ideal") || !j["ideal"].is_object())
        throw std::invalid_argument("missing \"ideal\" object");
    const json& ideal = j["ideal"];
    const bool hasGens = ideal.contains("gens");
    const bool hasMinors = ideal.contains("minors");
    if (hasGens == hasMinors)
        throw std::invalid_argument("ideal must have exactly one of \"gens\" or \"minors\"");
    if (hasGens) {
        spec.gens = need_string_array(ideal["gens"], "ideal.gens");
        if (spec.gens.empty())
            throw std::invalid_argument("ideal.gens must be nonempty");
    } else {
        const json& mn = ideal["minors"];
        if (!mn.is_object() || !mn.contains("size") || !mn.contains("matrix"))
            throw std::invalid_argument("ideal.minors needs \"size\" and \"matrix\"");
        if (!mn["size"].is_number_integer() || mn["size"].get<long long>() < 1)
            throw std::invalid_argument("ideal.minors.size must be a positive integer");
        spec.minors.size = static_cast<int>(mn["size"].get<long long>());
        const json& mat = mn["matrix"];
        if (!mat.is_array() || mat.empty())
            throw std::invalid_argument("ideal.minors.matrix must be a nonempty array of rows");
        std::size_t width = 0;
        for (const auto& row : mat) {
            auto r = need_string_array(row, "ideal.minors.matrix rows");
            if (r.empty())
                throw std::invalid_argument("ideal.minors.matrix rows must be nonempty");
            if (width == 0) width = r.size();
            if (r.size() != width)
                throw std::invalid_argument("ideal.minors.matrix rows must all have the same length");
            spec.minors.matrix.push_back(std::move(r));
        }
        const std::size_t rows = spec.minors.matrix.size();
        if (static_cast<std::size_t>(spec.minors.size) > std::min(rows, width))
            throw std::invalid_argument("ideal.minors.size exceeds the matrix dimensions");
    }

    // --- module (optional) ---
    if (j.contains("module")) {
        const json& mod = j["module"];
        if (!mod.is_object() || !mod.contains("gens"))
            throw std::invalid_argument("module must be an object with a \"gens\" array");
        spec.module = need_string_array(mod["gens"], "module.gens");
    }

    // --- command (optional here; the driver may supply it) ---
    if (j.contains("command")) {
        if (!j["command"].is_string())
            throw std::invalid_argument("command must be a string");
        spec.command = j["command"].get<std::string>();
        if (!spec.command.empty() && !is_cli_command(spec.command))
            throw std::invalid_argument("unknown command \"" + spec.command + "\"");
    }

    // --- format (optional) ---
    if (j.contains("format")) {
        if (!j["format"].is_string())
            throw std::invalid_argument("format must be \"text\" or \"json\"");
        spec.format = j["format"].get<std::string>();
        if (spec.format != "text" && spec.format != "json")
            throw std::invalid_argument("format must be \"text\" or \"json\"");
    }

    // --- parameters (optional) ---
    if (j.contains("parameters")) {
        const json& par = j["parameters"];
        if (!par.is_object())
            throw std::invalid_argument("parameters must be an object");
        auto read_int = [&par](const char* name, int lo) -> std::optional<int> {
            if (!par.contains(name)) return std::nullopt;
            if (!par[name].is_number_integer())
                throw std::invalid_argument(std::string("parameters.") + name +
                                            " must be an integer");
            long long v = par[name].get<long long>();
            if (v < lo)
                throw std::invalid_argument(std::string("parameters.") + name +
                                            " must be >= " + std::to_string(lo));
            return static_cast<int>(v);
        };
        if (auto v = read_int("t_max", -1)) spec.tMax = *v;
        if (auto v = read_int("s_max", -1)) spec.sMax = *v;
        if (auto v = read_int("k", 0)) spec.k = *v;
        if (par.contains("seeds")) {
            if (!par["seeds"].is_array())
                throw std::invalid_argument("parameters.seeds must be an array of integers");
            for (const auto& s : par["seeds"]) {
                if (!s.is_number_integer() || s.get<long long>() < 0)
                    throw std::invalid_argument("parameters.seeds must be non-negative integers");
                spec.seeds.push_back(s.get<unsigned long long>());
            }
        }
        if (par.contains("q")) {
            if (!par["q"].is_string())
                throw std::invalid_argument("parameters.q must be a string");
            spec.qSpec = par["q"].get<std::string>();
        }
    }

    // Semantic validation: building the job catches unknown variables,
    // non-homogeneous generators, unit-ideal modules, and the like, so a
    // spec returned from here is known to be runnable.
    build_job(spec);
    return spec;
}

// Canonical one-line JSON form of a spec; all defaults are materialized so
// identical specs print identically and parse_input(print_spec(s)) == s.
inline std::string print_spec(const JobSpec& s) {
    json j;
    j["ring"] = {{"vars", s.vars}, {"char", s.characteristic}};
    if (s.minors.size > 0)
        j["ideal"] = {{"minors", {{"size", s.minors.size}, {"matrix", s.minors.matrix}}}};
    else
        j["ideal"] = {{"gens", s.gens}};
    j["module"] = {{"gens", s.module}};
    j["command"] = s.command;
    j["format"] = s.format;
    j["parameters"] = {{"t_max", s.tMax},
                       {"s_max", s.sMax},
                       {"k", s.k},
                       {"seeds", s.seeds},
                       {"q", s.qSpec}};
    return j.dump();
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Report {
    json data;              // full JSON payload (always filled)
    std::string text;       // human-readable rendering (always filled)
    int exitCode = 0;       // 0 ok / 1 check failed / 2 unstable / 3 input error
    std::string goldenKey;  // normalized-series line for --golden comparison
};

namespace detail {

inline const char* status_name(int exitCode) {
    switch (exitCode) {
        case 0: return "ok";
        case 1: return "check-failed";
        case 2: return "unstable";
        default: return "error";
    }
}

inline json series_json(const RationalSeries& s) {
    json o;
    if (s.numerator.empty()) {
        o["numerator"] = json::array();
        o["denomExponent"] = 0;
    } else {
        o["numerator"] = s.numerator;
        o["denomExponent"] = s.denomExponent;
    }
    return o;
}

inline std::string join_ll(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

inline json printed_gens(const Ideal& J) {
    json a = json::array();
    for (const Polynomial& g : J.gens()) a.push_back(print_polynomial(g));
    return a;
}

inline json printed_polys(const std::vector<Polynomial>& fs) {
    json a = json::array();
    for (const Polynomial& f : fs) a.push_back(print_polynomial(f));
    return a;
}

// Shared payload for any command that ends in a generalized series fit.
// Returns the normalized series text when the fit is stable ("" otherwise)
// and appends a "W = 0" note for the zero series.
inline std::string fill_series_result(json& r, const GeneralizedHilbertData& data,
                                      std::vector<std::string>& notes) {
    r["d"] = data.d;
    r["epsilon"] = data.epsilon;
    r["cumulative"] = data.cumulative;
    r["stable"] = data.stable;
    r["message"] = data.message;
    if (!data.stable) return "";
    RationalSeries norm = data.series.normalize();
    r["series"] = series_json(data.series);
    r["seriesText"] = format_series(data.series);
    r["normalized"] = series_json(norm);
    r["normalizedText"] = format_series(norm);
    r["jCoeffs"] = data.jCoeffs;
    r["r"] = data.r;
    r["stabilizationDegree"] = data.stabilizationDegree;
    r["fitWindow"] = json::array({data.fitWindow.first, data.fitWindow.second});
    if (norm.is_zero()) notes.push_back("W = 0: the torsion filtration is eventually zero");
    return format_series(norm);
}

inline std::string series_text_block(const json& r) {
    std::string t;
    t += "epsilon:    " + join_ll(r["epsilon"].get<std::vector<long long>>()) + "\n";
    t += "cumulative: " + join_ll(r["cumulative"].get<std::vector<long long>>()) + "\n";
    if (r["stable"].get<bool>()) {
        t += "series (raw):        " + r["seriesText"].get<std::string>() + "\n";
        t += "series (normalized): " + r["normalizedText"].get<std::string>() + "\n";
        t += "j-coefficients: " + join_ll(r["jCoeffs"].get<std::vector<long long>>()) + "\n";
    } else {
        t += "series: not stabilized -- " + r["message"].get<std::string>() + "\n";
    }
    return t;
}

} // namespace detail

// ---------------------------------------------------------------------------
// run_command
// ---------------------------------------------------------------------------

inline Report run_command(const JobSpec& js) {
    Report rep;
    json& out = rep.data;
    out["schema"] = "1";
    out["command"] = js.command;
    out["input"] = json::parse(print_spec(js));

    std::vector<unsigned long long> seedsUsed;
    std::vector<std::string> notes;
    const long long steps0 = reduction_budget::total();
    std::string head, body;

    try {
        if (!is_cli_command(js.command))
            throw std::invalid_argument("unknown command \"" + js.command + "\"");

        BuiltJob b = build_job(js);
        const int nvars = static_cast<int>(js.vars.size());
        const int tmax = js.tMax >= 0 ? js.tMax : default_t_max(nvars);
        const int d = b.spec.d;
        const unsigned long long seed = js.seeds.empty() ? 1ULL : js.seeds[0];

        head += "command: " + js.command + "\n";
        head += "ring: F_" + std::to_string(js.characteristic) + "[";
        for (std::size_t i = 0; i < js.vars.size(); ++i)
            head += (i ? "," : "") + js.vars[i];
        head += "]\n";
        head += "I = " + detail::printed_gens(b.I).dump() + "\n";
        head += "A = " + (b.A.is_zero() ? std::string("0") : detail::printed_gens(b.A).dump()) + "\n";

        json r;

        if (js.command == "series" || js.command == "jcoeffs" || js.command == "jmult") {
            GeneralizedHilbertData data = generalized_series(b.spec, tmax);
            r["tMax"] = tmax;
            std::string key = detail::fill_series_result(r, data, notes);
            if (!data.stable) {
                rep.exitCode = 2;
                notes.push_back("series did not stabilize; rerun with a larger t_max");
            } else {
                rep.goldenKey = key;
                if (js.command == "jmult") r["jmult"] = data.jCoeffs.front();
            }
            body += "d = " + std::to_string(data.d) + ", t_max = " + std::to_string(tmax) + "\n";
            body += detail::series_text_block(r);
            if (data.stable && js.command == "jmult")
                body += "j-multiplicity: " + std::to_string(data.jCoeffs.front()) + "\n";
        } else if (js.command == "spread") {
            const int ell = analytic_spread(b.I);
            r["ell"] = ell;
            r["d"] = d;
            r["equalsDim"] = (ell == d);
            body += "analytic spread: " + std::to_string(ell) + " (d = " + std::to_string(d) +
                    ", equal: " + (ell == d ? "yes" : "no") + ")\n";
        } else if (js.command == "reduction") {
            seedsUsed = {seed};
            MinimalReduction mr = minimal_reduction(b.I, seed, tmax);
            r["ell"] = mr.ell;
            r["found"] = mr.found;
            r["reductionNumber"] = mr.reductionNumber;
            r["rMax"] = tmax;
            r["generators"] = detail::printed_polys(mr.combo.elements);
            r["matrix"] = mr.combo.matrix;
            json lens = json::array();
            for (const auto& L : mr.lengths)
                lens.push_back(L ? json(*L) : json(nullptr));
            r["lengths"] = lens;
            r["message"] = mr.message;
            rep.exitCode = mr.found ? 0 : 1;
            body += "analytic spread: " + std::to_string(mr.ell) + "\n";
            body += std::string("reduction found: ") + (mr.found ? "yes" : "no");
            if (mr.found)
                body += ", reduction number " + std::to_string(mr.reductionNumber);
            body += "\n";
            std::string lentxt;
            for (std::size_t i = 0; i < mr.lengths.size(); ++i) {
                if (i) lentxt += " ";
                lentxt += mr.lengths[i] ? std::to_string(*mr.lengths[i]) : std::string("inf");
            }
            body += "lengths lambda(I^{r+1}/J I^r): " + lentxt + "\n";
            if (!mr.message.empty()) body += mr.message + "\n";
        } else if (js.command == "residual") {
            seedsUsed = {seed};
            ResidualResult rr = residual_series(b.spec, seed, tmax);
            r["zeroModule"] = rr.zeroModule;
            r["ell"] = rr.ell;
            r["generators"] = detail::printed_polys(rr.xs.elements);
            r["matrix"] = rr.xs.matrix;
            r["residualModule"] = detail::printed_gens(rr.Abar);
            r["lengths"] = rr.lengths;
            r["stable"] = rr.stable;
            r["message"] = rr.message;
            RationalSeries norm = rr.series.normalize();
            r["series"] = detail::series_json(rr.series);
            r["seriesText"] = format_series(rr.series);
            r["normalized"] = detail::series_json(norm);
            r["normalizedText"] = format_series(norm);
            if (rr.zeroModule || norm.is_zero())
                notes.push_back("W = 0: the residual module vanishes");
            if (rr.zeroModule || rr.stable) {
                rep.goldenKey = format_series(norm);
            } else {
                rep.exitCode = 2;
                notes.push_back("residual series did not stabilize; rerun with a larger t_max");
            }
            body += "ell = " + std::to_string(rr.ell) +
                    (rr.zeroModule ? std::string(" (< d: residual module is zero)") : std::string()) + "\n";
            body += "lengths: " + detail::join_ll(rr.lengths) + "\n";
            body += "series (raw):        " + r["seriesText"].get<std::string>() + "\n";
            body += "series (normalized): " + r["normalizedText"].get<std::string>() + "\n";
            if (!rr.message.empty()) body += rr.message + "\n";
        } else if (js.command == "section") {
            seedsUsed = {seed};
            if (js.k > d)
                throw std::invalid_argument("parameters.k must be at most d = " + std::to_string(d));
            SectionResult cut = section(b.spec, js.k, seed);
            r["k"] = js.k;
            r["generators"] = detail::printed_polys(cut.xi.elements);
            r["matrix"] = cut.xi.matrix;
            r["dimensionDropped"] = cut.dimensionDropped;
            r["dBefore"] = d;
            r["dAfter"] = cut.spec.d;
            r["message"] = cut.message;
            body += "section depth k = " + std::to_string(js.k) + ", d: " + std::to_string(d) +
                    " -> " + std::to_string(cut.spec.d) +
                    (cut.dimensionDropped ? "" : " (dimension did not drop)") + "\n";
            if (!cut.dimensionDropped) {
                rep.exitCode = 1;
                notes.push_back("hyperplane section did not drop the dimension; try another seed");
            } else {
                json after;
                GeneralizedHilbertData data = generalized_series(cut.spec, tmax);
                after["tMax"] = tmax;
                std::string key = detail::fill_series_result(after, data, notes);
                if (data.stable) {
                    rep.goldenKey = key;
                } else {
                    rep.exitCode = 2;
                    notes.push_back("series of the section did not stabilize; rerun with a larger t_max");
                }
                body += detail::series_text_block(after);
                r["after"] = std::move(after);
            }
        } else if (js.command == "singh-check") {
            seedsUsed = {seed};
            Polynomial x = random_linear_combination(b.I.gens(), 1, seed).elements.front();
            const int smax = js.sMax >= 0 ? js.sMax : default_grid(d);
            const int tm = js.tMax >= 0 ? js.tMax : default_grid(d);
            SinghReport sr = singh_check(b.q, b.spec, x, smax, tm);
            r["x"] = print_polynomial(x);
            r["q"] = detail::printed_gens(b.q);
            r["sMax"] = sr.s_max;
            r["tMax"] = sr.t_max;
            r["allEqual"] = sr.allEqual;
            r["nonGeneric"] = sr.nonGeneric;
            r["lhs"] = sr.lhs;
            r["rhs"] = sr.rhs;
            r["correction"] = sr.correction;
            r["stabilizationT"] = sr.stabilizationT;
            r["betaFit"] = sr.betaFit;
            if (sr.betaFit) {
                r["beta"] = sr.beta;
                r["betaFrom"] = sr.betaFrom;
            }
            r["message"] = sr.message;
            rep.exitCode = sr.allEqual ? 0 : 1;
            body += "x = " + print_polynomial(x) + "\n";
            body += std::string("length identity holds on the grid: ") +
                    (sr.allEqual ? "yes" : "NO") + "\n";
            body += "correction stabilizes from t = " + std::to_string(sr.stabilizationT) + "\n";
            if (sr.betaFit)
                body += "beta coefficients: " + detail::join_ll(sr.beta) + " (from s = " +
                        std::to_string(sr.betaFrom) + ")\n";
            if (!sr.message.empty()) body += sr.message + "\n";
        } else if (js.command == "bigraded-fit") {
            const int smax = js.sMax >= 0 ? js.sMax : default_grid(d);
            const int tm = js.tMax >= 0 ? js.tMax : default_grid(d);
            BigradedTable T = bigraded_table(b.q, b.I, b.A, smax, tm);
            BivariateFit fit = fit_bivariate(T);
            r["d"] = T.d;
            r["sMax"] = T.s_max;
            r["tMax"] = T.t_max;
            r["q"] = detail::printed_gens(b.q);
            r["h10"] = T.h10;
            r["h11"] = T.h11;
            r["h00"] = T.h00;
            json fj;
            fj["ok"] = fit.ok;
            fj["degree"] = fit.degree;
            fj["message"] = fit.message;
            if (fit.ok) {
                fj["a"] = fit.a;
                fj["firstAgreement"] =
                    json::array({fit.firstAgreement.first, fit.firstAgreement.second});
            }
            r["fit"] = fj;
            if (fit.ok) {
                CiupercaData cd = ciuperca_coefficients(T, fit);
                json tuples = json::array();
                for (const auto& tup : cd.tuples)
                    tuples.push_back({{"i", tup.i}, {"values", tup.values}});
                r["coefficientTuples"] = tuples;
                r["a0d"] = cd.a0d;
                body += "polynomial fit of degree " + std::to_string(fit.degree) +
                        " agrees from (s,t) = (" + std::to_string(fit.firstAgreement.first) +
                        "," + std::to_string(fit.firstAgreement.second) + ")\n";
                body += "normalized coefficients a(i,j):\n";
                for (std::size_t i = 0; i < fit.a.size(); ++i)
                    body += "  i=" + std::to_string(i) + ": " + detail::join_ll(fit.a[i]) + "\n";
                body += "a(0,d) = " + std::to_string(cd.a0d) + "\n";
            } else {
                rep.exitCode = 2;
                notes.push_back("bivariate fit failed: " + fit.message +
                                "; rerun with larger s_max/t_max");
                body += "fit failed: " + fit.message + "\n";
            }
        } else if (js.command == "verify-prop24") {
            seedsUsed = {seed};
            CoefficientComparison cc = verify_prop24(b.spec, b.q, seed, js.sMax, js.tMax);
            r["ok"] = cc.ok;
            r["inconclusive"] = cc.inconclusive;
            r["attempts"] = cc.attempts;
            r["qUsed"] = detail::printed_gens(cc.qUsed);
            r["qDescription"] = cc.qDescription;
            r["normalizedCoefficients"] = cc.a;
            r["expected"] = cc.expected;
            r["message"] = cc.message;
            rep.exitCode = cc.ok ? 0 : (cc.inconclusive ? 2 : 1);
            if (cc.inconclusive)
                notes.push_back("no stable bivariate fit found; rerun with larger s_max/t_max");
            body += std::string("top-column coefficients match the series coefficients: ") +
                    (cc.ok ? "yes" : (cc.inconclusive ? "inconclusive" : "NO")) + "\n";
            body += "got:      " + detail::join_ll(cc.a) + "\n";
            body += "expected: " + detail::join_ll(cc.expected) + "\n";
            body += "q used: " + cc.qDescription + " (attempt " + std::to_string(cc.attempts) + ")\n";
            if (!cc.message.empty()) body += cc.message + "\n";
        } else if (js.command == "verify-invariance") {
            std::vector<unsigned long long> seeds =
                js.seeds.empty() ? std::vector<unsigned long long>{1, 2, 3} : js.seeds;
            seedsUsed = seeds;
            InvarianceReport ir = hyperplane_invariance_check(b.spec, seeds, tmax);
            r["d"] = ir.d;
            r["jBefore"] = ir.jBefore;
            r["allPreserved"] = ir.allPreserved;
            r["remarkHolds"] = ir.remarkHolds;
            r["message"] = ir.message;
            json per = json::array();
            for (const auto& sd : ir.perSeed) {
                json e;
                e["seed"] = sd.seed;
                e["dimensionDropped"] = sd.dimensionDropped;
                e["stable"] = sd.stable;
                e["jAfter"] = sd.jAfter;
                e["preserved"] = sd.preserved;
                e["delta"] = sd.delta;
                e["probePassed"] = sd.probePassed;
                e["message"] = sd.message;
                per.push_back(std::move(e));
            }
            r["perSeed"] = std::move(per);
            if (ir.perSeed.empty()) {
                rep.exitCode = 2;
                notes.push_back("base series did not stabilize; rerun with a larger t_max");
            } else {
                rep.exitCode = ir.allPreserved ? 0 : 1;
            }
            body += "j before: " + detail::join_ll(ir.jBefore) + "\n";
            for (const auto& sd : ir.perSeed) {
                body += "seed " + std::to_string(sd.seed) + ": j after: " +
                        detail::join_ll(sd.jAfter) +
                        (sd.preserved ? " (lower coefficients preserved" : " (NOT preserved") +
                        ", delta j_{d-1} = " + std::to_string(sd.delta) + ")\n";
            }
            body += std::string("all lower coefficients preserved: ") +
                    (ir.allPreserved ? "yes" : "NO") + "\n";
            body += std::string("colon probe + nonnegative delta: ") +
                    (ir.remarkHolds ? "yes" : "NO") + "\n";
            if (!ir.message.empty()) body += ir.message + "\n";
        } else if (js.command == "thm34-probe") {
            seedsUsed = {seed};
            std::vector<int> sValues;
            const int smax = js.sMax >= 0 ? js.sMax : 2;
            for (int s = 0; s <= smax; ++s) sValues.push_back(s);
            IntersectionProbe pr = thm34_probe(b.spec, b.q, sValues, seed);
            r["applicable"] = pr.applicable;
            r["sValues"] = sValues;
            r["message"] = pr.message;
            if (pr.applicable) {
                r["generators"] = detail::printed_polys(pr.xs.elements);
                r["matrix"] = pr.xs.matrix;
                r["equal"] = pr.equal;
                r["allEqual"] = pr.allEqual;
                rep.exitCode = pr.allEqual ? 0 : 1;
                body += std::string("intersection identity holds at all probed points: ") +
                        (pr.allEqual ? "yes" : "NO") + "\n";
            } else {
                throw std::invalid_argument("thm34-probe needs d >= 2: " + pr.message);
            }
            if (!pr.message.empty()) body += pr.message + "\n";
        }

        out["result"] = std::move(r);
    } catch (const budget_exceeded& e) {
        rep.exitCode = 2;
        notes.push_back(std::string(e.what()) +
                        " (set GHILB_BUDGET to raise the cap)");
        body += std::string("stopped: ") + e.what() + "\n";
    } catch (const infinite_length_error& e) {
        rep.exitCode = 2;
        notes.push_back(std::string(e.what()) +
                        "; the requested quotient is not finite-dimensional");
        body += std::string("stopped: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        rep.exitCode = 3;
        notes.push_back(e.what());
        body += std::string("input error: ") + e.what() + "\n";
    }

    out["seeds"] = seedsUsed;
    out["timings"] = {{"reductionSteps", reduction_budget::total() - steps0}};
    out["status"] = detail::status_name(rep.exitCode);
    out["notes"] = notes;

    rep.text = head + body;
    for (const std::string& n : notes) rep.text += "note: " + n + "\n";
    rep.text += "status: " + std::string(detail::status_name(rep.exitCode)) + "\n";
    return rep;
}

inline std::string emit_report(const Report& rep, const std::string& format) {
    if (format == "json") return rep.data.dump(2) + "\n";
    return rep.text;
}

} // namespace ghilb
