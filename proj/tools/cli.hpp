/*
   Copyright 2026 The ncomm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCOMM_TOOLS_CLI_HPP
#define NCOMM_TOOLS_CLI_HPP

// Command-line front end. run() takes the arguments without the program
// name and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 failed verification or disagreeing routes,
// 2 usage error. JSON documents carry "schema": "v1"; big integers are
// decimal strings.

#include "ncomm/combinatorics.hpp"
#include "ncomm/errors.hpp"
#include "ncomm/identities.hpp"
#include "ncomm/lambda.hpp"
#include "ncomm/random.hpp"
#include "ncomm/standard_poly.hpp"
#include "ncomm/super.hpp"
#include "ncomm/super_io.hpp"
#include "ncomm/weyl.hpp"
#include "ncomm/weyl_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncomm::cli {

using nlohmann::json;

enum class Format { text, json };

/// Parsed command line. Fields not used by a subcommand keep their defaults.
struct RunConfig {
    std::string subcommand;
    unsigned p = 0;
    std::optional<unsigned> N;
    unsigned k = 0;
    std::string method = "all";
    std::string check;
    std::string set;
    std::string suite;
    bool zero_first = false;
    unsigned weight = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool timing = false;
    std::vector<std::string> polys;
    Format format = Format::text;
    std::string output;
};

/// Parameter outside an operation's supported range.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

inline void require(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

inline std::string seq_string(const std::vector<unsigned>& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

// ---- lambda -------------------------------------------------------------

struct Route {
    const char* name;
    unsigned max_p;            // explicit --method limit
    unsigned max_p_in_all;     // limit when running --method all
    std::function<Integer(unsigned)> compute;
};

inline const std::vector<Route>& routes()
{
    static const std::vector<Route> table = {
        {"super", 6, 6, lambda_super},
        {"weyl", 6, 6,
         [](unsigned p) {
             Rational v = lambda_weyl(p);
             if (!is_integer(v))
                 throw VerificationFailure("weyl route produced non-integer " + v.get_str());
             return Integer(v.get_num());
         }},
        {"perm", 4, 4, lambda_perm_naive},
        {"perm-dp", 6, 6, lambda_perm_dp},
        {"matrix-rows", 4, 3, lambda_matrix_rows},
        {"matrix-cols", 4, 3, lambda_matrix_cols},
    };
    return table;
}

inline int cmd_lambda(const RunConfig& cfg, std::ostream& out)
{
    require(cfg.p >= 1 && cfg.p <= 6, "lambda: --p must be in 1..6");
    std::vector<const Route*> chosen;
    for (const Route& r : routes()) {
        if (cfg.method == "all") {
            if (cfg.p <= r.max_p_in_all)
                chosen.push_back(&r);
        } else if (cfg.method == r.name) {
            require(cfg.p <= r.max_p, std::string("lambda: method ") + r.name + " supports p <= " + std::to_string(r.max_p));
            chosen.push_back(&r);
        }
    }
    require(!chosen.empty(), "lambda: unknown method " + cfg.method);

    const std::optional<Integer> reference = reference_lambda(cfg.p);
    json results = json::array();
    bool agree = true;
    std::optional<Integer> first;
    std::ostringstream text;
    for (const Route* r : chosen) {
        auto start = Clock::now();
        json entry = {{"method", r->name}};
        try {
            Integer v = r->compute(cfg.p);
            const double ms = ms_since(start);
            entry["value"] = v.get_str();
            entry["elapsed_ms"] = ms;
            if (!first)
                first = v;
            if (v != *first || (reference && v != *reference) || v <= 0)
                agree = false;
            text << std::left << std::setw(12) << r->name << " " << v.get_str() << "  (" << std::fixed
                 << std::setprecision(3) << ms << " ms)\n";
        } catch (const VerificationFailure& e) {
            agree = false;
            entry["error"] = e.what();
            text << std::left << std::setw(12) << r->name << " FAILED: " << e.what() << "\n";
        }
        results.push_back(entry);
    }

    if (cfg.format == Format::json) {
        json doc;
        if (chosen.size() == 1 && cfg.method != "all") {
            doc = results[0];
            doc["schema"] = "v1";
            doc["p"] = cfg.p;
        } else {
            doc = {{"schema", "v1"}, {"p", cfg.p}, {"method", "all"}, {"results", results}, {"agree", agree}};
            if (first)
                doc["value"] = first->get_str();
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "lambda_" << cfg.p << "\n" << text.str();
        if (cfg.method == "all")
            out << (agree ? "all routes agree" : "DISAGREEMENT") << "\n";
    }
    return agree ? 0 : 1;
}

// ---- power --------------------------------------------------------------

inline int cmd_power(const RunConfig& cfg, std::ostream& out)
{
    require(cfg.p >= 1 && cfg.p <= 6, "power: --p must be in 1..6");
    require(cfg.k <= 2 * cfg.p + 2, "power: --k must be at most 2p+2");
    SuperOp x = power(cfg.p, cfg.k);
    if (cfg.format == Format::json) {
        json doc = to_json(x);
        doc["schema"] = "v1";
        doc["p"] = cfg.p;
        doc["k"] = cfg.k;
        out << doc.dump(2) << "\n";
    } else {
        out << "(a d^" << cfg.p << ")^" << cfg.k << " = " << to_string(x) << "\n";
    }
    return 0;
}

// ---- verify -------------------------------------------------------------

struct VerifyResult {
    bool passed = true;
    json details = json::object();
    json counterexample = nullptr;
    std::vector<std::string> lines;
};

inline void absorb(VerifyResult& r, const CheckReport& rep, const std::string& label)
{
    r.lines.push_back(label + ": " + (rep.passed ? "pass" : "FAIL") + " (" + std::to_string(rep.trials) + " trials)");
    if (!rep.passed && r.passed) {
        r.passed = false;
        r.counterexample = {{"case", label}, {"trial", *rep.failing_trial}, {"inputs", rep.witness}};
        for (const std::string& w : rep.witness)
            r.lines.push_back("  " + w);
    }
}

inline VerifyResult run_check(const RunConfig& cfg, std::size_t& trials)
{
    const unsigned p = cfg.p;
    VerifyResult r;
    const std::string& c = cfg.check;

    if (c == "s-zero") {
        require(p >= 1 && p <= 6, "verify s-zero: --p must be in 1..6");
        const unsigned N = cfg.N.value_or(2 * p + 1);
        require(N > 2 * p && N <= 16, "verify s-zero: need 2p < N <= 16");
        trials = cfg.trials ? cfg.trials : 50;
        absorb(r, check_sN_zero(p, N, trials, cfg.seed, cfg.threads), "s_" + std::to_string(N));
    } else if (c == "wronskian") {
        require(p >= 1 && p <= 3, "verify wronskian: --p must be in 1..3");
        trials = cfg.trials ? cfg.trials : 50;
        absorb(r, check_wronskian_formula(p, trials, cfg.seed, cfg.threads), "wronskian");
        r.details["lambda"] = lambda_perm_dp(p).get_str();
    } else if (c == "closure") {
        require(p >= 2 && p <= 4, "verify closure: --p must be in 2..4");
        std::vector<unsigned> Ns;
        if (cfg.N) {
            require(*cfg.N >= 2 && *cfg.N < 2 * p, "verify closure: need 2 <= N < 2p");
            Ns.push_back(*cfg.N);
        } else {
            for (unsigned N = 2; N < 2 * p; ++N)
                Ns.push_back(N);
        }
        json witnesses = json::array();
        for (unsigned N : Ns) {
            try {
                ClosureWitness w = closure_witness(p, N);
                witnesses.push_back({{"N", N}, {"degrees", w.degrees}, {"value", to_string(w.value)}});
                std::string args;
                for (unsigned d : w.degrees)
                    args += (args.empty() ? "" : ", ") + std::string("x^") + std::to_string(d) + " d^" + std::to_string(p);
                r.lines.push_back("N=" + std::to_string(N) + ": s_N(" + args + ") = " + to_string(w.value));
            } catch (const VerificationFailure& e) {
                r.lines.push_back("N=" + std::to_string(N) + ": no witness");
                if (r.passed)
                    r.counterexample = {{"case", "N=" + std::to_string(N)}, {"message", e.what()}};
                r.passed = false;
            }
        }
        r.details["witnesses"] = witnesses;
    } else if (c == "lcom" || c == "rcom" || c == "hanlon") {
        require(p >= 1 && p <= 2, "verify " + c + ": --p must be in 1..2");
        trials = cfg.trials ? cfg.trials : (p == 1 ? 50 : 10);
        NamedIdentity which = c == "lcom" ? NamedIdentity::lcom : c == "rcom" ? NamedIdentity::rcom : NamedIdentity::homotopical;
        absorb(r, check_named_identity(p, which, trials, cfg.seed, cfg.threads), c);
    } else if (c == "rtol") {
        const unsigned n = cfg.N.value_or(3);
        require(n == 2 || n == 3, "verify rtol: --N (arity n) must be 2 or 3");
        trials = cfg.trials ? cfg.trials : 10;
        absorb(r, lcom_rcom_relation_check(n, trials, cfg.seed, cfg.threads), "n=" + std::to_string(n));
    } else if (c == "rank") {
        require(p >= 1 && p <= 2, "verify rank: --p must be in 1..2");
        const unsigned d = cfg.N.value_or(2 * p);
        require(d >= 1 && d <= 4, "verify rank: --N (degree d) must be in 1..4");
        const std::size_t rank = multilinear_identity_rank(p, d, cfg.seed);
        const std::size_t full = factorial(d).get_ui();
        r.passed = rank == full;
        r.details["rank"] = rank;
        r.details["expected"] = full;
        r.lines.push_back("d=" + std::to_string(d) + ": rank " + std::to_string(rank) + " of " + std::to_string(full));
        if (!r.passed)
            r.counterexample = {{"case", "d=" + std::to_string(d)}, {"rank", rank}};
    } else if (c == "simplicity") {
        require(p >= 1 && p <= 3, "verify simplicity: --p must be in 1..3");
        std::vector<unsigned> ss;
        if (cfg.N) {
            require(*cfg.N <= 2 * p + 4, "verify simplicity: --N (exponent s) must be at most 2p+4");
            ss.push_back(*cfg.N);
        } else {
            for (unsigned s = 0; s <= 2 * p + 4; ++s)
                ss.push_back(s);
        }
        for (unsigned s : ss) {
            const bool ok = simplicity_generation_check(p, s);
            r.lines.push_back("s=" + std::to_string(s) + ": " + (ok ? "pass" : "FAIL"));
            if (!ok && r.passed)
                r.counterexample = {{"case", "s=" + std::to_string(s)}};
            r.passed = r.passed && ok;
        }
    } else {
        throw UsageError("verify: unknown check " + c);
    }
    return r;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    auto start = Clock::now();
    std::size_t trials = 0;
    VerifyResult r = run_check(cfg, trials);
    const double ms = ms_since(start);

    if (cfg.format == Format::json) {
        json doc = {{"schema", "v1"}, {"check", cfg.check}, {"p", cfg.p}, {"seed", cfg.seed}, {"trials", trials},
                    {"verdict", r.passed ? "pass" : "fail"}, {"counterexample", r.counterexample},
                    {"details", r.details}};
        if (cfg.N)
            doc["N"] = *cfg.N;
        if (cfg.timing)
            doc["elapsed_ms"] = ms;
        out << doc.dump(2) << "\n";
    } else {
        out << "verify " << cfg.check << " p=" << cfg.p << " seed=" << cfg.seed << "\n";
        for (const std::string& l : r.lines)
            out << "  " << l << "\n";
        out << (r.passed ? "PASS" : "FAIL");
        if (cfg.timing)
            out << " (" << std::fixed << std::setprecision(3) << ms << " ms)";
        out << "\n";
    }
    return r.passed ? 0 : 1;
}

// ---- mu-table -----------------------------------------------------------

inline int cmd_mu_table(const RunConfig& cfg, std::ostream& out)
{
    require(cfg.p >= 1 && cfg.p <= 6, "mu-table: --p must be in 1..6");
    bool ok = true;
    json rows = json::array();
    std::ostringstream text;
    text << std::left << std::setw(4) << "k" << std::setw(28) << "delta(k-1)" << "mu_k\n";
    for (unsigned k = 1; k <= 2 * cfg.p; ++k) {
        const SuperMonomial d = delta_closed(cfg.p, k - 1);
        const Integer m = mu(cfg.p, k);
        const Integer closed = mu_closed(cfg.p, k);
        ok = ok && m == closed;
        rows.push_back({{"k", k}, {"delta", d.indices()}, {"mu", m.get_str()}, {"mu_closed", closed.get_str()}});
        text << std::setw(4) << k << std::setw(28) << d.to_string() << m.get_str();
        if (m != closed)
            text << "  (closed form " << closed.get_str() << ")";
        text << "\n";
    }
    if (cfg.format == Format::json)
        out << json{{"schema", "v1"}, {"p", cfg.p}, {"rows", rows}, {"closed_form_agrees", ok}}.dump(2) << "\n";
    else
        out << text.str();
    return ok ? 0 : 1;
}

// ---- enumerate ----------------------------------------------------------

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out)
{
    json items = json::array();
    std::vector<std::string> lines;
    if (cfg.set == "E") {
        require(cfg.k <= 16 && cfg.weight <= 200, "enumerate E: --k <= 16 and --weight <= 200");
        for (const SuperMonomial& m : enumerate_E(cfg.k, cfg.weight, cfg.zero_first)) {
            items.push_back(m.indices());
            lines.push_back(m.to_string());
        }
    } else if (cfg.set == "G") {
        require(cfg.k >= 1 && cfg.k <= 12, "enumerate G: --k must be in 1..12");
        for (const IntSeq& s : enumerate_G(cfg.k)) {
            items.push_back(s);
            lines.push_back(seq_string(s));
        }
    } else if (cfg.set == "Mp") {
        require(cfg.p >= 1 && cfg.p <= 3, "enumerate Mp: --p must be in 1..3");
        for (const TriMatrix& m : enumerate_Mp(cfg.p)) {
            json rows = json::array();
            std::string line;
            for (unsigned i = 0; i < m.dim(); ++i) {
                rows.push_back(m.row(i));
                line += (i ? " " : "") + seq_string(m.row(i));
            }
            items.push_back(rows);
            std::string word;
            for (unsigned r : m.column_sums())
                word += std::to_string(r);
            lines.push_back(line + "  r=" + word);
        }
    } else {
        throw UsageError("enumerate: --set must be E, G or Mp");
    }
    if (cfg.format == Format::json) {
        out << json{{"schema", "v1"}, {"set", cfg.set}, {"count", items.size()}, {"items", items}}.dump() << "\n";
    } else {
        for (const std::string& l : lines)
            out << l << "\n";
        out << "# " << lines.size() << " item(s)\n";
    }
    return 0;
}

// ---- wronskian ----------------------------------------------------------

inline int cmd_wronskian(const RunConfig& cfg, std::ostream& out)
{
    require(!cfg.polys.empty() && cfg.polys.size() <= 16, "wronskian: give 1..16 polynomials with --polys");
    std::vector<Polynomial> us;
    for (const std::string& s : cfg.polys) {
        try {
            us.push_back(parse_polynomial(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("wronskian: ") + e.what());
        }
    }
    Polynomial w = wronskian(us);
    if (cfg.format == Format::json) {
        json polys = json::array();
        for (const Polynomial& u : us)
            polys.push_back(to_json(u));
        out << json{{"schema", "v1"}, {"polys", polys}, {"wronskian", to_json(w)}, {"text", to_string(w)}}.dump(2)
            << "\n";
    } else {
        out << "W = " << to_string(w) << "\n";
    }
    return 0;
}

// ---- bench --------------------------------------------------------------

inline int cmd_bench(const RunConfig& cfg, std::ostream& out)
{
    json rows = json::array();
    bool ok = true;
    if (cfg.suite == "perm") {
        for (unsigned p = 1; p <= 4; ++p) {
            auto t0 = Clock::now();
            Integer naive = lambda_perm_naive(p);
            const double naive_ms = ms_since(t0);
            auto t1 = Clock::now();
            Integer dp = lambda_perm_dp(p);
            const double dp_ms = ms_since(t1);
            ok = ok && naive == dp;
            rows.push_back({{"p", p}, {"value", dp.get_str()}, {"naive_ms", naive_ms}, {"dp_ms", dp_ms}});
        }
    } else if (cfg.suite == "dp") {
        SeededRng rng(cfg.seed);
        for (unsigned N = 2; N <= 8; ++N) {
            std::vector<DiffOp> xs;
            for (unsigned i = 0; i < N; ++i)
                xs.push_back(random_order_p(rng, 2, 4));
            auto t0 = Clock::now();
            DiffOp naive = s_eval_naive(xs);
            const double naive_ms = ms_since(t0);
            auto t1 = Clock::now();
            DiffOp dp = s_eval_dp(xs);
            const double dp_ms = ms_since(t1);
            ok = ok && naive == dp;
            rows.push_back({{"N", N}, {"naive_ms", naive_ms}, {"dp_ms", dp_ms}});
        }
    } else {
        throw UsageError("bench: --suite must be perm or dp");
    }
    if (cfg.format == Format::json) {
        out << json{{"schema", "v1"}, {"suite", cfg.suite}, {"rows", rows}, {"agree", ok}}.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            out << (cfg.suite == "perm" ? "p=" + std::to_string(r["p"].get<unsigned>())
                                        : "N=" + std::to_string(r["N"].get<unsigned>()))
                << std::fixed << std::setprecision(3) << "  naive " << r["naive_ms"].get<double>() << " ms  dp "
                << r["dp_ms"].get<double>() << " ms\n";
        }
        out << (ok ? "naive and dp agree" : "DISAGREEMENT") << "\n";
    }
    return ok ? 0 : 1;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.subcommand == "lambda")
        return cmd_lambda(cfg, out);
    if (cfg.subcommand == "power")
        return cmd_power(cfg, out);
    if (cfg.subcommand == "verify")
        return cmd_verify(cfg, out);
    if (cfg.subcommand == "mu-table")
        return cmd_mu_table(cfg, out);
    if (cfg.subcommand == "enumerate")
        return cmd_enumerate(cfg, out);
    if (cfg.subcommand == "wronskian")
        return cmd_wronskian(cfg, out);
    if (cfg.subcommand == "bench")
        return cmd_bench(cfg, out);
    throw UsageError("a subcommand is required (lambda, power, verify, mu-table, enumerate, wronskian, bench)");
}

} // namespace detail

/// Parses `args` (program name excluded) and runs the chosen subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact computations with N-commutators of order-p differential operators", "ncomm"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
    };

    auto* lam = app.add_subcommand("lambda", "Compute lambda_p by one or all routes");
    lam->add_option("--p", cfg.p, "Operator order p")->required();
    lam->add_option("--method", cfg.method, "super|weyl|perm|perm-dp|matrix-rows|matrix-cols|all")
        ->check(CLI::IsMember({"super", "weyl", "perm", "perm-dp", "matrix-rows", "matrix-cols", "all"}));
    common(lam);

    auto* pw = app.add_subcommand("power", "Expand (a d^p)^k in the super-operator algebra");
    pw->add_option("--p", cfg.p, "Operator order p")->required();
    pw->add_option("--k", cfg.k, "Exponent k")->required();
    common(pw);

    auto* ver = app.add_subcommand("verify", "Check an identity by exact evaluation");
    ver->add_option("--check", cfg.check, "s-zero|wronskian|closure|lcom|rcom|hanlon|rtol|rank|simplicity")
        ->required()
        ->check(CLI::IsMember({"s-zero", "wronskian", "closure", "lcom", "rcom", "hanlon", "rtol", "rank", "simplicity"}));
    ver->add_option("--p", cfg.p, "Operator order p");
    ver->add_option("--N", cfg.N,
                    "Secondary parameter: N for s-zero/closure, arity n for rtol, degree d for rank, exponent s for simplicity");
    ver->add_option("--trials", cfg.trials, "Number of random trials");
    ver->add_option("--seed", cfg.seed, "Seed of the deterministic generator");
    ver->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    ver->add_flag("--timing", cfg.timing, "Include elapsed time in the output");
    common(ver);

    auto* mt = app.add_subcommand("mu-table", "Tabulate delta(k-1) and mu_k for k = 1..2p");
    mt->add_option("--p", cfg.p, "Operator order p")->required();
    common(mt);

    auto* en = app.add_subcommand("enumerate", "List the members of a combinatorial set in lexicographic order");
    en->add_option("--set", cfg.set, "E|G|Mp")->required()->check(CLI::IsMember({"E", "G", "Mp"}));
    en->add_option("--k", cfg.k, "Length (E) or size (G)");
    en->add_option("--weight", cfg.weight, "Weight (E)");
    en->add_flag("--zero-first", cfg.zero_first, "Only sequences starting with 0 (E)");
    en->add_option("--p", cfg.p, "Operator order p (Mp)");
    common(en);

    auto* wr = app.add_subcommand("wronskian", "Wronskian of polynomials such as \"(2*x^3 + 1)\"");
    wr->add_option("--polys", cfg.polys, "Polynomials")->required();
    common(wr);

    auto* be = app.add_subcommand("bench", "Time naive against dynamic-programming evaluation");
    be->add_option("--suite", cfg.suite, "perm|dp")->required()->check(CLI::IsMember({"perm", "dp"}));
    be->add_option("--seed", cfg.seed, "Seed for random inputs (dp)");
    common(be);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    for (CLI::App* sub : app.get_subcommands())
        cfg.subcommand = sub->get_name();

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << " for writing\n";
            return 2;
        }
        sink = &file;
    }

    try {
        return detail::dispatch(cfg, *sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ncomm::cli

#endif
