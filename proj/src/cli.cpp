#include "abduce/cli.hpp"

#include "abduce/abduction.hpp"
#include "abduce/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace abduce {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string file;
    std::string format = "text";
    std::size_t max_clauses = 50000;
    std::size_t max_iterations = 200000;
    std::string minimize = "auto";
    bool consistency = false;
    unsigned long seed = 0; ///< reserved for randomized tooling
    bool stream = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("file", o.file, "problem file")->required();
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-clauses", o.max_clauses, "kept-clause limit");
    cmd->add_option("--max-iterations", o.max_iterations, "iteration limit");
    cmd->add_option("--minimize", o.minimize, "minimization mode")
        ->check(CLI::IsMember({"subsumption", "entailment", "auto"}));
    cmd->add_flag("--consistency-filter", o.consistency, "check each explanation against the axioms");
    cmd->add_option("--seed", o.seed, "seed for randomized tooling");
    cmd->add_flag("--stream", o.stream, "emit A-clauses as they are found");
}

MinimizeMode minimize_mode(const std::string& name) {
    if (name == "subsumption") return MinimizeMode::Subsumption;
    if (name == "entailment") return MinimizeMode::Entailment;
    return MinimizeMode::Auto;
}

struct Problem {
    ProblemFile pf;
    std::vector<Clause> axioms; ///< after flattening, definitions included
    std::vector<Clause> goals;
    Abducibles abd;
};

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Problem p;
    p.pf = parse_problem(buf.str());
    p.axioms = p.pf.axioms;
    p.goals = p.pf.goals;
    if (!p.pf.flatten_targets.empty()) {
        std::vector<Clause> all = p.axioms;
        all.insert(all.end(), p.goals.begin(), p.goals.end());
        FlattenResult fl = flatten_named_terms(all, p.pf.flatten_targets, p.pf.signature);
        p.axioms.assign(fl.clauses.begin(), fl.clauses.begin() + static_cast<long>(p.pf.axioms.size()));
        p.goals.assign(fl.clauses.begin() + static_cast<long>(p.pf.axioms.size()),
                       fl.clauses.begin() + static_cast<long>(p.pf.axioms.size() + p.pf.goals.size()));
        p.axioms.insert(p.axioms.end(), fl.definitions.begin(), fl.definitions.end());
    }
    p.abd = p.pf.make_abducibles();
    return p;
}

std::vector<std::string> warning_list(const ImplicateReport& r) {
    std::vector<std::string> w;
    if (r.variable_eligible_seen) w.push_back("variable_eligible");
    if (r.saturation_status == SaturationStatus::LimitReached || r.closure_limit_reached)
        w.push_back("limit_reached");
    return w;
}

int emit_explain(const Problem& p, const ImplicateReport& r, const CommonOpts& o, std::ostream& out) {
    if (o.format == "json") {
        ordered_json j;
        j["status"] = to_string(r.saturation_status);
        j["implicates"] = ordered_json::array();
        for (std::size_t i = 0; i < r.prime_implicates.size(); ++i) {
            ordered_json e;
            e["clause"] = canonical_clause_string(r.prime_implicates[i], p.abd);
            if (i < r.consistency.size()) e["consistent"] = r.consistency[i] == Consistency::Consistent;
            j["implicates"].push_back(std::move(e));
        }
        j["explanations"] = ordered_json::array();
        for (const auto& hyp : r.explanations) j["explanations"].push_back(explanation_string(hyp, p.abd));
        j["warnings"] = warning_list(r);
        j["stats"] = {{"generated", r.stats.generated}, {"kept", r.stats.kept}, {"elapsed_ms", r.stats.elapsed_ms}};
        out << j.dump(2) << "\n";
    } else {
        out << "status: " << to_string(r.saturation_status) << "\n";
        if (r.saturation_status == SaturationStatus::Unsatisfiable) {
            out << "the input set is unsatisfiable; nothing to explain\n";
        } else {
            out << "implicates:\n";
            for (std::size_t i = 0; i < r.prime_implicates.size(); ++i) {
                out << "  " << canonical_clause_string(r.prime_implicates[i], p.abd);
                if (i < r.consistency.size()) out << "  [" << to_string(r.consistency[i]) << "]";
                out << "\n";
            }
            if (r.prime_implicates.empty()) out << "  (none)\n";
            out << "explanation: "
                << (r.explanations.empty() ? "(none)" : combined_explanation_string(r, p.abd)) << "\n";
        }
        auto warnings = warning_list(r);
        out << "warnings:";
        if (warnings.empty()) out << " (none)";
        for (const auto& w : warnings) out << " " << w;
        out << "\n";
        out << "stats: generated=" << r.stats.generated << " kept=" << r.stats.kept
            << " elapsed_ms=" << r.stats.elapsed_ms << "\n";
    }
    return r.saturation_status == SaturationStatus::Unsatisfiable ? 1 : 0;
}

int cmd_explain(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Problem p = load_problem(o.file);
    if (p.abd.empty()) throw EmptyAbducibleSetError{};
    ExplainConfig cfg;
    cfg.sat_limits.max_clauses = o.max_clauses;
    cfg.sat_limits.max_iterations = o.max_iterations;
    cfg.res_limits.max_clauses = o.max_clauses;
    cfg.res_limits.max_iterations = o.max_iterations;
    cfg.minimize = minimize_mode(o.minimize);
    cfg.consistency_filter = o.consistency;
    cfg.log_inferences = false;
    if (o.stream) {
        std::ostream& sink = o.format == "json" ? err : out;
        cfg.on_a_clause = [&sink, &p](const Clause& c) {
            sink << "a-clause: " << canonical_clause_string(c, p.abd) << "\n";
        };
    }
    ImplicateReport r = explain(p.axioms, p.goals, p.abd, cfg);
    return emit_explain(p, r, o, out);
}

int cmd_saturate(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Problem p = load_problem(o.file);
    std::vector<Clause> s = p.axioms;
    s.insert(s.end(), p.goals.begin(), p.goals.end());
    OrderingContext ctx(p.abd);
    SaturationConfig cfg;
    cfg.limits.max_clauses = o.max_clauses;
    cfg.limits.max_iterations = o.max_iterations;
    cfg.log_inferences = false;
    if (o.stream) {
        std::ostream& sink = o.format == "json" ? err : out;
        cfg.on_a_clause = [&sink, &p](const Clause& c) {
            sink << "a-clause: " << canonical_clause_string(c, p.abd) << "\n";
        };
    }
    SaturationOutcome r = saturate(abstract_set(s, p.abd), ctx, cfg);
    if (o.format == "json") {
        ordered_json j;
        j["status"] = to_string(r.status);
        j["t_infinity"] = ordered_json::array();
        for (const auto& c : r.t_infinity) j["t_infinity"].push_back(canonical_clause_string(c, p.abd));
        j["warnings"] = r.warnings;
        j["stats"] = {{"generated", r.stats.generated},
                      {"kept", r.stats.kept},
                      {"elapsed_ms", 0}};
        out << j.dump(2) << "\n";
    } else {
        out << "status: " << to_string(r.status) << "\n";
        out << "t-infinity:\n";
        for (const auto& c : r.t_infinity) out << "  " << canonical_clause_string(c, p.abd) << "\n";
        if (r.t_infinity.empty()) out << "  (none)\n";
        out << "kept clauses: " << r.stats.kept << "\n";
        out << "warnings:";
        if (r.warnings.empty()) out << " (none)";
        for (const auto& w : r.warnings) out << " " << w;
        out << "\n";
    }
    return r.status == SaturationStatus::Unsatisfiable ? 1 : 0;
}

int cmd_check(const CommonOpts& o, const std::string& implicate_text, std::ostream& out) {
    Problem p = load_problem(o.file);
    std::vector<Clause> s = p.axioms;
    s.insert(s.end(), p.goals.begin(), p.goals.end());
    Clause implicate = parse_clause_text(implicate_text, p.pf.signature);
    bool entailed = oracle::entails(s, implicate);
    if (o.format == "json") {
        ordered_json j;
        j["status"] = "ok";
        j["implicate"] = canonical_clause_string(implicate, p.abd);
        j["entailed"] = entailed;
        out << j.dump(2) << "\n";
    } else {
        out << "implicate: " << canonical_clause_string(implicate, p.abd) << "\n";
        out << "entailed: " << (entailed ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_oracle(const CommonOpts& o, std::size_t max_len, std::ostream& out) {
    Problem p = load_problem(o.file);
    if (p.abd.empty()) throw EmptyAbducibleSetError{};
    std::vector<Clause> s = p.axioms;
    s.insert(s.end(), p.goals.begin(), p.goals.end());
    std::vector<Clause> implicates =
        oracle::enumerate_a_implicates(s, p.abd, max_len, minimize_mode(o.minimize) == MinimizeMode::Entailment);
    if (minimize_mode(o.minimize) == MinimizeMode::Subsumption)
        implicates = minimize_prime(implicates, MinimizeMode::Subsumption);
    if (o.format == "json") {
        ordered_json j;
        j["status"] = "ok";
        j["implicates"] = ordered_json::array();
        for (const auto& c : implicates) j["implicates"].push_back(canonical_clause_string(c, p.abd));
        out << j.dump(2) << "\n";
    } else {
        out << "implicates (max length " << max_len << "):\n";
        for (const auto& c : implicates) out << "  " << canonical_clause_string(c, p.abd) << "\n";
        if (implicates.empty()) out << "  (none)\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime implicates over abducible constants"};
    app.require_subcommand(1);

    CommonOpts o_explain, o_saturate, o_check, o_oracle;
    std::string implicate_text;
    std::size_t max_len = 2;

    CLI::App* c_explain = app.add_subcommand("explain", "run the full pipeline");
    add_common(c_explain, o_explain);
    CLI::App* c_saturate = app.add_subcommand("saturate", "stop after saturation");
    add_common(c_saturate, o_saturate);
    CLI::App* c_check = app.add_subcommand("check", "oracle entailment of one clause");
    add_common(c_check, o_check);
    c_check->add_option("--implicate", implicate_text, "clause to check")->required();
    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force implicate enumeration");
    add_common(c_oracle, o_oracle);
    c_oracle->add_option("--max-len", max_len, "maximum literals per implicate");

    // CLI11 wants argv-style reversed input
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (c_explain->parsed()) return cmd_explain(o_explain, out, err);
        if (c_saturate->parsed()) return cmd_saturate(o_saturate, out, err);
        if (c_check->parsed()) return cmd_check(o_check, implicate_text, out);
        if (c_oracle->parsed()) return cmd_oracle(o_oracle, max_len, out);
    } catch (const InputUnsatisfiableError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace abduce
