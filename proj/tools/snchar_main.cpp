// snchar: exact symmetric group character values, rim hooks, extremal
// witness families, and exhaustive bound verification.
//
// Exit codes: 0 success, 1 verification failure or falsified invariant,
// 2 usage/budget/malformed input.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "snchar/evaluator.hpp"
#include "snchar/extremal.hpp"
#include "snchar/memo_cache.hpp"
#include "snchar/partition.hpp"
#include "snchar/rim_hooks.hpp"
#include "snchar/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace snchar;

constexpr int kEvalBudgetDefault = 40;   // single evaluations
constexpr int kTableBudgetDefault = 14;  // full tables
constexpr int kSweepBudgetDefault = 12;  // verification sweeps

struct GlobalOpts {
    std::string format = "text";
    std::string workers_text = "1";
    std::string cache_path;
    int budget = -1;  // -1: use the subcommand default

    int workers() const {
        if (workers_text == "auto") {
            unsigned hc = std::thread::hardware_concurrency();
            return hc ? static_cast<int>(hc) : 1;
        }
        try {
            std::size_t used = 0;
            int w = std::stoi(workers_text, &used);
            if (used == workers_text.size() && w >= 1) return w;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("--workers expects a positive integer or 'auto'");
    }

    int budget_or(int fallback) const { return budget > 0 ? budget : fallback; }
};

void check_eval_budget(int n, int budget) {
    if (n > budget)
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the budget " +
                                    std::to_string(budget) + " (raise --budget)");
}

void load_cache_if_set(const GlobalOpts& g, Evaluator& ev) {
    if (g.cache_path.empty()) return;
    std::ifstream in(g.cache_path);
    if (!in) {
        std::cerr << "cache: no existing file at " << g.cache_path << ", starting fresh\n";
        return;
    }
    CacheLoadResult res = load_memo_cache(in, ev, std::cerr);
    std::cerr << "cache: loaded " << res.loaded << " records";
    if (res.skipped) std::cerr << ", skipped " << res.skipped;
    std::cerr << "\n";
}

void save_cache_if_set(const GlobalOpts& g, const Evaluator& ev) {
    if (g.cache_path.empty()) return;
    std::ofstream out(g.cache_path, std::ios::trunc);
    if (!out) {
        std::cerr << "cache: cannot write " << g.cache_path << "\n";
        return;
    }
    save_memo_cache(out, ev);
}

// ---------------------------------------------------------------- char ----

int run_char(const std::string& lam_text, const std::string& mu_text, bool stats,
             const GlobalOpts& g) {
    Partition lam = Partition::parse(lam_text);
    CycleType mu = CycleType::parse(mu_text);
    check_eval_budget(lam.n(), g.budget_or(kEvalBudgetDefault));

    Evaluator ev;
    load_cache_if_set(g, ev);
    CharValue v = ev.evaluate(lam, mu);

    if (g.format == "json") {
        ordered_json j{{"lambda", lam.to_string()},
                       {"mu", mu.to_string()},
                       {"value", v.str()}};
        std::cout << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        throw std::invalid_argument("csv output is not defined for char");
    } else {
        std::cout << v.str() << "\n";
    }
    if (stats)
        std::cerr << "memo_hits=" << ev.stats().memo_hits
                  << " memo_misses=" << ev.stats().memo_misses
                  << " recursion_nodes=" << ev.stats().recursion_nodes << "\n";
    save_cache_if_set(g, ev);
    return 0;
}

// --------------------------------------------------------------- table ----

int run_table(int n, bool csv_flag, bool json_flag, const GlobalOpts& g) {
    int budget = g.budget_or(kTableBudgetDefault);
    std::string fmt = json_flag ? "json" : csv_flag ? "csv" : g.format;

    CharacterTable t;
    if (g.cache_path.empty()) {
        t = character_table(n, budget, g.workers());
    } else {
        // a cache-backed table runs in one session so the memo round-trips
        if (n < 1) throw std::invalid_argument("n must be positive");
        check_eval_budget(n, budget);
        t.n = n;
        t.lambdas = all_partitions(n);
        for (const auto& p : t.lambdas) t.mus.push_back(CycleType(p.parts()));
        Evaluator ev;
        load_cache_if_set(g, ev);
        for (const auto& lam : t.lambdas) {
            t.values.emplace_back();
            for (const auto& mu : t.mus) t.values.back().push_back(ev.evaluate(lam, mu));
        }
        save_cache_if_set(g, ev);
    }

    if (fmt == "json") {
        ordered_json j;
        j["n"] = t.n;
        j["mus"] = ordered_json::array();
        for (const auto& mu : t.mus) j["mus"].push_back(mu.to_string());
        j["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < t.lambdas.size(); ++i) {
            ordered_json row;
            row["lambda"] = t.lambdas[i].to_string();
            row["values"] = ordered_json::array();
            for (const auto& v : t.values[i]) row["values"].push_back(v.str());
            j["rows"].push_back(std::move(row));
        }
        std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::string out = "lambda";
        for (const auto& mu : t.mus) out += "," + detail::csv_quote(mu.to_string());
        out += "\n";
        for (std::size_t i = 0; i < t.lambdas.size(); ++i) {
            out += detail::csv_quote(t.lambdas[i].to_string());
            for (const auto& v : t.values[i]) out += "," + v.str();
            out += "\n";
        }
        std::cout << out;
    } else {
        std::cout << "n=" << t.n << "\n";
        std::cout << "lambda\\mu";
        for (const auto& mu : t.mus) std::cout << " " << mu.to_string();
        std::cout << "\n";
        for (std::size_t i = 0; i < t.lambdas.size(); ++i) {
            std::cout << t.lambdas[i].to_string();
            for (const auto& v : t.values[i]) std::cout << " " << v.str();
            std::cout << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------ rimhooks ----

int run_rimhooks(const std::string& lam_text, int r, bool json_flag, const GlobalOpts& g) {
    Partition lam = Partition::parse(lam_text);
    check_eval_budget(lam.n(), g.budget_or(kEvalBudgetDefault));
    std::vector<RimHook> hooks = enumerate_rim_hooks(lam, r);
    std::string fmt = json_flag ? "json" : g.format;

    if (fmt == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& h : hooks)
            j.push_back({{"start", {h.start_cell.row, h.start_cell.col}},
                         {"end", {h.end_cell.row, h.end_cell.col}},
                         {"length", h.length},
                         {"leg", h.leg_length},
                         {"class", std::string(to_string(h.cls))},
                         {"remainder", h.remainder.to_string()}});
        std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        throw std::invalid_argument("csv output is not defined for rimhooks");
    } else {
        for (const auto& h : hooks)
            std::cout << "start=(" << h.start_cell.row << "," << h.start_cell.col << ")"
                      << " end=(" << h.end_cell.row << "," << h.end_cell.col << ")"
                      << " leg=" << h.leg_length << " class=" << to_string(h.cls)
                      << " remainder=" << h.remainder.to_string() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ extremal ----

struct ExtremalArgs {
    int k = 0;
    int r = -1;
    std::string arms_text;
    bool fixed_point = false;
    bool all = false;
    bool check = false;
    int nmax = -1;
};

ordered_json witness_json(const Partition& lam, const CycleType& mu) {
    return ordered_json{{"lambda", lam.to_string()},
                        {"mu", mu.to_string()},
                        {"n", lam.n()},
                        {"k", mu.k()}};
}

int run_extremal(const ExtremalArgs& a, const GlobalOpts& g) {
    int budget = g.budget_or(kEvalBudgetDefault);
    if (a.k < 1) throw std::invalid_argument("k must be positive");

    if (a.all) {
        int nmax = a.nmax > 0 ? a.nmax : budget;
        auto members = enumerate_family(a.k, nmax);
        Evaluator ev;
        if (a.check) load_cache_if_set(g, ev);
        bool all_ok = true;
        ordered_json jout = ordered_json::array();
        for (const auto& [lam, mu] : members) {
            SharpPrediction pred = predicted_value(a.k);
            ordered_json j = witness_json(lam, mu);
            std::string line = "lambda=" + lam.to_string() + " mu=" + mu.to_string() +
                               " n=" + std::to_string(lam.n());
            if (a.check) {
                check_eval_budget(lam.n(), budget);
                CharValue v = ev.evaluate(lam, mu);
                bool ok = v == CharValue(pred.sign) * pred.magnitude;
                all_ok = all_ok && ok;
                line += " value=" + v.str() + (ok ? "" : " MISMATCH");
                j["value"] = v.str();
                j["confirmed"] = ok;
            }
            if (g.format == "json") jout.push_back(std::move(j));
            else std::cout << line << "\n";
        }
        if (g.format == "json") std::cout << jout.dump(2) << "\n";
        if (a.check) save_cache_if_set(g, ev);
        return all_ok ? 0 : 1;
    }

    std::vector<int> arms;
    int expected_arms = a.fixed_point ? a.k - 1 : a.k;
    if (!a.arms_text.empty()) {
        arms = detail::parse_int_list(a.arms_text);
        if (a.r < 1)
            throw std::invalid_argument("--r is required when --arms is given");
        if (static_cast<int>(arms.size()) != expected_arms)
            throw std::invalid_argument("expected " + std::to_string(expected_arms) +
                                        " arms for k=" + std::to_string(a.k));
    } else {
        if (expected_arms < 1)
            throw std::invalid_argument("--fixed-point needs k >= 2");
        for (int i = 0; i < expected_arms; ++i)
            arms.push_back(2 * (expected_arms - i) - 1);  // staircase arms
    }
    int r = a.r > 0 ? a.r : (a.fixed_point ? 2 * a.k - 1 : 2 * a.k + 1);

    Partition lam;
    CycleType mu;
    if (a.fixed_point) {
        auto [l, m] = build_fixed_point({arms, r, true});
        lam = std::move(l);
        mu = std::move(m);
    } else {
        lam = build_symmetric({arms, r, false});
        mu = CycleType(std::vector<int>(a.k, r));
    }
    check_eval_budget(lam.n(), budget);

    bool odd_family = r % 2 == 1;
    for (int arm : arms) odd_family = odd_family && arm % 2 == 1;
    int pred_k = a.fixed_point ? a.k - 1 : a.k;
    SharpPrediction pred = predicted_value(pred_k);

    ordered_json j = witness_json(lam, mu);
    if (odd_family) {
        j["predicted"] = ordered_json{{"magnitude", pred.magnitude.str()},
                                      {"sign", pred.sign},
                                      {"binomial_sign", pred.binomial_sign}};
    }

    int rc = 0;
    std::string check_line;
    if (a.check) {
        Evaluator ev;
        load_cache_if_set(g, ev);
        CharValue v = ev.evaluate(lam, mu);
        j["value"] = v.str();
        check_line = "value=" + v.str();
        if (odd_family) {
            bool ok = v == CharValue(pred.sign) * pred.magnitude;
            j["confirmed"] = ok;
            check_line += ok ? " (confirmed: |value| = " + pred.magnitude.str() +
                                   ", sign matches the recursion form)"
                             : " MISMATCH: expected " +
                                   (CharValue(pred.sign) * pred.magnitude).str();
            if (!ok) rc = 1;
        }
        save_cache_if_set(g, ev);
    }

    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lambda=" << lam.to_string() << " mu=" << mu.to_string()
                  << " n=" << lam.n() << " k=" << mu.k() << "\n";
        if (odd_family)
            std::cout << "predicted: magnitude=" << pred.magnitude.str()
                      << " sign=" << (pred.sign > 0 ? "+1" : "-1")
                      << " binomial_sign=" << (pred.binomial_sign > 0 ? "+1" : "-1")
                      << (pred.sign != pred.binomial_sign
                              ? " (the two sign forms disagree here; evaluation follows"
                                " the recursion form)"
                              : "")
                      << "\n";
        else
            std::cout << "predicted: none (requires odd arms and odd hook length)\n";
        if (a.check) std::cout << check_line << "\n";
    }
    return rc;
}

// -------------------------------------------------------------- verify ----

void print_bound_report_text(const BoundReport& rep) {
    std::cout << "n=" << rep.n << (rep.fixed_point_only ? " (classes with a fixed point)" : "")
              << "\n";
    for (const auto& rec : rep.records) {
        std::cout << "k=" << rec.k << " bound=" << rec.bound.str()
                  << " max=" << rec.max_abs.str()
                  << " attained=" << (rec.attained ? "yes" : "no")
                  << " margin=" << rec.margin.str() << "\n";
        for (const auto& m : rec.maximizers)
            std::cout << "  lambda=" << m.lambda.to_string() << " mu=" << m.mu.to_string()
                      << " value=" << m.value.str() << "\n";
    }
    if (rep.violations.empty()) {
        std::cout << "violations: none\n";
    } else {
        std::cout << "violations:\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
    }
}

void print_keyineq_report_text(const KeyIneqReport& rep) {
    std::cout << "hook-count sweep n<=" << rep.n_max << ": " << rep.checked
              << " checks, " << (rep.violations.empty() ? "no violations" : "VIOLATIONS")
              << "\n";
    std::cout << "equalities (t*r = n): " << rep.equalities.size() << "\n";
    std::size_t shown = 0;
    for (const auto& e : rep.equalities) {
        if (shown == 20) {
            std::cout << "  ... (" << rep.equalities.size() - shown << " more)\n";
            break;
        }
        std::cout << "  lambda=" << e.lambda.to_string() << " r=" << e.r << " t=" << e.t
                  << "\n";
        ++shown;
    }
    for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

int run_verify(int n, bool fixed, bool keyineq, const std::string& json_path,
               const std::string& csv_path, const GlobalOpts& g) {
    if (keyineq) {
        KeyIneqReport rep = verify_key_ineq(n);
        if (!json_path.empty()) write_file(json_path, to_json(rep) + "\n");
        if (!csv_path.empty()) write_file(csv_path, to_csv(rep));
        if (g.format == "json") std::cout << to_json(rep) << "\n";
        else if (g.format == "csv") std::cout << to_csv(rep);
        else print_keyineq_report_text(rep);
        return rep.ok() ? 0 : 1;
    }

    SweepOptions opts;
    opts.budget = g.budget_or(kSweepBudgetDefault);
    opts.workers = g.workers();
    if (opts.budget > kSweepBudgetDefault)
        std::cerr << "warning: sweep budget raised to " << opts.budget
                  << "; runtime grows steeply with n\n";
    BoundReport rep = fixed ? verify_fixed(n, opts) : verify_main(n, opts);
    if (!json_path.empty()) write_file(json_path, to_json(rep) + "\n");
    if (!csv_path.empty()) write_file(csv_path, to_csv(rep));
    if (g.format == "json") std::cout << to_json(rep) << "\n";
    else if (g.format == "csv") std::cout << to_csv(rep);
    else print_bound_report_text(rep);
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetric group character values via the rim-hook recursion"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("SNCHAR_FORMAT");
    app.add_option("--workers", g.workers_text,
                   "worker threads for tables and sweeps, or 'auto'")
        ->envname("SNCHAR_WORKERS");
    app.add_option("--cache", g.cache_path, "memo cache file, loaded before and saved after")
        ->envname("SNCHAR_CACHE");
    app.add_option("--budget", g.budget,
                   "largest n accepted (defaults: 40 evaluations, 14 tables, 12 sweeps)")
        ->check(CLI::PositiveNumber)
        ->envname("SNCHAR_BUDGET");

    std::string lam_text, mu_text;
    bool stats = false;
    CLI::App* cmd_char = app.add_subcommand("char", "evaluate one character value");
    cmd_char->add_option("lambda", lam_text, "partition, e.g. [4,3,2,1]")->required();
    cmd_char->add_option("mu", mu_text, "cycle type, e.g. [5,5]")->required();
    cmd_char->add_flag("--stats", stats, "print evaluation counters to stderr");

    int table_n = 0;
    bool table_csv = false, table_json = false;
    CLI::App* cmd_table = app.add_subcommand("table", "full character table of S_n");
    cmd_table->add_option("n", table_n, "symmetric group degree")->required();
    cmd_table->add_flag("--csv", table_csv, "emit CSV");
    cmd_table->add_flag("--json", table_json, "emit JSON");

    std::string rh_lam;
    int rh_r = 0;
    bool rh_json = false;
    CLI::App* cmd_rimhooks = app.add_subcommand("rimhooks", "list the rim hooks of a given length");
    cmd_rimhooks->add_option("lambda", rh_lam, "partition")->required();
    cmd_rimhooks->add_option("r", rh_r, "hook length")->required();
    cmd_rimhooks->add_flag("--json", rh_json, "emit JSON");

    ExtremalArgs ex;
    CLI::App* cmd_extremal =
        app.add_subcommand("extremal", "construct witnesses attaining the k! bound");
    cmd_extremal->add_option("k", ex.k, "number of cycles")->required();
    cmd_extremal->add_option("--r", ex.r, "hook length (default: smallest odd choice)");
    cmd_extremal->add_option("--arms", ex.arms_text, "arm coordinates a1,a2,...");
    cmd_extremal->add_flag("--fixed-point", ex.fixed_point,
                           "fixed-point variant: k-1 arms, class (r,...,r,1)");
    cmd_extremal->add_flag("--all", ex.all, "list every odd-arm witness up to --nmax");
    cmd_extremal->add_option("--nmax", ex.nmax, "cell budget for --all");
    cmd_extremal->add_flag("--check", ex.check, "evaluate and compare with the prediction");

    int verify_n = 0;
    bool verify_fixed_flag = false, verify_keyineq = false;
    std::string verify_json_path, verify_csv_path;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "exhaustively check the character bounds");
    cmd_verify->add_option("n", verify_n, "degree (sweeps) or n_max (--keyineq)")->required();
    CLI::Option* opt_fixed =
        cmd_verify->add_flag("--fixed", verify_fixed_flag,
                             "restrict to classes with a fixed point; bound (k-1)!");
    cmd_verify->add_flag("--keyineq", verify_keyineq, "check t_r*r <= n for all shapes")
        ->excludes(opt_fixed);
    cmd_verify->add_option("--json", verify_json_path, "also write the JSON report here");
    cmd_verify->add_option("--csv", verify_csv_path, "also write the CSV report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_char) return run_char(lam_text, mu_text, stats, g);
        if (*cmd_table) return run_table(table_n, table_csv, table_json, g);
        if (*cmd_rimhooks) return run_rimhooks(rh_lam, rh_r, rh_json, g);
        if (*cmd_extremal) return run_extremal(ex, g);
        if (*cmd_verify)
            return run_verify(verify_n, verify_fixed_flag, verify_keyineq,
                              verify_json_path, verify_csv_path, g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
