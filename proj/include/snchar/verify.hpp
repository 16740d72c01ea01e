#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "snchar/bigint.hpp"
#include "snchar/evaluator.hpp"
#include "snchar/partition.hpp"
#include "snchar/rim_hooks.hpp"

namespace snchar {

struct SweepOptions {
    int budget = 12;
    int workers = 1;
};

struct Maximizer {
    Partition lambda;
    CycleType mu;
    CharValue value;
};

struct BoundRecord {
    int k = 0;
    BigInt bound;      // k!, or (k−1)! in the fixed-point stratum
    CharValue max_abs;
    bool attained = false;
    BigInt margin;     // 2^{k−1}·k! − max_abs
    std::vector<Maximizer> maximizers;
};

struct BoundReport {
    int n = 0;
    bool fixed_point_only = false;
    std::vector<BoundRecord> records;  // ascending k
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

struct SweepGrid {
    std::vector<Partition> lambdas;
    std::vector<CycleType> mus;
    std::vector<std::vector<CharValue>> values;
};

inline SweepGrid sweep_grid(int n, bool fixed_only, int workers) {
    SweepGrid g;
    g.lambdas = all_partitions(n);
    for (const auto& p : g.lambdas) {
        CycleType mu(p.parts());
        if (!fixed_only || mu.has_fixed_point()) g.mus.push_back(std::move(mu));
    }
    g.values.assign(g.lambdas.size(), {});
    run_rows(g.lambdas.size(), workers, [&g](Evaluator& ev, std::size_t i) {
        auto& row = g.values[i];
        row.reserve(g.mus.size());
        for (const auto& mu : g.mus) row.push_back(ev.evaluate(g.lambdas[i], mu));
    });
    return g;
}

inline BoundReport run_sweep(int n, bool fixed_only, SweepOptions opts) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > opts.budget)
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the sweep budget " +
                                    std::to_string(opts.budget) +
                                    " (raise the budget to override)");
    SweepGrid grid = sweep_grid(n, fixed_only, opts.workers);

    BoundReport rep;
    rep.n = n;
    rep.fixed_point_only = fixed_only;

    std::map<int, BoundRecord> by_k;
    for (std::size_t j = 0; j < grid.mus.size(); ++j) {
        const CycleType& mu = grid.mus[j];
        int k = mu.k();
        auto [it, fresh] = by_k.try_emplace(k);
        BoundRecord& rec = it->second;
        if (fresh) {
            rec.k = k;
            rec.bound = fixed_only ? factorial(k - 1) : factorial(k);
            rec.max_abs = -1;
        }
        for (std::size_t i = 0; i < grid.lambdas.size(); ++i) {
            CharValue av = abs(grid.values[i][j]);
            if (av > rec.bound)
                rep.violations.push_back("lambda=" + grid.lambdas[i].to_string() +
                                         " mu=" + mu.to_string() + " |chi|=" + av.str() +
                                         " exceeds bound " + rec.bound.str());
            if (av > rec.max_abs) {
                rec.max_abs = av;
                rec.maximizers.clear();
            }
            if (av == rec.max_abs)
                rec.maximizers.push_back({grid.lambdas[i], mu, grid.values[i][j]});
        }
    }

    for (auto& [k, rec] : by_k) {
        rec.attained = rec.max_abs == rec.bound;
        rec.margin = pow2(k - 1) * factorial(k) - rec.max_abs;
        std::sort(rec.maximizers.begin(), rec.maximizers.end(),
                  [](const Maximizer& a, const Maximizer& b) {
                      auto at = a.lambda.to_string(), bt = b.lambda.to_string();
                      if (at != bt) return at < bt;
                      return a.mu.to_string() < b.mu.to_string();
                  });
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

}  // namespace detail

/// |χ_λ(μ)| ≤ k! over every λ, μ ⊢ n, k = number of parts of μ.
inline BoundReport verify_main(int n, SweepOptions opts = {}) {
    return detail::run_sweep(n, false, opts);
}

/// |χ_λ(μ)| ≤ (k−1)! over the classes with at least one fixed point.
inline BoundReport verify_fixed(int n, SweepOptions opts = {}) {
    return detail::run_sweep(n, true, opts);
}

/// All pairs attaining the per-k maximum of |χ|, ordered by text form.
inline std::vector<Maximizer> find_maximizers(int n, int k, SweepOptions opts = {}) {
    BoundReport rep = detail::run_sweep(n, false, opts);
    for (auto& rec : rep.records)
        if (rec.k == k) return std::move(rec.maximizers);
    throw std::invalid_argument("no classes of " + std::to_string(n) + " with " +
                                std::to_string(k) + " parts");
}

struct KeyIneqEquality {
    Partition lambda;
    int r = 0;
    int t = 0;
};

struct KeyIneqReport {
    int n_max = 0;
    std::uint64_t checked = 0;
    std::vector<KeyIneqEquality> equalities;  // cases with t_r·r = n
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// t_r·r ≤ n and C_r ≤ durfee size for every λ ⊢ n ≤ n_max and every r.
inline KeyIneqReport verify_key_ineq(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    KeyIneqReport rep;
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        for (const Partition& lam : all_partitions(n)) {
            HookCountTable table;
            try {
                table = hook_count_table(lam);
            } catch (const std::logic_error& e) {
                rep.violations.emplace_back(e.what());
                continue;
            }
            for (int r = 1; r <= n; ++r) {
                const HookCounts& c = table.at(r);
                ++rep.checked;
                if (static_cast<std::int64_t>(c.hooks) * r > n)
                    rep.violations.push_back("lambda=" + lam.to_string() +
                                             " r=" + std::to_string(r) +
                                             " t=" + std::to_string(c.hooks));
                if (c.central > table.durfee)
                    rep.violations.push_back("lambda=" + lam.to_string() +
                                             " r=" + std::to_string(r) + " central=" +
                                             std::to_string(c.central));
                if (c.hooks > 0 && c.hooks * r == n)
                    rep.equalities.push_back({lam, r, c.hooks});
            }
        }
    }
    return rep;
}

inline std::string to_json(const BoundReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : rep.records) {
        nlohmann::ordered_json r;
        r["k"] = rec.k;
        r["bound"] = rec.bound.str();
        r["max"] = rec.max_abs.str();
        r["attained"] = rec.attained;
        r["margin"] = rec.margin.str();
        r["maximizers"] = nlohmann::ordered_json::array();
        for (const auto& m : rec.maximizers)
            r["maximizers"].push_back({{"lambda", m.lambda.to_string()},
                                       {"mu", m.mu.to_string()},
                                       {"value", m.value.str()}});
        j["records"].push_back(std::move(r));
    }
    j["violations"] = rep.violations;
    return j.dump(2);
}

namespace detail {
// Partition texts carry commas, so they travel quoted in CSV.
inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }
}  // namespace detail

inline std::string to_csv(const BoundReport& rep) {
    std::string out = "n,k,bound,max,attained,margin,lambda,mu,value\n";
    for (const auto& rec : rep.records)
        for (const auto& m : rec.maximizers)
            out += std::to_string(rep.n) + "," + std::to_string(rec.k) + "," +
                   rec.bound.str() + "," + rec.max_abs.str() + "," +
                   (rec.attained ? "true" : "false") + "," + rec.margin.str() + "," +
                   detail::csv_quote(m.lambda.to_string()) + "," +
                   detail::csv_quote(m.mu.to_string()) + "," + m.value.str() + "\n";
    return out;
}

inline std::string to_json(const KeyIneqReport& rep) {
    nlohmann::ordered_json j;
    j["n_max"] = rep.n_max;
    j["checked"] = rep.checked;
    j["equalities"] = nlohmann::ordered_json::array();
    for (const auto& e : rep.equalities)
        j["equalities"].push_back(
            {{"lambda", e.lambda.to_string()}, {"r", e.r}, {"t", e.t}});
    j["violations"] = rep.violations;
    return j.dump(2);
}

inline std::string to_csv(const KeyIneqReport& rep) {
    std::string out = "n,lambda,r,t\n";
    for (const auto& e : rep.equalities)
        out += std::to_string(e.lambda.n()) + "," + detail::csv_quote(e.lambda.to_string()) +
               "," + std::to_string(e.r) + "," + std::to_string(e.t) + "\n";
    return out;
}

}  // namespace snchar
