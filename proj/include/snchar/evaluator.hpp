#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snchar/bigint.hpp"
#include "snchar/partition.hpp"
#include "snchar/rim_hooks.hpp"

namespace snchar {

/// Exact character value; never floating point.
using CharValue = BigInt;

struct EvalStats {
    std::uint64_t memo_hits = 0;
    std::uint64_t memo_misses = 0;
    std::uint64_t recursion_nodes = 0;
};

/// Which part of the cycle type gets peeled first at each step. The value
/// of the character cannot depend on this; it only shapes the recursion.
enum class PartOrder { descending, ascending, as_given };

namespace detail {

struct MemoKey {
    std::vector<int> lam;  // partition parts
    std::vector<int> rem;  // remaining cycle lengths, descending
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](std::size_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(k.lam.size());
        for (int p : k.lam) mix(static_cast<std::size_t>(p));
        for (int p : k.rem) mix(static_cast<std::size_t>(p));
        return h;
    }
};

}  // namespace detail

/// One evaluation session for the rim-hook recursion
///   χ_λ(ρπ) = Σ_ν (−1)^{l(ν)} χ_{λ∖ν}(π)
/// with a memo keyed on (partition, remaining cycle multiset). A session is
/// single-threaded; bulk drivers run one session per worker, which cannot
/// change any result because every value is exact and canonical.
class Evaluator {
public:
    Evaluator() = default;
    explicit Evaluator(bool use_memo) : use_memo_(use_memo) {}

    /// χ_λ(μ), peeling the largest remaining cycle first.
    CharValue evaluate(const Partition& lam, const CycleType& mu) {
        return evaluate_with_order(lam, mu.cycles(), PartOrder::descending);
    }

    CharValue evaluate_with_order(const Partition& lam, const CycleType& mu,
                                  PartOrder order) {
        return evaluate_with_order(lam, mu.cycles(), order);
    }

    /// `parts` is the peel sequence; as_given consumes it front to back.
    CharValue evaluate_with_order(const Partition& lam, std::vector<int> parts,
                                  PartOrder order) {
        long long total = 0;
        for (int p : parts) {
            if (p < 1) throw std::invalid_argument("cycle lengths must be positive");
            total += p;
        }
        if (total != lam.n())
            throw std::invalid_argument("size mismatch: partition of " +
                                        std::to_string(lam.n()) +
                                        " against cycle type of " + std::to_string(total));
        switch (order) {
            case PartOrder::descending: std::sort(parts.rbegin(), parts.rend()); break;
            case PartOrder::ascending: std::sort(parts.begin(), parts.end()); break;
            case PartOrder::as_given: break;
        }
        return eval_rec(lam, parts, 0);
    }

    const EvalStats& stats() const { return stats_; }

    /// Insert a known value, e.g. from a cache file.
    void preload(const Partition& lam, const CycleType& mu, CharValue value) {
        if (lam.n() != mu.n())
            throw std::invalid_argument("size mismatch in preloaded value");
        memo_[detail::MemoKey{lam.parts(), mu.cycles()}] = std::move(value);
    }

    struct MemoEntry {
        Partition lambda;
        CycleType mu;
        CharValue value;
    };

    /// Snapshot of the memo, sorted for deterministic emission.
    std::vector<MemoEntry> memo_entries() const {
        std::vector<MemoEntry> out;
        out.reserve(memo_.size());
        for (const auto& [key, value] : memo_)
            out.push_back({Partition(key.lam), CycleType(key.rem), value});
        std::sort(out.begin(), out.end(), [](const MemoEntry& a, const MemoEntry& b) {
            if (a.lambda != b.lambda) return a.lambda < b.lambda;
            return a.mu < b.mu;
        });
        return out;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    CharValue eval_rec(const Partition& lam, const std::vector<int>& peel,
                       std::size_t idx) {
        ++stats_.recursion_nodes;
        if (idx == peel.size()) return 1;  // χ_∅(∅); sizes already matched

        detail::MemoKey key;
        if (use_memo_) {
            key.lam = lam.parts();
            key.rem.assign(peel.begin() + idx, peel.end());
            std::sort(key.rem.rbegin(), key.rem.rend());
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
            ++stats_.memo_misses;
        }

        CharValue total = 0;
        for (const RimHook& h : enumerate_rim_hooks(lam, peel[idx])) {
            CharValue sub = eval_rec(h.remainder, peel, idx + 1);
            if (h.leg_length % 2)
                total -= sub;
            else
                total += sub;
        }
        if (use_memo_) memo_[std::move(key)] = total;
        return total;
    }

    std::unordered_map<detail::MemoKey, CharValue, detail::MemoKeyHash> memo_;
    EvalStats stats_;
    bool use_memo_ = true;
};

/// Degree of χ_λ by the hook length formula: n! over the product of the
/// cell hook lengths. An independent route to the identity column.
inline CharValue degree_hook_length(const Partition& lam) {
    BigInt num = factorial(lam.n());
    BigInt den = 1;
    Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam.parts()[i - 1]; ++j)
            den *= (lam.parts()[i - 1] - j) + (conj.parts()[j - 1] - i) + 1;
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("hook length product must divide n!");
    return q;
}

/// Full table of χ_λ(μ) for λ, μ ⊢ n, rows and columns in ascending
/// lexicographic order of the part sequences.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> lambdas;
    std::vector<CycleType> mus;
    std::vector<std::vector<CharValue>> values;  // values[i][j] = χ_{λ_i}(μ_j)

    const CharValue& at(const Partition& lam, const CycleType& mu) const {
        auto li = std::lower_bound(lambdas.begin(), lambdas.end(), lam);
        auto mi = std::lower_bound(mus.begin(), mus.end(), mu);
        if (li == lambdas.end() || !(*li == lam) || mi == mus.end() || !(*mi == mu))
            throw std::invalid_argument("label not in table");
        return values[li - lambdas.begin()][mi - mus.begin()];
    }
};

namespace detail {

// Static row slicing; one Evaluator per worker keeps results identical for
// every worker count.
template <typename RowFn>
inline void run_rows(std::size_t rows, int workers, RowFn&& fn) {
    if (workers <= 1) {
        Evaluator ev;
        for (std::size_t i = 0; i < rows; ++i) fn(ev, i);
        return;
    }
    std::size_t chunk = (rows + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(rows, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &fn] {
            Evaluator ev;
            for (std::size_t i = lo; i < hi; ++i) fn(ev, i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace detail

inline CharacterTable character_table(int n, int budget = 14, int workers = 1) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > budget)
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the table budget " +
                                    std::to_string(budget));
    CharacterTable t;
    t.n = n;
    t.lambdas = all_partitions(n);
    t.mus.reserve(t.lambdas.size());
    for (const auto& p : t.lambdas) t.mus.push_back(CycleType(p.parts()));
    t.values.assign(t.lambdas.size(), {});
    detail::run_rows(t.lambdas.size(), workers, [&t](Evaluator& ev, std::size_t i) {
        auto& row = t.values[i];
        row.reserve(t.mus.size());
        for (const auto& mu : t.mus) row.push_back(ev.evaluate(t.lambdas[i], mu));
    });
    return t;
}

struct OrthogonalityEntry {
    CycleType mu, nu;
    BigInt inner;     // Σ_λ χ_λ(μ)·χ_λ(ν)
    BigInt expected;  // z_μ when μ = ν, else 0
    bool pass = false;
};

struct OrthogonalityReport {
    int n = 0;
    bool all_pass = false;
    std::vector<OrthogonalityEntry> entries;  // unordered column pairs, μ ≤ ν
};

/// Column orthogonality of the full table against the centralizer orders.
inline OrthogonalityReport orthogonality_check(int n, int budget = 14, int workers = 1) {
    CharacterTable t = character_table(n, budget, workers);
    OrthogonalityReport rep;
    rep.n = n;
    rep.all_pass = true;
    for (std::size_t a = 0; a < t.mus.size(); ++a) {
        for (std::size_t b = a; b < t.mus.size(); ++b) {
            OrthogonalityEntry e;
            e.mu = t.mus[a];
            e.nu = t.mus[b];
            e.inner = 0;
            for (std::size_t i = 0; i < t.lambdas.size(); ++i)
                e.inner += t.values[i][a] * t.values[i][b];
            e.expected = (a == b) ? centralizer_order(t.mus[a]) : BigInt(0);
            e.pass = e.inner == e.expected;
            rep.all_pass = rep.all_pass && e.pass;
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

}  // namespace snchar
