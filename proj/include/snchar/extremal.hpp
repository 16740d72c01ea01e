#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "snchar/bigint.hpp"
#include "snchar/partition.hpp"

namespace snchar {

/// Parameters of the witness family: strictly decreasing arms
/// a_1 > … > a_k ≥ 0 and a hook length r ≥ a_1 + 1. Character-value
/// predictions additionally need every arm and r odd. With fixed_point set,
/// the arms are the first k−1 coordinates; the construction appends a zero.
struct ExtremalSpec {
    std::vector<int> arms;
    int hook_length = 0;
    bool fixed_point = false;
};

namespace detail {

inline void check_arms(const std::vector<int>& arms, int r) {
    if (arms.empty()) throw std::invalid_argument("at least one arm required");
    for (std::size_t i = 0; i < arms.size(); ++i) {
        if (arms[i] < 0) throw std::invalid_argument("arms must be non-negative");
        if (i && arms[i - 1] <= arms[i])
            throw std::invalid_argument("arms must be strictly decreasing");
    }
    if (r < arms.front() + 1)
        throw std::invalid_argument("hook length must be at least a_1 + 1");
}

inline std::vector<int> mirrored_legs(const std::vector<int>& arms, int r) {
    std::vector<int> legs;
    legs.reserve(arms.size());
    for (auto it = arms.rbegin(); it != arms.rend(); ++it)
        legs.push_back(r - 1 - *it);  // b_j = r − 1 − a_{k+1−j}
    return legs;
}

}  // namespace detail

/// The k-layer diagram (a_1,…,a_k | r−1−a_k,…,r−1−a_1): kr cells and
/// exactly k rim hooks of length r, all central; removing any one deletes
/// one arm and its mirrored leg.
inline Partition build_symmetric(const ExtremalSpec& spec) {
    if (spec.fixed_point)
        throw std::invalid_argument("fixed_point spec passed to build_symmetric");
    detail::check_arms(spec.arms, spec.hook_length);
    return from_frobenius(
        FrobeniusCoords(spec.arms, detail::mirrored_legs(spec.arms, spec.hook_length)));
}

/// λ = (2k,2k−1,…,2,1) with k cycles of length 2k+1: the smallest member
/// of the odd-arm family for each k.
inline std::pair<Partition, CycleType> staircase(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    ExtremalSpec spec;
    spec.arms.reserve(k);
    for (int i = 0; i < k; ++i) spec.arms.push_back(2 * (k - i) - 1);
    spec.hook_length = 2 * k + 1;
    Partition lam = build_symmetric(spec);
    CycleType mu(std::vector<int>(k, 2 * k + 1));
    return {std::move(lam), std::move(mu)};
}

/// λ = (a_1,…,a_{k−1},0 | r−1−a_{k−1},…,r−1−a_1,0) paired with the class
/// (r,…,r,1): n = 1 + r(k−1), k layers, and (k,k) is a removable corner.
inline std::pair<Partition, CycleType> build_fixed_point(const ExtremalSpec& spec) {
    if (!spec.fixed_point)
        throw std::invalid_argument("spec is not flagged fixed_point");
    detail::check_arms(spec.arms, spec.hook_length);
    for (int a : spec.arms)
        if (a % 2 == 0) throw std::invalid_argument("fixed-point arms must be odd");
    if (spec.hook_length % 2 == 0 || spec.hook_length <= spec.arms.front())
        throw std::invalid_argument("fixed-point hook length must be odd and exceed a_1");

    std::vector<int> arms = spec.arms;
    arms.push_back(0);
    std::vector<int> legs = detail::mirrored_legs(spec.arms, spec.hook_length);
    legs.push_back(0);
    Partition lam = from_frobenius(FrobeniusCoords(std::move(arms), std::move(legs)));

    std::vector<int> cycles(spec.arms.size(), spec.hook_length);
    cycles.push_back(1);
    return {std::move(lam), CycleType(std::move(cycles))};
}

/// Predicted χ value on k disjoint r-cycles for the odd-arm family.
/// magnitude is k!. Two closed forms for the sign circulate:
/// (−1)^{k(k+1)/2} from unrolling the removal recursion with base χ_∅ = 1,
/// and (−1)^{C(k,2)}. They disagree for odd k; direct evaluation
/// (χ_{(2,1)}((3)) = −1) confirms the former, so tests bind to `sign` and
/// reports print both.
struct SharpPrediction {
    BigInt magnitude;
    int sign = 1;           // (−1)^{k(k+1)/2}
    int binomial_sign = 1;  // (−1)^{k(k−1)/2}
};

inline SharpPrediction predicted_value(int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    SharpPrediction p;
    p.magnitude = factorial(k);
    p.sign = (k * (k + 1) / 2) % 2 ? -1 : 1;
    p.binomial_sign = (k * (k - 1) / 2) % 2 ? -1 : 1;
    return p;
}

/// All odd-arm witnesses (λ, r^k) with kr ≤ n_max, deduplicated and sorted
/// by (n, λ, μ).
inline std::vector<std::pair<Partition, CycleType>> enumerate_family(int k, int n_max) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<std::pair<Partition, CycleType>> out;
    for (int r = 1; static_cast<long long>(k) * r <= n_max; r += 2) {
        std::vector<int> arms;
        auto rec = [&](auto&& self, int next_max) -> void {
            if (static_cast<int>(arms.size()) == k) {
                ExtremalSpec spec{arms, r, false};
                out.emplace_back(build_symmetric(spec), CycleType(std::vector<int>(k, r)));
                return;
            }
            for (int a = next_max; a >= 1; a -= 2) {
                arms.push_back(a);
                self(self, a - 2);
                arms.pop_back();
            }
        };
        rec(rec, r - 2);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.n() != b.first.n()) return a.first.n() < b.first.n();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace snchar
