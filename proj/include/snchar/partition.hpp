#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snchar/bigint.hpp"

namespace snchar {

/// Diagram coordinates, 1-indexed, rows growing downward.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

/* Shared text grammar for partitions and cycle types: an optional
 * surrounding [ ] pair, comma-separated integers, whitespace allowed
 * around every token but not inside a number. */
inline std::vector<int> parse_int_list(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("unbalanced '[' in \"" + std::string(text) + "\"");
        s = trim(s.substr(1, s.size() - 2));
    } else if (!s.empty() && s.back() == ']') {
        throw std::invalid_argument("unbalanced ']' in \"" + std::string(text) + "\"");
    }
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string tok{trim(
            s.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                          : comma - pos))};
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: \"" + tok + "\"");
        }
        if (used != tok.size())
            throw std::invalid_argument("not an integer: \"" + tok + "\"");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string format_int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += ']';
    return s;
}

}  // namespace detail

/// A partition: weakly decreasing positive parts. Zero parts are accepted
/// on input and stripped; the empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) {
        long long total = 0;
        for (int p : parts) {
            if (p < 0) throw std::invalid_argument("negative part in partition");
            total += p;
        }
        if (total > 1000000)
            throw std::invalid_argument("partition too large");
        std::erase(parts, 0);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw std::invalid_argument("parts must be weakly decreasing");
        parts_ = std::move(parts);
        n_ = static_cast<int>(total);
    }

    static Partition parse(std::string_view text) {
        return Partition(detail::parse_int_list(text));
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int n() const { return n_; }

    /// λ_i for 1-based i; zero beyond the last row.
    int row_length(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    /// λ′_j for 1-based j: the number of rows with at least j cells.
    int col_length(int j) const {
        if (j < 1) return 0;
        int c = 0;
        for (int p : parts_) {
            if (p >= j) ++c;
            else break;
        }
        return c;
    }

    bool contains(Cell c) const {
        return c.row >= 1 && c.row <= rows() && c.col >= 1 && c.col <= parts_[c.row - 1];
    }

    Partition conjugate() const {
        std::vector<int> conj(parts_.empty() ? 0 : parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return Partition(std::move(conj));
    }

    /// Largest d with λ_d ≥ d: the side of the inscribed square, and the
    /// number of layers of the diagram.
    int durfee_size() const {
        int d = 0;
        while (d < rows() && parts_[d] >= d + 1) ++d;
        return d;
    }

    /// Canonical text form, e.g. "[4,3,2,1]"; "[]" for the empty partition.
    std::string to_string() const { return detail::format_int_list(parts_); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// min(row, col); the index of the layer a cell belongs to.
inline int layer_of(const Partition& lam, Cell c) {
    if (!lam.contains(c))
        throw std::invalid_argument("cell (" + std::to_string(c.row) + "," +
                                    std::to_string(c.col) + ") outside " + lam.to_string());
    return std::min(c.row, c.col);
}

/// Diagonal coordinates (a_1,…,a_k | b_1,…,b_k): a_i = λ_i − i and
/// b_j = λ′_j − j for i, j up to the Durfee size. Both sequences are
/// strictly decreasing and non-negative; k = 0 encodes the empty partition.
struct FrobeniusCoords {
    std::vector<int> arm;
    std::vector<int> leg;

    FrobeniusCoords() = default;
    FrobeniusCoords(std::vector<int> a, std::vector<int> b)
        : arm(std::move(a)), leg(std::move(b)) {
        if (arm.size() != leg.size())
            throw std::invalid_argument("arm and leg sequences differ in length");
        for (const auto* seq : {&arm, &leg}) {
            for (std::size_t i = 0; i < seq->size(); ++i) {
                if ((*seq)[i] < 0)
                    throw std::invalid_argument("negative Frobenius coordinate");
                if (i && (*seq)[i - 1] <= (*seq)[i])
                    throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
            }
        }
    }

    int k() const { return static_cast<int>(arm.size()); }

    int n() const {
        long long total = k();
        for (int a : arm) total += a;
        for (int b : leg) total += b;
        return static_cast<int>(total);
    }

    std::string to_string() const {
        std::string a = detail::format_int_list(arm);
        std::string b = detail::format_int_list(leg);
        return "(" + a.substr(1, a.size() - 2) + "|" + b.substr(1, b.size() - 2) + ")";
    }

    bool operator==(const FrobeniusCoords&) const = default;
};

inline FrobeniusCoords to_frobenius(const Partition& lam) {
    int d = lam.durfee_size();
    Partition conj = lam.conjugate();
    std::vector<int> arm(d), leg(d);
    for (int i = 1; i <= d; ++i) arm[i - 1] = lam.parts()[i - 1] - i;
    for (int j = 1; j <= d; ++j) leg[j - 1] = conj.parts()[j - 1] - j;
    return FrobeniusCoords(std::move(arm), std::move(leg));
}

inline Partition from_frobenius(const FrobeniusCoords& f) {
    int k = f.k();
    std::vector<int> rows;
    for (int i = 1; i <= k; ++i) rows.push_back(f.arm[i - 1] + i);
    // rows below the Durfee square are read off the column heights b_j + j
    int total_rows = k ? f.leg[0] + 1 : 0;
    for (int i = k + 1; i <= total_rows; ++i) {
        int len = 0;
        for (int j = 1; j <= k; ++j)
            if (f.leg[j - 1] + j >= i) ++len;
        rows.push_back(len);
    }
    Partition lam(std::move(rows));
    if (lam.n() != f.n() || to_frobenius(lam) != f)
        throw std::logic_error("inconsistent Frobenius reconstruction for " + f.to_string());
    return lam;
}

/// A conjugacy class of S_n: the multiset of cycle lengths, fixed points
/// included, stored in weakly decreasing order. k counts every part.
class CycleType {
public:
    CycleType() = default;

    explicit CycleType(std::vector<int> cycles) : cycles_(std::move(cycles)) {
        long long total = 0;
        for (int c : cycles_) {
            if (c < 1) throw std::invalid_argument("cycle lengths must be positive");
            total += c;
        }
        if (total > 1000000)
            throw std::invalid_argument("cycle type too large");
        std::sort(cycles_.rbegin(), cycles_.rend());
        n_ = static_cast<int>(total);
    }

    static CycleType parse(std::string_view text) {
        return CycleType(detail::parse_int_list(text));
    }

    const std::vector<int>& cycles() const { return cycles_; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(cycles_.size()); }
    bool has_fixed_point() const { return !cycles_.empty() && cycles_.back() == 1; }

    std::string to_string() const { return detail::format_int_list(cycles_); }

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;

private:
    std::vector<int> cycles_;
    int n_ = 0;
};

/// z_μ = Π_r r^{m_r}·m_r! over the distinct cycle lengths r with multiplicity m_r.
inline BigInt centralizer_order(const CycleType& mu) {
    BigInt z = 1;
    const auto& c = mu.cycles();
    for (std::size_t i = 0; i < c.size();) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        int m = static_cast<int>(j - i);
        for (int t = 1; t <= m; ++t) {
            z *= c[i];
            z *= t;
        }
        i = j;
    }
    return z;
}

/// All partitions of n, ascending lexicographic on part sequences
/// ((1,1,…,1) first, (n) last).
inline std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int f = 1; f <= std::min(rem, maxp); ++f) {
            cur.push_back(f);
            self(self, rem - f, f);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace snchar
