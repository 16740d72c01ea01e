#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "snchar/partition.hpp"

namespace snchar {

/// Position of a rim hook relative to the Durfee corner (d,d).
enum class HookClass { left, central, right };

inline std::string_view to_string(HookClass c) {
    switch (c) {
        case HookClass::left: return "left";
        case HookClass::central: return "central";
        case HookClass::right: return "right";
    }
    return "?";
}

/// The rim of Y_λ: the cells (x,y) with (x+1,y+1) outside the diagram,
/// ordered so that x−y increases by one at each step. The sequence runs
/// from (1,λ_1) to (λ′_1,1) and consecutive entries are grid neighbours.
struct RimSequence {
    Partition owner;
    std::vector<Cell> cells;
};

inline RimSequence rim_sequence(const Partition& lam) {
    if (lam.empty())
        throw std::invalid_argument("the empty partition has no rim");
    RimSequence rim;
    rim.owner = lam;
    int rows = lam.rows();
    rim.cells.reserve(lam.parts()[0] + rows - 1);
    for (int i = 1; i <= rows; ++i) {
        int lo = (i < rows) ? lam.parts()[i] : 1;  // row i covers columns λ_i down to λ_{i+1}
        for (int j = lam.parts()[i - 1]; j >= lo; --j) rim.cells.push_back({i, j});
    }
    return rim;
}

/// A length-r consecutive rim segment whose first cell is a row end (i,λ_i)
/// and whose last cell is a column end (λ′_j,j); removing it leaves the
/// ordinary partition stored in `remainder`. Indices are 0-based.
struct RimHook {
    int start_index = 0;
    int end_index = 0;
    int length = 0;
    int leg_length = 0;  // rows spanned − 1
    HookClass cls = HookClass::central;
    Cell start_cell{};
    Cell end_cell{};
    Partition remainder;
};

namespace detail {

// Row rewrite for deleting the segment from `start` to `end`: rows strictly
// inside the span shrink to λ_{x+1} − 1, the last spanned row keeps the
// cells left of the segment's final column.
inline Partition remove_segment(const Partition& lam, Cell start, Cell end) {
    std::vector<int> rem;
    rem.reserve(lam.rows());
    for (int x = 1; x <= lam.rows(); ++x) {
        if (x < start.row || x > end.row)
            rem.push_back(lam.parts()[x - 1]);
        else if (x < end.row)
            rem.push_back(lam.parts()[x] - 1);
        else
            rem.push_back(end.col - 1);
    }
    return Partition(std::move(rem));
}

}  // namespace detail

/// Every rim hook of length r, in order of start index. Empty when none
/// exist (including r > n or the empty partition).
inline std::vector<RimHook> enumerate_rim_hooks(const Partition& lam, int r) {
    if (r < 1) throw std::invalid_argument("hook length must be positive");
    std::vector<RimHook> hooks;
    if (lam.empty() || r > lam.n()) return hooks;

    RimSequence rim = rim_sequence(lam);
    const auto& cells = rim.cells;
    int len = static_cast<int>(cells.size());
    Partition conj = lam.conjugate();

    std::vector<char> can_start(len), can_end(len);
    for (int i = 0; i < len; ++i) {
        can_start[i] = cells[i].col == lam.parts()[cells[i].row - 1];
        can_end[i] = cells[i].row == conj.parts()[cells[i].col - 1];
    }
    int diag = lam.parts()[0] - 1;  // rim index of (d,d), where x−y = 0

    for (int s = 0; s + r - 1 < len; ++s) {
        int e = s + r - 1;
        if (!can_start[s] || !can_end[e]) continue;
        RimHook h;
        h.start_index = s;
        h.end_index = e;
        h.length = r;
        h.start_cell = cells[s];
        h.end_cell = cells[e];
        h.leg_length = cells[e].row - cells[s].row;
        int cols_spanned = cells[s].col - cells[e].col + 1;
        if (h.leg_length != r - cols_spanned)
            throw std::logic_error("leg length mismatch between row and column spans");
        h.cls = e < diag ? HookClass::left
                         : (s > diag ? HookClass::right : HookClass::central);
        h.remainder = detail::remove_segment(lam, h.start_cell, h.end_cell);
        if (h.remainder.n() != lam.n() - r)
            throw std::logic_error("rim hook removal lost cells");
        hooks.push_back(std::move(h));
    }
    return hooks;
}

/// Returns h.remainder after checking that h really is a rim hook of lam.
inline Partition remove_rim_hook(const Partition& lam, const RimHook& h) {
    RimSequence rim = rim_sequence(lam);
    int len = static_cast<int>(rim.cells.size());
    if (h.start_index < 0 || h.end_index >= len || h.start_index > h.end_index ||
        h.length != h.end_index - h.start_index + 1 ||
        !(rim.cells[h.start_index] == h.start_cell) ||
        !(rim.cells[h.end_index] == h.end_cell))
        throw std::invalid_argument("rim hook does not match " + lam.to_string());
    Partition rem = detail::remove_segment(lam, h.start_cell, h.end_cell);
    if (rem != h.remainder || rem.n() != lam.n() - h.length)
        throw std::invalid_argument("rim hook does not match " + lam.to_string());
    return rem;
}

struct HookCounts {
    int hooks = 0;
    int central = 0;
};

struct HookCountTable {
    int n = 0;
    int durfee = 0;
    std::vector<HookCounts> by_length;  // entry r−1 holds the counts for length r

    const HookCounts& at(int r) const {
        if (r < 1 || r > n) throw std::out_of_range("hook length out of range");
        return by_length[r - 1];
    }
};

/// t_r and the central count C_r for every r in 1..n, with the built-in
/// checks t_r·r ≤ n and C_r ≤ durfee size.
inline HookCountTable hook_count_table(const Partition& lam) {
    HookCountTable table;
    table.n = lam.n();
    table.durfee = lam.durfee_size();
    table.by_length.resize(table.n);
    for (int r = 1; r <= table.n; ++r) {
        HookCounts& c = table.by_length[r - 1];
        for (const RimHook& h : enumerate_rim_hooks(lam, r)) {
            ++c.hooks;
            if (h.cls == HookClass::central) ++c.central;
        }
        if (static_cast<std::int64_t>(c.hooks) * r > table.n)
            throw std::logic_error("hook count exceeds n/r for " + lam.to_string());
        if (c.central > table.durfee)
            throw std::logic_error("central hook count exceeds the layer count for " +
                                   lam.to_string());
    }
    return table;
}

/// The 2·durfee endpoint candidates: (i,λ_i) for i ≤ d, then (λ′_j,j) for
/// j ≤ d. These are role instances — one cell can fill both roles.
inline std::vector<Cell> special_cells(const Partition& lam) {
    int d = lam.durfee_size();
    Partition conj = lam.conjugate();
    std::vector<Cell> out;
    out.reserve(2 * d);
    for (int i = 1; i <= d; ++i) out.push_back({i, lam.parts()[i - 1]});
    for (int j = 1; j <= d; ++j) out.push_back({conj.parts()[j - 1], j});
    return out;
}

}  // namespace snchar
