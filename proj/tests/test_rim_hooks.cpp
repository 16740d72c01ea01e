#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "snchar/partition.hpp"
#include "snchar/rim_hooks.hpp"

using namespace snchar;

namespace {

// Oracle: delete the hook's cells from the diagram one by one and re-read
// the row lengths. Independent of the row-rewrite in remove_segment.
Partition remainder_by_cell_deletion(const Partition& lam, const RimHook& h) {
    RimSequence rim = rim_sequence(lam);
    std::set<std::pair<int, int>> removed;
    for (int i = h.start_index; i <= h.end_index; ++i)
        removed.insert({rim.cells[i].row, rim.cells[i].col});
    std::vector<int> rows;
    for (int x = 1; x <= lam.rows(); ++x) {
        int len = 0;
        for (int y = 1; y <= lam.parts()[x - 1]; ++y)
            if (!removed.count({x, y})) ++len;
        // removing a rim hook must leave every row left-justified
        for (int y = 1; y <= len; ++y) REQUIRE_FALSE(removed.count({x, y}));
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

// Oracle: the number of rim hooks of length r equals the number of cells
// whose hook length is r.
std::map<int, int> hook_length_multiset(const Partition& lam) {
    std::map<int, int> counts;
    Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam.parts()[i - 1]; ++j)
            ++counts[(lam.parts()[i - 1] - j) + (conj.parts()[j - 1] - i) + 1];
    return counts;
}

}  // namespace

TEST_CASE("rim sequence of small shapes", "[rimhooks]") {
    auto rim = rim_sequence(Partition::parse("2,1"));
    CHECK(rim.cells == std::vector<Cell>{{1, 2}, {1, 1}, {2, 1}});

    rim = rim_sequence(Partition::parse("4,3,2,1"));
    CHECK(rim.cells == std::vector<Cell>{{1, 4}, {1, 3}, {2, 3}, {2, 2}, {3, 2}, {3, 1}, {4, 1}});

    rim = rim_sequence(Partition::parse("1"));
    CHECK(rim.cells == std::vector<Cell>{{1, 1}});

    CHECK_THROWS_AS(rim_sequence(Partition()), std::invalid_argument);
}

TEST_CASE("rim sequence invariants", "[rimhooks]") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& lam : all_partitions(n)) {
            RimSequence rim = rim_sequence(lam);
            Partition conj = lam.conjugate();
            REQUIRE(static_cast<int>(rim.cells.size()) ==
                    lam.parts()[0] + conj.parts()[0] - 1);
            CHECK(rim.cells.front() == Cell{1, lam.parts()[0]});
            CHECK(rim.cells.back() == Cell{conj.parts()[0], 1});
            for (std::size_t i = 0; i < rim.cells.size(); ++i) {
                Cell c = rim.cells[i];
                CHECK(lam.contains(c));
                CHECK_FALSE(lam.contains({c.row + 1, c.col + 1}));
                if (i) {
                    Cell prev = rim.cells[i - 1];
                    CHECK(c.row - c.col == prev.row - prev.col + 1);
                    CHECK(std::abs(c.row - prev.row) + std::abs(c.col - prev.col) == 1);
                }
            }
            // and every rim candidate is present
            int count = 0;
            for (int x = 1; x <= lam.rows(); ++x)
                for (int y = 1; y <= lam.parts()[x - 1]; ++y)
                    if (!lam.contains({x + 1, y + 1})) ++count;
            CHECK(count == static_cast<int>(rim.cells.size()));
        }
}

TEST_CASE("rim hooks of the staircase of 10", "[rimhooks]") {
    Partition lam = Partition::parse("4,3,2,1");
    auto hooks = enumerate_rim_hooks(lam, 5);
    REQUIRE(hooks.size() == 2);

    CHECK(hooks[0].start_index == 0);
    CHECK(hooks[0].end_index == 4);
    CHECK(hooks[0].start_cell == Cell{1, 4});
    CHECK(hooks[0].end_cell == Cell{3, 2});
    CHECK(hooks[0].leg_length == 2);
    CHECK(hooks[0].cls == HookClass::central);
    CHECK(hooks[0].remainder == Partition::parse("2,1,1,1"));

    CHECK(hooks[1].start_index == 2);
    CHECK(hooks[1].end_index == 6);
    CHECK(hooks[1].start_cell == Cell{2, 3});
    CHECK(hooks[1].end_cell == Cell{4, 1});
    CHECK(hooks[1].leg_length == 2);
    CHECK(hooks[1].cls == HookClass::central);
    CHECK(hooks[1].remainder == Partition::parse("4,1"));
}

TEST_CASE("rim hook edge cases", "[rimhooks]") {
    auto hooks = enumerate_rim_hooks(Partition::parse("2,1"), 3);
    REQUIRE(hooks.size() == 1);
    CHECK(hooks[0].start_index == 0);
    CHECK(hooks[0].end_index == 2);
    CHECK(hooks[0].leg_length == 1);
    CHECK(hooks[0].cls == HookClass::central);
    CHECK(hooks[0].remainder == Partition());

    CHECK(enumerate_rim_hooks(Partition::parse("1"), 2).empty());
    CHECK(enumerate_rim_hooks(Partition(), 1).empty());
    CHECK_THROWS_AS(enumerate_rim_hooks(Partition::parse("2,1"), 0), std::invalid_argument);
}

TEST_CASE("left and right hooks are classified by the Durfee corner", "[rimhooks]") {
    // (5,1) has d=1 and corner (1,1); the 1-hook {(1,5)} precedes it in rim
    // order, the 1-hook {(2,1)} follows it.
    auto hooks = enumerate_rim_hooks(Partition::parse("5,1"), 1);
    REQUIRE(hooks.size() == 2);
    CHECK(hooks[0].start_cell == Cell{1, 5});
    CHECK(hooks[0].cls == HookClass::left);
    CHECK(hooks[1].start_cell == Cell{2, 1});
    CHECK(hooks[1].cls == HookClass::right);

    // every hook contains (d,d) iff it is central
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : all_partitions(n)) {
            int d = lam.durfee_size();
            RimSequence rim = rim_sequence(lam);
            for (int r = 1; r <= n; ++r)
                for (const auto& h : enumerate_rim_hooks(lam, r)) {
                    bool contains_corner = false;
                    for (int i = h.start_index; i <= h.end_index; ++i)
                        contains_corner |= rim.cells[i] == Cell{d, d};
                    CHECK((h.cls == HookClass::central) == contains_corner);
                    // left hooks live strictly above the diagonal, right below
                    if (h.cls == HookClass::left) CHECK(h.end_cell.row < h.end_cell.col);
                    if (h.cls == HookClass::right) CHECK(h.start_cell.row > h.start_cell.col);
                }
        }
}

TEST_CASE("hook endpoints are row and column ends, legs count rows", "[rimhooks]") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : all_partitions(n)) {
            Partition conj = lam.conjugate();
            RimSequence rim = rim_sequence(lam);
            for (int r = 1; r <= n; ++r)
                for (const auto& h : enumerate_rim_hooks(lam, r)) {
                    CHECK(h.length == r);
                    CHECK(h.length == h.end_index - h.start_index + 1);
                    CHECK(h.start_cell.col == lam.parts()[h.start_cell.row - 1]);
                    CHECK(h.end_cell.row == conj.parts()[h.end_cell.col - 1]);
                    std::set<int> rows, cols;
                    for (int i = h.start_index; i <= h.end_index; ++i) {
                        rows.insert(rim.cells[i].row);
                        cols.insert(rim.cells[i].col);
                    }
                    CHECK(h.leg_length == static_cast<int>(rows.size()) - 1);
                    CHECK(h.leg_length == r - static_cast<int>(cols.size()));
                }
        }
}

TEST_CASE("removal agrees with cell deletion", "[rimhooks]") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : all_partitions(n))
            for (int r = 1; r <= n; ++r)
                for (const auto& h : enumerate_rim_hooks(lam, r)) {
                    CHECK(h.remainder == remainder_by_cell_deletion(lam, h));
                    CHECK(h.remainder.n() == n - r);
                    CHECK(remove_rim_hook(lam, h) == h.remainder);
                }
}

TEST_CASE("remove_rim_hook rejects a hook from another shape", "[rimhooks]") {
    Partition lam = Partition::parse("4,3,2,1");
    auto hooks = enumerate_rim_hooks(lam, 5);
    REQUIRE_FALSE(hooks.empty());
    CHECK_THROWS_AS(remove_rim_hook(Partition::parse("3,2,1"), hooks[0]),
                    std::invalid_argument);
    CHECK_THROWS_AS(remove_rim_hook(Partition::parse("4,4,2,1"), hooks[0]),
                    std::invalid_argument);
    RimHook forged = hooks[0];
    forged.remainder = Partition::parse("5");
    CHECK_THROWS_AS(remove_rim_hook(lam, forged), std::invalid_argument);
}

TEST_CASE("hook counts of small shapes", "[rimhooks]") {
    HookCountTable t = hook_count_table(Partition::parse("4,3,2,1"));
    CHECK(t.at(5).hooks == 2);
    CHECK(t.at(5).central == 2);
    CHECK(2 * 5 == t.n);  // equality case

    t = hook_count_table(Partition::parse("2,1"));
    CHECK(t.at(1).hooks == 2);
    CHECK(t.at(2).hooks == 0);  // no 2-segment has both endpoints valid
    CHECK(t.at(3).hooks == 1);

    t = hook_count_table(Partition::parse("1"));
    CHECK(t.at(1).hooks == 1);
    CHECK(t.at(1).central == 1);

    t = hook_count_table(Partition::parse("1,1,1"));
    CHECK(t.at(2).hooks == 1);

    // single-row diagrams have one hook of every length
    t = hook_count_table(Partition::parse("6"));
    for (int r = 1; r <= 6; ++r) CHECK(t.at(r).hooks == 1);

    CHECK(hook_count_table(Partition()).by_length.empty());
}

TEST_CASE("hook counts match the hook length multiset", "[rimhooks]") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& lam : all_partitions(n)) {
            HookCountTable t = hook_count_table(lam);
            auto oracle = hook_length_multiset(lam);
            for (int r = 1; r <= n; ++r) {
                auto it = oracle.find(r);
                CHECK(t.at(r).hooks == (it == oracle.end() ? 0 : it->second));
            }
        }
}

TEST_CASE("hook count bounds over all shapes of n at most 20", "[rimhooks]") {
    for (int n = 1; n <= 20; ++n)
        for (const auto& lam : all_partitions(n)) {
            HookCountTable t = hook_count_table(lam);  // built-in checks throw on violation
            for (int r = 1; r <= n; ++r) {
                CHECK(static_cast<long long>(t.at(r).hooks) * r <= n);
                CHECK(t.at(r).central <= t.durfee);
            }
        }
}

TEST_CASE("non-central hooks obey the arm and leg caps, central hooks the sum rule",
          "[rimhooks]") {
    for (int n = 1; n <= 18; ++n)
        for (const auto& lam : all_partitions(n)) {
            Partition conj = lam.conjugate();
            int d = lam.durfee_size();
            for (int r = 1; r <= n; ++r)
                for (const auto& h : enumerate_rim_hooks(lam, r)) {
                    int i = h.start_cell.row;
                    int j = h.end_cell.col;
                    if (h.cls == HookClass::central) {
                        CHECK(r == 1 + (lam.parts()[i - 1] - i) + (conj.parts()[j - 1] - j));
                    } else if (h.cls == HookClass::left) {
                        REQUIRE(i <= d);
                        CHECK(r <= lam.parts()[i - 1] - i);
                    } else {
                        REQUIRE(j <= d);
                        CHECK(r <= conj.parts()[j - 1] - j);
                    }
                }
        }
}

TEST_CASE("for fixed length no two hooks share an endpoint", "[rimhooks]") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& lam : all_partitions(n))
            for (int r = 1; r <= n; ++r) {
                auto hooks = enumerate_rim_hooks(lam, r);
                std::set<std::pair<int, int>> starts, ends;
                for (const auto& h : hooks) {
                    CHECK(starts.insert({h.start_cell.row, h.start_cell.col}).second);
                    CHECK(ends.insert({h.end_cell.row, h.end_cell.col}).second);
                }
            }
}

TEST_CASE("special cells come in 2d role instances on the rim", "[rimhooks]") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& lam : all_partitions(n)) {
            auto cells = special_cells(lam);
            CHECK(static_cast<int>(cells.size()) == 2 * lam.durfee_size());
            RimSequence rim = rim_sequence(lam);
            for (Cell c : cells)
                CHECK(std::find(rim.cells.begin(), rim.cells.end(), c) != rim.cells.end());
        }
    // a single cell carries both roles
    auto one = special_cells(Partition::parse("1"));
    REQUIRE(one.size() == 2);
    CHECK(one[0] == one[1]);
}
