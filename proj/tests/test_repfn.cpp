#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "repsets/intset.hpp"
#include "repsets/repfn.hpp"

using namespace repsets;

namespace {

// Independent oracle: literal double loop over sorted member pairs, written
// against std::set so it shares nothing with the library path.
std::uint32_t oracle_pairs(const std::set<std::uint32_t>& s, std::uint32_t n) {
    std::uint32_t count = 0;
    for (std::uint32_t a : s)
        for (std::uint32_t b : s)
            if (a < b && a + b == n) ++count;
    return count;
}

std::set<std::uint32_t> as_std_set(const IntSet& s) {
    const auto m = s.members();
    return {m.begin(), m.end()};
}

IntSet random_subset(std::mt19937_64& rng, std::uint32_t bound) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v <= bound; ++v)
        if (rng() % 3 == 0) members.push_back(v);
    return IntSet::from_members(members, bound);
}

}  // namespace

TEST_CASE("rep_fn_naive frozen examples (values fixed by the pair oracle)") {
    CHECK(oracle_pairs({0, 3, 6, 7}, 7) == 1);
    CHECK(rep_fn_naive(IntSet::parse("0,3,6,7"), 7) == 1);
    CHECK(rep_fn_naive(IntSet::parse("0"), 5) == 0);
    CHECK(oracle_pairs({1, 2, 5, 8}, 7) == 1);
    CHECK(rep_fn_naive(IntSet::parse("1,2,5,8"), 7) == 1);
}

TEST_CASE("rep_fn_table examples") {
    CHECK(rep_fn_table(IntSet::parse("0,3,5,6")).at(8) == 1);
    CHECK(rep_fn_table(IntSet::parse("1,2,4,7")).at(8) == 1);
    const RepTable empty = rep_fn_table(IntSet());
    for (std::uint32_t c : empty.counts) CHECK(c == 0);
}

TEST_CASE("rep_fn_table invariants") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const IntSet s = random_subset(rng, 100);
        const RepTable table = rep_fn_table(s);
        CHECK(table.at(0) == 0);
        for (std::uint32_t n = 0; n < table.counts.size(); ++n)
            CHECK(table.counts[n] <= (n + 1) / 2);
        if (!s.empty())
            for (std::uint32_t n = 2 * s.max() + 1; n < table.counts.size(); ++n)
                CHECK(table.counts[n] == 0);
    }
    // equality case of the bound: a full interval
    std::vector<std::uint32_t> all;
    for (std::uint32_t v = 0; v <= 9; ++v) all.push_back(v);
    const RepTable full = rep_fn_table(IntSet::from_members(all, 9));
    CHECK(full.at(9) == 5);  // floor((9+1)/2)
    CHECK(full.at(8) == 4);
}

TEST_CASE("word-parallel table equals the naive table on random sets") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const std::uint32_t bound = static_cast<std::uint32_t>(rng() % 257);
        const IntSet s = random_subset(rng, bound);
        CHECK(rep_fn_table(s).counts == rep_fn_table_naive(s).counts);
    }
}

TEST_CASE("rep_fn matches the pair oracle per-n") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const IntSet s = random_subset(rng, 64);
        const auto ref = as_std_set(s);
        for (std::uint32_t n = 0; n <= 128; ++n)
            CHECK(rep_fn_naive(s, n) == oracle_pairs(ref, n));
    }
}

TEST_CASE("rep_tables_equal examples") {
    CHECK(rep_tables_equal(IntSet::parse("0,3,5,6"), IntSet::parse("1,2,4,7"), 14));
    CHECK(rep_tables_equal(IntSet::parse("0,3,6,7"), IntSet::parse("1,2,5,8"), 16));
    CHECK_FALSE(rep_tables_equal(IntSet::parse("0,1"), IntSet::parse("0,2"), 4));
}

TEST_CASE("reflection law: R_{m-S}(k) = R_S(2m-k)") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 40; ++i) {
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 128);
        const IntSet s = random_subset(rng, m);
        const RepTable ts = rep_fn_table(s);
        const RepTable tr = rep_fn_table(reflect(s, m));
        for (std::uint32_t k = 0; k <= 2 * m; ++k)
            CHECK(tr.at(k) == ts.at(2 * m - k));
    }
}

TEST_CASE("check_eq10_identity examples") {
    CHECK(check_eq10_identity(IntSet::parse("0,3,6,7"), 8, 4));
    CHECK_FALSE(check_eq10_identity(IntSet::parse("0,1"), 4, 2));
    CHECK(check_eq10_identity(IntSet::parse("0"), 2, 1));
}

TEST_CASE("check_eq10_identity rejects bad inputs") {
    CHECK_THROWS_AS(check_eq10_identity(IntSet::parse("1,2"), 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_eq10_identity(IntSet::parse("0,3"), 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_eq10_identity(IntSet::parse("0,9"), 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_eq10_identity(IntSet::parse("0,1"), 4, 0), std::invalid_argument);
}

TEST_CASE("eq10 identity holds iff the complementary pair shares its table") {
    std::mt19937_64 rng(25);
    int holds = 0;
    for (int i = 0; i < 60; ++i) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 63);
        const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng() % (m - 1));
        std::vector<std::uint32_t> cm{0}, dm;
        for (std::uint32_t v = 1; v <= m; ++v) {
            if (v == r) continue;
            if (rng() & 1) cm.push_back(v);
            else dm.push_back(v);
        }
        const IntSet c = IntSet::from_members(cm, m);
        const IntSet d = IntSet::from_members(dm, m);
        const bool identity = check_eq10_identity(c, m, r);
        CHECK(identity == rep_tables_equal(c, d, 2 * m));
        holds += identity;
    }
    // regression guard: the positive branch must also be exercised
    CHECK(check_eq10_identity(IntSet::parse("0,3,6,7"), 8, 4));
}

TEST_CASE("IndicatorPoly mirrors membership") {
    const IndicatorPoly p = IndicatorPoly::from_set(IntSet::parse("0,2,5"), 6);
    CHECK(p.coefficients == std::vector<std::int64_t>{1, 0, 1, 0, 0, 1, 0});
    CHECK_THROWS_AS(IndicatorPoly::from_set(IntSet::parse("0,9"), 6), std::invalid_argument);
}
