#include <doctest.h>

#include <random>
#include <stdexcept>

#include "repsets/errors.hpp"
#include "repsets/intset.hpp"
#include "repsets/repfn.hpp"
#include "repsets/solver.hpp"
#include "repsets/theorems.hpp"

using namespace repsets;

namespace {

PositionProfile punctured1(std::uint32_t m, std::uint32_t r) {
    return PositionProfile::punctured(m, std::vector<std::uint32_t>{r});
}

}  // namespace

TEST_CASE("profile construction and validation") {
    const PositionProfile p = PositionProfile::make(6, std::vector<std::uint32_t>{2},
                                                    std::vector<std::uint32_t>{3});
    CHECK(p.labels[0] == Label::Free);
    CHECK(p.labels[2] == Label::Neither);
    CHECK(p.labels[3] == Label::Both);
    CHECK(p.free_count() == 5);
    CHECK(p.positions(Label::Neither) == std::vector<std::uint32_t>{2});

    CHECK_THROWS_AS(punctured1(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(punctured1(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(PositionProfile::make(5, std::vector<std::uint32_t>{2},
                                          std::vector<std::uint32_t>{2}),
                    std::invalid_argument);
}

TEST_CASE("solve_forced on the punctured examples") {
    const SolveResult a = solve_forced(punctured1(8, 4));
    REQUIRE(a.ok());
    CHECK(a.solution->C == IntSet::parse("0,3,6,7"));
    CHECK(a.solution->D == IntSet::parse("1,2,5,8"));
    CHECK(a.solution->verified_upto == 16);
    CHECK(a.solution->provenance == Provenance::Forced);

    const SolveResult b = solve_forced(punctured1(2, 1));
    REQUIRE(b.ok());
    CHECK(b.solution->C == IntSet::parse("0"));
    CHECK(b.solution->D == IntSet::parse("2"));

    const SolveResult c = solve_forced(punctured1(8, 3));
    CHECK_FALSE(c.ok());
    CHECK(c.failed_at == 3);
}

TEST_CASE("solve_forced on full intervals and shared points") {
    const SolveResult full7 = solve_forced(PositionProfile::full_interval(7));
    REQUIRE(full7.ok());
    CHECK(full7.solution->C == thue_morse_set(3, Side::A));
    CHECK(full7.solution->D == thue_morse_set(3, Side::B));

    const SolveResult shared =
        solve_forced(PositionProfile::shared(6, std::vector<std::uint32_t>{3}));
    REQUIRE(shared.ok());
    CHECK(shared.solution->C == IntSet::parse("0,3,4,5"));
    CHECK(shared.solution->D == IntSet::parse("1,2,3,6"));

    // m = 0 leaves D empty, which is rejected as degenerate
    CHECK_FALSE(solve_forced(PositionProfile::full_interval(0)).ok());

    // all positions removed: forcing succeeds position-wise but D stays empty
    const PositionProfile all_removed =
        PositionProfile::punctured(3, std::vector<std::uint32_t>{1, 2, 3});
    CHECK_FALSE(solve_forced(all_removed).ok());
}

TEST_CASE("enumerate_all on the known instances") {
    const auto sols = enumerate_all(punctured1(8, 4));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].C == IntSet::parse("0,3,6,7"));
    CHECK(sols[0].D == IntSet::parse("1,2,5,8"));
    CHECK(sols[0].provenance == Provenance::Enumerated);

    const auto full7 = enumerate_all(PositionProfile::full_interval(7));
    REQUIRE(full7.size() == 1);
    CHECK(full7[0].C == thue_morse_set(3, Side::A));
    CHECK(full7[0].D == thue_morse_set(3, Side::B));

    CHECK(enumerate_all(punctured1(5, 2)).empty());
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_all(PositionProfile::full_interval(40)), budget_error);
    // wide interval with few free positions stays under the guard and takes
    // the multi-word path
    std::vector<std::uint32_t> removed;
    for (std::uint32_t v = 1; v <= 70; ++v)
        if (v != 35) removed.push_back(v);
    const PositionProfile wide = PositionProfile::punctured(70, removed);
    const auto sols = enumerate_all(wide);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].C == IntSet::parse("0"));
    CHECK(sols[0].D == IntSet::parse("35"));
    const SolveResult forced = solve_forced(wide);
    REQUIRE(forced.ok());
    CHECK(forced.solution->C == sols[0].C);
    CHECK(forced.solution->D == sols[0].D);
}

TEST_CASE("uniqueness and forced/enumerated agreement for m <= 14") {
    for (std::uint32_t m = 2; m <= 14; ++m) {
        for (std::uint32_t r = 1; r < m; ++r) {
            const PositionProfile profile = punctured1(m, r);
            const auto enumerated = enumerate_all(profile);
            const SolveResult forced = solve_forced(profile);
            CHECK(enumerated.size() <= 1);
            CHECK(forced.ok() == !enumerated.empty());
            if (forced.ok()) {
                CHECK(forced.solution->C == enumerated[0].C);
                CHECK(forced.solution->D == enumerated[0].D);
            }
        }
    }
}

TEST_CASE("full-interval agreement for m <= 14") {
    for (std::uint32_t m = 1; m <= 14; ++m) {
        const PositionProfile profile = PositionProfile::full_interval(m);
        const auto enumerated = enumerate_all(profile);
        const SolveResult forced = solve_forced(profile);
        CHECK(enumerated.size() <= 1);
        CHECK(forced.ok() == !enumerated.empty());
        if (forced.ok()) {
            CHECK(forced.solution->C == enumerated[0].C);
            CHECK(forced.solution->D == enumerated[0].D);
        }
    }
}

TEST_CASE("forcing is online-sound: prefixes of a successful run agree") {
    // replay the m = 8, r = 4 run and check R_C(v) = R_D(v) at every prefix
    const SolveResult res = solve_forced(punctured1(8, 4));
    REQUIRE(res.ok());
    const IntSet& c = res.solution->C;
    const IntSet& d = res.solution->D;
    for (std::uint32_t v = 1; v <= 8; ++v) {
        std::vector<std::uint32_t> cm, dm;
        for (std::uint32_t x : c.members())
            if (x <= v) cm.push_back(x);
        for (std::uint32_t x : d.members())
            if (x <= v) dm.push_back(x);
        const IntSet cp = IntSet::from_members(cm, v);
        const IntSet dp = IntSet::from_members(dm, v);
        CHECK(rep_fn_naive(cp, v) == rep_fn_naive(dp, v));
    }
}

TEST_CASE("reflection closure: mirrored profiles solve to mirrored pairs") {
    for (std::uint32_t m = 2; m <= 12; ++m) {
        for (std::uint32_t r = 1; r < m; ++r) {
            const PositionProfile profile = punctured1(m, r);
            const PositionProfile mirrored = profile.reflected();
            CHECK(mirrored.labels[m - r] == Label::Neither);
            const SolveResult a = solve_forced(profile);
            const SolveResult b = solve_forced(mirrored);
            CHECK(a.ok() == b.ok());
            if (a.ok()) {
                IntSet rc = reflect(a.solution->C, m);
                IntSet rd = reflect(a.solution->D, m);
                if (!rc.contains(0)) std::swap(rc, rd);  // normalize the root pin
                CHECK(rc == b.solution->C);
                CHECK(rd == b.solution->D);
            }
        }
    }
}

TEST_CASE("verify_pair") {
    const PositionProfile p84 = punctured1(8, 4);
    CHECK(verify_pair(IntSet::parse("0,3,6,7"), IntSet::parse("1,2,5,8"), p84));
    CHECK(verify_pair(thue_morse_set(3, Side::A), thue_morse_set(3, Side::B),
                      PositionProfile::full_interval(7)));
    // swapped pair: first set misses 0
    CHECK_FALSE(verify_pair(IntSet::parse("1,2,5,8"), IntSet::parse("0,3,6,7"), p84));
    // label mismatch: removed point occupied
    CHECK_FALSE(verify_pair(IntSet::parse("0,3,4,6,7"), IntSet::parse("1,2,5,8"), p84));
    // equal tables but wrong universe
    CHECK_FALSE(verify_pair(IntSet::parse("0,3,6,9"), IntSet::parse("1,2,5,8"), p84));
}

TEST_CASE("multi-point profiles run through both paths consistently") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        const std::uint32_t m = 4 + static_cast<std::uint32_t>(rng() % 9);
        std::vector<std::uint32_t> removed, shared;
        for (std::uint32_t v = 1; v <= m; ++v) {
            const auto roll = rng() % 8;
            if (roll == 0) removed.push_back(v);
            else if (roll == 1) shared.push_back(v);
        }
        const PositionProfile profile = PositionProfile::make(m, removed, shared);
        const auto enumerated = enumerate_all(profile);
        const SolveResult forced = solve_forced(profile);
        CHECK(enumerated.size() <= 1);
        CHECK(forced.ok() == !enumerated.empty());
        if (forced.ok()) {
            CHECK(verify_pair(forced.solution->C, forced.solution->D, profile));
            CHECK(forced.solution->C == enumerated[0].C);
            CHECK(forced.solution->D == enumerated[0].D);
        }
    }
}
