#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "repsets/intset.hpp"

namespace repsets {

// Per-position constraint over [0, m]:
//   Free    - the position belongs to exactly one of C, D
//   Neither - removed point, belongs to neither
//   Both    - shared point, belongs to both
enum class Label : std::uint8_t { Free, Neither, Both };

struct PositionProfile {
    std::uint32_t m = 0;
    std::vector<Label> labels;  // size m+1; labels[0] is always Free (0 is pinned to C)

    static PositionProfile full_interval(std::uint32_t m);
    static PositionProfile punctured(std::uint32_t m, std::span<const std::uint32_t> removed);
    static PositionProfile shared(std::uint32_t m, std::span<const std::uint32_t> shared_points);
    static PositionProfile make(std::uint32_t m,
                                std::span<const std::uint32_t> removed,
                                std::span<const std::uint32_t> shared_points);

    std::vector<std::uint32_t> positions(Label which) const;
    std::size_t free_count() const;

    // Mirror image: labels reversed end-to-end. Requires labels[m] == Free so
    // the result is again a valid profile.
    PositionProfile reflected() const;

    bool operator==(const PositionProfile&) const = default;
};

enum class Provenance : std::uint8_t { Forced, Enumerated };

struct PartitionSolution {
    IntSet C;
    IntSet D;
    std::uint32_t verified_upto = 0;  // always 2m
    Provenance provenance = Provenance::Forced;
};

struct SolveResult {
    std::optional<PartitionSolution> solution;
    // When infeasible: the position v where forcing had no consistent
    // assignment, or the tail index n in (m, 2m] where verification failed,
    // or m when the forced D came out empty.
    std::uint32_t failed_at = 0;

    bool ok() const { return solution.has_value(); }
};

// Incremental forcing: processes v = 1..m, derives the unique class of each
// position from R_C(v) = R_D(v), then verifies the tail (m, 2m] with full
// representation tables. At most one partition can exist per profile.
SolveResult solve_forced(const PositionProfile& profile);

// Brute-force oracle: tries all 2^(#Free - 1) assignments (position 0 pinned
// to C) and returns every pair with identical representation functions.
// Throws budget_error when the profile has more than 28 Free positions.
std::vector<PartitionSolution> enumerate_all(const PositionProfile& profile);

// True iff (C, D) matches the profile's labels, 0 is in C, and the
// representation functions agree on [1, 2m].
bool verify_pair(const IntSet& c, const IntSet& d, const PositionProfile& profile);

}  // namespace repsets
