#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repsets/intset.hpp"
#include "repsets/solver.hpp"

namespace repsets {

enum class ScanKind : std::uint8_t { Punctured, FullInterval, SharedPoint };

// Classification of one (m, profile) instance.
struct ScanRecord {
    std::uint32_t m = 0;
    ScanKind kind = ScanKind::Punctured;
    std::optional<std::uint32_t> r;  // removed / shared point; empty for full intervals
    bool solution = false;
    bool matches_theorem = false;
    bool anomaly = false;  // the punctured (2,1) edge case, reported outside the theorem grid
    IntSet C;              // populated when solution
    IntSet D;
    std::int64_t solve_micros = 0;

    PositionProfile profile() const;
};

struct ScanRequest {
    ScanKind kind = ScanKind::Punctured;
    std::uint32_t m_max = 0;
};

// Largest m_max a scan accepts before the budget guard trips.
inline constexpr std::uint32_t kScanBudgetMax = 1024;

// The closed-form predicate each record is compared against:
//   Punctured:    solvable iff m = 2^l, r = 2^{l-1}, l >= 2
//   FullInterval: solvable iff m = 2^l - 1, l >= 1
//   SharedPoint:  solvable iff m = 2^{2l+1} - 2, r = 2^{2l} - 1, l >= 1
bool theorem_predicts_solution(ScanKind kind, std::uint32_t m, std::optional<std::uint32_t> r);

// Instance grids, in deterministic (m, r) order:
//   Punctured:    the (2,1) anomaly instance, then all 2 <= r < m <= m_max
//   FullInterval: all 1 <= m <= m_max
//   SharedPoint:  all 0 < r < m, 2 <= m <= m_max
// scan_grid returns the unsolved skeleton records; solve_record fills one in.
std::vector<ScanRecord> scan_grid(const ScanRequest& req);
void solve_record(ScanRecord& rec);

// Serial and parallel paths produce identical reports up to solve_micros.
std::vector<ScanRecord> scan_serial(const ScanRequest& req);
std::vector<ScanRecord> scan_parallel(const ScanRequest& req, int jobs);
std::vector<ScanRecord> scan(const ScanRequest& req, int jobs = 1);

// Worker count: explicit request if >= 1, else the REPFN_JOBS environment
// variable, else the hardware default.
int resolve_jobs(int requested);

}  // namespace repsets
