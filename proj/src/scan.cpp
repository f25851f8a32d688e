#include "repsets/scan.hpp"

#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "repsets/errors.hpp"

namespace repsets {

PositionProfile ScanRecord::profile() const {
    switch (kind) {
        case ScanKind::Punctured: {
            const std::uint32_t rr = *r;
            return PositionProfile::punctured(m, std::span{&rr, 1});
        }
        case ScanKind::FullInterval:
            return PositionProfile::full_interval(m);
        case ScanKind::SharedPoint: {
            const std::uint32_t rr = *r;
            return PositionProfile::shared(m, std::span{&rr, 1});
        }
    }
    throw std::logic_error("unreachable");
}

bool theorem_predicts_solution(ScanKind kind, std::uint32_t m, std::optional<std::uint32_t> r) {
    switch (kind) {
        case ScanKind::Punctured:
            return m >= 4 && std::has_single_bit(m) && r && *r == m / 2;
        case ScanKind::FullInterval:
            return m >= 1 && std::has_single_bit(m + 1);
        case ScanKind::SharedPoint: {
            if (!r || *r < 3 || m != 2 * *r) return false;
            const std::uint32_t rp1 = *r + 1;  // must be 4^l with l >= 1
            return std::has_single_bit(rp1) && (std::countr_zero(rp1) % 2 == 0);
        }
    }
    return false;
}

std::vector<ScanRecord> scan_grid(const ScanRequest& req) {
    if (req.m_max > kScanBudgetMax)
        throw budget_error("scan budget guard: m_max " + std::to_string(req.m_max) +
                           " exceeds " + std::to_string(kScanBudgetMax));
    if (2 * std::uint64_t{req.m_max} > universe_cap())
        throw capacity_error("scan requires universe cap >= 2 * m_max");

    std::vector<ScanRecord> out;
    auto push = [&](std::uint32_t m, std::optional<std::uint32_t> r, bool anomaly) {
        ScanRecord rec;
        rec.m = m;
        rec.kind = req.kind;
        rec.r = r;
        rec.anomaly = anomaly;
        out.push_back(std::move(rec));
    };
    switch (req.kind) {
        case ScanKind::Punctured:
            // The (2,1) instance sits outside the theorem grid; it is scanned
            // anyway and flagged. The regular grid is 2 <= r < m: the r = 1
            // column collapses to m = 2 and is covered by the anomaly record.
            if (req.m_max >= 2) push(2, 1, true);
            for (std::uint32_t m = 3; m <= req.m_max; ++m)
                for (std::uint32_t r = 2; r < m; ++r) push(m, r, false);
            break;
        case ScanKind::FullInterval:
            for (std::uint32_t m = 1; m <= req.m_max; ++m) push(m, std::nullopt, false);
            break;
        case ScanKind::SharedPoint:
            for (std::uint32_t m = 2; m <= req.m_max; ++m)
                for (std::uint32_t r = 1; r < m; ++r) push(m, r, false);
            break;
    }
    return out;
}

void solve_record(ScanRecord& rec) {
    const PositionProfile profile = rec.profile();

    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res = solve_forced(profile);
    const auto t1 = std::chrono::steady_clock::now();
    rec.solve_micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

    rec.solution = res.ok();
    if (res.ok()) {
        rec.C = std::move(res.solution->C);
        rec.D = std::move(res.solution->D);
    }
    // The anomaly record is reported, not judged against the predicate.
    rec.matches_theorem =
        rec.anomaly || (rec.solution == theorem_predicts_solution(rec.kind, rec.m, rec.r));
}

std::vector<ScanRecord> scan_serial(const ScanRequest& req) {
    std::vector<ScanRecord> records = scan_grid(req);
    for (ScanRecord& rec : records) solve_record(rec);
    return records;
}

std::vector<ScanRecord> scan_parallel(const ScanRequest& req, int jobs) {
    std::vector<ScanRecord> records = scan_grid(req);
    std::exception_ptr error;

#ifdef _OPENMP
    if (jobs < 1) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(records.size()); ++i) {
        try {
            solve_record(records[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
#else
    (void)jobs;
    for (ScanRecord& rec : records) solve_record(rec);
#endif

    if (error) std::rethrow_exception(error);
    return records;
}

std::vector<ScanRecord> scan(const ScanRequest& req, int jobs) {
    return jobs <= 1 ? scan_serial(req) : scan_parallel(req, jobs);
}

int resolve_jobs(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("REPFN_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace repsets
