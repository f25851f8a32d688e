// Timing comparison of the parallel kernels against their serial references:
//   1. punctured-grid scan, serial loop vs OpenMP workers
//   2. representation table, naive per-n counting vs word-parallel convolution
// Both comparisons also verify the outputs agree.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "repsets/repfn.hpp"
#include "repsets/report.hpp"
#include "repsets/scan.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_scan(std::uint32_t m_max, int jobs) {
    const repsets::ScanRequest req{repsets::ScanKind::Punctured, m_max};

    auto t0 = Clock::now();
    const auto serial = repsets::scan_serial(req);
    const double t_serial = seconds_since(t0);

    t0 = Clock::now();
    const auto parallel = repsets::scan_parallel(req, jobs);
    const double t_parallel = seconds_since(t0);

    const bool identical = repsets::records_fingerprint(serial) ==
                           repsets::records_fingerprint(parallel);

    std::printf("punctured scan to m = %u (%zu instances)\n", m_max, serial.size());
    std::printf("  serial          %8.3f s\n", t_serial);
    std::printf("  openmp x%-3d     %8.3f s   speedup %.2fx   reports identical: %s\n", jobs,
                t_parallel, t_serial / t_parallel, identical ? "yes" : "NO");
}

void bench_table(std::uint32_t bound, int sets) {
    std::mt19937_64 rng(7);
    std::vector<repsets::IntSet> inputs;
    for (int i = 0; i < sets; ++i) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t v = 0; v <= bound; ++v)
            if (rng() & 1) members.push_back(v);
        inputs.push_back(repsets::IntSet::from_members(members, bound));
    }

    auto t0 = Clock::now();
    std::uint64_t sink_naive = 0;
    for (const auto& s : inputs) {
        const auto table = repsets::rep_fn_table_naive(s);
        sink_naive += table.counts.back() + table.at(bound);
    }
    const double t_naive = seconds_since(t0);

    t0 = Clock::now();
    std::uint64_t sink_fast = 0;
    bool agree = true;
    for (const auto& s : inputs) {
        const auto table = repsets::rep_fn_table(s);
        sink_fast += table.counts.back() + table.at(bound);
    }
    const double t_fast = seconds_since(t0);

    for (const auto& s : inputs)
        if (!(repsets::rep_fn_table(s).counts == repsets::rep_fn_table_naive(s).counts))
            agree = false;

    std::printf("rep table, %d random sets over [0, %u]\n", sets, bound);
    std::printf("  naive           %8.3f s\n", t_naive);
    std::printf("  word-parallel   %8.3f s   speedup %.2fx   tables agree: %s\n", t_fast,
                t_naive / t_fast, agree && sink_naive == sink_fast ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    std::uint32_t scan_max = 256;
    std::uint32_t table_bound = 2048;
    int table_sets = 64;
    int jobs = repsets::resolve_jobs(0);

    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const long value = std::strtol(argv[i + 1], nullptr, 10);
        if (flag == "--scan-max") scan_max = static_cast<std::uint32_t>(value);
        else if (flag == "--table-bound") table_bound = static_cast<std::uint32_t>(value);
        else if (flag == "--table-sets") table_sets = static_cast<int>(value);
        else if (flag == "--jobs") jobs = static_cast<int>(value);
        else {
            std::fprintf(stderr, "unknown flag %s\n", flag.c_str());
            return 2;
        }
    }

    bench_scan(scan_max, jobs);
    bench_table(table_bound, table_sets);
    return 0;
}
