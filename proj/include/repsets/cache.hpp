#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "repsets/scan.hpp"

namespace repsets {

// Stable FNV-1a hash of (m, labels); identical across runs and platforms.
std::uint64_t profile_hash(const PositionProfile& profile);

struct CacheEntry {
    std::uint64_t hash = 0;
    ScanRecord record;
};

struct CacheLoad {
    std::vector<CacheEntry> entries;
    std::vector<std::string> warnings;  // one per corrupt line, naming the line number
};

// Append-only JSONL cache. Loading tolerates corrupt or truncated lines:
// the bad line is reported in warnings and the remaining entries survive.
CacheLoad load_cache(const std::filesystem::path& path);
void append_cache(const std::filesystem::path& path, std::span<const CacheEntry> entries);

struct CachedScanStats {
    std::size_t solved = 0;      // instances actually sent to the solver
    std::size_t cache_hits = 0;  // instances answered from the cache
};

// Scan that skips instances already present in the cache file and appends
// newly solved ones. Cache writes go through a single writer after the
// parallel phase.
std::vector<ScanRecord> scan_with_cache(const ScanRequest& req,
                                        const std::filesystem::path& cache_path,
                                        int jobs,
                                        CachedScanStats* stats = nullptr);

}  // namespace repsets
