#include "repsets/cache.hpp"

#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "repsets/errors.hpp"
#include "repsets/report.hpp"

namespace repsets {

std::uint64_t profile_hash(const PositionProfile& profile) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ull;
    };
    for (int i = 0; i < 4; ++i) mix(static_cast<std::uint8_t>(profile.m >> (8 * i)));
    for (Label label : profile.labels) mix(static_cast<std::uint8_t>(label));
    return h;
}

namespace {

std::string hash_to_hex(std::uint64_t h) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t hash_from_hex(const std::string& s) {
    if (s.size() != 18 || s[0] != '0' || s[1] != 'x') throw parse_error("bad profile hash");
    return std::stoull(s.substr(2), nullptr, 16);
}

}  // namespace

CacheLoad load_cache(const std::filesystem::path& path) {
    CacheLoad out;
    std::ifstream in(path);
    if (!in) return out;  // no cache yet
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const nlohmann::json j = nlohmann::json::parse(line);
            CacheEntry entry;
            entry.hash = hash_from_hex(j.at("profile_hash").get<std::string>());
            entry.record = record_from_json(j.at("record"));
            out.entries.push_back(std::move(entry));
        } catch (const std::exception& e) {
            out.warnings.push_back("cache line " + std::to_string(lineno) +
                                   " is corrupt and was skipped: " + e.what());
        }
    }
    return out;
}

void append_cache(const std::filesystem::path& path, std::span<const CacheEntry> entries) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path.string());
    for (const CacheEntry& entry : entries) {
        nlohmann::json j;
        j["profile_hash"] = hash_to_hex(entry.hash);
        j["record"] = record_to_json(entry.record);
        out << j.dump() << '\n';
    }
}

std::vector<ScanRecord> scan_with_cache(const ScanRequest& req,
                                        const std::filesystem::path& cache_path,
                                        int jobs,
                                        CachedScanStats* stats) {
    const CacheLoad loaded = load_cache(cache_path);
    std::unordered_map<std::uint64_t, const ScanRecord*> by_hash;
    for (const CacheEntry& entry : loaded.entries) by_hash[entry.hash] = &entry.record;

    std::vector<ScanRecord> records = scan_grid(req);
    std::vector<std::size_t> misses;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::uint64_t h = profile_hash(records[i].profile());
        auto it = by_hash.find(h);
        // Guard against hash collisions: the cached record must describe the
        // same instance.
        if (it != by_hash.end() && it->second->m == records[i].m &&
            it->second->kind == records[i].kind && it->second->r == records[i].r) {
            const bool anomaly = records[i].anomaly;
            records[i] = *it->second;
            records[i].anomaly = anomaly;
            if (stats) ++stats->cache_hits;
        } else {
            misses.push_back(i);
        }
    }

    if (!misses.empty()) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs < 1 ? 1 : jobs)
#endif
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(misses.size()); ++k)
            solve_record(records[misses[static_cast<std::size_t>(k)]]);

        // Single writer: results are appended once, after the parallel phase.
        std::vector<CacheEntry> fresh;
        fresh.reserve(misses.size());
        for (std::size_t i : misses)
            fresh.push_back({profile_hash(records[i].profile()), records[i]});
        append_cache(cache_path, fresh);
        if (stats) stats->solved += misses.size();
    }

    return records;
}

}  // namespace repsets
