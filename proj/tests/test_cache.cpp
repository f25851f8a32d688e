#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "repsets/cache.hpp"
#include "repsets/report.hpp"
#include "repsets/scan.hpp"

using namespace repsets;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const char* name) : path(fs::temp_directory_path() / name) {
        fs::remove(path);
    }
    ~TempFile() { fs::remove(path); }
};

std::vector<CacheEntry> entries_for(const ScanRequest& req) {
    std::vector<CacheEntry> out;
    for (const ScanRecord& rec : scan_serial(req))
        out.push_back({profile_hash(rec.profile()), rec});
    return out;
}

}  // namespace

TEST_CASE("profile_hash is stable and separates instances") {
    const auto p1 = PositionProfile::punctured(8, std::vector<std::uint32_t>{4});
    const auto p2 = PositionProfile::punctured(8, std::vector<std::uint32_t>{3});
    const auto p3 = PositionProfile::shared(8, std::vector<std::uint32_t>{4});
    CHECK(profile_hash(p1) == profile_hash(p1));
    CHECK(profile_hash(p1) != profile_hash(p2));
    CHECK(profile_hash(p1) != profile_hash(p3));
    // frozen value: the cache format depends on this hash staying put
    CHECK(profile_hash(PositionProfile::full_interval(1)) == 0xfb4e98c73babab04ull);
}

TEST_CASE("cache round trip") {
    TempFile tmp("repsets_cache_roundtrip.jsonl");
    const auto entries = entries_for({ScanKind::FullInterval, 3});
    REQUIRE(entries.size() == 3);
    append_cache(tmp.path, entries);

    const CacheLoad loaded = load_cache(tmp.path);
    CHECK(loaded.warnings.empty());
    REQUIRE(loaded.entries.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(loaded.entries[i].hash == entries[i].hash);
        CHECK(records_fingerprint({&loaded.entries[i].record, 1}) ==
              records_fingerprint({&entries[i].record, 1}));
        CHECK(loaded.entries[i].record.solve_micros == entries[i].record.solve_micros);
    }
}

TEST_CASE("truncated final line is skipped with a warning") {
    TempFile tmp("repsets_cache_truncated.jsonl");
    const auto entries = entries_for({ScanKind::FullInterval, 3});
    append_cache(tmp.path, entries);

    // chop the file mid-way through the last line
    auto size = fs::file_size(tmp.path);
    fs::resize_file(tmp.path, size - 25);

    const CacheLoad loaded = load_cache(tmp.path);
    CHECK(loaded.entries.size() == 2);
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("corrupt middle line is skipped, later entries survive") {
    TempFile tmp("repsets_cache_corrupt.jsonl");
    const auto entries = entries_for({ScanKind::FullInterval, 3});
    append_cache(tmp.path, {entries.data(), 1});
    {
        std::ofstream out(tmp.path, std::ios::app);
        out << "{not json at all\n";
    }
    append_cache(tmp.path, {entries.data() + 1, 2});

    const CacheLoad loaded = load_cache(tmp.path);
    CHECK(loaded.entries.size() == 3);
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("line 2") != std::string::npos);
}

TEST_CASE("missing cache file loads empty") {
    const CacheLoad loaded = load_cache("/nonexistent/definitely/missing.jsonl");
    CHECK(loaded.entries.empty());
    CHECK(loaded.warnings.empty());
}

TEST_CASE("warm cache answers without solving") {
    TempFile tmp("repsets_cache_warm.jsonl");
    const ScanRequest req{ScanKind::Punctured, 12};

    CachedScanStats cold;
    const auto first = scan_with_cache(req, tmp.path, 1, &cold);
    CHECK(cold.cache_hits == 0);
    CHECK(cold.solved == first.size());

    CachedScanStats warm;
    const auto second = scan_with_cache(req, tmp.path, 1, &warm);
    CHECK(warm.solved == 0);
    CHECK(warm.cache_hits == second.size());
    CHECK(records_fingerprint(first) == records_fingerprint(second));

    // growing the request solves only the new instances
    CachedScanStats grown;
    const auto third = scan_with_cache({ScanKind::Punctured, 14}, tmp.path, 1, &grown);
    CHECK(grown.cache_hits == first.size());
    CHECK(grown.solved == third.size() - first.size());
}
