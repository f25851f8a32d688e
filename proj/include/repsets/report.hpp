#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "repsets/scan.hpp"

namespace repsets {

enum class OutputFormat : std::uint8_t { Table, Json, Csv, Jsonl };

struct RunConfig {
    std::uint64_t universe_cap = kDefaultUniverseCap;
    int jobs = 1;
    OutputFormat output_format = OutputFormat::Table;
    std::optional<std::filesystem::path> cache_path;
};

const char* to_string(ScanKind kind);
ScanKind scan_kind_from_string(std::string_view s);

nlohmann::json record_to_json(const ScanRecord& rec);
ScanRecord record_from_json(const nlohmann::json& j);

std::string records_to_csv(std::span<const ScanRecord> records);
std::string records_to_table(std::span<const ScanRecord> records);
void write_jsonl(std::ostream& out, std::span<const ScanRecord> records);

// Serialized records with the timing field removed; lets callers compare
// reports for byte-identity across worker counts and runs.
std::string records_fingerprint(std::span<const ScanRecord> records);

}  // namespace repsets
