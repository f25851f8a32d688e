#include "repsets/report.hpp"

#include <ostream>
#include <sstream>

#include "repsets/errors.hpp"

namespace repsets {

const char* to_string(ScanKind kind) {
    switch (kind) {
        case ScanKind::Punctured: return "punctured";
        case ScanKind::FullInterval: return "full";
        case ScanKind::SharedPoint: return "shared";
    }
    return "?";
}

ScanKind scan_kind_from_string(std::string_view s) {
    if (s == "punctured") return ScanKind::Punctured;
    if (s == "full") return ScanKind::FullInterval;
    if (s == "shared") return ScanKind::SharedPoint;
    throw parse_error("unknown scan kind '" + std::string(s) + "'");
}

nlohmann::json record_to_json(const ScanRecord& rec) {
    nlohmann::json j;
    j["m"] = rec.m;
    j["kind"] = to_string(rec.kind);
    if (rec.r) j["r"] = *rec.r;
    j["status"] = rec.solution ? "solution" : "infeasible";
    j["matches_theorem"] = rec.matches_theorem;
    j["anomaly"] = rec.anomaly;
    j["C"] = rec.solution ? rec.C.to_string() : "";
    j["D"] = rec.solution ? rec.D.to_string() : "";
    j["solve_micros"] = rec.solve_micros;
    return j;
}

ScanRecord record_from_json(const nlohmann::json& j) {
    ScanRecord rec;
    rec.m = j.at("m").get<std::uint32_t>();
    rec.kind = scan_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("r")) rec.r = j.at("r").get<std::uint32_t>();
    const std::string status = j.at("status").get<std::string>();
    if (status != "solution" && status != "infeasible")
        throw parse_error("unknown status '" + status + "'");
    rec.solution = status == "solution";
    rec.matches_theorem = j.at("matches_theorem").get<bool>();
    rec.anomaly = j.at("anomaly").get<bool>();
    if (rec.solution) {
        rec.C = IntSet::parse(j.at("C").get<std::string>());
        rec.D = IntSet::parse(j.at("D").get<std::string>());
    }
    rec.solve_micros = j.at("solve_micros").get<std::int64_t>();
    return rec;
}

std::string records_to_csv(std::span<const ScanRecord> records) {
    std::string out = "m,kind,r,status,matches_theorem,anomaly,C,D,solve_micros\n";
    for (const ScanRecord& rec : records) {
        out += std::to_string(rec.m);
        out += ',';
        out += to_string(rec.kind);
        out += ',';
        if (rec.r) out += std::to_string(*rec.r);
        out += ',';
        out += rec.solution ? "solution" : "infeasible";
        out += ',';
        out += rec.matches_theorem ? "true" : "false";
        out += ',';
        out += rec.anomaly ? "true" : "false";
        out += ",\"";
        if (rec.solution) out += rec.C.to_string();
        out += "\",\"";
        if (rec.solution) out += rec.D.to_string();
        out += "\",";
        out += std::to_string(rec.solve_micros);
        out += '\n';
    }
    return out;
}

std::string records_to_table(std::span<const ScanRecord> records) {
    std::ostringstream out;
    out << "    m  kind       r      status      match  note\n";
    for (const ScanRecord& rec : records) {
        char line[96];
        std::snprintf(line, sizeof line, "%5u  %-9s  %-5s  %-10s  %-5s  %s\n", rec.m,
                      to_string(rec.kind), rec.r ? std::to_string(*rec.r).c_str() : "-",
                      rec.solution ? "solution" : "infeasible",
                      rec.matches_theorem ? "yes" : "NO",
                      rec.anomaly ? "anomaly" : "");
        out << line;
        if (rec.solution)
            out << "       C = " << rec.C.to_string() << "\n       D = " << rec.D.to_string()
                << "\n";
    }
    return out.str();
}

void write_jsonl(std::ostream& out, std::span<const ScanRecord> records) {
    for (const ScanRecord& rec : records) out << record_to_json(rec).dump() << '\n';
}

std::string records_fingerprint(std::span<const ScanRecord> records) {
    std::string out;
    for (const ScanRecord& rec : records) {
        nlohmann::json j = record_to_json(rec);
        j.erase("solve_micros");
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace repsets
