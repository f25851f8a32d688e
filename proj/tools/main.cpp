#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repsets/cache.hpp"
#include "repsets/errors.hpp"
#include "repsets/intset.hpp"
#include "repsets/repfn.hpp"
#include "repsets/report.hpp"
#include "repsets/scan.hpp"
#include "repsets/solver.hpp"
#include "repsets/theorems.hpp"

namespace {

constexpr int kExitSolution = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::vector<std::uint32_t> parse_u32_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(tok, &used, 10);
            if (used != tok.size() || v > 0xffffffffull) throw std::invalid_argument(tok);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw repsets::parse_error("bad position list near '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run_repfn(const std::string& set_text, std::int64_t upto, bool as_json, bool as_csv) {
    const repsets::IntSet s = repsets::IntSet::parse(set_text);
    const repsets::RepTable table = repsets::rep_fn_table(s);
    const std::uint32_t n_max = upto >= 0 ? static_cast<std::uint32_t>(upto)
                                          : 2 * s.universe_bound();
    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint32_t n = 0; n <= n_max; ++n)
            rows.push_back({{"n", n}, {"count", table.at(n)}});
        std::cout << rows.dump() << '\n';
    } else if (as_csv) {
        std::cout << "n,count\n";
        for (std::uint32_t n = 0; n <= n_max; ++n)
            std::cout << n << ',' << table.at(n) << '\n';
    } else {
        std::cout << "S = " << s.to_string() << '\n';
        for (std::uint32_t n = 0; n <= n_max; ++n)
            std::cout << n << '\t' << table.at(n) << '\n';
    }
    return kExitSolution;
}

int run_solve(std::uint32_t m, const std::string& removed_text, const std::string& shared_text,
              bool as_json) {
    const std::vector<std::uint32_t> removed = parse_u32_list(removed_text);
    const std::vector<std::uint32_t> shared = parse_u32_list(shared_text);
    const repsets::PositionProfile profile = repsets::PositionProfile::make(m, removed, shared);
    const repsets::SolveResult res = repsets::solve_forced(profile);

    if (as_json) {
        nlohmann::json j;
        j["m"] = m;
        j["removed"] = removed;
        j["shared"] = shared;
        j["C"] = res.ok() ? res.solution->C.to_string() : "";
        j["D"] = res.ok() ? res.solution->D.to_string() : "";
        j["status"] = res.ok() ? "solution" : "infeasible";
        std::cout << j.dump() << '\n';
    } else if (res.ok()) {
        std::cout << "status: solution (verified up to " << res.solution->verified_upto << ")\n"
                  << "C = " << res.solution->C.to_string() << '\n'
                  << "D = " << res.solution->D.to_string() << '\n';
    } else {
        std::cout << "status: infeasible (failed at " << res.failed_at << ")\n";
    }
    return res.ok() ? kExitSolution : kExitInfeasible;
}

int run_scan(const std::string& kind_text, std::uint32_t m_max, const std::string& jsonl_path,
             const repsets::RunConfig& config) {
    repsets::ScanRequest req{repsets::scan_kind_from_string(kind_text), m_max};

    std::vector<repsets::ScanRecord> records;
    repsets::CachedScanStats stats;
    if (config.cache_path) {
        const repsets::CacheLoad preload = repsets::load_cache(*config.cache_path);
        for (const std::string& warning : preload.warnings) std::cerr << warning << '\n';
        records = repsets::scan_with_cache(req, *config.cache_path, config.jobs, &stats);
    } else {
        records = repsets::scan(req, config.jobs);
    }

    if (!jsonl_path.empty()) {
        std::ofstream out(jsonl_path);
        if (!out) throw std::runtime_error("cannot open " + jsonl_path);
        repsets::write_jsonl(out, records);
    }

    std::size_t solutions = 0, mismatches = 0;
    for (const repsets::ScanRecord& rec : records) {
        solutions += rec.solution;
        mismatches += !rec.matches_theorem;
    }

    switch (config.output_format) {
        case repsets::OutputFormat::Table:
            std::cout << repsets::records_to_table(records);
            std::cout << "instances: " << records.size() << ", solutions: " << solutions
                      << ", theorem mismatches: " << mismatches;
            if (config.cache_path)
                std::cout << ", cache hits: " << stats.cache_hits << ", solved: " << stats.solved;
            std::cout << '\n';
            break;
        case repsets::OutputFormat::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const repsets::ScanRecord& rec : records)
                arr.push_back(repsets::record_to_json(rec));
            std::cout << arr.dump() << '\n';
            break;
        }
        case repsets::OutputFormat::Csv:
            std::cout << repsets::records_to_csv(records);
            break;
        case repsets::OutputFormat::Jsonl:
            repsets::write_jsonl(std::cout, records);
            break;
    }
    return kExitSolution;
}

int run_construct(std::int64_t theorem1_l, std::int64_t lemma6_l, std::int64_t problem2_l,
                  bool as_json) {
    repsets::ConstructedPair pair;
    if (theorem1_l >= 0)
        pair = repsets::construct_theorem1(static_cast<std::uint32_t>(theorem1_l));
    else if (lemma6_l >= 0)
        pair = repsets::construct_lemma6(static_cast<std::uint32_t>(lemma6_l));
    else
        pair = repsets::construct_problem2(static_cast<std::uint32_t>(problem2_l));

    if (as_json) {
        nlohmann::json j;
        j["m"] = pair.m;
        if (pair.r) j["r"] = *pair.r;
        j["C"] = pair.C.to_string();
        j["D"] = pair.D.to_string();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "m = " << pair.m << '\n';
        if (pair.r) std::cout << "r = " << *pair.r << '\n';
        std::cout << "C = " << pair.C.to_string() << '\n'
                  << "D = " << pair.D.to_string() << '\n';
    }
    return kExitSolution;
}

int run_lemmas(int which, std::uint32_t max_value, bool as_json) {
    std::vector<std::string> violations;
    std::size_t checked = 0;

    switch (which) {
        case 3:
            for (std::uint32_t M = 2; M <= max_value; ++M, ++checked)
                if (!repsets::check_lemma3(M)) violations.push_back("M=" + std::to_string(M));
            break;
        case 4:
            for (std::uint32_t M = 2; M <= max_value; ++M, ++checked)
                if (!repsets::check_lemma4(M)) violations.push_back("M=" + std::to_string(M));
            break;
        case 5:
            for (std::uint32_t M = 2; M <= max_value; M += 2, ++checked)
                if (!repsets::check_lemma5(M)) violations.push_back("M=" + std::to_string(M));
            break;
        case 7:
            for (std::uint32_t m = 1; m <= max_value; ++m, ++checked) {
                const bool boundary_form = std::has_single_bit(m + 1);  // m = 2^l - 1
                const auto witness = repsets::find_lemma7_witness(m);
                if (boundary_form && witness)
                    violations.push_back("m=" + std::to_string(m) + " unexpected witness n=" +
                                         std::to_string(*witness));
                if (!boundary_form && !witness)
                    violations.push_back("m=" + std::to_string(m) + " missing witness");
            }
            break;
        default:
            throw repsets::parse_error("--check must be one of 3, 4, 5, 7");
    }

    if (as_json) {
        nlohmann::json j;
        j["lemma"] = which;
        j["max"] = max_value;
        j["checked"] = checked;
        j["violations"] = violations;
        std::cout << j.dump() << '\n';
    } else if (violations.empty()) {
        std::cout << "lemma " << which << ": holds for all " << checked
                  << " checked values up to " << max_value << '\n';
    } else {
        std::cout << "lemma " << which << ": " << violations.size() << " violation(s)\n";
        for (const std::string& v : violations) std::cout << "  " << v << '\n';
    }
    return violations.empty() ? kExitSolution : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representation-function toolkit for punctured, full and "
                 "shared-point interval partitions"};
    app.set_version_flag("--version", "repsets 1.0.0");
    app.require_subcommand(1);

    std::uint64_t cap = repsets::kDefaultUniverseCap;
    app.add_option("--universe-cap", cap, "largest representable integer (default 2^20)");
    app.fallthrough();  // global flags may follow the subcommand name

    auto* repfn_cmd = app.add_subcommand("repfn", "print the representation function of a set");
    std::string set_text;
    std::int64_t upto = -1;
    bool repfn_json = false, repfn_csv = false;
    repfn_cmd->add_option("--set", set_text, "set literal, e.g. 0,3,6,7 or 0x49")->required();
    repfn_cmd->add_option("--upto", upto, "largest n to print (default 2*max)");
    repfn_cmd->add_flag("--json", repfn_json, "JSON output");
    repfn_cmd->add_flag("--csv", repfn_csv, "CSV output");

    auto* solve_cmd =
        app.add_subcommand("solve", "find the unique partition of a constrained interval; "
                                    "a partition with an empty class counts as infeasible");
    std::uint32_t solve_m = 0;
    std::string removed_text, shared_text;
    bool solve_json = false;
    solve_cmd->add_option("--m", solve_m, "interval endpoint")->required();
    solve_cmd->add_option("--removed", removed_text, "removed positions, e.g. 4 or 3,5");
    solve_cmd->add_option("--shared", shared_text, "shared positions (in both classes)");
    solve_cmd->add_flag("--json", solve_json, "JSON output");

    auto* scan_cmd = app.add_subcommand("scan", "classify every instance up to --max");
    std::string kind_text, jsonl_path, cache_path;
    std::uint32_t m_max = 0;
    int jobs = 0;
    bool scan_json = false, scan_csv = false, scan_jsonl_stdout = false;
    scan_cmd->add_option("--kind", kind_text, "punctured | full | shared")->required();
    scan_cmd->add_option("--max", m_max, "largest m")->required();
    scan_cmd->add_option("--jobs", jobs, "worker count (default REPFN_JOBS or hardware)");
    scan_cmd->add_option("--jsonl", jsonl_path, "write records to this JSONL file");
    scan_cmd->add_option("--cache", cache_path, "resumable JSONL cache path");
    scan_cmd->add_flag("--json", scan_json, "JSON array on stdout");
    scan_cmd->add_flag("--csv", scan_csv, "CSV on stdout");
    scan_cmd->add_flag("--jsonl-stdout", scan_jsonl_stdout, "JSONL on stdout");

    auto* construct_cmd = app.add_subcommand("construct", "closed-form partition families");
    std::int64_t theorem1_l = -1, lemma6_l = -1, problem2_l = -1;
    bool construct_json = false;
    construct_cmd->add_option("--theorem1", theorem1_l, "punctured family parameter l >= 2");
    construct_cmd->add_option("--lemma6", lemma6_l, "full-interval family parameter l >= 1");
    construct_cmd->add_option("--problem2", problem2_l, "shared-point family parameter l >= 1");
    construct_cmd->add_flag("--json", construct_json, "JSON output");

    auto* lemmas_cmd = app.add_subcommand("lemmas", "verify digit-pattern and witness lemmas");
    int which_lemma = 0;
    std::uint32_t lemma_max = 0;
    bool lemmas_json = false;
    lemmas_cmd->add_option("--check", which_lemma, "3 | 4 | 5 | 7")->required();
    lemmas_cmd->add_option("--max", lemma_max, "largest value to check")->required();
    lemmas_cmd->add_flag("--json", lemmas_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        repsets::set_universe_cap(cap);
        if (repfn_cmd->parsed()) return run_repfn(set_text, upto, repfn_json, repfn_csv);
        if (solve_cmd->parsed()) return run_solve(solve_m, removed_text, shared_text, solve_json);
        if (scan_cmd->parsed()) {
            repsets::RunConfig config;
            config.universe_cap = cap;
            config.jobs = repsets::resolve_jobs(jobs);
            if (scan_json) config.output_format = repsets::OutputFormat::Json;
            else if (scan_csv) config.output_format = repsets::OutputFormat::Csv;
            else if (scan_jsonl_stdout) config.output_format = repsets::OutputFormat::Jsonl;
            if (!cache_path.empty()) config.cache_path = cache_path;
            return run_scan(kind_text, m_max, jsonl_path, config);
        }
        if (construct_cmd->parsed()) {
            const int given = (theorem1_l >= 0) + (lemma6_l >= 0) + (problem2_l >= 0);
            if (given != 1) {
                std::cerr << "construct: exactly one of --theorem1, --lemma6, --problem2\n";
                return kExitUsage;
            }
            return run_construct(theorem1_l, lemma6_l, problem2_l, construct_json);
        }
        if (lemmas_cmd->parsed()) return run_lemmas(which_lemma, lemma_max, lemmas_json);
        return kExitUsage;
    } catch (const repsets::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const repsets::budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const repsets::parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
