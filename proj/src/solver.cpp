#include "repsets/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "repsets/bits.hpp"
#include "repsets/errors.hpp"
#include "repsets/repfn.hpp"

namespace repsets {

namespace {

// Pairs a < b with a + b = v inside the prefix set held in `words`, where
// `rev` mirrors the same bits around m (rev[i] = words[m - i]). The prefix
// never contains positions >= v, so no range mask is needed:
// ordered pairs = popcount(words & (rev >> (m - v))), minus the diagonal.
std::uint32_t prefix_pairs(std::span<const std::uint64_t> words,
                           std::span<const std::uint64_t> rev,
                           std::uint32_t m, std::uint32_t v) {
    const std::uint64_t conv =
        bits::popcount_and_shifted(words, rev, std::int64_t{v} - std::int64_t{m});
    const std::uint64_t diag = (v % 2 == 0 && bits::test(words, v / 2)) ? 1 : 0;
    return static_cast<std::uint32_t>((conv - diag) / 2);
}

bool any_bit(std::span<const std::uint64_t> words) {
    for (std::uint64_t w : words)
        if (w) return true;
    return false;
}

void validate_points(std::uint32_t m, std::span<const std::uint32_t> pts, const char* what) {
    for (std::uint32_t p : pts) {
        if (p < 1 || p > m)
            throw std::invalid_argument(std::string(what) + " position " + std::to_string(p) +
                                        " outside [1, m]");
    }
}

}  // namespace

PositionProfile PositionProfile::full_interval(std::uint32_t m) {
    return make(m, {}, {});
}

PositionProfile PositionProfile::punctured(std::uint32_t m, std::span<const std::uint32_t> removed) {
    return make(m, removed, {});
}

PositionProfile PositionProfile::shared(std::uint32_t m, std::span<const std::uint32_t> shared_points) {
    return make(m, {}, shared_points);
}

PositionProfile PositionProfile::make(std::uint32_t m,
                                      std::span<const std::uint32_t> removed,
                                      std::span<const std::uint32_t> shared_points) {
    validate_points(m, removed, "removed");
    validate_points(m, shared_points, "shared");
    PositionProfile p;
    p.m = m;
    p.labels.assign(std::size_t{m} + 1, Label::Free);
    for (std::uint32_t v : removed) p.labels[v] = Label::Neither;
    for (std::uint32_t v : shared_points) {
        if (p.labels[v] == Label::Neither)
            throw std::invalid_argument("position " + std::to_string(v) +
                                        " is both removed and shared");
        p.labels[v] = Label::Both;
    }
    return p;
}

std::vector<std::uint32_t> PositionProfile::positions(Label which) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < labels.size(); ++v)
        if (labels[v] == which) out.push_back(v);
    return out;
}

std::size_t PositionProfile::free_count() const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), Label::Free));
}

PositionProfile PositionProfile::reflected() const {
    if (labels.back() != Label::Free)
        throw std::invalid_argument("reflected profile would not have a Free root");
    PositionProfile p;
    p.m = m;
    p.labels.assign(labels.rbegin(), labels.rend());
    return p;
}

SolveResult solve_forced(const PositionProfile& profile) {
    const std::uint32_t m = profile.m;
    const std::size_t nwords = bits::word_count(std::uint64_t{m} + 1);
    std::vector<std::uint64_t> cw(nwords, 0), dw(nwords, 0);
    std::vector<std::uint64_t> crev(nwords, 0), drev(nwords, 0);

    auto insert_c = [&](std::uint32_t v) { bits::set(cw, v); bits::set(crev, m - v); };
    auto insert_d = [&](std::uint32_t v) { bits::set(dw, v); bits::set(drev, m - v); };
    insert_c(0);

    for (std::uint32_t v = 1; v <= m; ++v) {
        const std::uint32_t pc = prefix_pairs(cw, crev, m, v);
        const std::uint32_t pd = prefix_pairs(dw, drev, m, v);
        switch (profile.labels[v]) {
            case Label::Free:
                // Adding v to C creates the pair (0, v); adding it to D
                // creates none (0 is never in D). Exactly one choice can
                // equalize R_C(v) and R_D(v).
                if (pd == pc + 1) insert_c(v);
                else if (pd == pc) insert_d(v);
                else return {std::nullopt, v};
                break;
            case Label::Neither:
                if (pc != pd) return {std::nullopt, v};
                break;
            case Label::Both:
                if (pc + 1 != pd) return {std::nullopt, v};
                insert_c(v);
                insert_d(v);
                break;
        }
    }

    if (!any_bit(dw)) return {std::nullopt, m};  // degenerate partition, D empty

    PartitionSolution sol;
    sol.C = IntSet::from_words(std::move(cw), m);
    sol.D = IntSet::from_words(std::move(dw), m);
    sol.verified_upto = 2 * m;
    sol.provenance = Provenance::Forced;

    // Positions are settled; the tail (m, 2m] is a pure verification pass.
    const RepTable tc = rep_fn_table(sol.C);
    const RepTable td = rep_fn_table(sol.D);
    for (std::uint32_t n = m + 1; n <= 2 * m; ++n)
        if (tc.at(n) != td.at(n)) return {std::nullopt, n};

    return {std::move(sol), 0};
}

namespace {

// Single-word fast path: all positions fit in one 64-bit word, representation
// equality is checked n by n with early exit.
bool equal_rep_u64(std::uint64_t c, std::uint64_t d, std::uint32_t m) {
    const std::uint64_t crev = bits::reverse_low_bits(c, m);
    const std::uint64_t drev = bits::reverse_low_bits(d, m);
    for (std::uint32_t n = 1; n <= 2 * m; ++n) {
        std::uint64_t cs, ds;
        if (n >= m) {
            cs = crev << (n - m);
            ds = drev << (n - m);
        } else {
            cs = crev >> (m - n);
            ds = drev >> (m - n);
        }
        const std::uint64_t cdiag = (n % 2 == 0) ? (c >> (n / 2)) & 1u : 0;
        const std::uint64_t ddiag = (n % 2 == 0) ? (d >> (n / 2)) & 1u : 0;
        const std::uint64_t rc = (static_cast<std::uint64_t>(std::popcount(c & cs)) - cdiag) / 2;
        const std::uint64_t rd = (static_cast<std::uint64_t>(std::popcount(d & ds)) - ddiag) / 2;
        if (rc != rd) return false;
    }
    return true;
}

}  // namespace

std::vector<PartitionSolution> enumerate_all(const PositionProfile& profile) {
    if (profile.free_count() > 28)
        throw budget_error("enumeration guard: profile has " +
                           std::to_string(profile.free_count()) + " free positions (max 28)");

    const std::uint32_t m = profile.m;
    std::vector<std::uint32_t> free_pos;  // free positions except the pinned 0
    for (std::uint32_t v = 1; v <= m; ++v)
        if (profile.labels[v] == Label::Free) free_pos.push_back(v);
    const std::vector<std::uint32_t> shared_pos = profile.positions(Label::Both);

    std::vector<PartitionSolution> out;
    const std::uint64_t total = std::uint64_t{1} << free_pos.size();

    if (m <= 63) {
        std::uint64_t base_c = 1, base_d = 0;
        for (std::uint32_t v : shared_pos) {
            base_c |= std::uint64_t{1} << v;
            base_d |= std::uint64_t{1} << v;
        }
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::uint64_t c = base_c, d = base_d;
            for (std::size_t i = 0; i < free_pos.size(); ++i) {
                if ((mask >> i) & 1u) c |= std::uint64_t{1} << free_pos[i];
                else d |= std::uint64_t{1} << free_pos[i];
            }
            if (d == 0) continue;
            if (!equal_rep_u64(c, d, m)) continue;
            PartitionSolution sol;
            sol.C = IntSet::from_words({c}, m);
            sol.D = IntSet::from_words({d}, m);
            sol.verified_upto = 2 * m;
            sol.provenance = Provenance::Enumerated;
            out.push_back(std::move(sol));
        }
        return out;
    }

    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint32_t> cm{0}, dm;
        for (std::uint32_t v : shared_pos) { cm.push_back(v); dm.push_back(v); }
        for (std::size_t i = 0; i < free_pos.size(); ++i) {
            if ((mask >> i) & 1u) cm.push_back(free_pos[i]);
            else dm.push_back(free_pos[i]);
        }
        if (dm.empty()) continue;
        IntSet c = IntSet::from_members(cm, m);
        IntSet d = IntSet::from_members(dm, m);
        if (!rep_tables_equal(c, d, 2 * m)) continue;
        PartitionSolution sol;
        sol.C = std::move(c);
        sol.D = std::move(d);
        sol.verified_upto = 2 * m;
        sol.provenance = Provenance::Enumerated;
        out.push_back(std::move(sol));
    }
    return out;
}

bool verify_pair(const IntSet& c, const IntSet& d, const PositionProfile& profile) {
    if (!c.contains(0)) return false;
    if ((!c.empty() && c.max() > profile.m) || (!d.empty() && d.max() > profile.m)) return false;
    for (std::uint32_t v = 0; v <= profile.m; ++v) {
        const bool in_c = c.contains(v), in_d = d.contains(v);
        switch (profile.labels[v]) {
            case Label::Free:
                if (in_c == in_d) return false;
                break;
            case Label::Neither:
                if (in_c || in_d) return false;
                break;
            case Label::Both:
                if (!in_c || !in_d) return false;
                break;
        }
    }
    return rep_tables_equal(c, d, 2 * profile.m);
}

}  // namespace repsets
