#include "repsets/intset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>

#include "repsets/bits.hpp"
#include "repsets/errors.hpp"

namespace repsets {

namespace {

std::atomic<std::uint64_t> g_universe_cap{kDefaultUniverseCap};

void check_capacity(std::uint64_t bound) {
    if (bound > universe_cap())
        throw capacity_error("universe bound " + std::to_string(bound) +
                             " exceeds the configured cap " + std::to_string(universe_cap()));
}

}  // namespace

std::uint64_t universe_cap() { return g_universe_cap.load(std::memory_order_relaxed); }

void set_universe_cap(std::uint64_t cap) {
    g_universe_cap.store(cap, std::memory_order_relaxed);
}

int evil_parity(std::uint64_t n) { return std::popcount(n) & 1; }

IntSet::IntSet(std::uint32_t universe_bound) : bound_(universe_bound) {
    check_capacity(universe_bound);
    words_.assign(bits::word_count(std::uint64_t{universe_bound} + 1), 0);
}

IntSet IntSet::from_members(std::span<const std::uint32_t> members) {
    std::uint32_t bound = 0;
    for (std::uint32_t v : members) bound = std::max(bound, v);
    return from_members(members, bound);
}

IntSet IntSet::from_members(std::span<const std::uint32_t> members, std::uint32_t universe_bound) {
    IntSet s(universe_bound);
    for (std::uint32_t v : members) {
        if (v > universe_bound)
            throw capacity_error("member " + std::to_string(v) + " exceeds universe bound " +
                                 std::to_string(universe_bound));
        bits::set(s.words_, v);
    }
    return s;
}

IntSet IntSet::from_words(std::vector<std::uint64_t> words, std::uint32_t universe_bound) {
    check_capacity(universe_bound);
    IntSet s;
    s.bound_ = universe_bound;
    s.words_ = std::move(words);
    s.words_.resize(bits::word_count(std::uint64_t{universe_bound} + 1), 0);
    // mask stray bits above the bound
    const unsigned used = (universe_bound & 63) + 1;
    if (used < 64) s.words_.back() &= (std::uint64_t{1} << used) - 1;
    return s;
}

IntSet IntSet::parse(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.empty()) return IntSet();

    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        std::uint64_t mask = 0;
        auto [p, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), mask, 16);
        if (ec != std::errc{} || p != text.data() + text.size())
            throw parse_error("bad hex bitmask: '" + std::string(text) + "'");
        if (mask == 0) return IntSet();
        std::vector<std::uint32_t> members;
        for (unsigned i = 0; i < 64; ++i)
            if ((mask >> i) & 1u) members.push_back(i);
        return from_members(members);
    }

    std::vector<std::uint32_t> members;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, 10);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw parse_error("bad set literal near '" + std::string(tok) + "'");
        if (!members.empty() && v <= members.back())
            throw parse_error("set literal must be strictly increasing at '" +
                              std::string(tok) + "'");
        members.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_members(members);
}

std::string IntSet::to_string() const {
    std::string out;
    for (std::uint32_t v : members()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(v);
    }
    return out;
}

bool IntSet::contains(std::uint32_t x) const {
    if (x > bound_ || words_.empty()) return false;
    return bits::test(words_, x);
}

bool IntSet::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

std::size_t IntSet::size() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::uint32_t IntSet::max() const {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w])
            return static_cast<std::uint32_t>(w * 64 + 63 - std::countl_zero(words_[w]));
    throw std::logic_error("max() of an empty set");
}

std::uint32_t IntSet::min() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<std::uint32_t>(w * 64 + std::countr_zero(words_[w]));
    throw std::logic_error("min() of an empty set");
}

std::vector<std::uint32_t> IntSet::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(word));
            out.push_back(static_cast<std::uint32_t>(w * 64 + b));
            word &= word - 1;
        }
    }
    return out;
}

bool IntSet::operator==(const IntSet& other) const {
    const std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < common; ++w)
        if (words_[w] != other.words_[w]) return false;
    for (std::size_t w = common; w < words_.size(); ++w)
        if (words_[w]) return false;
    for (std::size_t w = common; w < other.words_.size(); ++w)
        if (other.words_[w]) return false;
    return true;
}

IntSet thue_morse_set(std::uint32_t l, Side side) {
    if (l >= 32 || ((std::uint64_t{1} << l)) > universe_cap())
        throw capacity_error("2^" + std::to_string(l) + " exceeds the configured universe cap");
    const std::uint32_t bound = (std::uint32_t{1} << l) - 1;
    const int want = side == Side::A ? 0 : 1;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i <= bound; ++i)
        if (evil_parity(i) == want) members.push_back(i);
    return IntSet::from_members(members, bound);
}

IntSet shift(const IntSet& s, std::uint32_t t) {
    const std::uint64_t new_bound = std::uint64_t{s.universe_bound()} + t;
    if (new_bound > universe_cap())
        throw capacity_error("shift by " + std::to_string(t) + " overflows the universe cap");
    std::vector<std::uint32_t> members = s.members();
    for (std::uint32_t& v : members) v += t;
    return IntSet::from_members(members, static_cast<std::uint32_t>(new_bound));
}

IntSet reflect(const IntSet& s, std::uint32_t m) {
    std::vector<std::uint32_t> members = s.members();
    std::vector<std::uint32_t> out;
    out.reserve(members.size());
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (*it > m)
            throw std::invalid_argument("reflect: member " + std::to_string(*it) +
                                        " exceeds m = " + std::to_string(m));
        out.push_back(m - *it);
    }
    return IntSet::from_members(out, m);
}

IntSet operator|(const IntSet& a, const IntSet& b) {
    const std::uint32_t bound = std::max(a.universe_bound(), b.universe_bound());
    std::vector<std::uint64_t> words(bits::word_count(std::uint64_t{bound} + 1), 0);
    for (std::size_t w = 0; w < a.words().size(); ++w) words[w] |= a.words()[w];
    for (std::size_t w = 0; w < b.words().size(); ++w) words[w] |= b.words()[w];
    return IntSet::from_words(std::move(words), bound);
}

IntSet operator&(const IntSet& a, const IntSet& b) {
    const std::uint32_t bound = std::max(a.universe_bound(), b.universe_bound());
    std::vector<std::uint64_t> words(bits::word_count(std::uint64_t{bound} + 1), 0);
    const std::size_t common = std::min(a.words().size(), b.words().size());
    for (std::size_t w = 0; w < common; ++w) words[w] = a.words()[w] & b.words()[w];
    return IntSet::from_words(std::move(words), bound);
}

}  // namespace repsets
