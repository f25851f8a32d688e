#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repsets {

// Runtime cap on the largest representable integer. Constructors of IntSet
// check against it so that large scans fail loudly instead of allocating
// unbounded bit-vectors.
inline constexpr std::uint64_t kDefaultUniverseCap = std::uint64_t{1} << 20;

std::uint64_t universe_cap();
void set_universe_cap(std::uint64_t cap);

// 0 if the binary representation of n has an even number of 1-bits
// (n is evil, member of A), 1 otherwise (odious, member of B).
int evil_parity(std::uint64_t n);

enum class Side : std::uint8_t { A, B };

// Finite set of nonnegative integers with dense bit-vector storage.
// Immutable value type: transforms return new sets. Equality is extensional
// (members only; the universe bound does not participate).
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(std::uint32_t universe_bound);

    static IntSet from_members(std::span<const std::uint32_t> members);
    static IntSet from_members(std::span<const std::uint32_t> members,
                               std::uint32_t universe_bound);
    static IntSet from_words(std::vector<std::uint64_t> words, std::uint32_t universe_bound);

    // "0,3,6,7" (strictly increasing decimals, empty string = empty set) or a
    // hex bitmask "0x49" (bit i set <=> i in S).
    static IntSet parse(std::string_view text);
    std::string to_string() const;

    bool contains(std::uint32_t x) const;
    bool empty() const;
    std::size_t size() const;
    std::uint32_t universe_bound() const { return bound_; }
    std::uint32_t max() const;  // requires a nonempty set
    std::uint32_t min() const;  // requires a nonempty set
    std::vector<std::uint32_t> members() const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const IntSet& other) const;

private:
    std::vector<std::uint64_t> words_;
    std::uint32_t bound_ = 0;
};

// A_l or B_l: the split of [0, 2^l - 1] by 1-bit parity. l = 0 is admitted
// (A_0 = {0}, B_0 = empty).
IntSet thue_morse_set(std::uint32_t l, Side side);

// {s + t : s in S}
IntSet shift(const IntSet& s, std::uint32_t t);

// {m - s : s in S}; every member of s must be <= m.
IntSet reflect(const IntSet& s, std::uint32_t m);

IntSet operator|(const IntSet& a, const IntSet& b);
IntSet operator&(const IntSet& a, const IntSet& b);

}  // namespace repsets
