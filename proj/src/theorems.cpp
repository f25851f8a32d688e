#include "repsets/theorems.hpp"

#include <bit>
#include <stdexcept>

#include "repsets/repfn.hpp"

namespace repsets {

namespace {

// Chain length: floor(log2 M) + 1. Coincides with ceil(log2 M) except at
// powers of two, where the longer chain keeps the implications meaningful.
unsigned chain_width(std::uint32_t M) { return static_cast<unsigned>(std::bit_width(M)); }

IntSet interval_side(std::uint32_t m, Side side) {
    const int want = side == Side::A ? 0 : 1;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i <= m; ++i)
        if (evil_parity(i) == want) members.push_back(i);
    return IntSet::from_members(members, m);
}

}  // namespace

ConstructedPair construct_theorem1(std::uint32_t l) {
    if (l < 2) throw std::invalid_argument("construct_theorem1 requires l >= 2");
    const std::uint32_t half = std::uint32_t{1} << (l - 1);
    ConstructedPair out;
    out.m = std::uint32_t{1} << l;
    out.r = half;
    const IntSet a = thue_morse_set(l - 1, Side::A);
    const IntSet b = thue_morse_set(l - 1, Side::B);
    out.C = a | shift(b, half + 1);
    out.D = b | shift(a, half + 1);
    return out;
}

ConstructedPair construct_lemma6(std::uint32_t l) {
    if (l < 1) throw std::invalid_argument("construct_lemma6 requires l >= 1");
    ConstructedPair out;
    out.m = (std::uint32_t{1} << l) - 1;
    out.C = thue_morse_set(l, Side::A);
    out.D = thue_morse_set(l, Side::B);
    return out;
}

ConstructedPair construct_problem2(std::uint32_t l) {
    if (l < 1) throw std::invalid_argument("construct_problem2 requires l >= 1");
    const std::uint32_t r = (std::uint32_t{1} << (2 * l)) - 1;
    ConstructedPair out;
    out.m = 2 * r;  // 2^{2l+1} - 2
    out.r = r;
    const IntSet a = thue_morse_set(2 * l, Side::A);
    const IntSet b = thue_morse_set(2 * l, Side::B);
    out.C = a | shift(b, r);
    out.D = b | shift(a, r);
    return out;
}

bool check_lemma3(std::uint32_t M) {
    if (M < 2) throw std::invalid_argument("check_lemma3 requires M >= 2");
    const unsigned w = chain_width(M);
    for (unsigned i = 0; i < w; ++i)
        if (evil_parity(M - (std::uint32_t{1} << i)) != 0) return true;  // vacuous
    return (w % 2 == 1) && (M == (std::uint32_t{1} << w) - 1);
}

bool check_lemma4(std::uint32_t M) {
    if (M < 2) throw std::invalid_argument("check_lemma4 requires M >= 2");
    const unsigned w = chain_width(M);
    for (unsigned i = 0; i < w; ++i)
        if (evil_parity(M - (std::uint32_t{1} << i)) != 1) return true;
    return (w % 2 == 0) && (M == (std::uint32_t{1} << w) - 1);
}

bool check_lemma5(std::uint32_t M) {
    if (M < 2 || M % 2 != 0)
        throw std::invalid_argument("check_lemma5 requires an even M >= 2");
    const unsigned w = chain_width(M);
    for (unsigned i = 1; i < w; ++i)
        if (evil_parity(M - (std::uint32_t{1} << i)) != 0) return true;
    return M == (std::uint32_t{1} << w) - 2;
}

std::optional<std::uint32_t> find_lemma7_witness(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("find_lemma7_witness requires m >= 1");
    const RepTable tc = rep_fn_table(interval_side(m, Side::A));
    const RepTable td = rep_fn_table(interval_side(m, Side::B));
    for (std::uint32_t n = m + 1; n < 2 * m; ++n)
        if (tc.at(n) != td.at(n)) return n;
    return std::nullopt;
}

}  // namespace repsets
