#pragma once

#include <cstdint>
#include <optional>

#include "repsets/intset.hpp"

namespace repsets {

struct ConstructedPair {
    std::uint32_t m = 0;
    std::optional<std::uint32_t> r;  // removed / shared point, when the family has one
    IntSet C;
    IntSet D;
};

// Punctured-interval family: m = 2^l, r = 2^{l-1},
// C = A_{l-1} u (2^{l-1}+1 + B_{l-1}), D = B_{l-1} u (2^{l-1}+1 + A_{l-1}).
// Requires l >= 2.
ConstructedPair construct_theorem1(std::uint32_t l);

// Full-interval family: m = 2^l - 1, C = A_l, D = B_l. Requires l >= 1.
ConstructedPair construct_lemma6(std::uint32_t l);

// Shared-point family: r = 2^{2l} - 1, m = 2^{2l+1} - 2,
// C = A_{2l} u (r + B_{2l}), D = B_{2l} u (r + A_{2l}); C n D = {r}.
// Requires l >= 1.
ConstructedPair construct_problem2(std::uint32_t l);

// Binary digit-pattern implications over the evil/odious split. The chain
// length is taken from bit_width(M) = floor(log2 M) + 1, so the checks are
// meaningful (and hold) at powers of two as well.
//
// lemma3: M-1, M-2, M-4, ..., M-2^{W-1} all evil  =>  W odd and M = 2^W - 1.
// lemma4: the same chain all odious               =>  W even and M = 2^W - 1.
// lemma5: (even M) M-2, M-4, ..., M-2^{W-1} evil  =>  M = 2^W - 2.
// All require M >= 2; lemma5 requires M even.
bool check_lemma3(std::uint32_t M);
bool check_lemma4(std::uint32_t M);
bool check_lemma5(std::uint32_t M);

// With C = A n [0,m] and D = B n [0,m]: the least n in (m, 2m) where
// R_C(n) != R_D(n), or nullopt when the tables agree on the whole range
// (which happens exactly at m = 2^l - 1).
std::optional<std::uint32_t> find_lemma7_witness(std::uint32_t m);

}  // namespace repsets
