#pragma once

#include <cstdint>
#include <vector>

#include "repsets/intset.hpp"

namespace repsets {

// R_S(0), ..., R_S(2m) for a set S with universe bound m, where R_S(n) is the
// number of pairs s1 < s2 in S with s1 + s2 = n.
struct RepTable {
    std::vector<std::uint32_t> counts;  // indexed 0..2*source_universe
    std::uint32_t source_universe = 0;

    std::uint32_t at(std::uint32_t n) const {
        return n < counts.size() ? counts[n] : 0;
    }
};

// Direct enumeration over member pairs. Reference implementation; everything
// faster is tested against it.
std::uint32_t rep_fn_naive(const IntSet& s, std::uint32_t n);

// Full table by calling the naive counter at every n. Serial reference.
RepTable rep_fn_table_naive(const IntSet& s);

// Full table via word-parallel self-convolution of the indicator bit-vector:
// counts[n] = (ordered_conv[n] - [n even] * chi_S(n/2)) / 2.
RepTable rep_fn_table(const IntSet& s);

// True iff R_S(n) = R_T(n) for every n in [1, n_max].
bool rep_tables_equal(const IntSet& s, const IntSet& t, std::uint32_t n_max);

struct IndicatorPoly {
    std::vector<std::int64_t> coefficients;  // degree 0..m, values in {0,1}

    static IndicatorPoly from_set(const IntSet& s, std::uint32_t degree);
};

// Exact coefficient-level check of the master identity
//   2 p_C(x^2) = (1-x^{2m+2})/(1-x^2) + 2 p_C(x)(1-x^{m+1})/(1-x)
//                - ((1-x^{m+1})/(1-x))^2 + 2 x^r (1-x^{m+1})/(1-x)
//                - 2 p_C(x) x^r - 2 x^{2r}
// expanded as integer polynomials up to degree 2m+2. Requires 0 in C,
// C subset of [0,m] \ {r}, 1 <= r <= m. Holds iff C and its complement
// D = [0,m] \ ({r} u C) have identical representation functions.
bool check_eq10_identity(const IntSet& c, std::uint32_t m, std::uint32_t r);

}  // namespace repsets
