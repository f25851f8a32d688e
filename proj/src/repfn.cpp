#include "repsets/repfn.hpp"

#include <stdexcept>

#include "repsets/bits.hpp"

namespace repsets {

std::uint32_t rep_fn_naive(const IntSet& s, std::uint32_t n) {
    std::uint32_t count = 0;
    for (std::uint32_t s1 : s.members()) {
        if (std::uint64_t{2} * s1 >= n) break;  // need s1 < n - s1
        if (n - s1 <= s.universe_bound() && s.contains(n - s1)) ++count;
    }
    return count;
}

RepTable rep_fn_table_naive(const IntSet& s) {
    RepTable table;
    table.source_universe = s.universe_bound();
    table.counts.resize(2 * std::size_t{s.universe_bound()} + 1, 0);
    for (std::uint32_t n = 0; n < table.counts.size(); ++n)
        table.counts[n] = rep_fn_naive(s, n);
    return table;
}

RepTable rep_fn_table(const IntSet& s) {
    const std::uint32_t m = s.universe_bound();
    RepTable table;
    table.source_universe = m;
    table.counts.resize(2 * std::size_t{m} + 1, 0);

    // rev holds the indicator reversed around m: rev[i] = chi_S(m - i). Then
    // ordered_conv[n] = sum_i chi_S(i) chi_S(n-i) = popcount(S & (rev << (n-m))).
    std::vector<std::uint64_t> rev(s.words().size(), 0);
    for (std::uint32_t v : s.members()) bits::set(rev, m - v);

    for (std::uint32_t n = 0; n <= 2 * m; ++n) {
        const std::uint64_t conv =
            bits::popcount_and_shifted(s.words(), rev, std::int64_t{n} - std::int64_t{m});
        const std::uint64_t diag = (n % 2 == 0 && s.contains(n / 2)) ? 1 : 0;
        table.counts[n] = static_cast<std::uint32_t>((conv - diag) / 2);
    }
    return table;
}

bool rep_tables_equal(const IntSet& s, const IntSet& t, std::uint32_t n_max) {
    const RepTable ts = rep_fn_table(s);
    const RepTable tt = rep_fn_table(t);
    for (std::uint32_t n = 1; n <= n_max; ++n)
        if (ts.at(n) != tt.at(n)) return false;
    return true;
}

IndicatorPoly IndicatorPoly::from_set(const IntSet& s, std::uint32_t degree) {
    IndicatorPoly p;
    p.coefficients.assign(std::size_t{degree} + 1, 0);
    for (std::uint32_t v : s.members()) {
        if (v > degree)
            throw std::invalid_argument("indicator member exceeds requested degree");
        p.coefficients[v] = 1;
    }
    return p;
}

bool check_eq10_identity(const IntSet& c, std::uint32_t m, std::uint32_t r) {
    if (r < 1 || r > m) throw std::invalid_argument("check_eq10_identity: r must be in [1, m]");
    if (!c.contains(0)) throw std::invalid_argument("check_eq10_identity: 0 must be in C");
    if (c.contains(r)) throw std::invalid_argument("check_eq10_identity: r must not be in C");
    if (!c.empty() && c.max() > m)
        throw std::invalid_argument("check_eq10_identity: C must lie in [0, m]");

    const std::size_t deg = 2 * std::size_t{m} + 2;
    std::vector<std::int64_t> lhs(deg + 1, 0), rhs(deg + 1, 0);
    const IndicatorPoly pc = IndicatorPoly::from_set(c, m);

    // 2 p_C(x^2)
    for (std::uint32_t i = 0; i <= m; ++i) lhs[2 * std::size_t{i}] += 2 * pc.coefficients[i];

    // (1 - x^{2m+2}) / (1 - x^2) = 1 + x^2 + ... + x^{2m}
    for (std::uint32_t i = 0; i <= m; ++i) rhs[2 * std::size_t{i}] += 1;

    // 2 p_C(x) (1 - x^{m+1}) / (1 - x)
    for (std::uint32_t i = 0; i <= m; ++i) {
        if (!pc.coefficients[i]) continue;
        for (std::uint32_t k = i; k <= i + m; ++k) rhs[k] += 2;
    }

    // - ((1 - x^{m+1}) / (1 - x))^2, coefficient k+1 up to m then tapering
    for (std::uint32_t k = 0; k <= 2 * m; ++k)
        rhs[k] -= (k <= m) ? std::int64_t{k} + 1 : std::int64_t{2 * m + 1 - k};

    // + 2 x^r (1 - x^{m+1}) / (1 - x)
    for (std::uint32_t k = r; k <= r + m; ++k) rhs[k] += 2;

    // - 2 p_C(x) x^r
    for (std::uint32_t i = 0; i <= m; ++i)
        if (pc.coefficients[i]) rhs[std::size_t{i} + r] -= 2;

    // - 2 x^{2r}
    rhs[2 * std::size_t{r}] -= 2;

    return lhs == rhs;
}

}  // namespace repsets
