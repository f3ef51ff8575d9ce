#ifndef KZMPL_TESTS_ORACLES_HPP
#define KZMPL_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the library code paths they check.

#include <complex>
#include <cstdint>
#include <vector>

#include "kzmpl/words.hpp"

namespace kzmpl::testing {

// Shuffle product by brute-force enumeration of interleavings: every subset
// of positions for the letters of u (in order), the rest taken by v.
inline WordPoly shuffle_brute(const Word& u, const Word& v) {
    const std::uint32_t m = u.weight(), n = v.weight();
    WordPoly out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m + n)); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcountll(mask)) != m) continue;
        Word w;
        std::uint32_t iu = 0, iv = 0;
        for (std::uint32_t pos = 0; pos < m + n; ++pos) {
            if (mask & (std::uint64_t{1} << pos))
                w = w.appended(u.letter(iu++));
            else
                w = w.appended(v.letter(iv++));
        }
        out.add(w, 1);
    }
    return out;
}

// Plain truncated Taylor sum for Li(w;z) on an S0 word, no tail control
// beyond the explicit term count.  Slow by design; used to cross-check the
// accelerated evaluators at |z| close to 1.
inline std::complex<double> li_series_brute(const Word& w, std::complex<double> z,
                                            long terms) {
    auto ks = w.indices();
    const int r = static_cast<int>(ks.size());
    if (r == 0) return 1.0;
    std::vector<long double> inner(r + 2, 0.0L);
    inner[r + 1] = 1.0L;
    std::complex<double> sum = 0.0, zn = 1.0;
    for (long n = 1; n <= terms; ++n) {
        zn *= z;
        sum += zn * static_cast<double>(inner[2] / std::pow(static_cast<long double>(n),
                                                            static_cast<long double>(ks[0])));
        for (int j = 2; j <= r; ++j)
            inner[j] += inner[j + 1] / std::pow(static_cast<long double>(n),
                                                static_cast<long double>(ks[j - 1]));
    }
    return sum;
}

} // namespace kzmpl::testing

#endif
