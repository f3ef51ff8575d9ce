#include "kzmpl/words.hpp"

#include <tuple>

namespace kzmpl {

namespace {

// Split w = u xi0^n with n the maximal trailing xi0 run (so u is in S0).
std::pair<Word, std::uint32_t> strip_trailing_zeros(const Word& w) {
    std::uint32_t n = w.trailing_run(Letter::L0);
    return {w.prefix(w.weight() - n), n};
}

// Split w = xi1^m u xi0^n with maximal runs on both sides (u is in S10).
std::tuple<std::uint32_t, Word, std::uint32_t> strip_runs(const Word& w) {
    auto [core, n] = strip_trailing_zeros(w);
    std::uint32_t m = core.leading_run(Letter::L1);
    return {m, core.suffix(core.weight() - m), n};
}

} // namespace

WordPoly reg0(const Word& w) {
    auto [u, n] = strip_trailing_zeros(w);
    // reg0(u xi0^n) = sum_j (-1)^j (u xi0^{n-j}) sh xi0^j
    WordPoly out;
    for (std::uint32_t j = 0; j <= n; ++j) {
        WordPoly s = shuffle(Word::concat(u, Word::power(Letter::L0, n - j)),
                             Word::power(Letter::L0, j));
        if (j % 2) s *= Rational(-1);
        out += s;
    }
    return out;
}

WordPoly reg0(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms()) out += reg0(w) * c;
    return out;
}

WordPoly reg1(const WordPoly& p) { return t_star(reg0(t_star(p))); }

WordPoly reg10(const Word& w) {
    auto [m, u, n] = strip_runs(w);
    // reg10(xi1^m u xi0^n) =
    //   sum_{i,j} (-1)^{i+j} xi1^i sh (xi1^{m-i} u xi0^{n-j}) sh xi0^j
    WordPoly out;
    for (std::uint32_t i = 0; i <= m; ++i) {
        for (std::uint32_t j = 0; j <= n; ++j) {
            Word mid = Word::concat(Word::power(Letter::L1, m - i),
                                    Word::concat(u, Word::power(Letter::L0, n - j)));
            WordPoly s = shuffle(WordPoly(Word::power(Letter::L1, i)),
                                 shuffle(mid, Word::power(Letter::L0, j)));
            if ((i + j) % 2) s *= Rational(-1);
            out += s;
        }
    }
    return out;
}

WordPoly reg10(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms()) out += reg10(w) * c;
    return out;
}

// --- decomposition-based oracles ---------------------------------------------
//
// These solve the triangular systems behind S = S0[xi0] and S = S10[xi0,xi1]
// by elimination, never invoking the closed-form signed sums above.  The key
// facts: for u in S0 the word u xi0^n occurs in u sh xi0^n with coefficient 1
// and every other word of that product has a strictly shorter trailing xi0
// run; the analogous statement holds on both sides for xi1^m sh u sh xi0^n
// with u in S10.

std::map<std::uint32_t, WordPoly> s0_elimination(const WordPoly& p) {
    std::map<std::uint32_t, WordPoly> parts;
    WordPoly rest = p;
    while (!rest.is_zero()) {
        // term with maximal trailing run
        const Word* pick = nullptr;
        std::uint32_t best = 0;
        for (const auto& [w, c] : rest.terms()) {
            std::uint32_t run = w.trailing_run(Letter::L0);
            if (!pick || run > best) {
                pick = &w;
                best = run;
            }
        }
        auto [u, n] = strip_trailing_zeros(*pick);
        Rational c = rest.coeff(*pick);
        parts[n].add(u, c);
        WordPoly s = shuffle(WordPoly(u), Word::power(Letter::L0, n));
        s *= c;
        rest -= s;
    }
    return parts;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, WordPoly>
s10_decomposition(const WordPoly& p) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, WordPoly> parts;
    WordPoly rest = p;
    while (!rest.is_zero()) {
        const Word* pick = nullptr;
        std::uint32_t best = 0;
        for (const auto& [w, c] : rest.terms()) {
            std::uint32_t run = w.leading_run(Letter::L1) + w.trailing_run(Letter::L0);
            if (!pick || run > best) {
                pick = &w;
                best = run;
            }
        }
        auto [m, u, n] = strip_runs(*pick);
        Rational c = rest.coeff(*pick);
        parts[{m, n}].add(u, c);
        WordPoly s = shuffle(WordPoly(Word::power(Letter::L1, m)),
                             shuffle(WordPoly(u), Word::power(Letter::L0, n)));
        s *= c;
        rest -= s;
    }
    return parts;
}

WordPoly reg0_decomp(const WordPoly& p) {
    auto parts = s0_elimination(p);
    auto it = parts.find(0);
    return it == parts.end() ? WordPoly() : it->second;
}

WordPoly reg10_decomp(const WordPoly& p) {
    auto parts = s10_decomposition(p);
    auto it = parts.find({0, 0});
    return it == parts.end() ? WordPoly() : it->second;
}

std::vector<WordPoly> s0_decomposition(const Word& w) {
    // Constructive form of u xi0^n = sum_j reg0(u xi0^{n-j}) sh xi0^j.
    std::vector<WordPoly> parts(w.weight() + 1);
    auto [u, n] = strip_trailing_zeros(w);
    for (std::uint32_t j = 0; j <= n; ++j)
        parts[j] = reg0(Word::concat(u, Word::power(Letter::L0, n - j)));
    return parts;
}

} // namespace kzmpl
