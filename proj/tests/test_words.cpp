#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kzmpl/words.hpp"
#include "oracles.hpp"

using namespace kzmpl;

namespace {

Word W(const char* s) { return Word::parse(s); }
WordPoly P(const char* s) { return WordPoly(Word::parse(s)); }

bool in_s0_span(const WordPoly& p) {
    for (const auto& [w, c] : p.terms())
        if (!w.is_s0()) return false;
    return true;
}

bool in_s10_span(const WordPoly& p) {
    for (const auto& [w, c] : p.terms())
        if (!w.is_s10()) return false;
    return true;
}

std::vector<Word> random_words(std::mt19937_64& rng, int count, int max_weight) {
    std::vector<Word> out;
    std::uniform_int_distribution<int> len(0, max_weight);
    for (int i = 0; i < count; ++i) {
        int l = len(rng);
        std::uniform_int_distribution<std::uint64_t> bits(0, (1ull << l) - 1);
        out.push_back(Word::from_bits(l, l == 0 ? 0 : bits(rng)));
    }
    return out;
}

} // namespace

TEST_CASE("word text forms") {
    CHECK(W("011").weight() == 3);
    CHECK(W("011").to_string() == "011");
    CHECK(W("").empty());
    CHECK(W("e").empty());
    CHECK(W("()").empty());
    CHECK(W("(2,1)") == W("011"));
    CHECK(W("(3)") == W("001"));
    CHECK(W("011").indices_string() == "(2,1)");
    CHECK_THROWS_AS(Word::parse("012"), parse_error);
    CHECK_THROWS_AS(Word::parse("(0)"), parse_error);
    CHECK_THROWS_AS(Word::parse("(2,"), parse_error);
}

TEST_CASE("word structure and classes") {
    Word w = W("0011");
    CHECK(w.front() == Letter::L0);
    CHECK(w.back() == Letter::L1);
    CHECK(w.prefix(2) == W("00"));
    CHECK(w.suffix(2) == W("11"));
    CHECK(Word::concat(W("01"), W("10")) == W("0110"));
    CHECK(W("001").reversed() == W("100"));
    CHECK(W("001").swapped() == W("110"));
    CHECK(W("001").tau() == W("011"));

    CHECK(W("01").is_s0());
    CHECK(W("01").is_s10());
    CHECK(W("").is_s10());
    CHECK(W("10").is_s1());
    CHECK(!W("10").is_s0());
    CHECK(!W("110").is_s10());
    // is_s10 implies is_s0
    for (const Word& u : Word::all_up_to_weight(6))
        if (u.is_s10()) CHECK(u.is_s0());

    CHECK(W("1100").trailing_run(Letter::L0) == 2);
    CHECK(W("1100").leading_run(Letter::L1) == 2);
}

TEST_CASE("canonical order and index") {
    auto all = Word::all_up_to_weight(4);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].canonical_index() == i);
        CHECK(Word::from_canonical_index(i) == all[i]);
        if (i > 0) CHECK(all[i - 1] < all[i]);
    }
}

TEST_CASE("shuffle basics") {
    CHECK(shuffle(P("0"), P("1")) == P("01") + P("10"));
    CHECK(shuffle(P(""), P("011")) == P("011"));
    // xi1 sh xi0xi1 = xi1xi0xi1 + 2 xi0xi1xi1
    WordPoly expect = P("101") + make_rational(2) * P("011");
    CHECK(shuffle(P("1"), P("01")) == expect);
    CHECK(testing::shuffle_brute(W("1"), W("01")) == expect);
}

TEST_CASE("shuffle against brute-force interleavings") {
    for (const Word& u : Word::all_up_to_weight(3))
        for (const Word& v : Word::all_up_to_weight(3))
            CHECK(shuffle(WordPoly(u), WordPoly(v)) == testing::shuffle_brute(u, v));
}

TEST_CASE("shuffle commutativity and associativity") {
    // exhaustive at small total weight
    for (const Word& u : Word::all_up_to_weight(3)) {
        for (const Word& v : Word::all_up_to_weight(3)) {
            if (u.weight() + v.weight() > 5) continue;
            CHECK(shuffle(WordPoly(u), WordPoly(v)) == shuffle(WordPoly(v), WordPoly(u)));
            for (const Word& w : Word::all_up_to_weight(2)) {
                if (u.weight() + v.weight() + w.weight() > 5) continue;
                WordPoly left = shuffle(shuffle(WordPoly(u), WordPoly(v)), WordPoly(w));
                WordPoly right = shuffle(WordPoly(u), shuffle(WordPoly(v), WordPoly(w)));
                CHECK(left == right);
            }
        }
    }
    // random samples up to total weight 8
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        auto ws = random_words(rng, 3, 3);
        CHECK(shuffle(WordPoly(ws[0]), WordPoly(ws[1])) ==
              shuffle(WordPoly(ws[1]), WordPoly(ws[0])));
        WordPoly left = shuffle(shuffle(WordPoly(ws[0]), WordPoly(ws[1])), WordPoly(ws[2]));
        WordPoly right = shuffle(WordPoly(ws[0]), shuffle(WordPoly(ws[1]), WordPoly(ws[2])));
        CHECK(left == right);
    }
}

TEST_CASE("deconcatenation splits") {
    auto cuts = deconcat_splits(W("01"));
    REQUIRE(cuts.size() == 3);
    CHECK(cuts[0] == std::pair{W(""), W("01")});
    CHECK(cuts[1] == std::pair{W("0"), W("1")});
    CHECK(cuts[2] == std::pair{W("01"), W("")});

    auto unit_cuts = deconcat_splits(W(""));
    REQUIRE(unit_cuts.size() == 1);
    CHECK(unit_cuts[0] == std::pair{W(""), W("")});

    CHECK(deconcat_splits(W("001")).size() == 4);
}

TEST_CASE("antipode") {
    CHECK(antipode(P("01")) == P("10"));
    CHECK(antipode(P("1")) == -P("1"));
    CHECK(antipode(P("001")) == -P("100"));
}

TEST_CASE("antipode convolution identity") {
    // sum_{uv=w} rho*(u) sh v = 0 for every nonempty word, weight <= 8
    for (const Word& w : Word::all_up_to_weight(8)) {
        if (w.empty()) continue;
        WordPoly acc;
        for (const auto& [u, v] : deconcat_splits(w))
            acc += shuffle(antipode(WordPoly(u)), WordPoly(v));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("tau and t_star") {
    CHECK(tau(P("001")) == P("011"));
    CHECK(tau(P("")) == P(""));
    CHECK(t_star(P("01")) == P("10"));
    CHECK(t_star(P("0")) == -P("1"));

    for (const Word& w : Word::all_up_to_weight(8)) {
        WordPoly p(w);
        CHECK(tau(tau(p)) == p);
        CHECK(t_star(t_star(p)) == p);
        CHECK(t_star(antipode(p)) == tau(p));
    }
}

TEST_CASE("pairing") {
    CHECK(pair_form(P("01"), P("01")) == 1);
    CHECK(pair_form(P("01"), P("10")) == 0);
    CHECK(pair_form(shuffle(P("0"), P("1")), P("10")) == 1);
}

TEST_CASE("reg0 closed form") {
    CHECK(reg0(P("01")) == P("01"));
    CHECK(reg0(P("10")) == -P("01"));
    CHECK(reg0(P("0")).is_zero());
    CHECK(reg0(P("")) == P(""));
    // image lies in span(S0); S0 words are fixed
    for (const Word& w : Word::all_up_to_weight(6)) {
        WordPoly r = reg0(WordPoly(w));
        CHECK(in_s0_span(r));
        if (w.is_s0()) CHECK(r == WordPoly(w));
    }
}

TEST_CASE("reg1") {
    CHECK(reg1(P("01")) == -P("10"));
    CHECK(reg1(P("10")) == P("10"));
    CHECK(reg1(P("1")).is_zero());
    for (const Word& w : Word::all_up_to_weight(6))
        if (w.is_s1()) CHECK(reg1(WordPoly(w)) == WordPoly(w));
}

TEST_CASE("reg10 closed form") {
    CHECK(reg10(P("01")) == P("01"));
    CHECK(reg10(P("101")) == make_rational(-2) * P("011"));
    CHECK(reg10(P("10")) == -P("01"));
    CHECK(reg10(P("")) == P(""));
    for (const Word& w : Word::all_up_to_weight(6)) {
        WordPoly r = reg10(WordPoly(w));
        CHECK(in_s10_span(r));
        if (w.is_s10()) CHECK(r == WordPoly(w));
    }
}

TEST_CASE("closed forms agree with decomposition oracles") {
    for (const Word& w : Word::all_up_to_weight(8)) {
        WordPoly p(w);
        CHECK(reg0(p) == reg0_decomp(p));
        CHECK(reg10(p) == reg10_decomp(p));
    }
}

TEST_CASE("regularizations are shuffle homomorphisms") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        auto ws = random_words(rng, 2, 5);
        WordPoly u(ws[0]), v(ws[1]);
        CHECK(reg0(shuffle(u, v)) == shuffle(reg0(u), reg0(v)));
        CHECK(reg10(shuffle(u, v)) == shuffle(reg10(u), reg10(v)));
    }
}

TEST_CASE("recomposition identities") {
    // u xi0^n = sum_j reg0(u xi0^{n-j}) sh xi0^j  for u in S0
    for (const Word& u : Word::all_up_to_weight(4)) {
        if (!u.is_s0()) continue;
        for (std::uint32_t n = 0; n <= 4; ++n) {
            Word w = Word::concat(u, Word::power(Letter::L0, n));
            WordPoly acc;
            for (std::uint32_t j = 0; j <= n; ++j)
                acc += shuffle(reg0(WordPoly(Word::concat(u, Word::power(Letter::L0, n - j)))),
                               WordPoly(Word::power(Letter::L0, j)));
            CHECK(acc == WordPoly(w));
        }
    }
    // xi1^m u xi0^n = sum_{i,j} xi1^i sh reg10(xi1^{m-i} u xi0^{n-j}) sh xi0^j
    for (const Word& u : Word::all_up_to_weight(3)) {
        if (!u.is_s10()) continue;
        for (std::uint32_t m = 0; m <= 3; ++m) {
            for (std::uint32_t n = 0; n <= 3; ++n) {
                Word w = Word::concat(Word::power(Letter::L1, m),
                                      Word::concat(u, Word::power(Letter::L0, n)));
                WordPoly acc;
                for (std::uint32_t i = 0; i <= m; ++i)
                    for (std::uint32_t j = 0; j <= n; ++j) {
                        Word mid = Word::concat(Word::power(Letter::L1, m - i),
                                                Word::concat(u, Word::power(Letter::L0, n - j)));
                        acc += shuffle(WordPoly(Word::power(Letter::L1, i)),
                                       shuffle(reg10(WordPoly(mid)),
                                               WordPoly(Word::power(Letter::L0, j))));
                    }
                CHECK(acc == WordPoly(w));
            }
        }
    }
}

TEST_CASE("s0 decomposition reassembles the word") {
    for (const Word& w : Word::all_up_to_weight(6)) {
        auto parts = s0_decomposition(w);
        WordPoly acc;
        for (std::uint32_t j = 0; j < parts.size(); ++j) {
            CHECK(in_s0_span(parts[j]));
            acc += shuffle(parts[j], WordPoly(Word::power(Letter::L0, j)));
        }
        CHECK(acc == WordPoly(w));
        CHECK(parts[0] == reg0(WordPoly(w)));
    }
}

TEST_CASE("s10 decomposition reassembles the word") {
    for (const Word& w : Word::all_up_to_weight(5)) {
        auto parts = s10_decomposition(WordPoly(w));
        WordPoly acc;
        for (const auto& [ij, part] : parts) {
            CHECK(in_s10_span(part));
            acc += shuffle(WordPoly(Word::power(Letter::L1, ij.first)),
                           shuffle(part, WordPoly(Word::power(Letter::L0, ij.second))));
        }
        CHECK(acc == WordPoly(w));
    }
}

TEST_CASE("word poly text") {
    WordPoly p = make_rational(-2) * P("011");
    CHECK(p.to_string() == "-2*011");
    CHECK((P("01") + P("10")).to_string() == "01 + 10");
    CHECK(WordPoly().to_string() == "0");
    CHECK(P("").to_string() == "1");
}
