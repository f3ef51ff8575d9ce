#ifndef KZMPL_WORDS_HPP
#define KZMPL_WORDS_HPP

// Words over the two-letter alphabet {xi0, xi1} and their exact linear
// combinations.  A word doubles as a basis element of the shuffle algebra
// S(xi0, xi1) and, capitalized, of its graded dual C<X0, X1>; on this
// representation capitalization is the identity, so a single Word type
// serves both sides of the pairing.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kzmpl/errors.hpp"

namespace kzmpl {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

enum class Letter : unsigned { L0 = 0, L1 = 1 };

constexpr Letter other(Letter l) {
    return l == Letter::L0 ? Letter::L1 : Letter::L0;
}

// A word is stored as its length plus a packed bit sequence; the first
// letter sits at the most significant used bit, so that for equal lengths
// the numeric value of `bits` is the lexicographic rank (xi0 < xi1).
// Canonical total order = graded lexicographic.
class Word {
public:
    static constexpr std::uint32_t max_length = 62;

    constexpr Word() = default;
    static Word from_bits(std::uint32_t length, std::uint64_t bits);
    static Word single(Letter l);
    static Word power(Letter l, std::uint32_t n);

    std::uint32_t weight() const { return len_; }
    bool empty() const { return len_ == 0; }
    std::uint64_t bits() const { return bits_; }

    Letter letter(std::uint32_t i) const;
    Letter front() const { return letter(0); }
    Letter back() const { return letter(len_ - 1); }

    Word prepended(Letter l) const;
    Word appended(Letter l) const;
    Word without_front() const;
    Word without_back() const;
    Word prefix(std::uint32_t k) const;
    Word suffix(std::uint32_t k) const;
    static Word concat(Word a, Word b);

    Word reversed() const;
    // Exchange letters in place (xi0 <-> xi1), no reversal.
    Word swapped() const;
    // tau = reversal + letter swap; an involution.
    Word tau() const;

    std::uint32_t leading_run(Letter l) const;
    std::uint32_t trailing_run(Letter l) const;

    // Word classes: S0 = C1 + S.xi1, S1 = C1 + S.xi0, S10 = C1 + xi0.S.xi1.
    bool is_s0() const { return len_ == 0 || back() == Letter::L1; }
    bool is_s1() const { return len_ == 0 || back() == Letter::L0; }
    bool is_s10() const {
        return len_ == 0 || (front() == Letter::L0 && back() == Letter::L1);
    }

    // Position in the canonical enumeration of all words: the empty word is
    // 0, and a word of weight s has index 2^s - 1 + bits.
    std::uint64_t canonical_index() const {
        return ((std::uint64_t{1} << len_) - 1) + bits_;
    }
    static Word from_canonical_index(std::uint64_t idx);

    // Unique integer key (the index shifted by one); handy for hashing.
    std::uint64_t key() const { return (std::uint64_t{1} << len_) + bits_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.len_ != b.len_) return a.len_ <=> b.len_;
        return a.bits_ <=> b.bits_;
    }

    // Text forms: a string over {0,1} ("011" = xi0 xi1 xi1), or an MZV
    // index tuple "(k1,...,kr)" standing for xi0^{k1-1} xi1 ... xi0^{kr-1} xi1.
    // The empty word reads/prints as "" or "e".
    static Word parse(std::string_view text);
    std::string to_string() const;
    std::string display() const;  // like to_string() but the unit prints "e"

    // MZV exponent tuple (k1,...,kr); only defined for S0 words.
    std::vector<int> indices() const;
    static Word from_indices(const std::vector<int>& ks);
    std::string indices_string() const;

    static std::vector<Word> all_of_weight(std::uint32_t s);
    static std::vector<Word> all_up_to_weight(std::uint32_t s);

private:
    std::uint32_t len_ = 0;
    std::uint64_t bits_ = 0;
};

// Finite linear combination of words with exact rational coefficients.
// No zero coefficients are stored; iteration is in canonical word order.
class WordPoly {
public:
    WordPoly() = default;
    explicit WordPoly(const Word& w) { terms_[w] = 1; }
    WordPoly(const Word& w, Rational c);

    static WordPoly unit() { return WordPoly(Word()); }
    static WordPoly zero() { return WordPoly(); }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::uint32_t max_weight() const;

    Rational coeff(const Word& w) const;
    void add(const Word& w, const Rational& c);

    WordPoly& operator+=(const WordPoly& o);
    WordPoly& operator-=(const WordPoly& o);
    WordPoly& operator*=(const Rational& c);
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
    friend WordPoly operator*(WordPoly a, const Rational& c) { return a *= c; }
    friend WordPoly operator*(const Rational& c, WordPoly a) { return a *= c; }
    friend WordPoly operator-(WordPoly a) { return a *= Rational(-1); }
    friend bool operator==(const WordPoly&, const WordPoly&) = default;

    std::string to_string() const;

private:
    std::map<Word, Rational> terms_;
};

// --- shuffle Hopf algebra operations --------------------------------------

// Recursive shuffle product, extended bilinearly.
WordPoly shuffle(const WordPoly& p, const WordPoly& q);
WordPoly shuffle(const Word& u, const Word& v);
WordPoly shuffle(const WordPoly& p, const Word& v);
WordPoly shuffle(const Word& u, const WordPoly& q);
WordPoly shuffle_power(const Word& u, std::uint32_t n);

// All r+1 prefix/suffix cuts (u, v) with uv = w, in prefix order.
std::vector<std::pair<Word, Word>> deconcat_splits(const Word& w);

// Antipode rho*: signed reversal, extended linearly.
WordPoly antipode(const WordPoly& p);

// tau = t* o rho*: reverse and swap letters; an involutive anti-automorphism.
WordPoly tau(const WordPoly& p);

// t*: xi0 -> -xi1, xi1 -> -xi0 applied letterwise (no reversal); involution.
WordPoly t_star(const WordPoly& p);

// <.,.> pairing between S and its dual: words pair to 1 iff equal.
Rational pair_form(const WordPoly& p, const WordPoly& q);

// --- regularization --------------------------------------------------------

// Constant-term projections for the polynomial structures S = S0[xi0] and
// S = S10[xi0, xi1].  reg0/reg10 use the closed-form signed shuffle sums;
// the *_decomp variants solve the triangular decomposition instead and act
// as independent oracles (the two must agree exactly).
WordPoly reg0(const WordPoly& p);
WordPoly reg0(const Word& w);
WordPoly reg1(const WordPoly& p);   // = t* o reg0 o t*
WordPoly reg10(const WordPoly& p);
WordPoly reg10(const Word& w);

WordPoly reg0_decomp(const WordPoly& p);
WordPoly reg10_decomp(const WordPoly& p);

// Full decomposition w = sum_j out[j] sh xi0^j with out[j] in span(S0);
// out has exactly weight(w)+1 entries (trailing ones may be zero).
std::vector<WordPoly> s0_decomposition(const Word& w);

// Full decomposition p = sum_{i,j} xi1^i sh part[{i,j}] sh xi0^j with parts
// in span(S10); computed by triangular elimination.
std::map<std::pair<std::uint32_t, std::uint32_t>, WordPoly>
s10_decomposition(const WordPoly& p);

} // namespace kzmpl

#endif
