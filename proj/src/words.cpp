#include "kzmpl/words.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace kzmpl {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// --- Word -------------------------------------------------------------------

Word Word::from_bits(std::uint32_t length, std::uint64_t bits) {
    if (length > max_length)
        throw domain_error("word length exceeds supported maximum");
    Word w;
    w.len_ = length;
    w.bits_ = bits & ((length == 0) ? 0 : ((std::uint64_t{1} << length) - 1));
    return w;
}

Word Word::single(Letter l) { return from_bits(1, static_cast<std::uint64_t>(l)); }

Word Word::power(Letter l, std::uint32_t n) {
    return l == Letter::L0 ? from_bits(n, 0)
                           : from_bits(n, (std::uint64_t{1} << n) - 1);
}

Letter Word::letter(std::uint32_t i) const {
    return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1);
}

Word Word::prepended(Letter l) const {
    Word w;
    w.len_ = len_ + 1;
    if (w.len_ > max_length) throw domain_error("word too long");
    w.bits_ = bits_ | (static_cast<std::uint64_t>(l) << len_);
    return w;
}

Word Word::appended(Letter l) const {
    Word w;
    w.len_ = len_ + 1;
    if (w.len_ > max_length) throw domain_error("word too long");
    w.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(l);
    return w;
}

Word Word::without_front() const { return suffix(len_ - 1); }
Word Word::without_back() const { return prefix(len_ - 1); }

Word Word::prefix(std::uint32_t k) const {
    Word w;
    w.len_ = k;
    w.bits_ = bits_ >> (len_ - k);
    return w;
}

Word Word::suffix(std::uint32_t k) const {
    Word w;
    w.len_ = k;
    w.bits_ = bits_ & ((k == 0) ? 0 : ((std::uint64_t{1} << k) - 1));
    return w;
}

Word Word::concat(Word a, Word b) {
    Word w;
    w.len_ = a.len_ + b.len_;
    if (w.len_ > max_length) throw domain_error("word too long");
    w.bits_ = (a.bits_ << b.len_) | b.bits_;
    return w;
}

Word Word::reversed() const {
    Word w;
    w.len_ = len_;
    std::uint64_t b = 0;
    for (std::uint32_t i = 0; i < len_; ++i)
        b = (b << 1) | ((bits_ >> i) & 1);
    w.bits_ = b;
    return w;
}

Word Word::swapped() const {
    Word w;
    w.len_ = len_;
    w.bits_ = (~bits_) & ((len_ == 0) ? 0 : ((std::uint64_t{1} << len_) - 1));
    return w;
}

Word Word::tau() const { return reversed().swapped(); }

std::uint32_t Word::leading_run(Letter l) const {
    std::uint32_t n = 0;
    while (n < len_ && letter(n) == l) ++n;
    return n;
}

std::uint32_t Word::trailing_run(Letter l) const {
    std::uint32_t n = 0;
    while (n < len_ && letter(len_ - 1 - n) == l) ++n;
    return n;
}

Word Word::from_canonical_index(std::uint64_t idx) {
    std::uint32_t len = 0;
    while (((std::uint64_t{1} << (len + 1)) - 1) <= idx) ++len;
    return from_bits(len, idx - ((std::uint64_t{1} << len) - 1));
}

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "e") return Word();
    if (text.front() == '(') {
        if (text.back() != ')')
            throw parse_error("unterminated index tuple: " + std::string(text));
        std::string body(text.substr(1, text.size() - 2));
        std::vector<int> ks;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            int k;
            try {
                k = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw parse_error("bad index in tuple: " + item);
            }
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size() || k < 1)
                throw parse_error("bad index in tuple: " + item);
            ks.push_back(k);
        }
        return from_indices(ks);
    }
    Word w;
    for (char c : text) {
        if (c == '0')
            w = w.appended(Letter::L0);
        else if (c == '1')
            w = w.appended(Letter::L1);
        else
            throw parse_error(std::string("bad letter '") + c + "' in word");
    }
    return w;
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(len_);
    for (std::uint32_t i = 0; i < len_; ++i)
        s.push_back(letter(i) == Letter::L0 ? '0' : '1');
    return s;
}

std::string Word::display() const { return len_ == 0 ? "e" : to_string(); }

std::vector<int> Word::indices() const {
    if (!is_s0())
        throw domain_error("MZV indices are defined for S0 words only");
    std::vector<int> ks;
    int k = 1;
    for (std::uint32_t i = 0; i < len_; ++i) {
        if (letter(i) == Letter::L0) {
            ++k;
        } else {
            ks.push_back(k);
            k = 1;
        }
    }
    return ks;
}

Word Word::from_indices(const std::vector<int>& ks) {
    Word w;
    for (int k : ks) {
        if (k < 1) throw parse_error("MZV index must be >= 1");
        for (int i = 1; i < k; ++i) w = w.appended(Letter::L0);
        w = w.appended(Letter::L1);
    }
    return w;
}

std::string Word::indices_string() const {
    std::string s = "(";
    auto ks = indices();
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ks[i]);
    }
    return s + ")";
}

std::vector<Word> Word::all_of_weight(std::uint32_t s) {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << s);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << s); ++b)
        out.push_back(from_bits(s, b));
    return out;
}

std::vector<Word> Word::all_up_to_weight(std::uint32_t s) {
    std::vector<Word> out;
    for (std::uint32_t k = 0; k <= s; ++k)
        for (const Word& w : all_of_weight(k)) out.push_back(w);
    return out;
}

// --- WordPoly ----------------------------------------------------------------

WordPoly::WordPoly(const Word& w, Rational c) {
    if (sgn(c) != 0) terms_[w] = std::move(c);
}

std::uint32_t WordPoly::max_weight() const {
    std::uint32_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.weight());
    return m;
}

Rational WordPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordPoly::add(const Word& w, const Rational& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (sgn(c) != 0) terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordPoly& WordPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, q] : terms_) q *= c;
    return *this;
}

std::string WordPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        if (a != 1 || w.empty()) {
            os << a.get_str();
            if (!w.empty()) os << "*";
        }
        if (!w.empty()) os << w.to_string();
        first = false;
    }
    return os.str();
}

// --- shuffle ------------------------------------------------------------------

namespace {

struct PairKey {
    std::uint64_t a, b;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        return std::hash<std::uint64_t>{}(k.a * 0x9e3779b97f4a7c15ULL ^ k.b);
    }
};

std::unordered_map<PairKey, WordPoly, PairKeyHash> g_shuffle_memo;
std::mutex g_shuffle_mutex;

WordPoly prepend_all(Letter l, const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms()) out.add(w.prepended(l), c);
    return out;
}

} // namespace

WordPoly shuffle(const Word& u, const Word& v) {
    if (u.empty()) return WordPoly(v);
    if (v.empty()) return WordPoly(u);
    const Word *a = &u, *b = &v;
    if (v < u) std::swap(a, b);  // the product is commutative
    PairKey key{a->key(), b->key()};
    {
        std::lock_guard<std::mutex> lock(g_shuffle_mutex);
        auto it = g_shuffle_memo.find(key);
        if (it != g_shuffle_memo.end()) return it->second;
    }
    WordPoly out = prepend_all(a->front(), shuffle(a->without_front(), *b));
    out += prepend_all(b->front(), shuffle(*a, b->without_front()));
    {
        std::lock_guard<std::mutex> lock(g_shuffle_mutex);
        g_shuffle_memo.emplace(key, out);
    }
    return out;
}

WordPoly shuffle(const WordPoly& p, const WordPoly& q) {
    WordPoly out;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) {
            WordPoly s = shuffle(u, v);
            s *= a * b;
            out += s;
        }
    return out;
}

WordPoly shuffle(const WordPoly& p, const Word& v) { return shuffle(p, WordPoly(v)); }
WordPoly shuffle(const Word& u, const WordPoly& q) { return shuffle(WordPoly(u), q); }

WordPoly shuffle_power(const Word& u, std::uint32_t n) {
    WordPoly out = WordPoly::unit();
    for (std::uint32_t i = 0; i < n; ++i) out = shuffle(out, WordPoly(u));
    return out;
}

std::vector<std::pair<Word, Word>> deconcat_splits(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.weight() + 1);
    for (std::uint32_t k = 0; k <= w.weight(); ++k)
        out.emplace_back(w.prefix(k), w.suffix(w.weight() - k));
    return out;
}

WordPoly antipode(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms())
        out.add(w.reversed(), (w.weight() % 2 == 0) ? c : -c);
    return out;
}

WordPoly tau(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms()) out.add(w.tau(), c);
    return out;
}

WordPoly t_star(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms())
        out.add(w.swapped(), (w.weight() % 2 == 0) ? c : -c);
    return out;
}

Rational pair_form(const WordPoly& p, const WordPoly& q) {
    // <w, W'> = delta_{w,w'}; bilinear extension reduces to a sparse dot.
    Rational out(0);
    const auto& small = p.size() <= q.size() ? p : q;
    const auto& big = p.size() <= q.size() ? q : p;
    for (const auto& [w, c] : small.terms()) out += c * big.coeff(w);
    return out;
}

} // namespace kzmpl
