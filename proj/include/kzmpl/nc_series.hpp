#ifndef KZMPL_NC_SERIES_HPP
#define KZMPL_NC_SERIES_HPP

// Truncation-order-N elements of the completed algebra C<<X0,X1>>, stored
// densely over all words of weight <= N in canonical order.  The same
// template serves two instantiations: exact rationals for algebraic law
// tests and complex doubles for analytic work.

#include <complex>
#include <cstdint>
#include <vector>

#include "kzmpl/errors.hpp"
#include "kzmpl/words.hpp"

namespace kzmpl {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static double abs_value(const Rational& x) { return std::abs(x.get_d()); }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational one() { return Rational(1); }
    static constexpr bool exact = true;
};

template <>
struct ScalarTraits<std::complex<double>> {
    static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
    static double abs_value(const std::complex<double>& x) { return std::abs(x); }
    static std::complex<double> from_rational(const Rational& q) { return q.get_d(); }
    static std::complex<double> one() { return 1.0; }
    static constexpr bool exact = false;
};

template <class S>
class NCSeries {
public:
    static constexpr int max_order = 10;

    explicit NCSeries(int order) : order_(order) {
        if (order < 0 || order > max_order)
            throw domain_error("truncation order out of range");
        coeffs_.assign((std::size_t{1} << (order + 1)) - 1, S{});
    }

    static NCSeries unit(int order) {
        NCSeries s(order);
        s.coeffs_[0] = ScalarTraits<S>::one();
        return s;
    }

    int order() const { return order_; }
    std::size_t coeff_count() const { return coeffs_.size(); }

    const S& coeff(const Word& w) const { return coeffs_[w.canonical_index()]; }
    void set_coeff(const Word& w, S value) {
        if (w.weight() > static_cast<std::uint32_t>(order_))
            throw domain_error("word weight exceeds truncation order");
        coeffs_[w.canonical_index()] = std::move(value);
    }

    const S& coeff_by_index(std::size_t i) const { return coeffs_[i]; }
    S& coeff_by_index(std::size_t i) { return coeffs_[i]; }

    // Linear extension over a rational word polynomial.
    S eval(const WordPoly& p) const {
        S acc{};
        for (const auto& [w, c] : p.terms()) {
            if (w.weight() > static_cast<std::uint32_t>(order_)) continue;
            acc += ScalarTraits<S>::from_rational(c) * coeff(w);
        }
        return acc;
    }

    NCSeries& operator+=(const NCSeries& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    NCSeries& operator-=(const NCSeries& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    NCSeries& operator*=(const S& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
    friend NCSeries operator*(NCSeries a, const S& c) { return a *= c; }
    friend NCSeries operator*(const S& c, NCSeries a) { return a *= c; }
    friend bool operator==(const NCSeries&, const NCSeries&) = default;

    void require_same_order(const NCSeries& o) const {
        if (order_ != o.order_)
            throw domain_error("truncation order mismatch");
    }

private:
    int order_;
    std::vector<S> coeffs_;
};

using NCSeriesQ = NCSeries<Rational>;
using NCSeriesC = NCSeries<std::complex<double>>;

// Cauchy product by concatenation, truncated at the common order.
template <class S>
NCSeries<S> nc_mul(const NCSeries<S>& a, const NCSeries<S>& b) {
    a.require_same_order(b);
    NCSeries<S> out(a.order());
    for (const Word& w : Word::all_up_to_weight(a.order())) {
        S acc{};
        for (std::uint32_t k = 0; k <= w.weight(); ++k)
            acc += a.coeff(w.prefix(k)) * b.coeff(w.suffix(w.weight() - k));
        out.set_coeff(w, acc);
    }
    return out;
}

// Two-sided inverse of a series with invertible constant term, built by
// weight recursion on A * B = 1.
template <class S>
NCSeries<S> nc_inverse(const NCSeries<S>& a) {
    const S c0 = a.coeff(Word());
    if (ScalarTraits<S>::is_zero(c0))
        throw domain_error("series has zero constant term, not invertible");
    const S inv0 = ScalarTraits<S>::one() / c0;
    NCSeries<S> out(a.order());
    out.set_coeff(Word(), inv0);
    for (int s = 1; s <= a.order(); ++s) {
        for (const Word& w : Word::all_of_weight(s)) {
            S acc{};
            for (std::uint32_t k = 1; k <= w.weight(); ++k)
                acc += a.coeff(w.prefix(k)) * out.coeff(w.suffix(w.weight() - k));
            out.set_coeff(w, -inv0 * acc);
        }
    }
    return out;
}

// The anti-automorphism T = t_* o rho (T(X0)=X1, T(X1)=X0) acts on
// coefficients as index relabeling by tau.
template <class S>
NCSeries<S> apply_T(const NCSeries<S>& a) {
    NCSeries<S> out(a.order());
    for (const Word& w : Word::all_up_to_weight(a.order()))
        out.set_coeff(w, a.coeff(w.tau()));
    return out;
}

// Multiplicative substitution X0 -> -X1, X1 -> -X0 (the t_* action).
template <class S>
NCSeries<S> subst_neg_swap(const NCSeries<S>& a) {
    NCSeries<S> out(a.order());
    for (const Word& w : Word::all_up_to_weight(a.order())) {
        S c = a.coeff(w);
        if (w.weight() % 2) c = -c;
        out.set_coeff(w.swapped(), c);
    }
    return out;
}

struct GrouplikeReport {
    bool grouplike = false;
    double max_violation = 0.0;
    Word worst_u, worst_v;
};

// A series is grouplike iff its coefficient function is a shuffle
// homomorphism; this checks |A(u sh v) - A(u) A(v)| over all pairs with
// |u|+|v| <= order, plus the unit normalization.
template <class S>
GrouplikeReport is_grouplike(const NCSeries<S>& a, double tol) {
    GrouplikeReport rep;
    rep.max_violation =
        ScalarTraits<S>::abs_value(a.coeff(Word()) - ScalarTraits<S>::one());
    for (int su = 1; su <= a.order(); ++su) {
        for (int sv = su; sv + su <= a.order(); ++sv) {
            for (const Word& u : Word::all_of_weight(su)) {
                for (const Word& v : Word::all_of_weight(sv)) {
                    double viol = ScalarTraits<S>::abs_value(
                        a.eval(shuffle(u, v)) - a.coeff(u) * a.coeff(v));
                    if (viol > rep.max_violation) {
                        rep.max_violation = viol;
                        rep.worst_u = u;
                        rep.worst_v = v;
                    }
                }
            }
        }
    }
    rep.grouplike = rep.max_violation <= tol;
    return rep;
}

// exp(c X_i) truncated: coefficient c^k / k! on the word xi_i^k.
template <class S>
NCSeries<S> single_letter_exponential(Letter l, const S& c, int order) {
    NCSeries<S> out(order);
    S term = ScalarTraits<S>::one();
    out.set_coeff(Word(), term);
    for (int k = 1; k <= order; ++k) {
        term *= c / ScalarTraits<S>::from_rational(Rational(k));
        out.set_coeff(Word::power(l, k), term);
    }
    return out;
}

template <class S>
double max_abs_coeff(const NCSeries<S>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeff_count(); ++i)
        m = std::max(m, ScalarTraits<S>::abs_value(a.coeff_by_index(i)));
    return m;
}

template <class S>
double max_abs_diff(const NCSeries<S>& a, const NCSeries<S>& b) {
    a.require_same_order(b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeff_count(); ++i)
        m = std::max(m, ScalarTraits<S>::abs_value(a.coeff_by_index(i) - b.coeff_by_index(i)));
    return m;
}

} // namespace kzmpl

#endif
