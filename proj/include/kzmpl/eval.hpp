#ifndef KZMPL_EVAL_HPP
#define KZMPL_EVAL_HPP

// Numerical evaluation of extended multiple polylogarithms Li(w;z) and
// multiple zeta values zeta(w), with explicit error control.
//
// The implemented domain is two charts of P^1 \ {0,1,inf}:
//   |z|   <= rho  (Re z >= 0): direct Taylor sums, tail |z|^{M+1}/(1-|z|)
//   |1-z| <= rho            : inversion recursion
//       Li(w;z) = zeta(reg10 w) - sum_{uv=w, u!=1} Li(tau(u);1-z) Li(v;z),
// with rho = 1/2 so the two disks cover the full real interval (0,1).
// log z is the principal branch throughout; arguments with negative real
// part or on the excluded rays are rejected rather than continued.
//
// Multiple zeta values use the inversion formula at z = 1/2, where every
// factor is a geometrically convergent Taylor sum (roughly 40 terms for
// 1e-12 tails).  zeta_direct sums the defining nested series instead and is
// kept as a deliberately slow independent oracle.

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "kzmpl/errors.hpp"
#include "kzmpl/words.hpp"

namespace kzmpl {

using Complex = std::complex<double>;

struct ZetaEntry {
    double value = 0.0;
    double err = 0.0;
};

// Certified map from S10 words to values with error bounds.  Instances are
// value types so a copy can be perturbed and injected into the
// Riemann-Hilbert solvers without touching the context's own table.
class ZetaTable {
public:
    bool has(const Word& w) const { return entries_.count(w) != 0; }
    const ZetaEntry& get(const Word& w) const;
    void set(const Word& w, ZetaEntry e) { entries_[w] = e; }
    void perturb(const Word& w, double delta);

    // zeta(reg10 p) evaluated through this table's entries.
    ZetaEntry eval_reg(const WordPoly& p) const;

    const std::map<Word, ZetaEntry>& entries() const { return entries_; }
    std::uint32_t max_weight() const;

private:
    std::map<Word, ZetaEntry> entries_;
};

struct EvalOptions {
    double tol = 1e-12;      // target absolute error per elementary evaluation
    long max_terms = 200000; // hard cutoff for Taylor sums
    double rho = 0.5;        // chart radius, in (0, 1/2]
};

class EvalContext {
public:
    explicit EvalContext(EvalOptions opt = {});

    const EvalOptions& options() const { return opt_; }

    static bool in_domain(Complex z, double rho);
    bool in_domain(Complex z) const { return in_domain(z, opt_.rho); }

    // Taylor sum for an S0 word, |z| <= rho.
    Complex li_taylor(const Word& w, Complex z) const;

    // Extended MPL on the |z| <= rho chart: the reg0 decomposition
    // w = sum_j w_j sh xi0^j gives Li(w;z) = sum_j Li(w_j;z) log^j(z)/j!.
    Complex li_ext(const Word& w, Complex z) const;

    // Inversion recursion, |1-z| <= rho.
    Complex li_inversion(const Word& w, Complex z) const;

    // Region-dispatched evaluator (memoized).
    Complex li(const Word& w, Complex z) const;
    Complex li(const WordPoly& p, Complex z) const;

    // zeta via the z = 1/2 inversion route; requires an S10 word.
    ZetaEntry zeta(const Word& w) const;

    // zeta(reg10 p) for arbitrary polynomials.
    ZetaEntry zeta_reg(const WordPoly& p) const;
    ZetaEntry zeta_reg(const Word& w) const { return zeta_reg(WordPoly(w)); }

    // Internal table, built on demand up to the requested weight.
    const ZetaTable& zeta_table(std::uint32_t weight) const;

    // sum_{uv=w} Li(tau(u);1-z) Li(v;z), and its defect against
    // zeta(reg10 w); the defect should vanish up to evaluation error.
    Complex gif_sum(const Word& w, Complex z) const;
    double gif_residual(const Word& w, Complex z) const;

    // Central finite difference of gif_sum in z; exact zero in exact math.
    double gif_derivative_residual(const Word& w, Complex z, double h) const;

private:
    Complex li_unlocked(const Word& w, Complex z) const;
    ZetaEntry zeta_unlocked(const Word& w) const;

    struct LiKey {
        std::uint64_t word, re, im;
        bool operator==(const LiKey&) const = default;
    };
    struct LiKeyHash {
        std::size_t operator()(const LiKey& k) const {
            std::uint64_t h = k.word * 0x9e3779b97f4a7c15ULL;
            h ^= k.re + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= k.im + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    EvalOptions opt_;
    mutable std::recursive_mutex mu_;
    mutable std::unordered_map<LiKey, Complex, LiKeyHash> li_memo_;
    mutable ZetaTable table_;
};

// Nested partial sum of the defining series over n1 <= M, with an
// integral-test tail bound O(M^{1-k1} log^{r-1} M).  Requires M >= 100.
ZetaEntry zeta_direct(const Word& w, long M);

} // namespace kzmpl

#endif
