#include "kzmpl/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace kzmpl {

namespace {

double bit_cast_key(double x) { return x == 0.0 ? 0.0 : x; }  // merge +-0

std::uint64_t double_bits(double x) {
    x = bit_cast_key(x);
    std::uint64_t b;
    static_assert(sizeof(b) == sizeof(x));
    std::memcpy(&b, &x, sizeof(b));
    return b;
}

constexpr double kRadiusSlack = 1e-12;

} // namespace

// --- ZetaTable ----------------------------------------------------------------

const ZetaEntry& ZetaTable::get(const Word& w) const {
    auto it = entries_.find(w);
    if (it == entries_.end())
        throw domain_error("missing zeta table entry for word " + w.display());
    return it->second;
}

void ZetaTable::perturb(const Word& w, double delta) {
    auto it = entries_.find(w);
    if (it == entries_.end())
        throw domain_error("cannot perturb missing entry " + w.display());
    it->second.value += delta;
}

ZetaEntry ZetaTable::eval_reg(const WordPoly& p) const {
    WordPoly q = reg10(p);
    ZetaEntry out;
    for (const auto& [w, c] : q.terms()) {
        const ZetaEntry& e = get(w);
        double cd = c.get_d();
        out.value += cd * e.value;
        out.err += std::abs(cd) * e.err;
    }
    return out;
}

std::uint32_t ZetaTable::max_weight() const {
    std::uint32_t m = 0;
    for (const auto& [w, e] : entries_) m = std::max(m, w.weight());
    return m;
}

// --- EvalContext ----------------------------------------------------------------

EvalContext::EvalContext(EvalOptions opt) : opt_(opt) {
    if (!(opt_.tol > 0)) throw domain_error("tolerance must be positive");
    if (!(opt_.rho > 0 && opt_.rho <= 0.5))
        throw domain_error("chart radius must lie in (0, 1/2]");
}

bool EvalContext::in_domain(Complex z, double rho) {
    if (z.imag() == 0.0) {
        double x = z.real();
        if (rho >= 0.5) return x > 0.0 && x < 1.0;
        return (x > 0.0 && x <= rho + kRadiusSlack) ||
               (x < 1.0 && x >= 1.0 - rho - kRadiusSlack);
    }
    if (std::abs(z) <= rho + kRadiusSlack && z.real() >= 0.0) return true;
    return std::abs(1.0 - z) <= rho + kRadiusSlack;
}

Complex EvalContext::li_taylor(const Word& w, Complex z) const {
    if (!w.is_s0())
        throw domain_error("li_taylor needs an S0 word, got " + w.display());
    const double az = std::abs(z);
    if (az > opt_.rho + kRadiusSlack)
        throw domain_error("li_taylor argument outside |z| <= rho");
    if (w.empty()) return 1.0;
    if (az == 0.0) return 0.0;

    // Every Taylor coefficient of an S0 word has modulus <= 1, so the tail
    // after M terms is bounded by |z|^{M+1}/(1-|z|).
    long M = 1;
    double tail = az * az / (1.0 - az);
    while (tail > opt_.tol) {
        tail *= az;
        ++M;
        if (M > opt_.max_terms)
            throw domain_error("li_taylor: max_terms exceeded before tail bound met");
    }

    const auto ks = w.indices();
    const int r = static_cast<int>(ks.size());
    std::vector<double> inner(r + 2, 0.0);
    inner[r + 1] = 1.0;
    Complex sum = 0.0, zn = 1.0;
    for (long n = 1; n <= M; ++n) {
        zn *= z;
        sum += zn * (inner[2] / std::pow(static_cast<double>(n), ks[0]));
        for (int j = 2; j <= r; ++j)
            inner[j] += inner[j + 1] / std::pow(static_cast<double>(n), ks[j - 1]);
    }
    return sum;
}

Complex EvalContext::li_ext(const Word& w, Complex z) const {
    if (std::abs(z) > opt_.rho + kRadiusSlack)
        throw domain_error("li_ext argument outside |z| <= rho");
    auto parts = s0_decomposition(w);
    Complex acc = 0.0;
    Complex logz = 0.0;
    double factorial = 1.0;
    Complex log_pow = 1.0;
    bool have_log = false;
    for (std::uint32_t j = 0; j < parts.size(); ++j) {
        if (j > 0) {
            factorial *= j;
            if (!have_log) {
                bool needed = false;
                for (std::uint32_t k = j; k < parts.size(); ++k)
                    if (!parts[k].is_zero()) needed = true;
                if (!needed) break;
                if (z == 0.0 || (z.imag() == 0.0 && z.real() < 0.0))
                    throw domain_error("li_ext needs log z off the chart");
                logz = std::log(z);
                have_log = true;
            }
            log_pow *= logz;
        }
        if (parts[j].is_zero()) continue;
        Complex piece = 0.0;
        for (const auto& [u, c] : parts[j].terms())
            piece += c.get_d() * li_taylor(u, z);
        acc += piece * log_pow / factorial;
    }
    return acc;
}

Complex EvalContext::li_inversion(const Word& w, Complex z) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (std::abs(1.0 - z) > opt_.rho + kRadiusSlack)
        throw domain_error("li_inversion argument outside |1-z| <= rho");
    if (w.empty()) return 1.0;
    // Forced inversion route: the suffix factors recurse through this same
    // formula so the dual-route cross-check at z = 1/2 is genuine.
    Complex value = zeta_reg(WordPoly(w)).value;
    for (const auto& [u, v] : deconcat_splits(w)) {
        if (u.empty()) continue;
        Complex a = li_ext(u.tau(), 1.0 - z);
        Complex b = v.empty() ? Complex(1.0) : li_inversion(v, z);
        value -= a * b;
    }
    return value;
}

Complex EvalContext::li(const Word& w, Complex z) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return li_unlocked(w, z);
}

Complex EvalContext::li_unlocked(const Word& w, Complex z) const {
    if (w.empty()) return 1.0;
    if (!in_domain(z))
        throw domain_error("argument outside the implemented domain");
    LiKey key{w.key(), double_bits(z.real()), double_bits(z.imag())};
    auto it = li_memo_.find(key);
    if (it != li_memo_.end()) return it->second;

    Complex value;
    if (std::abs(z) <= opt_.rho + kRadiusSlack) {
        value = li_ext(w, z);
    } else {
        // zeta(reg10 w) - sum_{uv=w, u != 1} Li(tau u; 1-z) Li(v; z)
        value = zeta_reg(WordPoly(w)).value;
        for (const auto& [u, v] : deconcat_splits(w)) {
            if (u.empty()) continue;
            Complex a = li_unlocked(u.tau(), 1.0 - z);
            Complex b = v.empty() ? Complex(1.0) : li_unlocked(v, z);
            value -= a * b;
        }
    }
    li_memo_.emplace(key, value);
    return value;
}

Complex EvalContext::li(const WordPoly& p, Complex z) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Complex acc = 0.0;
    for (const auto& [w, c] : p.terms()) acc += c.get_d() * li_unlocked(w, z);
    return acc;
}

ZetaEntry EvalContext::zeta(const Word& w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return zeta_unlocked(w);
}

ZetaEntry EvalContext::zeta_unlocked(const Word& w) const {
    if (!w.is_s10())
        throw domain_error("zeta needs an S10 word, got " + w.display());
    if (table_.has(w)) return table_.get(w);

    // zeta(w) = sum_{uv=w} Li(tau u; 1/2) Li(v; 1/2); both factors are S0
    // words, so plain Taylor sums apply with geometric tails.
    const Complex half(0.5, 0.0);
    ZetaEntry out;
    for (const auto& [u, v] : deconcat_splits(w)) {
        Complex a = li_taylor(u.tau(), half);
        Complex b = li_taylor(v, half);
        out.value += (a * b).real();
        out.err += std::abs(a) * opt_.tol + std::abs(b) * opt_.tol + opt_.tol * opt_.tol;
    }
    table_.set(w, out);
    return out;
}

ZetaEntry EvalContext::zeta_reg(const WordPoly& p) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    WordPoly q = reg10(p);
    ZetaEntry out;
    for (const auto& [w, c] : q.terms()) {
        ZetaEntry e = zeta_unlocked(w);
        double cd = c.get_d();
        out.value += cd * e.value;
        out.err += std::abs(cd) * e.err;
    }
    return out;
}

const ZetaTable& EvalContext::zeta_table(std::uint32_t weight) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    for (std::uint32_t s = 0; s <= weight; ++s)
        for (const Word& w : Word::all_of_weight(s))
            if (w.is_s10()) zeta_unlocked(w);
    return table_;
}

Complex EvalContext::gif_sum(const Word& w, Complex z) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Complex acc = 0.0;
    for (const auto& [u, v] : deconcat_splits(w)) {
        Complex a = u.empty() ? Complex(1.0) : li_unlocked(u.tau(), 1.0 - z);
        Complex b = v.empty() ? Complex(1.0) : li_unlocked(v, z);
        acc += a * b;
    }
    return acc;
}

double EvalContext::gif_residual(const Word& w, Complex z) const {
    return std::abs(gif_sum(w, z) - Complex(zeta_reg(WordPoly(w)).value));
}

double EvalContext::gif_derivative_residual(const Word& w, Complex z, double h) const {
    Complex hi = gif_sum(w, z + h);
    Complex lo = gif_sum(w, z - h);
    return std::abs(hi - lo) / (2.0 * h);
}

// --- direct oracle ----------------------------------------------------------------

ZetaEntry zeta_direct(const Word& w, long M) {
    if (!w.is_s10())
        throw domain_error("zeta_direct needs an S10 word");
    if (M < 100) throw domain_error("zeta_direct needs M >= 100");
    if (w.empty()) return {1.0, 0.0};

    const auto ks = w.indices();
    const int r = static_cast<int>(ks.size());
    std::vector<long double> inner(r + 2, 0.0L);
    inner[r + 1] = 1.0L;
    long double sum = 0.0L;
    for (long n = 1; n <= M; ++n) {
        const long double nl = static_cast<long double>(n);
        sum += inner[2] / powl(nl, ks[0]);
        for (int j = 2; j <= r; ++j)
            inner[j] += inner[j + 1] / powl(nl, ks[j - 1]);
    }

    // Integral-test tail: sum_{n>M} S2(n)/n^{k1} with
    // S2(n) <= (1+ln n)^{r-1}/(r-1)!, and
    // I(q) = int_M^inf (1+ln x)^q x^{-k1} dx satisfies the recursion
    // I(q) = (1+ln M)^q M^{1-k1}/(k1-1) + q I(q-1)/(k1-1).
    const double k1 = ks[0];
    const double lM = 1.0 + std::log(static_cast<double>(M));
    double I = std::pow(static_cast<double>(M), 1.0 - k1) / (k1 - 1.0);
    double factorial = 1.0;
    for (int q = 1; q <= r - 1; ++q) {
        I = std::pow(lM, q) * std::pow(static_cast<double>(M), 1.0 - k1) / (k1 - 1.0) +
            q * I / (k1 - 1.0);
        factorial *= q;
    }
    return {static_cast<double>(sum), I / factorial};
}

} // namespace kzmpl
