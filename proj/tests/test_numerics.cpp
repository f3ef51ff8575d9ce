#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kzmpl/eval.hpp"
#include "oracles.hpp"

using namespace kzmpl;
using doctest::Approx;

namespace {

Word W(const char* s) { return Word::parse(s); }

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLi2Half = 0.5822405264650125;   // pi^2/12 - log^2(2)/2
constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595943;

const EvalContext& ctx() {
    static EvalContext c;
    return c;
}

} // namespace

TEST_CASE("options are validated") {
    CHECK_THROWS_AS(EvalContext({.tol = 0.0}), domain_error);
    CHECK_THROWS_AS(EvalContext({.rho = 0.6}), domain_error);
    CHECK_THROWS_AS(EvalContext({.rho = 0.0}), domain_error);
}

TEST_CASE("domain membership") {
    CHECK(EvalContext::in_domain(0.5, 0.5));
    CHECK(EvalContext::in_domain(1e-4, 0.5));
    CHECK(EvalContext::in_domain(1.0 - 1e-4, 0.5));
    CHECK(EvalContext::in_domain({0.8, -0.3}, 0.5));
    CHECK(EvalContext::in_domain({0.1, 0.2}, 0.5));
    CHECK(!EvalContext::in_domain(0.0, 0.5));
    CHECK(!EvalContext::in_domain(1.0, 0.5));
    CHECK(!EvalContext::in_domain(-0.1, 0.5));
    CHECK(!EvalContext::in_domain(1.2, 0.5));
    CHECK(!EvalContext::in_domain({0.5, 0.6}, 0.5));
    CHECK(!EvalContext::in_domain({-0.2, 0.3}, 0.5));  // negative real part
}

TEST_CASE("li_taylor") {
    CHECK(ctx().li_taylor(W("1"), 0.5).real() == Approx(kLog2).epsilon(1e-11));
    CHECK(ctx().li_taylor(W("01"), 0.5).real() == Approx(kLi2Half).epsilon(1e-11));
    CHECK(ctx().li_taylor(W("011"), 0.0) == Complex(0.0));
    CHECK(ctx().li_taylor(W(""), 0.37) == Complex(1.0));
    // -log(1-z) computed independently
    for (double z : {0.1, 0.25, 0.5}) {
        CHECK(std::abs(ctx().li_taylor(W("1"), z) + std::log(1.0 - z)) < 1e-11);
    }
    CHECK_THROWS_AS(ctx().li_taylor(W("10"), 0.3), domain_error);  // not S0
    CHECK_THROWS_AS(ctx().li_taylor(W("1"), 0.7), domain_error);   // outside chart
}

TEST_CASE("li_ext") {
    CHECK(ctx().li_ext(W("0"), 0.5).real() == Approx(-kLog2).epsilon(1e-12));
    CHECK(ctx().li_ext(W(""), 0.41) == Complex(1.0));
    // Li(x1x0; 1/2) = -log^2 2 - Li2(1/2), from x1x0 = x1 sh x0 - x0x1
    CHECK(ctx().li_ext(W("10"), 0.5).real() == Approx(-1.0626935403832139).epsilon(1e-11));
    // pure S0 words need no logarithm and survive z -> 0
    CHECK(ctx().li_ext(W("011"), 0.0) == Complex(0.0));
    CHECK_THROWS_AS(ctx().li_ext(W("0"), 0.0), domain_error);  // log 0
}

TEST_CASE("li dispatch and inversion route") {
    CHECK(ctx().li(W("1"), 0.9).real() == Approx(2.302585092994046).epsilon(1e-11));
    CHECK(ctx().li(W(""), 0.77) == Complex(1.0));
    CHECK_THROWS_AS(ctx().li(W("1"), -0.1), domain_error);
    CHECK_THROWS_AS(ctx().li(W("1"), 0.0), domain_error);
    CHECK_THROWS_AS(ctx().li(W("1"), Complex(0.5, 0.6)), domain_error);

    // inversion at z = 0.99 against a brute-force Taylor sum with huge M
    Complex slow = testing::li_series_brute(W("01"), 0.99, 6000);
    CHECK(std::abs(ctx().li(W("01"), 0.99) - slow) < 1e-8);

    // both routes agree on the overlap circle z = 1/2, weight <= 4
    for (const Word& w : Word::all_up_to_weight(4)) {
        if (w.empty()) continue;
        Complex a = ctx().li_ext(w, 0.5);
        Complex b = ctx().li_inversion(w, 0.5);
        CHECK(std::abs(a - b) < 1e-10);
    }
}

TEST_CASE("li is a shuffle homomorphism numerically") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> len(1, 3);
    std::vector<Complex> zs = {0.2, 0.5, {0.8, -0.3}};
    for (int i = 0; i < 12; ++i) {
        int lu = len(rng), lv = len(rng);
        std::uniform_int_distribution<std::uint64_t> bits(0, 255);
        Word u = Word::from_bits(lu, bits(rng) & ((1 << lu) - 1));
        Word v = Word::from_bits(lv, bits(rng) & ((1 << lv) - 1));
        for (Complex z : zs) {
            Complex prod = ctx().li(u, z) * ctx().li(v, z);
            Complex mix = ctx().li(shuffle(u, v), z);
            CHECK(std::abs(prod - mix) < 1e-9);
        }
    }
}

TEST_CASE("differential relations by finite differences") {
    const double h = 1e-4;
    for (const Word& u : Word::all_up_to_weight(3)) {
        for (double z : {0.3, 0.5, 0.7}) {
            Complex target0 = ctx().li(u, z) / z;
            Complex fd0 = (ctx().li(u.prepended(Letter::L0), z + h) -
                           ctx().li(u.prepended(Letter::L0), z - h)) /
                          (2 * h);
            CHECK(std::abs(fd0 - target0) < 1e-6);

            Complex target1 = ctx().li(u, z) / (1.0 - z);
            Complex fd1 = (ctx().li(u.prepended(Letter::L1), z + h) -
                           ctx().li(u.prepended(Letter::L1), z - h)) /
                          (2 * h);
            CHECK(std::abs(fd1 - target1) < 1e-6);
        }
    }
}

TEST_CASE("zeta via the inversion route") {
    CHECK(ctx().zeta(W("01")).value == Approx(kZeta2).epsilon(1e-11));
    CHECK(ctx().zeta(W("011")).value == Approx(kZeta3).epsilon(1e-11));
    CHECK(ctx().zeta(W("")).value == Approx(1.0));
    CHECK(ctx().zeta(W("01")).err < 1e-10);
    CHECK_THROWS_AS(ctx().zeta(W("10")), domain_error);
    CHECK_THROWS_AS(ctx().zeta(W("1")), domain_error);
}

TEST_CASE("zeta_direct oracle") {
    auto z2 = zeta_direct(W("01"), 1000000);
    CHECK(std::abs(z2.value - kZeta2) <= z2.err);
    CHECK(z2.err < 1.1e-6);

    auto z3 = zeta_direct(W("001"), 10000);
    CHECK(std::abs(z3.value - kZeta3) <= z3.err);

    CHECK_THROWS_AS(zeta_direct(W("1"), 1000), domain_error);
    CHECK_THROWS_AS(zeta_direct(W("01"), 10), domain_error);
}

TEST_CASE("zeta dual route agreement, weight <= 5") {
    for (const Word& w : Word::all_up_to_weight(5)) {
        if (!w.is_s10() || w.empty()) continue;
        ZetaEntry fast = ctx().zeta(w);
        ZetaEntry slow = zeta_direct(w, 20000);
        CHECK(std::abs(fast.value - slow.value) <= fast.err + slow.err);
    }
}

TEST_CASE("zeta_reg") {
    CHECK(ctx().zeta_reg(W("101")).value == Approx(-2 * kZeta3).epsilon(1e-11));
    CHECK(std::abs(ctx().zeta_reg(W("0")).value) < 1e-14);
    CHECK(std::abs(ctx().zeta_reg(W("1")).value) < 1e-14);
    CHECK(ctx().zeta_reg(W("10")).value == Approx(-kZeta2).epsilon(1e-11));
}

TEST_CASE("duality of regularized zeta values, weight <= 6") {
    for (const Word& w : Word::all_up_to_weight(6)) {
        double lhs = ctx().zeta_reg(w).value;
        double rhs = ctx().zeta_reg(WordPoly(w.tau())).value;
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("generalized inversion formula residuals") {
    // w = xi0: the two terms cancel exactly
    CHECK(ctx().gif_residual(W("0"), 0.37) < 1e-12);
    CHECK(ctx().gif_residual(W("01"), 0.5) < 1e-10);
    for (const Word& w : Word::all_up_to_weight(5)) {
        CHECK(ctx().gif_residual(w, 0.3) < 1e-9);
        CHECK(ctx().gif_residual(w, 0.7) < 1e-9);
    }
}

TEST_CASE("gif derivative vanishes") {
    CHECK(ctx().gif_derivative_residual(W(""), 0.4, 1e-4) == 0.0);
    CHECK(ctx().gif_derivative_residual(W("01"), 0.5, 1e-4) < 1e-6);
    CHECK(ctx().gif_derivative_residual(W("1"), 0.3, 1e-4) < 1e-6);
    for (const Word& w : Word::all_up_to_weight(4))
        CHECK(ctx().gif_derivative_residual(w, 0.5, 1e-4) < 1e-6);
}

TEST_CASE("gif limits near the endpoints") {
    for (const Word& w : Word::all_up_to_weight(4)) {
        double at1 = ctx().gif_sum(w, 1.0 - 1e-4).real();
        CHECK(std::abs(at1 - ctx().zeta_reg(w).value) < 5e-3);
        double at0 = ctx().gif_sum(w, 1e-4).real();
        CHECK(std::abs(at0 - ctx().zeta_reg(WordPoly(w.tau())).value) < 5e-3);
    }
}

TEST_CASE("zeta table build and perturbation") {
    EvalContext local;
    const ZetaTable& t = local.zeta_table(4);
    CHECK(t.has(W("01")));
    CHECK(t.has(W("0011")));
    CHECK(t.max_weight() == 4);
    CHECK(t.get(W("01")).value == Approx(kZeta2).epsilon(1e-11));
    CHECK(t.eval_reg(WordPoly(W("10"))).value == Approx(-kZeta2).epsilon(1e-11));

    ZetaTable copy = t;
    copy.perturb(W("011"), 1e-3);
    CHECK(copy.get(W("011")).value == Approx(kZeta3 + 1e-3).epsilon(1e-9));
    CHECK(t.get(W("011")).value == Approx(kZeta3).epsilon(1e-11));  // original intact
    CHECK_THROWS_AS(copy.perturb(W("0101010101"), 1.0), domain_error);
    CHECK_THROWS_AS(copy.get(W("0101010101")), domain_error);
}

TEST_CASE("max_terms cutoff") {
    EvalContext tight({.tol = 1e-12, .max_terms = 3});
    CHECK_THROWS_AS(tight.li_taylor(W("1"), 0.5), domain_error);
}
