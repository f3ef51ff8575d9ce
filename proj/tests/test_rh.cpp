#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kzmpl/rh.hpp"

using namespace kzmpl;
using doctest::Approx;

namespace {

Word W(const char* s) { return Word::parse(s); }

const EvalContext& ctx() {
    static EvalContext c;
    return c;
}

const AdditiveRhSolution& solved() {
    static AdditiveRhSolution s = rh_solve_additive(ctx().zeta_table(4));
    return s;
}

} // namespace

TEST_CASE("base cases of the additive solution") {
    const auto& sol = solved();
    for (double z : {0.2, 0.5, 0.8}) {
        CHECK(sol.f0(W("0"), z) == Approx(std::log(z)).epsilon(1e-12));
        CHECK(sol.f1(W("0"), z) == Approx(std::log(1.0 - z)).epsilon(1e-12));
        // f1(xi1;z) = -f0(xi0;z) = -log z, forced by (aRH) at w = xi0
        CHECK(sol.f1(W("1"), z) == Approx(-std::log(z)).epsilon(1e-8));
        CHECK(sol.f0(W("1"), z) == Approx(-std::log(1.0 - z)).epsilon(1e-8));
    }
}

TEST_CASE("reconstruction matches the polylogarithms") {
    const auto& sol = solved();
    for (const Word& w : Word::all_up_to_weight(4)) {
        for (double z : {0.3, 0.5, 0.7}) {
            double want0 = ctx().li(w, z).real();
            double want1 = ctx().li(w, 1.0 - z).real();
            CHECK(std::abs(sol.f0(w, z) - want0) < 1e-7);
            CHECK(std::abs(sol.f1(w, z) - want1) < 1e-7);
        }
    }
}

TEST_CASE("recovered constants vanish for the true table") {
    const auto& sol = solved();
    CHECK(sol.max_abs_c1() < 1e-7);
    CHECK(sol.max_discrepancy() < 1e-7);
    CHECK(sol.c0(W("011")) == 0.0);
    for (const auto& rep : sol.instance_reports()) {
        CHECK(std::abs(rep.c1_from_z1) < 1e-7);
        CHECK(std::abs(rep.c1_from_z0) < 1e-7);
    }
}

TEST_CASE("aRH functional equations hold at sample points") {
    const auto& sol = solved();
    for (const Word& w : Word::all_up_to_weight(4))
        for (double z : {0.3, 0.5, 0.7})
            CHECK(sol.arh_residual(w, z) < 1e-7);
}

TEST_CASE("f0 and f1 are shuffle homomorphisms") {
    const auto& sol = solved();
    for (const Word& u : Word::all_up_to_weight(2)) {
        for (const Word& v : Word::all_up_to_weight(2)) {
            if (u.empty() || v.empty()) continue;
            for (double z : {0.35, 0.6}) {
                CHECK(std::abs(sol.f0(shuffle(u, v), z) - sol.f0(u, z) * sol.f0(v, z)) <
                      1e-7);
                CHECK(std::abs(sol.f1(shuffle(u, v), z) - sol.f1(u, z) * sol.f1(v, z)) <
                      1e-7);
            }
        }
    }
}

TEST_CASE("a duality-violating table is detected") {
    ZetaTable broken = ctx().zeta_table(4);
    broken.perturb(W("(2,1)"), 1e-3);  // zeta(2,1), keeping zeta(3)
    AdditiveRhSolution sol = rh_solve_additive(broken);

    // the instance at w = xi0 xi0 xi1 fixes the constant of x = tau(w);
    // its two recoveries disagree by exactly the injected violation
    bool found = false;
    for (const auto& rep : sol.instance_reports()) {
        if (rep.instance == W("001")) {
            found = true;
            CHECK(rep.discrepancy == Approx(1e-3).epsilon(0.1));
        }
    }
    CHECK(found);
    CHECK(sol.max_discrepancy() == Approx(1e-3).epsilon(0.1));
}

TEST_CASE("perturbation flows into the dual instance too") {
    ZetaTable broken = ctx().zeta_table(4);
    broken.perturb(W("011"), 1e-3);
    AdditiveRhSolution sol = rh_solve_additive(broken);
    for (const auto& rep : sol.instance_reports())
        if (rep.instance == W("011"))
            CHECK(rep.discrepancy == Approx(1e-3).epsilon(0.1));
}

TEST_CASE("multiplicative solution") {
    MultiplicativeRhSolution mul = rh_solve_multiplicative(ctx().zeta_table(4));

    // F0 matches sum Li(reg0 w; z) W
    NCSeriesC f0 = mul.F0(0.5);
    for (const Word& w : Word::all_up_to_weight(4)) {
        double want = ctx().li(reg0(WordPoly(w)), 0.5).real();
        CHECK(std::abs(f0.coeff(w).real() - want) < 1e-7);
    }

    for (double z : {0.3, 0.5, 0.7}) CHECK(mul.rh_residual(z) < 1e-7);

    // normalizing condition F0(0) = 1, approached at z = 1e-4
    CHECK(mul.norm_residual(1e-4) < 5e-3);

    // F0 z^{X0} solves the KZ equation
    CHECK(mul.kz_fd_residual(0.5) < 1e-3);
    CHECK(mul.kz_fd_residual(0.3) < 1e-3);

    // grouplike certification
    CHECK(is_grouplike(mul.F0(0.4), 1e-8).grouplike);
    CHECK(is_grouplike(mul.F1(0.4), 1e-8).grouplike);
}

TEST_CASE("solver requires table coverage") {
    ZetaTable tiny;
    CHECK_THROWS_AS(rh_solve_additive(tiny), domain_error);
    RhParams bad;
    bad.order = 12;
    CHECK_THROWS_AS(rh_solve_additive(ctx().zeta_table(4), bad), domain_error);
}
