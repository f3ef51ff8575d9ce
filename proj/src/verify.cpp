#include "kzmpl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kzmpl/kz.hpp"
#include "kzmpl/rh.hpp"

namespace kzmpl {

namespace {

std::string complex_to_string(Complex z) {
    if (z.imag() == 0.0) return std::to_string(z.real());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g%+gi", z.real(), z.imag());
    return buf;
}

std::vector<Complex> z_points_or_default(const VerifyConfig& c) {
    if (!c.z_points.empty()) return c.z_points;
    return {0.3, 0.5, 0.7};
}

void note_word(VerifyReport& rep, const Word& w, double residual) {
    if (residual > rep.max_residual) rep.max_residual = residual;
    rep.per_word.push_back({w, residual});
}

void finalize(VerifyReport& rep, std::size_t keep = 8) {
    std::sort(rep.per_word.begin(), rep.per_word.end(),
              [](const PerWordResidual& a, const PerWordResidual& b) {
                  return a.residual > b.residual;
              });
    if (rep.per_word.size() > keep) rep.per_word.resize(keep);
    rep.pass = rep.max_residual <= rep.tolerance;
}

Word random_word(std::mt19937_64& rng, int max_weight) {
    std::uniform_int_distribution<int> len(0, max_weight);
    int l = len(rng);
    if (l == 0) return Word();
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << l) - 1);
    return Word::from_bits(l, bits(rng));
}

} // namespace

nlohmann::json to_json(const VerifyReport& rep) {
    nlohmann::json zs = nlohmann::json::array();
    for (Complex z : rep.z_points) zs.push_back(complex_to_string(z));
    nlohmann::json words = nlohmann::json::array();
    for (const auto& pw : rep.per_word)
        words.push_back({{"word", pw.word.to_string()}, {"residual", pw.residual}});
    return {{"check", rep.check},       {"N", rep.weight},
            {"z_points", zs},           {"tolerance", rep.tolerance},
            {"max_residual", rep.max_residual}, {"pass", rep.pass},
            {"per_word", words},        {"details", rep.details}};
}

VerifyReport verify_algebra(const VerifyConfig& config) {
    VerifyReport rep;
    rep.check = "algebra";
    rep.weight = config.weight < 0 ? 8 : config.weight;
    rep.tolerance = 0.0;  // exact rational arithmetic, zero tolerance
    const std::uint32_t N = rep.weight;

    long checks = 0, failures = 0;
    auto expect = [&](bool ok, const Word& w) {
        ++checks;
        if (!ok) {
            ++failures;
            note_word(rep, w, 1.0);
        }
    };

    for (const Word& w : Word::all_up_to_weight(N)) {
        const WordPoly p(w);
        // involutions and their composition
        expect(tau(tau(p)) == p, w);
        expect(t_star(t_star(p)) == p, w);
        expect(t_star(antipode(p)) == tau(p), w);
        // closed-form regularizations against the elimination oracles
        expect(reg0(p) == reg0_decomp(p), w);
        expect(reg10(p) == reg10_decomp(p), w);
        // antipode convolution identity
        if (!w.empty()) {
            WordPoly acc;
            for (const auto& [u, v] : deconcat_splits(w))
                acc += shuffle(antipode(WordPoly(u)), WordPoly(v));
            expect(acc.is_zero(), w);
        }
    }

    // commutativity/associativity: exhaustive at small total weight
    for (const Word& u : Word::all_up_to_weight(3)) {
        for (const Word& v : Word::all_up_to_weight(3)) {
            if (u.weight() + v.weight() > 5) continue;
            expect(shuffle(u, v) == shuffle(v, u), u);
            for (const Word& w : Word::all_up_to_weight(2)) {
                if (u.weight() + v.weight() + w.weight() > 5) continue;
                expect(shuffle(shuffle(u, v), WordPoly(w)) ==
                           shuffle(WordPoly(u), shuffle(v, w)),
                       u);
            }
        }
    }
    // random samples up to the full weight budget
    std::mt19937_64 rng(config.seed);
    for (int i = 0; i < 80; ++i) {
        Word u = random_word(rng, std::min<int>(N / 2 + 1, 4));
        Word v = random_word(rng, std::min<int>(N - u.weight(), 4));
        expect(shuffle(u, v) == shuffle(v, u), u);
        Word w = random_word(rng, std::max<int>(0, N - u.weight() - v.weight()));
        expect(shuffle(shuffle(u, v), WordPoly(w)) == shuffle(WordPoly(u), shuffle(v, w)),
               u);
    }

    // recomposition identities
    for (const Word& u : Word::all_up_to_weight(4)) {
        if (!u.is_s0()) continue;
        for (std::uint32_t n = 0; n <= 4; ++n) {
            Word w = Word::concat(u, Word::power(Letter::L0, n));
            WordPoly acc;
            for (std::uint32_t j = 0; j <= n; ++j)
                acc += shuffle(reg0(Word::concat(u, Word::power(Letter::L0, n - j))),
                               WordPoly(Word::power(Letter::L0, j)));
            expect(acc == WordPoly(w), w);
        }
    }
    for (const Word& u : Word::all_up_to_weight(3)) {
        if (!u.is_s10()) continue;
        for (std::uint32_t m = 0; m <= 3; ++m)
            for (std::uint32_t n = 0; n <= 3; ++n) {
                Word w = Word::concat(Word::power(Letter::L1, m),
                                      Word::concat(u, Word::power(Letter::L0, n)));
                WordPoly acc;
                for (std::uint32_t i = 0; i <= m; ++i)
                    for (std::uint32_t j = 0; j <= n; ++j) {
                        Word mid =
                            Word::concat(Word::power(Letter::L1, m - i),
                                         Word::concat(u, Word::power(Letter::L0, n - j)));
                        acc += shuffle(WordPoly(Word::power(Letter::L1, i)),
                                       shuffle(reg10(WordPoly(mid)),
                                               WordPoly(Word::power(Letter::L0, j))));
                    }
                expect(acc == WordPoly(w), w);
            }
    }

    rep.details = {{"checks", checks}, {"failures", failures}, {"seed", config.seed}};
    rep.max_residual = failures == 0 ? 0.0 : 1.0;
    finalize(rep);
    return rep;
}

VerifyReport verify_gif(const EvalContext& ctx, const VerifyConfig& config) {
    VerifyReport rep;
    rep.check = "gif";
    rep.weight = config.weight < 0 ? 5 : config.weight;
    rep.tolerance = config.tol < 0 ? 1e-9 : config.tol;
    rep.z_points = z_points_or_default(config);

    for (const Word& w : Word::all_up_to_weight(rep.weight)) {
        double worst = 0.0;
        for (Complex z : rep.z_points)
            worst = std::max(worst, ctx.gif_residual(w, z));
        note_word(rep, w, worst);
    }

    // the inversion-formula sum is constant in z; check by central differences
    const double h = 1e-4;
    const double fd_tol = 1e-6;
    double fd_max = 0.0;
    for (const Word& w : Word::all_up_to_weight(std::min(rep.weight, 4))) {
        for (Complex z : rep.z_points) {
            if (z.imag() != 0.0) continue;
            fd_max = std::max(fd_max, ctx.gif_derivative_residual(w, z, h));
        }
    }
    rep.details = {{"derivative_max", fd_max},
                   {"derivative_tolerance", fd_tol},
                   {"derivative_step", h}};
    finalize(rep);
    rep.pass = rep.pass && fd_max <= fd_tol;
    return rep;
}

VerifyReport verify_duality(const EvalContext& ctx, const VerifyConfig& config) {
    VerifyReport rep;
    rep.check = "duality";
    rep.weight = config.weight < 0 ? 6 : config.weight;
    rep.tolerance = config.tol < 0 ? 1e-9 : config.tol;

    for (const Word& w : Word::all_up_to_weight(rep.weight)) {
        double d = std::abs(ctx.zeta_reg(w).value -
                            ctx.zeta_reg(WordPoly(w.tau())).value);
        note_word(rep, w, d);
    }

    const int series_order = std::min(rep.weight, 5);
    const double series_tol = 1e-8;
    Associator phi = build_associator(ctx, series_order);
    double series_level =
        max_abs_diff(nc_mul(phi.series, subst_neg_swap(phi.series)),
                     NCSeriesC::unit(series_order));
    rep.details = {{"series_order", series_order},
                   {"series_level", series_level},
                   {"series_tolerance", series_tol}};
    finalize(rep);
    rep.pass = rep.pass && series_level <= series_tol;
    return rep;
}

VerifyReport verify_connection(const EvalContext& ctx, const VerifyConfig& config) {
    VerifyReport rep;
    rep.check = "connection";
    rep.weight = config.weight < 0 ? 4 : config.weight;
    rep.tolerance = config.tol < 0 ? 1e-8 : config.tol;
    rep.z_points = z_points_or_default(config);

    std::vector<NCSeriesC> mats;
    nlohmann::json residuals = nlohmann::json::array();
    Associator phi = build_associator(ctx, rep.weight);
    for (Complex z : rep.z_points) {
        NCSeriesC c = connection_matrix(ctx, z, rep.weight);
        double r = max_abs_diff(c, phi.series);
        residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, r);
        mats.push_back(std::move(c));
    }
    double constancy = 0.0;
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            constancy = std::max(constancy, max_abs_diff(mats[i], mats[j]));
    rep.max_residual = std::max(rep.max_residual, constancy);
    rep.details = {{"residual_per_z", residuals}, {"pairwise_constancy", constancy}};
    finalize(rep);
    return rep;
}

VerifyReport verify_ode(const EvalContext& ctx, const VerifyConfig& config) {
    VerifyReport rep;
    rep.check = "ode";
    rep.weight = config.weight < 0 ? 4 : config.weight;
    rep.tolerance = config.tol < 0 ? 1e-8 : config.tol;
    const int steps = config.steps > 0 ? config.steps : 2000;

    NCSeriesC ref = build_L0(ctx, 0.7, rep.weight);
    double residual =
        max_abs_diff(ode_transport(ctx, 0.3, 0.7, steps, rep.weight), ref);
    rep.max_residual = residual;

    // fourth-order convergence, measured where truncation error dominates
    double e_coarse = max_abs_diff(ode_transport(ctx, 0.3, 0.7, 100, rep.weight), ref);
    double e_fine = max_abs_diff(ode_transport(ctx, 0.3, 0.7, 200, rep.weight), ref);
    double ratio = e_coarse / e_fine;
    bool ratio_ok = ratio >= 10.0 && ratio <= 24.0;
    rep.details = {{"steps", steps},
                   {"transport_residual", residual},
                   {"halving_ratio", ratio},
                   {"halving_ratio_window", {10.0, 24.0}}};
    finalize(rep);
    rep.pass = rep.pass && ratio_ok;
    return rep;
}

VerifyReport verify_rh(const EvalContext& ctx, const VerifyConfig& config) {
    VerifyReport rep;
    rep.check = "rh";
    rep.weight = config.weight < 0 ? 4 : config.weight;
    rep.tolerance = config.tol < 0 ? 1e-7 : config.tol;
    rep.z_points = z_points_or_default(config);

    ZetaTable table = ctx.zeta_table(rep.weight);
    for (const auto& [w, delta] : config.perturbations) table.perturb(w, delta);

    RhParams params;
    params.order = rep.weight;
    MultiplicativeRhSolution mul = rh_solve_multiplicative(table, params);
    const AdditiveRhSolution& sol = mul.additive();

    // constant-recovery consistency (the solvability condition of the problem)
    for (const auto& r : sol.instance_reports())
        note_word(rep, r.instance, r.discrepancy);

    // reconstruction against the direct evaluators, and (aRH) residuals
    double match_li = 0.0, arh = 0.0;
    for (const Word& w : Word::all_up_to_weight(rep.weight)) {
        for (Complex zc : rep.z_points) {
            if (zc.imag() != 0.0) continue;
            double z = zc.real();
            match_li = std::max(match_li,
                                std::abs(sol.f0(w, z) - ctx.li(w, z).real()));
            match_li = std::max(match_li,
                                std::abs(sol.f1(w, z) - ctx.li(w, 1.0 - z).real()));
            arh = std::max(arh, sol.arh_residual(w, z));
        }
    }

    double rh_res = 0.0;
    for (Complex zc : rep.z_points)
        if (zc.imag() == 0.0) rh_res = std::max(rh_res, mul.rh_residual(zc.real()));
    double norm_res = mul.norm_residual();
    double kz_fd = std::max(mul.kz_fd_residual(0.3), mul.kz_fd_residual(0.5));
    auto g0 = is_grouplike(mul.F0(0.4), 1e-8);
    auto g1 = is_grouplike(mul.F1(0.4), 1e-8);

    rep.details = {{"max_c1", sol.max_abs_c1()},
                   {"max_discrepancy", sol.max_discrepancy()},
                   {"match_li", match_li},
                   {"arh_residual", arh},
                   {"rh_residual", rh_res},
                   {"norm_residual", norm_res},
                   {"norm_tolerance", 5e-3},
                   {"kz_fd_residual", kz_fd},
                   {"kz_fd_tolerance", 1e-3},
                   {"grouplike_F0", g0.max_violation},
                   {"grouplike_F1", g1.max_violation},
                   {"grouplike_tolerance", 1e-8},
                   {"perturbed", !config.perturbations.empty()}};
    finalize(rep);
    rep.pass = rep.pass && match_li <= rep.tolerance && arh <= rep.tolerance &&
               sol.max_abs_c1() <= rep.tolerance && rh_res <= rep.tolerance &&
               norm_res <= 5e-3 && kz_fd <= 1e-3 && g0.grouplike && g1.grouplike;
    return rep;
}

VerifyReport run_verify_suite(const std::string& suite, const EvalContext& ctx,
                              const VerifyConfig& config) {
    if (suite == "algebra") return verify_algebra(config);
    if (suite == "gif") return verify_gif(ctx, config);
    if (suite == "duality") return verify_duality(ctx, config);
    if (suite == "connection") return verify_connection(ctx, config);
    if (suite == "ode") return verify_ode(ctx, config);
    if (suite == "rh") return verify_rh(ctx, config);
    throw parse_error("unknown verify suite: " + suite);
}

} // namespace kzmpl
