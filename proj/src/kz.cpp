#include "kzmpl/kz.hpp"

namespace kzmpl {

NCSeriesC build_L0(const EvalContext& ctx, Complex z, int order) {
    NCSeriesC out(order);
    for (const Word& w : Word::all_up_to_weight(order))
        out.set_coeff(w, ctx.li(w, z));
    return out;
}

NCSeriesC build_L1(const EvalContext& ctx, Complex z, int order) {
    // sum_w Li(w;1-z) t_*(W): the W' coefficient is +-Li(swap(w');1-z).
    NCSeriesC out(order);
    for (const Word& w : Word::all_up_to_weight(order)) {
        Complex c = ctx.li(w.swapped(), 1.0 - z);
        if (w.weight() % 2) c = -c;
        out.set_coeff(w, c);
    }
    return out;
}

namespace {

template <class ZetaRegFn>
Associator build_associator_impl(int order, ZetaRegFn&& zeta_of_reg) {
    Associator phi{NCSeriesC(order), {}};
    phi.errors.assign(phi.series.coeff_count(), 0.0);
    for (const Word& w : Word::all_up_to_weight(order)) {
        ZetaEntry e = zeta_of_reg(w);
        phi.series.set_coeff(w, e.value);
        phi.errors[w.canonical_index()] = e.err;
    }
    return phi;
}

} // namespace

Associator build_associator(const EvalContext& ctx, int order) {
    ctx.zeta_table(order);
    return build_associator_impl(order, [&](const Word& w) { return ctx.zeta_reg(w); });
}

Associator build_associator(const ZetaTable& table, int order) {
    return build_associator_impl(
        order, [&](const Word& w) { return table.eval_reg(WordPoly(w)); });
}

NCSeriesC connection_matrix(const EvalContext& ctx, Complex z, int order) {
    return nc_mul(nc_inverse(build_L1(ctx, z, order)), build_L0(ctx, z, order));
}

double connection_residual(const EvalContext& ctx, Complex z, int order) {
    return max_abs_diff(connection_matrix(ctx, z, order),
                        build_associator(ctx, order).series);
}

DualityResidual duality_residual(const EvalContext& ctx, std::uint32_t word_weight,
                                 int series_order) {
    DualityResidual out{0.0, 0.0};
    for (const Word& w : Word::all_up_to_weight(word_weight)) {
        double d = std::abs(ctx.zeta_reg(w).value -
                            ctx.zeta_reg(WordPoly(w.tau())).value);
        out.word_level = std::max(out.word_level, d);
    }
    Associator phi = build_associator(ctx, series_order);
    NCSeriesC prod = nc_mul(phi.series, subst_neg_swap(phi.series));
    out.series_level = max_abs_diff(prod, NCSeriesC::unit(series_order));
    return out;
}

NCSeriesC kz_rhs(Complex z, const NCSeriesC& g) {
    if (z == 0.0 || z == 1.0) throw domain_error("kz_rhs at a pole");
    NCSeriesC out(g.order());
    const Complex a = 1.0 / z, b = 1.0 / (1.0 - z);
    for (const Word& w : Word::all_up_to_weight(g.order())) {
        if (w.empty()) continue;
        const Complex& tail = g.coeff(w.without_front());
        out.set_coeff(w, (w.front() == Letter::L0 ? a : b) * tail);
    }
    return out;
}

NCSeriesC ode_transport(const EvalContext& ctx, double z0, double z1, int steps,
                        int order) {
    if (!(z0 > 0.0 && z0 < 1.0 && z1 > 0.0 && z1 < 1.0))
        throw domain_error("ode_transport endpoints must lie in (0,1)");
    if (steps < 1) throw domain_error("ode_transport needs at least one step");
    NCSeriesC g = build_L0(ctx, z0, order);
    const double h = (z1 - z0) / steps;
    for (int i = 0; i < steps; ++i) {
        const double z = z0 + i * h;
        NCSeriesC k1 = kz_rhs(z, g);
        NCSeriesC k2 = kz_rhs(z + h / 2, g + k1 * Complex(h / 2));
        NCSeriesC k3 = kz_rhs(z + h / 2, g + k2 * Complex(h / 2));
        NCSeriesC k4 = kz_rhs(z + h, g + k3 * Complex(h));
        g += (k1 + k2 * Complex(2.0) + k3 * Complex(2.0) + k4) * Complex(h / 6);
    }
    return g;
}

} // namespace kzmpl
