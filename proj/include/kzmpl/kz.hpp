#ifndef KZMPL_KZ_HPP
#define KZMPL_KZ_HPP

// Fundamental solutions of the one-variable KZ equation
//   dG/dz = (X0/z + X1/(1-z)) G,
// the Drinfel'd associator, the connection formula, the duality check, and
// a truncated Runge-Kutta transport used as an independent ODE oracle.

#include "kzmpl/eval.hpp"
#include "kzmpl/nc_series.hpp"

namespace kzmpl {

// L0(z) = sum_w Li(w;z) W, the solution normalized at z = 0.
NCSeriesC build_L0(const EvalContext& ctx, Complex z, int order);

// L1(z) = sum_w Li(w;1-z) t_*(W), the solution normalized at z = 1.
NCSeriesC build_L1(const EvalContext& ctx, Complex z, int order);

// Phi_KZ = sum_w zeta(reg10 w) W with per-coefficient error bounds.
struct Associator {
    NCSeriesC series;
    std::vector<double> errors;  // indexed like the series coefficients
};
Associator build_associator(const EvalContext& ctx, int order);
Associator build_associator(const ZetaTable& table, int order);

// (L1(z))^-1 L0(z); equals Phi_KZ independently of z.
NCSeriesC connection_matrix(const EvalContext& ctx, Complex z, int order);
double connection_residual(const EvalContext& ctx, Complex z, int order);

struct DualityResidual {
    double word_level;    // max_w |zeta(reg10 w) - zeta(reg10 tau w)|
    double series_level;  // max coeff of Phi(X0,X1) Phi(-X1,-X0) - 1
};
DualityResidual duality_residual(const EvalContext& ctx, std::uint32_t word_weight,
                                 int series_order);

// Right-hand side (X0/z + X1/(1-z)) G of the KZ equation, truncated.
NCSeriesC kz_rhs(Complex z, const NCSeriesC& g);

// Classical RK4 transport of the truncated KZ system from z0 to z1 starting
// at build_L0(z0); [z0, z1] must stay inside (0,1).
NCSeriesC ode_transport(const EvalContext& ctx, double z0, double z1, int steps,
                        int order);

} // namespace kzmpl

#endif
