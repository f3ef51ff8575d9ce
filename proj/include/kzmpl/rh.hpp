#ifndef KZMPL_RH_HPP
#define KZMPL_RH_HPP

// Constructive solvers for the recursive Riemann-Hilbert problems.
//
// Additive problem: find shuffle homomorphisms f0(.;z), f1(.;z) with
// f0(xi0;z) = log z, f1(xi0;z) = log(1-z) satisfying
//     sum_{uv=w} f1(tau u; z) f0(v; z) = zeta(reg10 w)        (aRH)
// for every word, where the zeta values come from an injectable table
// (possibly perturbed).  The solver follows the uniqueness proof
// constructively: f0 is rebuilt from the differential recursion
// d f0(xi_i u)/dz = f0(u;z) * {1/z, 1/(1-z)} integrated from the z = 0 side
// with f0(S0-word; 0) = 0 (the normalizing condition), f1 mirrored from the
// z = 1 side, and the remaining integration constant c1 per S0 word is
// recovered from the z -> 1 limit of (aRH) and cross-checked against the
// z -> 0 limit.  The two recoveries anchor against the table at w and at
// tau(w); their discrepancy therefore reports exactly the table's duality
// violation |zeta(reg10 w) - zeta(reg10 tau w)|, which is the solvability
// condition of the problem.
//
// Multiplicative problem: assemble F0(z) = sum_w f0(reg0 w; z) W and
// F1(z) = sum_w f1(reg0(t* w); z) W and verify
//     (F1(z))^-1 F0(z) = (1-z)^{-X1} Phi z^{-X0},
// the normalization F0(0) = 1, and that F0(z) z^{X0} solves the KZ equation.
//
// Everything here works on the real segment [delta, 1-delta]; per-word
// functions are stored as piecewise Legendre antiderivatives over a panel
// grid refined geometrically toward both endpoints.

#include <map>
#include <vector>

#include "kzmpl/eval.hpp"
#include "kzmpl/kz.hpp"
#include "kzmpl/nc_series.hpp"

namespace kzmpl {

struct RhParams {
    int order = 4;
    double delta = 1e-6;       // integration starts this far from 0 and 1
    int gl_nodes = 16;         // Gauss-Legendre nodes per panel
    double eps_far = 1e-3;     // limit-extraction sample offsets
    double eps_near = 1e-4;
};

// Piecewise spectral antiderivative on a fixed panel grid.
class PiecewiseFn {
public:
    PiecewiseFn() = default;
    double eval(double t) const;

private:
    friend class RhBuilder;
    std::vector<double> breaks_;                     // panel edges, size K+1
    std::vector<std::vector<double>> legendre_;      // per panel, degree <= G
    std::vector<double> base_;                       // value at panel left edge
};

struct RhInstanceReport {
    Word s0_word;      // x, the S0 word whose constant is being fixed
    Word instance;     // w = tau(x), the (aRH) instance used
    double c1_from_z1 = 0.0;
    double c1_from_z0 = 0.0;
    double discrepancy = 0.0;
};

class AdditiveRhSolution {
public:
    int order() const { return params_.order; }
    const RhParams& params() const { return params_; }
    const ZetaTable& table() const { return table_; }

    // Reconstructed evaluators on arbitrary words (log powers through the
    // reg0 decomposition) and their linear extensions.
    double f0(const Word& w, double z) const;
    double f1(const Word& w, double z) const;
    double f0(const WordPoly& p, double z) const;
    double f1(const WordPoly& p, double z) const;

    // Recovered integration constants per S0 word; c0 vanishes by (Norm).
    double c0(const Word&) const { return 0.0; }
    double c1(const Word& s0_word) const;

    const std::vector<RhInstanceReport>& instance_reports() const {
        return reports_;
    }
    double max_discrepancy() const;
    double max_abs_c1() const;

    // sum_{uv=w} f1(tau u; z) f0(v; z) and its defect against the table.
    double arh_combination(const Word& w, double z) const;
    double arh_residual(const Word& w, double z) const;

private:
    friend AdditiveRhSolution rh_solve_additive(const ZetaTable&, const RhParams&);
    friend class RhBuilder;

    double f0_s0(const Word& w, double z) const;   // w in S0
    double f1_s0(const Word& w, double z) const;
    const std::vector<WordPoly>& decomposition(const Word& w) const;

    RhParams params_;
    ZetaTable table_;
    std::map<Word, PiecewiseFn> f0_;   // S0 words, constants built in
    std::map<Word, PiecewiseFn> g1_;   // S0 words, before adding c1
    std::map<Word, double> c1_;
    std::vector<RhInstanceReport> reports_;
    mutable std::map<Word, std::vector<WordPoly>> decomp_cache_;
};

AdditiveRhSolution rh_solve_additive(const ZetaTable& table,
                                     const RhParams& params = {});

class MultiplicativeRhSolution {
public:
    explicit MultiplicativeRhSolution(AdditiveRhSolution base);

    const AdditiveRhSolution& additive() const { return base_; }
    const Associator& phi() const { return phi_; }

    NCSeriesC F0(double z) const;
    NCSeriesC F1(double z) const;

    // max coefficient of (F1^-1 F0) - (1-z)^{-X1} Phi z^{-X0}
    double rh_residual(double z) const;
    // max coefficient of F0(z) - 1 near z = 0 (the normalizing condition)
    double norm_residual(double z = 1e-4) const;
    // finite-difference defect of d/dz [F0 z^{X0}] = (X0/z + X1/(1-z)) F0 z^{X0}
    double kz_fd_residual(double z, double h = 1e-3) const;

private:
    AdditiveRhSolution base_;
    Associator phi_;
};

MultiplicativeRhSolution rh_solve_multiplicative(const ZetaTable& table,
                                                 const RhParams& params = {});

} // namespace kzmpl

#endif
