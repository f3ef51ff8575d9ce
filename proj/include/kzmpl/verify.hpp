#ifndef KZMPL_VERIFY_HPP
#define KZMPL_VERIFY_HPP

// Verification suites with machine-readable reports.  Each suite pins its
// own default weights and tolerances; a report carries the worst offender
// so failures can be located from the CLI output alone.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kzmpl/eval.hpp"

namespace kzmpl {

struct VerifyConfig {
    int weight = -1;     // -1 picks the suite default
    double tol = -1.0;   // -1 picks the suite default
    std::vector<Complex> z_points;             // empty picks {0.3, 0.5, 0.7}
    std::uint64_t seed = 12345;                // randomized sweeps
    int steps = 2000;                          // ODE transport
    std::vector<std::pair<Word, double>> perturbations;  // zeta table edits
};

struct PerWordResidual {
    Word word;
    double residual = 0.0;
};

struct VerifyReport {
    std::string check;
    int weight = 0;
    std::vector<Complex> z_points;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool pass = false;
    std::vector<PerWordResidual> per_word;  // worst offenders, sorted
    nlohmann::json details;                 // suite-specific extras
};

nlohmann::json to_json(const VerifyReport& report);

VerifyReport verify_algebra(const VerifyConfig& config = {});
VerifyReport verify_gif(const EvalContext& ctx, const VerifyConfig& config = {});
VerifyReport verify_duality(const EvalContext& ctx, const VerifyConfig& config = {});
VerifyReport verify_connection(const EvalContext& ctx, const VerifyConfig& config = {});
VerifyReport verify_ode(const EvalContext& ctx, const VerifyConfig& config = {});
VerifyReport verify_rh(const EvalContext& ctx, const VerifyConfig& config = {});

// Dispatch by suite name: algebra, gif, duality, connection, ode, rh.
VerifyReport run_verify_suite(const std::string& suite, const EvalContext& ctx,
                              const VerifyConfig& config = {});

} // namespace kzmpl

#endif
