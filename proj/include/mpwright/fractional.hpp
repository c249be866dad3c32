#ifndef MPWRIGHT_FRACTIONAL_HPP
#define MPWRIGHT_FRACTIONAL_HPP

#include <functional>
#include <vector>

#include "mpwright/series.hpp"

namespace mpw {

enum class StageKind {
    CaputoDerivative,  // order > 0
    PowerMultiply,     // multiply by x^order (order any real)
    RLIntegral,        // order > 0
};

struct PipelineStage {
    StageKind kind;
    double order;
};

/// Result of the Caputo power rule on a single term x^p.
struct CaputoTermResult {
    double multiplier = 0.0;
    double new_exponent = 0.0;
    bool annihilated = false;  // p was an integer in {0..m-1}
};

/// Term-wise Caputo derivative of order gamma on x^p, with m = ceil(gamma)
/// (m = gamma for integer gamma). Integer p in {0..m-1} annihilates the term;
/// otherwise the multiplier is Gamma(p+1)/Gamma(p+1-gamma) and the exponent
/// drops by gamma. Exponents are snapped to integers within 1e-9 since they
/// arrive as sums of user parameters.
///
/// Throws UnsupportedExponentError for p < 0 and for p - gamma <= -1, where
/// the defining integral ceases to exist.
CaputoTermResult caputo_term(double p, double gamma);

/// Per-stage bookkeeping of what a series transformation did.
struct SeriesTransformStats {
    std::vector<double> annihilated_exponents;  // input exponents of annihilated nonzero terms
    int dropped_slots = 0;                      // head slots removed by re-indexing
};

/// Term-wise Caputo derivative of a whole series. Annihilated or zero head
/// terms are dropped with exact re-indexing; annihilated interior terms
/// become zero slots so the exponent ladder survives unchanged.
GenPowerSeries caputo_series(const GenPowerSeries& s, double gamma,
                             SeriesTransformStats* stats = nullptr);

/// Term-wise Riemann-Liouville integral: x^p -> Gamma(p+1)/Gamma(p+1+gamma)
/// x^(p+gamma), requiring p > -1 on nonzero terms. gamma = 0 is the identity.
GenPowerSeries rl_integral_series(const GenPowerSeries& s, double gamma);

/// Stage list of the fractional hyper-Bessel operator in application order
/// (innermost first): d^(alpha_1), x^(nu_1), ..., x^(nu_n), d^(alpha_{n+1}).
std::vector<PipelineStage> hyper_bessel_pipeline(const OperatorParams& params);

struct PipelineTrace {
    struct StageRecord {
        PipelineStage stage;
        SeriesTransformStats stats;
    };
    std::vector<StageRecord> stages;
};

/// Apply a stage list to a series; failures are wrapped in StageError with
/// the 0-based stage index.
GenPowerSeries apply_stages(const std::vector<PipelineStage>& stages, const GenPowerSeries& s,
                            PipelineTrace* trace = nullptr);

/// The full operator of `params` applied to `s`.
GenPowerSeries apply_pipeline(const OperatorParams& params, const GenPowerSeries& s,
                              PipelineTrace* trace = nullptr);

/// Independent oracle: the Caputo derivative of order gamma in (0,1) at x > 0
/// by the L1 scheme on a uniform grid (piecewise-linear interpolant of f;
/// converges like steps^(gamma-2)).
double caputo_quadrature(const std::function<double(double)>& f, double gamma, double x,
                         int steps);

}  // namespace mpw

#endif
