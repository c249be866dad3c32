#ifndef MPWRIGHT_VERIFY_HPP
#define MPWRIGHT_VERIFY_HPP

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpwright/baselines.hpp"
#include "mpwright/fractional.hpp"
#include "mpwright/series.hpp"

namespace mpw {

/// The operator genuinely annihilates a non-constant series term for these
/// parameters (an intermediate exponent lands on an integer below the Caputo
/// order), so the two sides of the identity are not comparable term-wise and
/// the check refuses to guess.
class DegenerateCaseError : public Error {
public:
    using Error::Error;
};

struct ResidualReport {
    std::string check_name;
    std::vector<std::vector<double>> grid;  // per-point coordinates: [x] or [x,t] or [re,im]
    std::vector<double> residuals;          // one per grid point
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;

    struct Diagnostics {
        int terms_min = 0;
        int terms_max = 0;
        double terms_mean = 0.0;
        std::string residual_definition;
        std::string note;
    } diagnostics;
};

nlohmann::json report_to_json(const ResidualReport& r);

/// Builds a report from per-point residuals; passed iff max <= tol.
ResidualReport finalize_report(std::string name, std::vector<std::vector<double>> grid,
                               std::vector<double> residuals, double tol,
                               ResidualReport::Diagnostics diag);

/// Verifies  D^(alpha,nu) W(lambda x^s) = lambda x^drift W(lambda x^s)  at the
/// given positive x points. The left side is produced by applying the
/// operator pipeline term-wise to the series of W(lambda x^s) and evaluating;
/// the right side by direct series evaluation — two disjoint code paths.
/// Residuals are relative with the series' absolute-term-sum as conditioning
/// floor (a plain relative residual is unattainable in doubles near the
/// alternating-series zeros).
///
/// Throws NumeratorPoleError when the function itself is undefined at these
/// parameters, StageError when a term-wise Caputo step is inadmissible, and
/// DegenerateCaseError when the operator annihilates a non-constant term.
ResidualReport check_eigen(const OperatorParams& params, std::complex<double> lambda,
                           const std::vector<double>& xs, double tol,
                           const std::string& name = "eigen");

/// Pure eigenfunction case: requires |drift| <= 1e-12, right side lambda*W
/// with no power factor.
ResidualReport check_corollary(const OperatorParams& params, std::complex<double> lambda,
                               const std::vector<double>& xs, double tol);

/// n = 1 specialization  d^beta/dx^beta (x^nu d^alpha/dx^alpha f) = x^(nu-alpha) f
/// for f = W(x^beta), i.e. check_eigen with lambda = 1.
ResidualReport check_proposition_n1(double alpha, double beta, double nu,
                                    const std::vector<double>& xs, double tol);

struct ReductionCase {
    enum class Kind { LaguerreExp, NMittagLeffler, ClassicalWright, Tricomi, BesselJ0 };
    Kind kind = Kind::Tricomi;
    int n = 1;         // LaguerreExp, NMittagLeffler
    double nu = 1.0;   // NMittagLeffler, ClassicalWright
    double beta = 1.0; // ClassicalWright

    static ReductionCase laguerre_exp(int n) { return {Kind::LaguerreExp, n, 1.0, 1.0}; }
    static ReductionCase n_mittag_leffler(int n, double nu) {
        return {Kind::NMittagLeffler, n, nu, 1.0};
    }
    static ReductionCase classical_wright(double beta, double nu) {
        return {Kind::ClassicalWright, 1, nu, beta};
    }
    static ReductionCase tricomi() { return {Kind::Tricomi, 1, 1.0, 1.0}; }
    static ReductionCase bessel_j0() { return {Kind::BesselJ0, 1, 1.0, 1.0}; }
    std::string name() const;
};

/// Compares the generalized series under the case's parameterization against
/// the matching classical baseline. Residuals are absolute differences.
/// ClassicalWright and BesselJ0 interpret Re(z) as the real argument x > 0
/// (the identities include an argument rescaling in x).
ResidualReport check_reduction(const ReductionCase& c, const std::vector<std::complex<double>>& zs,
                               double tol);

/// Parameters of the separable isochronous solution check: the PDE
///   du/dt + i omega u = d^beta/dx^beta (x^nu d^alpha u/dx^alpha) + i k x^(nu-alpha) u
/// with u(x,t) = exp(i phase_sign omega t) W_{alpha,beta,nu}(-i k x^beta).
struct PdeParams {
    double alpha = 0.5;
    double beta = 0.5;
    double nu = 0.5;
    double omega = 1.0;
    double kcoef = 1.0;
};

/// Residual of the PDE at each (x,t): time derivative analytic from the phase
/// factor, spatial operator via the term-wise pipeline on the complex series.
/// phase_sign = -1 (default) is the frequency sign under which the separable
/// solution actually satisfies the equation above; phase_sign = +1 mirrors the
/// opposite convention and serves as a sensitivity control (with kcoef = 0 the
/// time side is 2 i omega u while the spatial side vanishes, which the check
/// must flag as a failure).
ResidualReport check_pde(const PdeParams& p, const std::vector<double>& xgrid,
                         const std::vector<double>& tgrid, double tol, int phase_sign = -1);

/// |u(x, t + 2 pi/omega) - u(x, t)| over the grid; exact periodicity of the
/// phase factor up to rounding.
ResidualReport check_pde_isochrony(const PdeParams& p, const std::vector<double>& xgrid,
                                   const std::vector<double>& tgrid, double tol = 1e-14);

/// Exhaustive eigen-relation sweep over a value grid. Parameter sets where
/// the function or the term-wise operator is undefined are counted by cause
/// and excluded; every remaining set must pass at tol.
struct EigenSweepResult {
    int total = 0;
    int checked = 0;
    int undefined = 0;     // numerator Gamma pole: W itself undefined
    int inadmissible = 0;  // a pipeline stage rejects an exponent
    int degenerate = 0;    // operator annihilates a non-constant term
    double max_residual = 0.0;
    std::vector<double> set_max_residuals;  // one entry per checked (params, lambda)
    bool passed = false;
};

EigenSweepResult eigen_grid_sweep(const std::vector<double>& values, const std::vector<int>& ns,
                                  const std::vector<double>& lambdas,
                                  const std::vector<double>& xs, double tol);

struct SuiteOptions {
    double tol_eigen = 1e-8;
    double tol_reduction = 1e-12;
    double tol_pde = 1e-6;
    double tol_isochrony = 1e-14;
    unsigned seed = 7u;
};

struct SuiteResult {
    std::vector<ResidualReport> reports;  // ordered by check name
    int failures = 0;                     // reports with passed == false
};

/// Runs the whole verification battery (eigen grid, drift-zero corollary
/// sets, reductions, proposition cases, PDE draws with isochrony and the
/// negative control, ratio-test decay and slope). Checks run concurrently;
/// reports are merged in name order.
SuiteResult run_suite(const SuiteOptions& opts = {});

}  // namespace mpw

#endif
