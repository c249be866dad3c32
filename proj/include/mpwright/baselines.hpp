#ifndef MPWRIGHT_BASELINES_HPP
#define MPWRIGHT_BASELINES_HPP

#include <complex>
#include <vector>

#include "mpwright/series.hpp"

namespace mpw {

// Classical special functions the generalized series reduces to. These are
// deliberately evaluated by direct per-term summation (fresh Gamma calls each
// term, no running-product recurrence) so they can serve as independent
// oracles for the series engine; the only shared code is the Gamma kernel.

/// W_{beta,nu}(z) = sum z^k / (k! Gamma(beta k + nu)), beta > 0.
std::complex<double> wright(double beta, double nu, std::complex<double> z,
                            const EvalOptions& opts = {});

/// E_{alpha,beta}(z) = sum z^k / Gamma(alpha k + beta), alpha > 0.
std::complex<double> mittag_leffler2(double alpha, double beta, std::complex<double> z,
                                     const EvalOptions& opts = {});

/// E^{(m)}_{(alpha_i),(beta_i)}(z) = sum z^k / prod_i Gamma(alpha_i k + beta_i).
std::complex<double> multi_index_ml(const std::vector<double>& alphas,
                                    const std::vector<double>& betas,
                                    std::complex<double> z, const EvalOptions& opts = {});

/// E_{alpha,mu,l}(z) = sum c_k z^k with
/// c_k = prod_{j=0}^{k-1} Gamma[alpha(j mu + l) + 1] / Gamma[alpha(j mu + l + 1) + 1].
std::complex<double> kilbas_saigo(double alpha, double mu, double l, std::complex<double> z,
                                  const EvalOptions& opts = {});

/// Hyper-Bessel function of m indices at x >= 0. normalized=true returns the
/// 0F_m form j^(m) (equal to 1 at x = 0); normalized=false applies the
/// prefactor (x/(m+1))^(nu_1+..+nu_m) / prod Gamma(nu_i + 1).
double delerue_hb(const std::vector<double>& nus, double x, bool normalized,
                  const EvalOptions& opts = {});

/// e_n(x) = sum x^k / (k!)^(n+1).
std::complex<double> laguerre_exp(int n, std::complex<double> x, const EvalOptions& opts = {});

/// E_{n;nu,1}(x) = sum x^k / Gamma(nu k + 1)^(n+1).
std::complex<double> n_mittag_leffler(int n, double nu, std::complex<double> x,
                                      const EvalOptions& opts = {});

/// C_0(x) = sum x^k / (k!)^2.
std::complex<double> tricomi_c0(std::complex<double> x, const EvalOptions& opts = {});

/// J_nu(x) = sum (-1)^k (x/2)^(2k+nu) / (k! Gamma(nu+k+1)), nu > -1, x >= 0.
double bessel_j(double nu, double x, const EvalOptions& opts = {});

enum class BaselineKind {
    Wright,
    MittagLeffler2,
    MultiIndexML,
    KilbasSaigo,
    LaguerreExp,
    NMittagLeffler,
    Tricomi,
    BesselJ,
    DelerueHB,
    DelerueHBNormalized,
};

/// Kind plus its flat parameter list; arity is validated on evaluation.
/// Wright/MittagLeffler2: 2 params; KilbasSaigo: 3; LaguerreExp: 1 (n);
/// NMittagLeffler: 2 (n, nu); Tricomi: 0; BesselJ: 1 (nu);
/// MultiIndexML: 2m (alphas then betas); DelerueHB*: m (the nu vector).
struct BaselineSpec {
    BaselineKind kind;
    std::vector<double> params;
};

/// Dispatch by kind. BesselJ and DelerueHB use Re(z) as the real argument.
std::complex<double> eval_baseline(const BaselineSpec& spec, std::complex<double> z,
                                   const EvalOptions& opts = {});

}  // namespace mpw

#endif
