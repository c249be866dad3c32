#include "mpwright/baselines.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace mpw {
namespace {

using detail::CompensatedSum;
using detail::kExponentSnapTol;
using detail::near_integer;

// Direct series summation over coefficients supplied as (log|c_k|, sign),
// with the same two-consecutive-small-terms rule as the series engine. Kept
// local on purpose: the baselines must not route through the engine's
// coefficient recurrence.
std::complex<double> sum_log_coeff_series(const std::function<LogCoeff(int)>& coeff,
                                          std::complex<double> z, const EvalOptions& opts,
                                          const char* what) {
    if (!(opts.eps > 0.0) || !(opts.eps < 1.0) || opts.kmax < 1)
        throw InvalidParamsError("invalid EvalOptions");
    if (z == std::complex<double>(0.0, 0.0)) return coeff(0).value();

    const double lz = std::log(std::abs(z));
    const double th = std::arg(z);
    CompensatedSum re, im;
    int small_run = 0;
    for (int k = 0; k < opts.kmax; ++k) {
        LogCoeff c = coeff(k);
        double tmag = 0.0;
        if (c.sign != 0) {
            tmag = std::exp(c.log_abs + k * lz);
            double ang = k * th;
            re.add(c.sign * tmag * std::cos(ang));
            im.add(c.sign * tmag * std::sin(ang));
        }
        double partial = std::hypot(re.get(), im.get());
        // zero term against zero partial sum is not convergence evidence
        if (partial > 0.0 && tmag <= opts.eps * partial) {
            if (++small_run >= 2) return {re.get(), im.get()};
        } else {
            small_run = 0;
        }
    }
    std::complex<double> value{re.get(), im.get()};
    LogCoeff next = coeff(opts.kmax);
    double tail = next.sign == 0 ? 0.0 : std::exp(next.log_abs + opts.kmax * lz);
    if (tail > std::sqrt(opts.eps) * std::abs(value))
        throw NoConvergenceError(std::string(what) + ": no convergence within kmax");
    return value;
}

// 1/Gamma(arg) as a log coefficient factor; poles give a zero factor.
LogCoeff recip_factor(double arg) {
    SignedLogGamma g = signed_log_gamma(arg);
    if (g.sign == 0) return {0.0, 0};
    return {-g.log_abs, g.sign};
}

LogCoeff combine(const LogCoeff& a, const LogCoeff& b) {
    if (a.sign == 0 || b.sign == 0) return {0.0, 0};
    return {a.log_abs + b.log_abs, a.sign * b.sign};
}

}  // namespace

std::complex<double> wright(double beta, double nu, std::complex<double> z,
                            const EvalOptions& opts) {
    if (!(beta > 0.0)) throw InvalidParamsError("wright: beta must be > 0");
    return sum_log_coeff_series(
        [&](int k) {
            LogCoeff f = recip_factor(beta * k + nu);
            return combine({-signed_log_gamma(k + 1.0).log_abs, 1}, f);
        },
        z, opts, "wright");
}

std::complex<double> mittag_leffler2(double alpha, double beta, std::complex<double> z,
                                     const EvalOptions& opts) {
    if (!(alpha > 0.0)) throw InvalidParamsError("mittag_leffler2: alpha must be > 0");
    return sum_log_coeff_series([&](int k) { return recip_factor(alpha * k + beta); }, z, opts,
                                "mittag_leffler2");
}

std::complex<double> multi_index_ml(const std::vector<double>& alphas,
                                    const std::vector<double>& betas, std::complex<double> z,
                                    const EvalOptions& opts) {
    if (alphas.empty() || alphas.size() != betas.size())
        throw InvalidParamsError("multi_index_ml: need equal-length nonempty index vectors");
    for (double a : alphas)
        if (!(a > 0.0)) throw InvalidParamsError("multi_index_ml: all alpha_i must be > 0");
    return sum_log_coeff_series(
        [&](int k) {
            LogCoeff c{0.0, 1};
            for (std::size_t i = 0; i < alphas.size(); ++i)
                c = combine(c, recip_factor(alphas[i] * k + betas[i]));
            return c;
        },
        z, opts, "multi_index_ml");
}

std::complex<double> kilbas_saigo(double alpha, double mu, double l, std::complex<double> z,
                                  const EvalOptions& opts) {
    // product-form coefficients; c_0 = 1 (empty product)
    std::vector<LogCoeff> table{{0.0, 1}};
    auto coeff = [&](int k) {
        while (static_cast<int>(table.size()) <= k) {
            int j = static_cast<int>(table.size()) - 1;  // next factor index
            LogCoeff prev = table.back();
            double numarg = alpha * (j * mu + l) + 1.0;
            double denarg = alpha * (j * mu + l + 1.0) + 1.0;
            double nearest;
            if (near_integer(numarg, nearest, kExponentSnapTol) && nearest <= 0.0)
                throw NumeratorPoleError("kilbas_saigo: numerator Gamma pole at j=" +
                                             std::to_string(j),
                                         j, -1);
            if (prev.sign == 0 ||
                (near_integer(denarg, nearest, kExponentSnapTol) && nearest <= 0.0)) {
                table.push_back({0.0, 0});
                continue;
            }
            SignedLogGamma gn = signed_log_gamma(numarg);
            SignedLogGamma gd = signed_log_gamma(denarg);
            table.push_back(
                {prev.log_abs + gn.log_abs - gd.log_abs, prev.sign * gn.sign * gd.sign});
        }
        return table[k];
    };
    return sum_log_coeff_series(coeff, z, opts, "kilbas_saigo");
}

double delerue_hb(const std::vector<double>& nus, double x, bool normalized,
                  const EvalOptions& opts) {
    if (nus.empty()) throw InvalidParamsError("delerue_hb: need at least one index");
    if (x < 0.0) throw InvalidParamsError("delerue_hb: x must be >= 0");
    const int m = static_cast<int>(nus.size());
    for (double nu : nus) {
        double nearest;
        if (near_integer(nu + 1.0, nearest, kExponentSnapTol) && nearest <= 0.0)
            throw NumeratorPoleError("delerue_hb: Pochhammer pole (nu+1 nonpositive integer)",
                                     -1, -1);
    }
    double base = x / (m + 1.0);
    double u = -std::pow(base, m + 1.0);
    // j^(m) = 0F_m((nu_i+1); u) = sum u^k / (k! prod_i (nu_i+1)_k)
    std::complex<double> j = sum_log_coeff_series(
        [&](int k) {
            LogCoeff c{-signed_log_gamma(k + 1.0).log_abs, 1};
            for (double nu : nus) {
                SignedLogGamma top = signed_log_gamma(nu + 1.0);
                SignedLogGamma bot = signed_log_gamma(nu + k + 1.0);
                if (bot.sign == 0) return LogCoeff{0.0, 0};
                c = combine(c, {top.log_abs - bot.log_abs, top.sign * bot.sign});
            }
            return c;
        },
        {u, 0.0}, opts, "delerue_hb");
    if (normalized) return j.real();
    double nusum = 0.0;
    double gprod_log = 0.0;
    int gsign = 1;
    for (double nu : nus) {
        nusum += nu;
        SignedLogGamma g = signed_log_gamma(nu + 1.0);
        gprod_log += g.log_abs;
        gsign *= g.sign;
    }
    if (x == 0.0) return nusum == 0.0 ? j.real() * gsign * std::exp(-gprod_log) : 0.0;
    double pre = gsign * std::exp(nusum * std::log(base) - gprod_log);
    return pre * j.real();
}

std::complex<double> laguerre_exp(int n, std::complex<double> x, const EvalOptions& opts) {
    if (n < 0) throw InvalidParamsError("laguerre_exp: n must be >= 0");
    return sum_log_coeff_series(
        [&](int k) { return LogCoeff{-(n + 1.0) * signed_log_gamma(k + 1.0).log_abs, 1}; },
        x, opts,
        "laguerre_exp");
}

std::complex<double> n_mittag_leffler(int n, double nu, std::complex<double> x,
                                      const EvalOptions& opts) {
    if (n < 0) throw InvalidParamsError("n_mittag_leffler: n must be >= 0");
    if (!(nu > 0.0)) throw InvalidParamsError("n_mittag_leffler: nu must be > 0");
    return sum_log_coeff_series(
        [&](int k) {
            SignedLogGamma g = signed_log_gamma(nu * k + 1.0);
            if (g.sign == 0) return LogCoeff{0.0, 0};
            int sgn = 1;
            for (int i = 0; i <= n; ++i) sgn *= g.sign;
            return LogCoeff{-(n + 1.0) * g.log_abs, sgn};
        },
        x, opts, "n_mittag_leffler");
}

std::complex<double> tricomi_c0(std::complex<double> x, const EvalOptions& opts) {
    return sum_log_coeff_series(
        [&](int k) { return LogCoeff{-2.0 * signed_log_gamma(k + 1.0).log_abs, 1}; }, x, opts,
        "tricomi_c0");
}

double bessel_j(double nu, double x, const EvalOptions& opts) {
    if (!(nu > -1.0)) throw InvalidParamsError("bessel_j: nu must be > -1");
    if (x < 0.0) throw InvalidParamsError("bessel_j: x must be >= 0");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double lh = std::log(x / 2.0);
    CompensatedSum sum;
    int small_run = 0;
    for (int k = 0; k < opts.kmax; ++k) {
        SignedLogGamma g = signed_log_gamma(nu + k + 1.0);
        double tmag = 0.0;
        if (g.sign != 0) {
            tmag = std::exp((2.0 * k + nu) * lh - signed_log_gamma(k + 1.0).log_abs - g.log_abs);
            sum.add((k % 2 == 0 ? 1.0 : -1.0) * g.sign * tmag);
        }
        if (tmag <= opts.eps * std::abs(sum.get())) {
            if (++small_run >= 2) return sum.get();
        } else {
            small_run = 0;
        }
    }
    throw NoConvergenceError("bessel_j: no convergence within kmax");
}

std::complex<double> eval_baseline(const BaselineSpec& spec, std::complex<double> z,
                                   const EvalOptions& opts) {
    const auto& p = spec.params;
    auto need = [&](std::size_t count, const char* what) {
        if (p.size() != count)
            throw InvalidParamsError(std::string(what) + ": expected " + std::to_string(count) +
                                     " parameter(s), got " + std::to_string(p.size()));
    };
    switch (spec.kind) {
        case BaselineKind::Wright:
            need(2, "wright");
            return wright(p[0], p[1], z, opts);
        case BaselineKind::MittagLeffler2:
            need(2, "mittag_leffler2");
            return mittag_leffler2(p[0], p[1], z, opts);
        case BaselineKind::MultiIndexML: {
            if (p.empty() || p.size() % 2 != 0)
                throw InvalidParamsError("multi_index_ml: need 2m parameters (alphas, betas)");
            std::size_t m = p.size() / 2;
            return multi_index_ml({p.begin(), p.begin() + m}, {p.begin() + m, p.end()}, z, opts);
        }
        case BaselineKind::KilbasSaigo:
            need(3, "kilbas_saigo");
            return kilbas_saigo(p[0], p[1], p[2], z, opts);
        case BaselineKind::LaguerreExp:
            need(1, "laguerre_exp");
            return laguerre_exp(static_cast<int>(p[0]), z, opts);
        case BaselineKind::NMittagLeffler:
            need(2, "n_mittag_leffler");
            return n_mittag_leffler(static_cast<int>(p[0]), p[1], z, opts);
        case BaselineKind::Tricomi:
            need(0, "tricomi_c0");
            return tricomi_c0(z, opts);
        case BaselineKind::BesselJ:
            need(1, "bessel_j");
            return bessel_j(p[0], z.real(), opts);
        case BaselineKind::DelerueHB:
            return delerue_hb(p, z.real(), false, opts);
        case BaselineKind::DelerueHBNormalized:
            return delerue_hb(p, z.real(), true, opts);
    }
    throw InvalidParamsError("unknown baseline kind");
}

}  // namespace mpw
