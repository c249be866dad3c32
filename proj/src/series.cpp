#include "mpwright/series.hpp"

#include <cmath>
#include <string>

namespace mpw {

using detail::CompensatedSum;
using detail::kExponentSnapTol;
using detail::near_integer;

CoeffSequence::CoeffSequence(const OperatorParams& params)
    : off_(derive_offsets(params)), n_(params.n()) {}

void CoeffSequence::extend(std::size_t upto) {
    const double s = off_.stride;
    while (coeffs_.size() <= upto) {
        std::size_t k = coeffs_.size();
        if (k >= 1) {
            const double t = s * static_cast<double>(k);
            for (int j = 0; j < n_; ++j) {
                double u = t + off_.a[j];
                double nearest;
                if (near_integer(u, nearest, kExponentSnapTol) && nearest <= 0.0)
                    throw NumeratorPoleError(
                        "coefficient numerator Gamma pole at k=" + std::to_string(k) +
                            ", j=" + std::to_string(j + 1),
                        static_cast<long>(k), j + 1);
                double v = t + off_.b[j];
                if (near_integer(v, nearest, kExponentSnapTol) && nearest <= 0.0) {
                    // 1/Gamma(pole) = 0: this factor, and with it every later
                    // coefficient, is zero.
                    running_sign_ = 0;
                    if (k < dead_from_) dead_from_ = k;
                    continue;
                }
                if (running_sign_ != 0) {
                    SignedLogGamma gn = signed_log_gamma(u);
                    SignedLogGamma gd = signed_log_gamma(v);
                    double x = gn.log_abs - gd.log_abs;
                    double t = running_log_ + x;
                    if (std::abs(running_log_) >= std::abs(x))
                        running_carry_ += (running_log_ - t) + x;
                    else
                        running_carry_ += (x - t) + running_log_;
                    running_log_ = t;
                    running_sign_ *= gn.sign * gd.sign;
                }
            }
        }
        double darg = s * static_cast<double>(k) + off_.b[n_];
        double nearest;
        if (running_sign_ == 0 ||
            (near_integer(darg, nearest, kExponentSnapTol) && nearest <= 0.0)) {
            coeffs_.push_back({0.0, 0});
        } else {
            SignedLogGamma gd = signed_log_gamma(darg);
            coeffs_.push_back(
                {(running_log_ + running_carry_) - gd.log_abs, running_sign_ * gd.sign});
        }
    }
}

LogCoeff CoeffSequence::at(std::size_t k) {
    if (k >= coeffs_.size()) extend(k);
    return coeffs_[k];
}

std::vector<std::complex<double>> mpw_coefficients(const OperatorParams& params, int K) {
    if (K < 0) throw InvalidParamsError("mpw_coefficients: K must be >= 0");
    CoeffSequence seq(params);
    std::vector<std::complex<double>> out;
    out.reserve(K + 1);
    for (int k = 0; k <= K; ++k) out.emplace_back(seq.at(k).value(), 0.0);
    return out;
}

namespace detail {

namespace {

void validate(const EvalOptions& opts) {
    if (!(opts.eps > 0.0) || !(opts.eps < 1.0))
        throw InvalidParamsError("EvalOptions.eps must lie in (0,1)");
    if (opts.kmax < 1) throw InvalidParamsError("EvalOptions.kmax must be >= 1");
}

}  // namespace

EvalWithScale mpw_eval_with_scale(const OperatorParams& params, std::complex<double> z,
                                  const EvalOptions& opts) {
    validate(opts);
    CoeffSequence seq(params);
    EvalWithScale r;

    if (z == std::complex<double>(0.0, 0.0)) {
        r.value = seq.at(0).value();
        r.abs_scale = std::abs(r.value);
        r.terms_used = 1;
        r.tail_estimate = 0.0;  // first omitted term carries a factor z
        return r;
    }

    const double lz = std::log(std::abs(z));
    const double th = std::arg(z);
    CompensatedSum re, im, scale;
    int small_run = 0;
    int stop_k = -1;  // last summed index when the truncation rule fired

    int k = 0;
    for (; k < opts.kmax; ++k) {
        if (seq.dead_at(static_cast<std::size_t>(k))) {
            // every remaining coefficient is exactly zero: the sum is exact
            r.pole_truncated = true;
            r.value = {re.get(), im.get()};
            r.abs_scale = scale.get();
            r.terms_used = k;
            r.tail_estimate = 0.0;
            return r;
        }
        LogCoeff c = seq.at(static_cast<std::size_t>(k));
        double tmag = 0.0;
        if (c.sign != 0) {
            tmag = std::exp(c.log_abs + k * lz);
            double ang = k * th;
            re.add(c.sign * tmag * std::cos(ang));
            im.add(c.sign * tmag * std::sin(ang));
            scale.add(tmag);
        }
        double partial = std::hypot(re.get(), im.get());
        // a zero term against a zero partial sum is no evidence of
        // convergence (leading coefficients may be zeroed by Gamma poles)
        if (partial > 0.0 && tmag <= opts.eps * partial) {
            if (++small_run >= 2) {
                stop_k = k;
                break;
            }
        } else {
            small_run = 0;
        }
    }

    r.value = {re.get(), im.get()};
    r.abs_scale = scale.get();
    if (stop_k >= 0) {
        r.terms_used = stop_k + 1;
        LogCoeff next = seq.at(static_cast<std::size_t>(stop_k + 1));
        r.tail_estimate = next.sign == 0 ? 0.0 : std::exp(next.log_abs + (stop_k + 1) * lz);
        return r;
    }
    r.terms_used = opts.kmax;
    LogCoeff next = seq.at(static_cast<std::size_t>(opts.kmax));
    r.tail_estimate = next.sign == 0 ? 0.0 : std::exp(next.log_abs + opts.kmax * lz);
    if (r.tail_estimate > std::sqrt(opts.eps) * std::abs(r.value))
        throw NoConvergenceError("series not converged after " + std::to_string(opts.kmax) +
                                 " terms (tail " + std::to_string(r.tail_estimate) + ")");
    return r;
}

EvalWithScale eval_series_with_scale(const GenPowerSeries& s, double x) {
    if (x < 0.0)
        throw InvalidParamsError("eval_series: x must be nonnegative");
    EvalWithScale r;
    CompensatedSum re, im, scale;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        std::complex<double> c = s.coeffs[k];
        if (c == std::complex<double>(0.0, 0.0)) continue;
        double p = s.exponent(k);
        double px;
        if (x == 0.0) {
            if (p == 0.0)
                px = 1.0;
            else if (p > 0.0)
                px = 0.0;
            else
                throw InvalidParamsError("eval_series: negative exponent at x = 0");
        } else {
            px = std::exp(p * std::log(x));
        }
        re.add(c.real() * px);
        im.add(c.imag() * px);
        scale.add(std::abs(c) * px);
    }
    r.value = {re.get(), im.get()};
    r.abs_scale = scale.get();
    r.terms_used = static_cast<int>(s.coeffs.size());
    return r;
}

}  // namespace detail

EvalResult mpw_eval(const OperatorParams& params, std::complex<double> z,
                    const EvalOptions& opts) {
    detail::EvalWithScale w = detail::mpw_eval_with_scale(params, z, opts);
    return {w.value, w.terms_used, w.tail_estimate, w.pole_truncated};
}

std::vector<double> ratio_diagnostics(const OperatorParams& params, int K) {
    if (K < 2) throw InvalidParamsError("ratio_diagnostics: K must be >= 2");
    CoeffSequence seq(params);
    std::vector<double> r;
    r.reserve(K - 1);
    for (int k = 1; k <= K - 1; ++k) {
        LogCoeff ck = seq.at(static_cast<std::size_t>(k));
        LogCoeff cn = seq.at(static_cast<std::size_t>(k + 1));
        if (cn.sign == 0)
            r.push_back(0.0);
        else if (ck.sign == 0)
            r.push_back(std::numeric_limits<double>::infinity());
        else
            r.push_back(std::exp(cn.log_abs - ck.log_abs));
    }
    return r;
}

GenPowerSeries mpw_series(const OperatorParams& params, std::complex<double> lambda, int K) {
    if (K < 0) throw InvalidParamsError("mpw_series: K must be >= 0");
    CoeffSequence seq(params);
    GenPowerSeries s;
    s.stride = params.stride();
    s.offset = 0.0;
    s.coeffs.reserve(K + 1);
    std::complex<double> lp{1.0, 0.0};
    for (int k = 0; k <= K; ++k) {
        s.coeffs.push_back(lp * seq.at(static_cast<std::size_t>(k)).value());
        lp *= lambda;
    }
    return s;
}

std::complex<double> eval_series(const GenPowerSeries& s, double x) {
    return detail::eval_series_with_scale(s, x).value;
}

}  // namespace mpw
