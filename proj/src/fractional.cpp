#include "mpwright/fractional.hpp"

#include <cmath>
#include <string>

namespace mpw {

using detail::CompensatedSum;
using detail::kExponentSnapTol;
using detail::near_integer;

CaputoTermResult caputo_term(double p, double gamma) {
    if (!(gamma > 0.0)) throw InvalidParamsError("caputo_term: order must be > 0");

    double gn;
    const bool gamma_int = near_integer(gamma, gn, kExponentSnapTol);
    const int m = gamma_int ? static_cast<int>(gn) : static_cast<int>(std::ceil(gamma));

    double pn;
    if (near_integer(p, pn, kExponentSnapTol)) {
        long P = static_cast<long>(pn);
        if (P < 0)
            throw UnsupportedExponentError("caputo_term: negative exponent " +
                                           std::to_string(p));
        if (P <= m - 1) return {0.0, pn - gamma, true};
        if (gamma_int) {
            // classical m-fold derivative: exact falling factorial
            double mult = 1.0;
            for (int i = 0; i < m; ++i) mult *= static_cast<double>(P - i);
            return {mult, pn - gamma, false};
        }
        p = pn;
    } else {
        if (p < 0.0)
            throw UnsupportedExponentError("caputo_term: negative exponent " +
                                           std::to_string(p));
        if (p - gamma <= -1.0 + kExponentSnapTol)
            throw UnsupportedExponentError(
                "caputo_term: exponent " + std::to_string(p) + " with order " +
                std::to_string(gamma) + " leaves a non-integrable power");
        if (gamma_int) {
            double mult = 1.0;
            for (int i = 0; i < m; ++i) mult *= (p - i);
            return {mult, p - gamma, false};
        }
    }
    // Gamma(p+1)/Gamma(p+1-gamma); both arguments positive here
    double lm = signed_log_gamma(p + 1.0).log_abs - signed_log_gamma(p + 1.0 - gamma).log_abs;
    return {std::exp(lm), p - gamma, false};
}

GenPowerSeries caputo_series(const GenPowerSeries& s, double gamma,
                             SeriesTransformStats* stats) {
    if (!(gamma > 0.0)) throw InvalidParamsError("caputo_series: order must be > 0");
    GenPowerSeries out;
    out.stride = s.stride;
    SeriesTransformStats local;
    SeriesTransformStats& st = stats ? *stats : local;
    st = {};

    bool committed = false;  // first surviving slot emitted
    std::size_t first_kept = 0;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        const std::complex<double> c = s.coeffs[k];
        const double p = s.exponent(k);
        if (c == std::complex<double>(0.0, 0.0)) {
            if (committed) out.coeffs.emplace_back(0.0, 0.0);
            // an uncommitted zero slot is dropped exactly like an annihilated one
            continue;
        }
        CaputoTermResult t = caputo_term(p, gamma);
        if (t.annihilated) {
            st.annihilated_exponents.push_back(p);
            if (committed) out.coeffs.emplace_back(0.0, 0.0);
            continue;
        }
        if (!committed) {
            committed = true;
            first_kept = k;
            out.offset = t.new_exponent;
        }
        out.coeffs.push_back(c * t.multiplier);
    }
    st.dropped_slots = static_cast<int>(first_kept);
    if (!committed) {
        // everything annihilated: the zero series with the shifted ladder
        out.offset = s.offset - gamma;
        st.dropped_slots = 0;
    }
    return out;
}

GenPowerSeries rl_integral_series(const GenPowerSeries& s, double gamma) {
    if (gamma < 0.0) throw InvalidParamsError("rl_integral_series: order must be >= 0");
    if (gamma == 0.0) return s;  // I^0 f = f
    GenPowerSeries out;
    out.stride = s.stride;
    out.offset = s.offset + gamma;
    out.coeffs.reserve(s.coeffs.size());
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        const std::complex<double> c = s.coeffs[k];
        if (c == std::complex<double>(0.0, 0.0)) {
            out.coeffs.emplace_back(0.0, 0.0);
            continue;
        }
        const double p = s.exponent(k);
        if (p <= -1.0)
            throw UnsupportedExponentError("rl_integral_series: exponent " + std::to_string(p) +
                                           " is not integrable at 0");
        double lm = signed_log_gamma(p + 1.0).log_abs - signed_log_gamma(p + 1.0 + gamma).log_abs;
        out.coeffs.push_back(c * std::exp(lm));
    }
    return out;
}

std::vector<PipelineStage> hyper_bessel_pipeline(const OperatorParams& params) {
    std::vector<PipelineStage> stages;
    stages.reserve(2 * params.n() + 1);
    for (int i = 0; i < params.n(); ++i) {
        stages.push_back({StageKind::CaputoDerivative, params.alpha()[i]});
        stages.push_back({StageKind::PowerMultiply, params.nu()[i]});
    }
    stages.push_back({StageKind::CaputoDerivative, params.alpha().back()});
    return stages;
}

GenPowerSeries apply_stages(const std::vector<PipelineStage>& stages, const GenPowerSeries& s,
                            PipelineTrace* trace) {
    GenPowerSeries cur = s;
    if (trace) trace->stages.clear();
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const PipelineStage& st = stages[i];
        SeriesTransformStats stats;
        try {
            switch (st.kind) {
                case StageKind::CaputoDerivative:
                    cur = caputo_series(cur, st.order, &stats);
                    break;
                case StageKind::PowerMultiply:
                    cur.offset += st.order;
                    break;
                case StageKind::RLIntegral:
                    cur = rl_integral_series(cur, st.order);
                    break;
            }
        } catch (const Error& e) {
            throw StageError(i, e.what());
        }
        if (trace) trace->stages.push_back({st, std::move(stats)});
    }
    return cur;
}

GenPowerSeries apply_pipeline(const OperatorParams& params, const GenPowerSeries& s,
                              PipelineTrace* trace) {
    return apply_stages(hyper_bessel_pipeline(params), s, trace);
}

double caputo_quadrature(const std::function<double(double)>& f, double gamma, double x,
                         int steps) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw InvalidParamsError("caputo_quadrature: order must lie in (0,1)");
    if (!(x > 0.0)) throw InvalidParamsError("caputo_quadrature: x must be > 0");
    if (steps < 1) throw InvalidParamsError("caputo_quadrature: steps must be >= 1");

    const int N = steps;
    const double h = x / N;
    const double q = 1.0 - gamma;
    CompensatedSum acc;
    double f_prev = f(0.0);
    for (int i = 0; i < N; ++i) {
        double f_next = f((i + 1 == N) ? x : (i + 1) * h);
        double w = std::pow(static_cast<double>(N - i), q) -
                   std::pow(static_cast<double>(N - i - 1), q);
        acc.add(w * (f_next - f_prev));
        f_prev = f_next;
    }
    return acc.get() * std::pow(h, -gamma) * recip_gamma(2.0 - gamma);
}

}  // namespace mpw
