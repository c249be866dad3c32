#ifndef MPWRIGHT_SERIES_HPP
#define MPWRIGHT_SERIES_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "mpwright/gamma.hpp"
#include "mpwright/params.hpp"

namespace mpw {

/// A truncated generalized power series  sum_k c_k x^(stride*k + offset).
/// Zero coefficients are legitimate slots (operators may annihilate terms);
/// they represent the vanished term exactly.
struct GenPowerSeries {
    double stride = 1.0;
    double offset = 0.0;
    std::vector<std::complex<double>> coeffs;

    double exponent(std::size_t k) const { return stride * static_cast<double>(k) + offset; }
    std::size_t size() const { return coeffs.size(); }
};

struct EvalOptions {
    double eps = 1e-15;  // relative truncation target, in (0,1)
    int kmax = 500;      // hard cap on series terms
};

struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    int terms_used = 0;
    double tail_estimate = 0.0;   // magnitude of the first omitted term
    bool pole_truncated = false;  // a Gamma pole zeroed every remaining
                                  // coefficient; the partial sum is exact
};

/// One series coefficient as (log|c|, sign); sign 0 encodes c = 0.
struct LogCoeff {
    double log_abs = 0.0;
    int sign = 1;
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Lazily extended coefficient sequence of the multi-parameter generalized
/// Wright function,
///
///   c_k = [ prod_{i<=k} prod_{j<=n} G(s i + a_j)/G(s i + b_j) ] / G(s k + b_{n+1}),
///
/// computed by a log-space recurrence with sign tracking. A pole in a
/// *denominator* Gamma zeroes the affected factor (1/G convention): a pole in
/// one of the running ratio factors kills every later coefficient, while a
/// pole in the trailing G(s k + b_{n+1}) zeroes that coefficient alone; the
/// running product is kept separate from the trailing factor so later
/// coefficients stay well defined. A pole in a *numerator* Gamma makes the
/// coefficient genuinely undefined and throws NumeratorPoleError.
class CoeffSequence {
public:
    explicit CoeffSequence(const OperatorParams& params);

    /// c_k; extends the table as needed. Returned by value: extending may
    /// reallocate the underlying table.
    LogCoeff at(std::size_t k);

    /// True when every coefficient from index k on is exactly zero.
    bool dead_at(std::size_t k) const { return k >= dead_from_; }

    const OffsetTable& offsets() const { return off_; }

private:
    void extend(std::size_t upto);

    OffsetTable off_;
    int n_;
    std::vector<LogCoeff> coeffs_;
    // running sum of log ratio factors, compensated: hundreds of increments
    // must stay accurate to an ulp of the final log
    double running_log_ = 0.0;
    double running_carry_ = 0.0;
    int running_sign_ = 1;
    std::size_t dead_from_ = std::numeric_limits<std::size_t>::max();
};

/// Materialized coefficients c_0..c_K (real-valued for real parameters;
/// entries underflow to 0 once log|c_k| drops below double range).
std::vector<std::complex<double>> mpw_coefficients(const OperatorParams& params, int K);

/// Partial sum of sum_k c_k z^k with the two-consecutive-small-terms stopping
/// rule and compensated summation. Terms are materialized from logs, so large
/// |z| cannot overflow intermediate powers.
EvalResult mpw_eval(const OperatorParams& params, std::complex<double> z,
                    const EvalOptions& opts = {});

/// Consecutive-coefficient ratios r_k = |c_{k+1}/c_k| for k = 1..K-1, the
/// ratio-test diagnostic. r_k is 0 where the series has died (polynomial
/// case) and +inf across an isolated zero coefficient.
std::vector<double> ratio_diagnostics(const OperatorParams& params, int K);

/// The series of W(lambda x^stride) as a GenPowerSeries in x (coefficients
/// c_k lambda^k, exponent ladder stride*k).
GenPowerSeries mpw_series(const OperatorParams& params, std::complex<double> lambda, int K);

/// Value of a generalized power series at x > 0 (x = 0 allowed when no
/// negative exponents carry nonzero coefficients).
std::complex<double> eval_series(const GenPowerSeries& s, double x);

namespace detail {

/// Neumaier-compensated accumulator.
struct CompensatedSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double get() const { return s + c; }
};

struct EvalWithScale {
    std::complex<double> value{0.0, 0.0};
    double abs_scale = 0.0;  // sum of |c_k z^k| over the summed terms
    int terms_used = 0;
    double tail_estimate = 0.0;
    bool pole_truncated = false;
};

/// mpw_eval plus the absolute-term-sum scale (the conditioning of the sum).
EvalWithScale mpw_eval_with_scale(const OperatorParams& params, std::complex<double> z,
                                  const EvalOptions& opts);

/// eval_series plus the absolute-term-sum scale.
EvalWithScale eval_series_with_scale(const GenPowerSeries& s, double x);

}  // namespace detail
}  // namespace mpw

#endif
