#ifndef MPWRIGHT_GAMMA_HPP
#define MPWRIGHT_GAMMA_HPP

#include "mpwright/errors.hpp"

namespace mpw {

/// Gamma of a real argument in log space with an explicit sign.
///
/// sign == 0 marks a pole of Gamma (x a nonpositive integer); log_abs is
/// meaningless there. Otherwise sign*exp(log_abs) reconstructs Gamma(x).
struct SignedLogGamma {
    double log_abs = 0.0;
    int sign = 1;
};

/// log|Gamma(x)| and sign for finite real x. Poles are reported in-band
/// (sign = 0), never thrown, so series code can apply 1/Gamma(pole) = 0
/// uniformly.
SignedLogGamma signed_log_gamma(double x) noexcept;

/// 1/Gamma(x) as an entire function: exactly 0 at the poles of Gamma.
double recip_gamma(double x) noexcept;

/// Signed log of Gamma(num)/Gamma(den), formed in log space so that ratios
/// of huge Gammas never overflow.
///
/// Throws NumeratorPoleError / DenominatorPoleError when the respective
/// argument is a nonpositive integer; the caller decides whether a
/// denominator pole collapses the enclosing coefficient to zero.
SignedLogGamma gamma_ratio(double num, double den);

namespace detail {

/// sin(pi*x) with range reduction done on x itself, accurate for large |x|.
double sinpi(double x) noexcept;

/// True when x is within `tol` of an integer; `nearest` receives that integer.
bool near_integer(double x, double& nearest, double tol) noexcept;

/// Classification tolerance for arguments assembled from sums of user
/// parameters: float noise keeps exact pole/annihilation coincidences from
/// being representable, so anything this close to an integer is treated as
/// sitting on it.
inline constexpr double kExponentSnapTol = 1e-9;

}  // namespace detail
}  // namespace mpw

#endif
