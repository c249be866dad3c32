#ifndef MPWRIGHT_TESTS_DIRECT_COEFFS_HPP
#define MPWRIGHT_TESTS_DIRECT_COEFFS_HPP

// Test-only oracle: series coefficients by the full double product
//
//   c_k = [ prod_{i=1..k} prod_{j=1..n} Gamma(s i + a_j)/Gamma(s i + b_j) ]
//         / Gamma(s k + b_{n+1})
//
// evaluated from scratch for every k (no recurrence), sharing only the Gamma
// kernel with the implementation it cross-checks.

#include <cmath>
#include <vector>

#include "mpwright/gamma.hpp"
#include "mpwright/params.hpp"

namespace mpw_test {

struct DirectCoeff {
    double log_abs;
    int sign;  // 0 means the coefficient is exactly zero
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

inline DirectCoeff direct_coefficient(const mpw::OffsetTable& off, int n, int k) {
    // j-major, i-descending accumulation: a different association order from
    // the engine's i-major running sum, so agreement is a real numerical
    // check rather than identical arithmetic.
    const double s = off.stride;
    double acc = 0.0, carry = 0.0;
    int sign = 1;
    for (int j = n - 1; j >= 0; --j) {
        for (int i = k; i >= 1; --i) {
            mpw::SignedLogGamma num = mpw::signed_log_gamma(s * i + off.a[j]);
            mpw::SignedLogGamma den = mpw::signed_log_gamma(s * i + off.b[j]);
            if (num.sign == 0) throw mpw::NumeratorPoleError("oracle: numerator pole", i, j + 1);
            if (den.sign == 0) {
                sign = 0;
                continue;
            }
            double x = num.log_abs - den.log_abs;
            double t = acc + x;
            carry += (std::abs(acc) >= std::abs(x)) ? ((acc - t) + x) : ((x - t) + acc);
            acc = t;
            sign *= num.sign * den.sign;
        }
    }
    mpw::SignedLogGamma tail = mpw::signed_log_gamma(s * k + off.b[n]);
    if (tail.sign == 0 || sign == 0) return {0.0, 0};
    return {(acc + carry) - tail.log_abs, sign * tail.sign};
}

inline std::vector<DirectCoeff> direct_coefficients(const mpw::OperatorParams& params, int K) {
    mpw::OffsetTable off = mpw::derive_offsets(params);
    std::vector<DirectCoeff> out;
    out.reserve(K + 1);
    for (int k = 0; k <= K; ++k) out.push_back(direct_coefficient(off, params.n(), k));
    return out;
}

}  // namespace mpw_test

#endif
