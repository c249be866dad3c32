#ifndef MPWRIGHT_PARAMS_HPP
#define MPWRIGHT_PARAMS_HPP

#include <vector>

#include "mpwright/errors.hpp"

namespace mpw {

/// Parameter vectors of the fractional hyper-Bessel operator: n+1 fractional
/// orders alpha and n power weights nu, all strictly positive. The sentinels
/// alpha_0 = nu_0 = 0 are a convention of the offset formulas, never stored.
class OperatorParams {
public:
    OperatorParams(std::vector<double> alpha, std::vector<double> nu);

    int n() const { return static_cast<int>(nu_.size()); }
    const std::vector<double>& alpha() const { return alpha_; }
    const std::vector<double>& nu() const { return nu_; }

    /// alpha_{n+1}, the exponent step of the series in x.
    double stride() const { return alpha_.back(); }

private:
    std::vector<double> alpha_;
    std::vector<double> nu_;
};

/// Derived offset sequences entering every series coefficient:
///   a_j = 1 + sum_{m=1..j} (nu_{m-1} - alpha_m)        (j = 1..n)
///   b_j = 1 + sum_{m=1..j} (nu_{m-1} - alpha_{m-1})    (j = 1..n+1)
/// with alpha_0 = nu_0 = 0, so b_1 = 1 always and b_{n+1} = 1 + drift.
struct OffsetTable {
    std::vector<double> a;  // length n
    std::vector<double> b;  // length n+1
    double stride = 1.0;    // alpha_{n+1}
    double drift = 0.0;     // sum (nu_s - alpha_s)
};

OffsetTable derive_offsets(const OperatorParams& params);

}  // namespace mpw

#endif
