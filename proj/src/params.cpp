#include "mpwright/params.hpp"

#include <cmath>
#include <string>

namespace mpw {

OperatorParams::OperatorParams(std::vector<double> alpha, std::vector<double> nu)
    : alpha_(std::move(alpha)), nu_(std::move(nu)) {
    if (nu_.empty()) throw InvalidParamsError("need at least one power weight (n >= 1)");
    if (alpha_.size() != nu_.size() + 1)
        throw InvalidParamsError("alpha must have exactly one more entry than nu (got " +
                                 std::to_string(alpha_.size()) + " vs " +
                                 std::to_string(nu_.size()) + ")");
    for (double a : alpha_)
        if (!(a > 0.0) || !std::isfinite(a))
            throw InvalidParamsError("all alpha_j must be positive finite reals");
    for (double v : nu_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidParamsError("all nu_j must be positive finite reals");
}

OffsetTable derive_offsets(const OperatorParams& params) {
    const auto& alpha = params.alpha();
    const auto& nu = params.nu();
    const int n = params.n();

    OffsetTable t;
    t.stride = params.stride();
    t.a.reserve(n);
    t.b.reserve(n + 1);

    // prefix sums with the implicit alpha_0 = nu_0 = 0
    double sa = 0.0;  // sum_{m=1..j} (nu_{m-1} - alpha_m)
    double sb = 0.0;  // sum_{m=1..j} (nu_{m-1} - alpha_{m-1})
    for (int j = 1; j <= n + 1; ++j) {
        double nu_prev = (j >= 2) ? nu[j - 2] : 0.0;
        double alpha_prev = (j >= 2) ? alpha[j - 2] : 0.0;
        if (j <= n) {
            sa += nu_prev - alpha[j - 1];
            t.a.push_back(1.0 + sa);
        }
        sb += nu_prev - alpha_prev;
        t.b.push_back(1.0 + sb);
    }

    double drift = 0.0;
    for (int s = 0; s < n; ++s) drift += nu[s] - alpha[s];
    t.drift = drift;
    return t;
}

}  // namespace mpw
