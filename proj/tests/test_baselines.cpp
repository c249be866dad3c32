#include <cmath>
#include <complex>

#include "doctest.h"
#include "mpwright/baselines.hpp"

using namespace mpw;
using doctest::Approx;

namespace {
const std::complex<double> kTestPoints[] = {
    {0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {2.5, 0.0}, {-2.2, 0.0},
    {0.3, 1.1}, {-0.8, -2.0}, {1.4, 1.4}, {0.0, 3.0},
};
}

TEST_CASE("wright: frozen values and z=0") {
    CHECK(wright(0.7, 1.3, {0.0, 0.0}).real() == Approx(recip_gamma(1.3)).epsilon(1e-14));
    // sum 1/(k! G(k+1)) and sum 1/(k! (k+1)!)
    CHECK(wright(1.0, 1.0, {1.0, 0.0}).real() == Approx(2.2795853023360673).epsilon(1e-14));
    CHECK(wright(1.0, 2.0, {1.0, 0.0}).real() == Approx(1.5906368546373291).epsilon(1e-14));
    CHECK_THROWS_AS(wright(0.0, 1.0, {1.0, 0.0}), InvalidParamsError);
}

TEST_CASE("mittag_leffler2: exp, cosh and the half-order value") {
    CHECK(mittag_leffler2(1.0, 1.0, {1.0, 0.0}).real() ==
          Approx(2.718281828459045).epsilon(1e-14));
    CHECK(mittag_leffler2(2.0, 1.0, {1.0, 0.0}).real() ==
          Approx(std::cosh(1.0)).epsilon(1e-14));
    // E_{1/2}(1) = e * erfc(-1)
    double expect = std::exp(1.0) * std::erfc(-1.0);
    CHECK(mittag_leffler2(0.5, 1.0, {1.0, 0.0}).real() == Approx(expect).epsilon(1e-10));
    CHECK(mittag_leffler2(0.5, 1.0, {1.0, 0.0}).real() ==
          Approx(5.008980080762283).epsilon(1e-13));
}

TEST_CASE("mittag_leffler2: leading zero coefficients from beta <= 0") {
    // E_{1,-1}(1) = sum_{k>=2} 1/Gamma(k-1) = e
    CHECK(mittag_leffler2(1.0, -1.0, {1.0, 0.0}).real() ==
          Approx(std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("multi_index_ml: m=1 reduction and the (1,1),(1,1) sum") {
    for (auto z : kTestPoints) {
        std::complex<double> a = multi_index_ml({0.8}, {1.1}, z);
        std::complex<double> b = mittag_leffler2(0.8, 1.1, z);
        CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(b)));
    }
    CHECK(multi_index_ml({1.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}).real() ==
          Approx(2.2795853023360673).epsilon(1e-14));
}

TEST_CASE("kilbas_saigo: telescoping cases") {
    // c_0 = 1 always
    CHECK(kilbas_saigo(0.7, 1.3, 0.4, {0.0, 0.0}).real() == 1.0);
    // alpha=1, mu=1, l=0: c_k = 1/k!, value e at z=1
    CHECK(kilbas_saigo(1.0, 1.0, 0.0, {1.0, 0.0}).real() ==
          Approx(std::exp(1.0)).epsilon(1e-14));
    // alpha=1, mu=1, l=1: c_k = 1/(k+1)!, value e-1 at z=1
    CHECK(kilbas_saigo(1.0, 1.0, 1.0, {1.0, 0.0}).real() ==
          Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("kilbas_saigo: numerator pole is an error") {
    // alpha(j mu + l) + 1 = 0 at j = 0 when alpha*l = -1
    CHECK_THROWS_AS(kilbas_saigo(1.0, 1.0, -1.0, {1.0, 0.0}), NumeratorPoleError);
}

TEST_CASE("delerue_hb: m=1 is the Bessel function, x=0 is 1") {
    CHECK(delerue_hb({0.0}, 2.0, false) == Approx(0.22389077914123567).epsilon(1e-13));
    CHECK(delerue_hb({0.0}, 0.0, true) == 1.0);
    CHECK(delerue_hb({0.5, 0.25}, 0.0, true) == 1.0);
    // m=2, nu=(0,0), x=3: sum (-1)^k/(k!)^3
    CHECK(delerue_hb({0.0, 0.0}, 3.0, true) == Approx(0.12044213230101765).epsilon(1e-13));
    CHECK_THROWS_AS(delerue_hb({-1.0}, 1.0, true), NumeratorPoleError);
}

TEST_CASE("delerue_hb: prefactor against the m=1 closed form") {
    // J_nu(x) = (x/2)^nu/Gamma(nu+1) * j_nu(x)
    for (double nu : {0.5, 1.25}) {
        for (double x : {0.6, 2.0, 3.5}) {
            CHECK(delerue_hb({nu}, x, false) == Approx(bessel_j(nu, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("laguerre_exp: n=0 collapses to exp") {
    for (auto z : kTestPoints) {
        std::complex<double> got = laguerre_exp(0, z);
        std::complex<double> expect = std::exp(z);
        CHECK(std::abs(got - expect) <= 1e-13 * std::abs(expect));
    }
}

TEST_CASE("n_mittag_leffler: frozen regression value") {
    // sum 1/Gamma(k/2 + 1)^3
    CHECK(n_mittag_leffler(2, 0.5, {1.0, 0.0}).real() ==
          Approx(4.019973995268127).epsilon(1e-13));
}

TEST_CASE("tricomi and bessel, including C0(-x^2/4) = J0(x)") {
    CHECK(tricomi_c0({-1.0, 0.0}).real() == Approx(0.22389077914123567).epsilon(1e-13));
    CHECK(bessel_j(0.0, 2.0) == Approx(0.22389077914123567).epsilon(1e-13));
    CHECK(bessel_j(0.0, 3.0) == Approx(-0.26005195490193344).epsilon(1e-12));
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(0.7, 0.0) == 0.0);
    for (double x : {0.4, 1.1, 2.7}) {
        CHECK(tricomi_c0({-x * x / 4.0, 0.0}).real() == Approx(bessel_j(0.0, x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(bessel_j(-1.5, 1.0), InvalidParamsError);
}

TEST_CASE("cross-identity suite at |z| <= 3") {
    for (auto z : kTestPoints) {
        // E_{1,1} = exp
        CHECK(std::abs(mittag_leffler2(1.0, 1.0, z) - std::exp(z)) <= 1e-12);
        // W_{beta,nu} = E^(2)_{(1,beta),(1,nu)}
        CHECK(std::abs(wright(0.6, 1.2, z) - multi_index_ml({1.0, 0.6}, {1.0, 1.2}, z)) <=
              1e-12);
        // C0 = E^(2)_{(1,1),(1,1)}
        CHECK(std::abs(tricomi_c0(z) - multi_index_ml({1.0, 1.0}, {1.0, 1.0}, z)) <= 1e-12);
        // laguerre_exp(n,.) = multi_index_ml(ones(n+1), ones(n+1), .)
        CHECK(std::abs(laguerre_exp(2, z) -
                       multi_index_ml({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, z)) <= 1e-12);
        // n_mittag_leffler(n,nu,.) = multi_index_ml(nu*ones, ones, .)
        CHECK(std::abs(n_mittag_leffler(2, 0.5, z) -
                       multi_index_ml({0.5, 0.5, 0.5}, {1.0, 1.0, 1.0}, z)) <= 1e-12);
    }
}

TEST_CASE("every baseline at z=0 returns the k=0 coefficient") {
    CHECK(wright(0.6, 1.2, {0.0, 0.0}).real() == Approx(recip_gamma(1.2)).epsilon(1e-14));
    CHECK(mittag_leffler2(0.6, 1.2, {0.0, 0.0}).real() ==
          Approx(recip_gamma(1.2)).epsilon(1e-14));
    CHECK(multi_index_ml({0.5, 0.7}, {1.1, 0.9}, {0.0, 0.0}).real() ==
          Approx(recip_gamma(1.1) * recip_gamma(0.9)).epsilon(1e-14));
    CHECK(kilbas_saigo(0.5, 0.7, 0.2, {0.0, 0.0}).real() == 1.0);
    CHECK(laguerre_exp(3, {0.0, 0.0}).real() == 1.0);
    CHECK(n_mittag_leffler(2, 0.7, {0.0, 0.0}).real() == 1.0);
    CHECK(tricomi_c0({0.0, 0.0}).real() == 1.0);
}

TEST_CASE("eval_baseline dispatch and arity validation") {
    BaselineSpec w{BaselineKind::Wright, {1.0, 1.0}};
    CHECK(eval_baseline(w, {1.0, 0.0}).real() == Approx(2.2795853023360673).epsilon(1e-13));
    BaselineSpec bad{BaselineKind::Wright, {1.0}};
    CHECK_THROWS_AS(eval_baseline(bad, {1.0, 0.0}), InvalidParamsError);
    BaselineSpec miml{BaselineKind::MultiIndexML, {1.0, 1.0, 1.0, 1.0}};
    CHECK(eval_baseline(miml, {1.0, 0.0}).real() ==
          Approx(2.2795853023360673).epsilon(1e-13));
    BaselineSpec bj{BaselineKind::BesselJ, {0.0}};
    CHECK(eval_baseline(bj, {2.0, 0.0}).real() == Approx(0.22389077914123567).epsilon(1e-12));
}
