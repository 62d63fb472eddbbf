#include <doctest.h>

#include "fhchain/errors.hpp"
#include "fhchain/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fhchain;

namespace {
constexpr double kPi = std::numbers::pi;
double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
} // namespace

TEST_CASE("log_gamma against known values") {
    CHECK(rel(std::exp(log_gamma(cplx(0.5))), cplx(std::sqrt(kPi))) < 1e-14);
    CHECK(rel(std::exp(log_gamma(cplx(5.0))), cplx(24.0)) < 1e-13);
    // reference value for a complex argument
    CHECK(rel(log_gamma(cplx(2.5, 1.5)),
              cplx(-0.227112240793227322, 1.17129293466460303)) < 1e-13);
    // reflection region
    CHECK(rel(std::exp(log_gamma(cplx(-0.5))), cplx(-2.0 * std::sqrt(kPi))) < 1e-12);
    CHECK_THROWS_AS(log_gamma(cplx(-3.0)), PoleArgument);
}

TEST_CASE("Barnes G at integers and reference points") {
    CHECK(rel(barnes_g(cplx(1.0)).value(), cplx(1.0)) < 1e-14);
    CHECK(rel(barnes_g(cplx(2.0)).value(), cplx(1.0)) < 1e-14);
    CHECK(rel(barnes_g(cplx(3.0)).value(), cplx(1.0)) < 1e-13);
    CHECK(rel(barnes_g(cplx(4.0)).value(), cplx(2.0)) < 1e-12);
    // independently computed reference values
    CHECK(rel(barnes_g(cplx(0.5)).value(), cplx(0.603244281209446206)) < 1e-12);
    CHECK(rel(barnes_g(cplx(1.5)).value(), cplx(1.06922264926641295)) < 1e-12);
    CHECK(rel(barnes_g(cplx(2.5)).value(), cplx(0.947573901083825777)) < 1e-12);
    CHECK(rel(barnes_g(cplx(0.25)).value(), cplx(0.293755965338609955)) < 1e-12);
    CHECK(rel(barnes_g(cplx(3.7)).value(), cplx(1.47004087379182025)) < 1e-12);
    CHECK(rel(barnes_g(cplx(1.5, 0.5)).value(),
              cplx(1.13054022771607511, -0.0687921569055231083)) < 1e-12);
    CHECK(rel(barnes_g(cplx(0.8, -1.2)).value(),
              cplx(2.62726573090244018, -0.143893384292432035)) < 1e-12);
    CHECK(rel(barnes_g(cplx(2.2, 1.7)).value(),
              cplx(0.42574400878887609, -0.416869506281543251)) < 1e-12);
}

TEST_CASE("Barnes recurrence G(z+1) = Gamma(z) G(z) on strip samples") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> re(0.3, 3.0), im(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        cplx z{re(rng), im(rng)};
        cplx lhs = barnes_g(z + 1.0).log_G;
        cplx rhs = log_gamma(z) + barnes_g(z).log_G;
        CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-10);
    }
}

TEST_CASE("g~ dual routes: product, Barnes pair, integral") {
    CHECK(std::abs(g_tilde(cplx(0.0)) - 1.0) < 1e-14);
    // product formula vs independent reference
    CHECK(rel(g_tilde(cplx(0.3, 0.2)),
              cplx(0.913595302870918183, -0.18150528064088196)) < 1e-11);
    // product vs Barnes pair on a grid
    for (double l : {0.1, 0.25, 0.4, 0.5}) {
        for (double m : {-0.3, 0.0, 0.2}) {
            cplx z{l, m};
            cplx pair = barnes_g(1.0 + z).value() * barnes_g(1.0 - z).value();
            CHECK(rel(g_tilde(z), pair) < 1e-10);
        }
    }
    // integral representation for real arguments
    CHECK(std::abs(ln_g_integral(0.35) - (-0.202926409872954359)) < 1e-8);
    for (double l : {0.1, 0.3, 0.5})
        CHECK(std::abs(std::exp(ln_g_integral(l)) - g_tilde(cplx(l)).real()) < 1e-8);
}

TEST_CASE("the half-jump constant g(1/2)") {
    cplx g12 = barnes_g(cplx(0.5)).value();
    cplx g = std::sqrt(kPi) * g12 * g12;
    CHECK(rel(g, cplx(0.645002448509577085)) < 1e-12);
    CHECK(rel(g_tilde(cplx(0.5)), g) < 1e-10);
}
