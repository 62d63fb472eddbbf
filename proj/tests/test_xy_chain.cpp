#include <doctest.h>

#include "fhchain/errors.hpp"
#include "fhchain/fh_engine.hpp"
#include "fhchain/xy_chain.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fhchain;

namespace {
constexpr double kPi = std::numbers::pi;

cplx direct_f(double gamma, double h, double x, int which) {
    cplx num(std::cos(x) - h, gamma * std::sin(x));
    cplx sg = num / std::abs(num);
    return std::polar(1.0, which == 1 ? -x : x) * sg;
}
} // namespace

TEST_CASE("regime classification") {
    CHECK(make_params(0.1, 0.3).regime == Regime::R1_disk);
    CHECK(make_params(0.5, 0.9).regime == Regime::R2_band);
    CHECK(make_params(0.5, 1.0).regime == Regime::R3_line);
    CHECK(make_params(0.5, 1.2).regime == Regime::R4_high);
    CHECK(make_params(0.6, 0.8).regime == Regime::B_circle);
    CHECK(make_params(1.0, 0.0).regime == Regime::R1_disk);   // a = 0 degeneracy
    CHECK(make_params(1.0, 0.0).phi == doctest::Approx(kPi / 2));
    CHECK(make_params(0.5, -1.2).h == doctest::Approx(1.2));  // h < 0 by symmetry
    CHECK_THROWS_AS(make_params(1.5, 0.5), OutOfDomain);
}

TEST_CASE("root identities on random parameters") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dg(0.05, 1.0), dh(0.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        auto p = make_params(dg(rng), dh(rng));
        CHECK(std::abs(p.lambda1 * p.lambda2 - cplx(p.a)) < 1e-12);
        CHECK(std::abs((1.0 - p.lambda1 * p.lambda2) -
                       cplx(2 * p.gamma / (1 + p.gamma))) < 1e-12);
        cplx lhs = (1.0 - p.lambda1 * p.lambda1) * (1.0 - p.lambda2 * p.lambda2);
        double rhs = 4 * (1 - p.h * p.h) / ((1 + p.gamma) * (1 + p.gamma));
        CHECK(std::abs(lhs - cplx(rhs)) < 1e-11);
    }
}

TEST_CASE("correlator symbols reproduce the dispersion sign function") {
    for (auto [g, h] : std::vector<std::pair<double, double>>{
             {0.1, 0.3}, {0.5, 0.9}, {0.5, 1.0}, {0.5, 1.2}, {1.0, 0.0}, {0.9, 1.7}}) {
        auto p = make_params(g, h);
        auto [f1, f2] = correlator_symbols(p);
        for (double x : {-2.7, -1.1, 0.6, 1.9, 3.0}) {
            CHECK(std::abs(f1.eval(x) - direct_f(g, h, x, 1)) < 1e-10);
            CHECK(std::abs(f2.eval(x) - direct_f(g, h, x, 2)) < 1e-10);
        }
    }
}

TEST_CASE("contour preparation exposes the known singularity data") {
    // below the circle: two singularities (1/4, 3/4)
    auto p1 = make_params(0.1, 0.3);
    auto r1 = fh_asymptotics(prepare_contour(correlator_symbols(p1).second, p1, 2));
    REQUIRE(r1.terms.size() == 1);
    CHECK(r1.terms[0].power == doctest::Approx(-1.0));
    for (const auto& s : r1.terms[0].representation.singularities) {
        CHECK(s.a == doctest::Approx(0.25));
        CHECK(s.b.real() == doctest::Approx(0.75));
    }
    // band regime: single singularity (1/4, 7/4), exponent -3
    auto p2 = make_params(0.5, 0.9);
    auto r2 = fh_asymptotics(prepare_contour(correlator_symbols(p2).second, p2, 2));
    REQUIRE(r2.terms.size() == 1);
    CHECK(r2.terms[0].power == doctest::Approx(-3.0));
    CHECK(r2.terms[0].representation.singularities[0].b.real() == doctest::Approx(1.75));
    // high field: f1 gives (1/4, -3/4), f2 gives (-1/4, 5/4)
    auto p4 = make_params(0.5, 1.2);
    auto s41 = fh_asymptotics(prepare_contour(correlator_symbols(p4).first, p4, 1));
    CHECK(s41.terms[0].representation.singularities[0].a == doctest::Approx(0.25));
    CHECK(s41.terms[0].representation.singularities[0].b.real() == doctest::Approx(-0.75));
    auto s42 = fh_asymptotics(prepare_contour(correlator_symbols(p4).second, p4, 2));
    CHECK(s42.terms[0].representation.singularities[0].a == doctest::Approx(-0.25));
    CHECK(s42.terms[0].representation.singularities[0].b.real() == doctest::Approx(1.25));
    CHECK(s42.terms[0].power == doctest::Approx(-1.5));
    // the boundary circle has no admissible deformation
    auto pb = make_params(0.6, 0.8);
    CHECK_THROWS_AS(prepare_contour(correlator_symbols(pb).first, pb, 1), BoundaryRegime);
}

TEST_CASE("closed forms at frozen reference values") {
    auto p = make_params(0.5, 0.5);
    // 0.25 sqrt(1-a^2) (1-h^2)^{1/4}
    CHECK(closed_form_gxx(p, 100).value.real() == doctest::Approx(0.2193456688).epsilon(1e-8));
    auto p4 = make_params(0.5, 1.2);
    CHECK(p4.lambda2.real() == doctest::Approx(1.3537749).epsilon(1e-6));
    CHECK(std::log(p4.lambda2.real()) == doctest::Approx(0.3028969).epsilon(1e-6));
    // yy closed forms are negative above the disk regime
    CHECK(closed_form_gyy(make_params(0.5, 0.9), 20).value.real() < 0.0);
    CHECK(closed_form_gyy(make_params(0.5, 1.0), 20).value.real() < 0.0);
    CHECK(closed_form_gyy(p4, 20).value.real() < 0.0);
    CHECK(closed_form_gyy(make_params(0.1, 0.3), 20).value.real() > 0.0);
}

TEST_CASE("fermion averages and the coefficient route agree") {
    Dispersion d{0.5, 0.8};
    auto p = make_params(0.5, 0.8);
    Symbol f1 = correlator_symbols(p).first;
    auto tc = symbol_coefficients(f1, 8, 4096);
    for (int x : {1, 3, 6}) {
        auto av = fermion_averages(d, x);
        // BA(x) is the x-th coefficient of the sign function e^{ix} f1
        CHECK(std::abs(av.ba - tc.at(x + 1)) < 1e-9);
    }
    // density at gamma -> 0 approaches the Fermi filling
    Dispersion xx{1e-9, 0.2};
    auto av0 = fermion_averages(xx, 0);
    CHECK(av0.aa_dag == doctest::Approx(std::acos(0.2) / kPi).epsilon(1e-4));
}

TEST_CASE("XX spin correlator closed form at half filling") {
    XXParams xp{kPi / 2, 0.0};
    // x^{-1/2} 2^{-1/2} g(1/2)^2 with g(1/2)^2 = pi G(1/2)^4
    CHECK(xx_spin_correlator(xp, 16).value.real() ==
          doctest::Approx(0.294176332 / std::sqrt(16.0)).epsilon(1e-8));
}

TEST_CASE("exponential correlator special cases") {
    XXParams xp{kPi / 2, 0.0};
    CHECK(std::abs(xx_exponential_correlator(xp, 10).value - cplx(1.0)) < 1e-14);
    xp.alpha = 2 * kPi;   // full winding is trivial
    CHECK(std::abs(xx_exponential_correlator(xp, 10).value - cplx(1.0)) < 1e-14);
    xp.alpha = kPi;
    CHECK(std::abs(xx_exponential_correlator(xp, 11).value) < 1e-10);
}

TEST_CASE("G_pm decomposes into the two determinant channels") {
    auto p = make_params(0.5, 1.2);
    auto gx = exact_correlator(Kind::Gxx, p, 12);
    auto gy = exact_correlator(Kind::Gyy, p, 12);
    auto gpm = exact_correlator(Kind::G_pm, p, 12);
    CHECK(std::abs(gpm.value - (gx.value + gy.value)) < 1e-15);
}
