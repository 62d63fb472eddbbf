#include <doctest.h>

#include "fhchain/errors.hpp"
#include "fhchain/symbol.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fhchain;

namespace {
constexpr double kPi = std::numbers::pi;

// sample angles that stay away from the listed singular points
std::vector<double> safe_angles(const Symbol& s, int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-kPi + 1e-3, kPi - 1e-3);
    std::vector<double> out;
    while (static_cast<int>(out.size()) < n) {
        double x = dist(rng);
        bool ok = true;
        for (const auto& j : s.jumps)
            if (std::abs(x - j.angle) < 1e-2) ok = false;
        for (const auto& fs : s.singularities)
            if (std::abs(x - fs.angle) < 1e-2) ok = false;
        if (ok) out.push_back(x);
    }
    return out;
}
} // namespace

TEST_CASE("sawtooth: +2pi jump, zero mean, slope -1") {
    double xr = 0.7;
    CHECK(sawtooth(xr + 1e-9, xr) - sawtooth(xr - 1e-9, xr) == doctest::Approx(2 * kPi).epsilon(1e-6));
    CHECK(sawtooth(xr + 0.5, xr) - sawtooth(xr + 0.3, xr) == doctest::Approx(-0.2).epsilon(1e-12));
    // zero mean over a period (midpoint rule away from the jump)
    double s = 0.0;
    int n = 20000;
    for (int i = 0; i < n; ++i) s += sawtooth(xr + (i + 0.5) * 2 * kPi / n, xr);
    CHECK(std::abs(s / n) < 1e-10);
}

TEST_CASE("piecewise_phases reproduces the arc values") {
    double pf = 1.1, alpha = 0.9;
    Symbol s = Symbol::piecewise_phases(pf, 0.0, alpha, 0.0);
    CHECK(s.jumps.size() == 2);
    for (double x : {-2.5, -1.5, 1.5, 2.9})
        CHECK(std::abs(s.eval(x) - cplx(1.0)) < 1e-12);
    for (double x : {-0.9, 0.0, 0.3, 1.0})
        CHECK(std::abs(s.eval(x) - std::polar(1.0, alpha)) < 1e-12);
}

TEST_CASE("piecewise_phases with winding carries the z-power") {
    double pf = kPi / 2;
    Symbol f1 = Symbol::piecewise_phases(pf, -kPi, 0.0, kPi, -1);
    CHECK(f1.power == 0);
    // f = -e^{-ix} outside the Fermi arc, +e^{-ix} inside
    CHECK(std::abs(f1.eval(0.3) - std::polar(1.0, -0.3)) < 1e-12);
    CHECK(std::abs(f1.eval(2.0) + std::polar(1.0, -2.0)) < 1e-12);
}

TEST_CASE("multiply matches pointwise products") {
    Symbol s1;
    s1.constant = {0.7, 0.4};
    s1.factors.push_back({{0.3, 0.2}, Orientation::Z, 0.5});
    s1.jumps.push_back({0.4, {0.0, 0.25}});
    Symbol s2;
    s2.power = 1;
    s2.factors.push_back({{-0.5, 0.1}, Orientation::InvZ, -1.5});
    s2.jumps.push_back({-1.3, {0.1, -0.2}});
    Symbol p = multiply(s1, s2);
    for (double x : safe_angles(p, 32, 11))
        CHECK(std::abs(p.eval(x) - s1.eval(x) * s2.eval(x)) < 1e-12);
    // merging coinciding jumps
    Symbol q = multiply(s1, s1);
    CHECK(q.jumps.size() == 1);
    CHECK(q.jumps[0].lambda == cplx(0.0, 0.5));
}

TEST_CASE("contour_rescale round trip and annulus guard") {
    Symbol s;
    s.power = 2;
    s.constant = {1.2, -0.3};
    s.factors.push_back({{0.4, 0.1}, Orientation::Z, -0.5});
    s.factors.push_back({{0.25, 0.0}, Orientation::InvZ, 0.5});
    Symbol back = contour_rescale(contour_rescale(s, 0.8), 1.0 / 0.8);
    for (double x : safe_angles(s, 16, 7))
        CHECK(std::abs(back.eval(x) - s.eval(x)) < 1e-12);

    // rescaling past a zero of the symbol must throw
    CHECK_THROWS_AS(contour_rescale(s, 0.2), AnnulusViolation);
    Symbol j;
    j.jumps.push_back({0.0, {0.0, 0.1}});
    CHECK_THROWS_AS(contour_rescale(j, 0.9), AnnulusViolation);
}

TEST_CASE("winding_number counts z-power and outside factors") {
    Symbol s;
    s.power = 2;
    CHECK(winding_number(s) == 2);
    s.factors.push_back({{2.0, 0.0}, Orientation::Z, 1.0});   // zero of 1-2z inside the disk
    CHECK(winding_number(s) == 3);
    s.factors.push_back({{0.5, 0.0}, Orientation::Z, 3.0});   // zero outside, no winding
    CHECK(winding_number(s) == 3);
}

TEST_CASE("canonicalize keeps the pointwise values") {
    // on-circle factors become point singularities, jumps fold in
    Symbol s;
    s.constant = {0.9, 0.2};
    s.factors.push_back({std::polar(1.0, 0.8), Orientation::InvZ, 0.5});
    s.factors.push_back({std::polar(1.0, -0.8), Orientation::Z, -0.5});
    s.factors.push_back({{0.3, 0.0}, Orientation::Z, 1.0});
    s.jumps.push_back({1.9, {0.0, 0.2}});
    Symbol c = canonicalize(s);
    CHECK(c.jumps.empty());
    // the two on-circle factors sit at the same angle and merge into one jump
    CHECK(c.singularities.size() == 2);
    for (double x : safe_angles(c, 64, 3))
        CHECK(std::abs(c.eval(x) - s.eval(x)) < 1e-10);
}

TEST_CASE("enumerate_representations reconstruct the symbol") {
    double pf = kPi / 3;
    Symbol s = Symbol::piecewise_phases(pf, 0.0, kPi, 0.0);   // alpha = pi jumps
    auto reps = enumerate_representations(s, 2);
    CHECK(reps.size() > 1);
    for (const auto& r : reps)
        for (double x : safe_angles(s, 16, 23))
            CHECK(std::abs(r.eval(x) - s.eval(x)) < 1e-10);
    // exponents sorted descending
    for (std::size_t i = 1; i < reps.size(); ++i)
        CHECK(reps[i - 1].exponent >= reps[i].exponent - 1e-15);
}

TEST_CASE("excluded representations are flagged") {
    std::vector<FHSingularity> ok{{0.0, 0.25, cplx(0.75)}};
    std::vector<FHSingularity> bad{{0.0, 0.25, cplx(1.25)}};   // a - b = -1
    CHECK(!detail::fh_excluded(ok));
    CHECK(detail::fh_excluded(bad));
}
