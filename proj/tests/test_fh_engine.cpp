#include <doctest.h>

#include "fhchain/errors.hpp"
#include "fhchain/fh_engine.hpp"
#include "fhchain/toeplitz.hpp"
#include "fhchain/xy_chain.hpp"

#include <cmath>
#include <numbers>

using namespace fhchain;

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("strong Szego asymptotics converge to the exact determinant") {
    Symbol s;
    s.constant = 1.0;
    s.factors.push_back({{0.35, 0.15}, Orientation::Z, 1.0});
    s.factors.push_back({{0.2, -0.1}, Orientation::InvZ, 1.0});
    AsymptoticTerm t = szego_asymptotics(s);
    auto sweep = det_sweep(s, {8, 16, 32}, {});
    for (auto& [n, d] : sweep) {
        cplx pred = std::exp(t.l0 * double(n)) * t.E;
        CHECK(std::abs(d.value() / pred - 1.0) < 1e-8);
    }
}

TEST_CASE("basor and representation-sum routes agree on jump symbols") {
    for (double alpha : {kPi / 4, kPi / 2, 3 * kPi / 4}) {
        for (double pf : {kPi / 3, kPi / 2}) {
            Symbol s = Symbol::piecewise_phases(pf, 0.0, alpha, 0.0);
            auto b = basor_asymptotics(s);
            auto f = fh_asymptotics(s);
            REQUIRE(b.terms.size() == 1);
            REQUIRE(f.terms.size() == 1);
            CHECK(std::abs(b.terms[0].l0 - f.terms[0].l0) < 1e-12);
            CHECK(b.terms[0].power == doctest::Approx(f.terms[0].power).epsilon(1e-12));
            CHECK(std::abs(b.terms[0].E / f.terms[0].E - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("alpha = pi: two interfering representations of exponent -1/2") {
    Symbol s = Symbol::piecewise_phases(kPi / 2, 0.0, kPi, 0.0);
    auto res = fh_asymptotics(s);
    REQUIRE(res.terms.size() == 2);
    CHECK(res.conjectural);
    for (const auto& t : res.terms)
        CHECK(t.power == doctest::Approx(-0.5).epsilon(1e-12));
    // the coherent sum vanishes at odd distances
    CHECK(std::abs(res.evaluate(31.0)) < 1e-10);
    CHECK(std::abs(res.evaluate(32.0)) > 0.05);
}

TEST_CASE("evaluate matches the exact determinant for a generic jump") {
    Symbol s = Symbol::piecewise_phases(1.1, 0.0, 0.7, 0.0);
    auto res = basor_asymptotics(s);
    auto sweep = det_sweep(s, {64}, {});
    cplx exact = sweep[0].second.value();
    CHECK(std::abs(exact / res.evaluate(64.0) - 1.0) < 0.01);
}

TEST_CASE("excluded representations raise and are skipped") {
    FHRepresentation rep;
    rep.f0 = Symbol::identity();
    rep.singularities.push_back({0.0, 0.25, cplx(1.25)});   // a - b = -1
    rep.excluded = true;
    CHECK(check_excluded(rep));
    CHECK_THROWS_AS(fh_constant_E(rep), ExcludedCase);
}

TEST_CASE("basor rejects symbols outside the jump-only class") {
    Symbol winding;
    winding.power = 1;
    CHECK_THROWS_AS(basor_asymptotics(winding), NotJumpForm);
    Symbol zero = Symbol::constant_symbol(cplx(0.0));
    CHECK_THROWS_AS(basor_asymptotics(zero), VanishingSymbol);
}
