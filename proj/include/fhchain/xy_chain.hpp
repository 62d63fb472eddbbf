#pragma once

// XY / XX spin-chain layer: parameters and regimes, correlator symbols,
// closed-form asymptotics, and the exact determinant route.

#include "fhchain/fh_engine.hpp"
#include "fhchain/symbol.hpp"
#include "fhchain/toeplitz.hpp"

#include <utility>

namespace fhchain {

enum class Regime { R1_disk, R2_band, R3_line, R4_high, B_circle };

struct XYParams {
    double gamma = 0.0;
    double h = 0.0;
    cplx lambda1, lambda2;   // roots with lambda1 lambda2 = a
    double a = 0.0;          // (1 - gamma) / (1 + gamma)
    Regime regime = Regime::R1_disk;
    double phi = 0.0;        // arg lambda2 in regime R1
};

XYParams make_params(double gamma, double h);

struct XXParams {
    double p_f = 0.0;        // Fermi momentum in (0, pi)
    double alpha = 0.0;      // phase of the exponential correlator
};

struct Dispersion {
    double gamma = 0.0, h = 0.0;
    double eps(double k) const { return std::cos(k) - h; }
    double delta(double k) const { return gamma * std::sin(k); }
    double energy(double k) const { return std::hypot(eps(k), delta(k)); }
};

enum class Kind { Gxx, Gyy, G_pm, G_alpha, G_pi };
enum class Method { exact_oracle, fh_asymptotic, closed_form };

struct CorrelatorValue {
    Kind kind;
    double x;
    cplx value;
    Method method;
};

// Generating functions of the xx- and yy-correlator determinants,
// f1 = e^{-ix} sign_gamma(x), f2 = e^{+ix} sign_gamma(x), in factor form.
std::pair<Symbol, Symbol> correlator_symbols(const XYParams& p);

// Regime-specific contour deformation exposing the Fisher-Hartwig form;
// which = 1 for f1, 2 for f2.
Symbol prepare_contour(const Symbol& sym, const XYParams& p, int which);

CorrelatorValue closed_form_gxx(const XYParams& p, double x);
CorrelatorValue closed_form_gyy(const XYParams& p, double x);

// leading asymptotics of <e^{i alpha N(x)}>; two-term sum at alpha = pi
CorrelatorValue xx_exponential_correlator(const XXParams& xp, double x);
// <S+ S-> asymptotics, x^{-1/2} sqrt(sin p_F)/sqrt(2) g(1/2)^2
CorrelatorValue xx_spin_correlator(const XXParams& xp, double x);

// jump symbols of the XX chain
Symbol xx_alpha_symbol(double alpha, double p_f);
std::pair<Symbol, Symbol> xx_spin_symbols(double p_f);

struct FermionAverages {
    double aa_dag;           // <a+_x a_0>
    cplx adag_adag;          // <a+_x a+_0>
    cplx ba;                 // BA(x)
};

FermionAverages fermion_averages(const Dispersion& d, int x);

enum class Precision { automatic, plain, extended };

CorrelatorValue exact_correlator(Kind kind, const XYParams& p, int x,
                                 Precision prec = Precision::automatic,
                                 int quad_points = 16384);
CorrelatorValue exact_correlator(Kind kind, const XXParams& xp, int x,
                                 Precision prec = Precision::automatic);

} // namespace fhchain
