#pragma once

// Generating functions f(x) on the unit circle, kept in structured form:
//
//   f(x) = constant * z^power * prod (1 - lambda z^{+-1})^p
//                    * prod_r exp(lambda_r w_r(x))                   (jumps)
//                    * prod_r (2-2cos(x-x_r))^{a_r} exp(-i b_r w_r(x))
//
// with z = e^{ix} and w_r(x) = pi - mod_{2pi}(x - x_r), the zero-mean
// sawtooth that jumps by +2pi at x_r.  A jump of Basor strength
// lambda_r = (ln f(x_r+0) - ln f(x_r-0)) / 2pi is therefore the same
// factor as a pure singularity with a_r = 0, b_r = i lambda_r.

#include <complex>
#include <vector>

namespace fhchain {

using cplx = std::complex<double>;

inline constexpr double kAngleTol = 1e-9;      // "coinciding" singular angles
inline constexpr double kCircleTol = 1e-12;    // |lambda| == 1 detection

enum class Orientation { Z, InvZ };            // (1 - lambda z) vs (1 - lambda / z)

struct Factor {
    cplx lambda;
    Orientation orient;
    double exponent;
};

struct Jump {
    double angle;          // x_r in (-pi, pi]
    cplx lambda;           // Basor jump strength
};

struct FHSingularity {
    double angle;          // x_r
    double a;              // power-law strength, Re a > -1/2
    cplx b;                // jump strength
};

struct Symbol {
    cplx constant{1.0, 0.0};
    int power = 0;
    std::vector<Factor> factors;
    std::vector<Jump> jumps;
    std::vector<FHSingularity> singularities;

    cplx eval(double x) const;
    bool smooth() const { return jumps.empty() && singularities.empty(); }

    static Symbol identity();
    static Symbol constant_symbol(cplx c);
    // Piecewise-phase symbol e^{i m x} * (e^{i phi_-}, e^{i phi_0}, e^{i phi_+})
    // on (-pi,-p_F), (-p_F,p_F), (p_F,pi); the phases define the continuous
    // argument and fix the jump strengths.
    static Symbol piecewise_phases(double p_f, double phi_minus, double phi_mid,
                                   double phi_plus, int extra_power = 0);
};

// zero-mean sawtooth with a +2pi jump at x_r
double sawtooth(double x, double x_r);

Symbol multiply(const Symbol& s1, const Symbol& s2);
Symbol contour_rescale(const Symbol& sym, double rho);
int winding_number(const Symbol& sym);

// Rewrites on-circle factors (|lambda| = 1) as Fisher-Hartwig singularities
// and folds jumps into the singularity list.  Throws AnnulusViolation if a
// factor with |lambda| > 1 remains.
Symbol canonicalize(const Symbol& sym);

struct FHRepresentation {
    Symbol f0;                               // smooth zero-winding part
    std::vector<FHSingularity> singularities;
    double exponent = 0.0;                   // sum_r (a_r^2 - b_r^2)
    bool excluded = false;                   // a_r +- b_r in Z^-
    cplx eval(double x) const;               // f0 times singular factors
};

std::vector<FHRepresentation> enumerate_representations(const Symbol& sym,
                                                        int max_shift = 2);

namespace detail {
bool fh_excluded(const std::vector<FHSingularity>& sing);
}

} // namespace fhchain
