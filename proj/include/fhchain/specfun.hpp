#pragma once

// Barnes G-function and the jump constant g~(lambda) = G(1+lambda)G(1-lambda),
// each with an independent evaluation route so they can cross-check.

#include <complex>

namespace fhchain {

using cplx = std::complex<double>;

struct BarnesGValue {
    cplx z;
    cplx log_G;          // principal determination along the reduction path
    cplx value() const { return std::exp(log_G); }
};

// log Gamma, principal branch for Re z > 0 (Lanczos); reflection otherwise.
cplx log_gamma(cplx z);

// Barnes G via recurrence reduction into Re z in [1,2) plus the canonical
// product for G(1+w) with a Hurwitz-zeta tail correction.
BarnesGValue barnes_g(cplx z);

// g~(lambda) = G(1+lambda) G(1-lambda), evaluated by its own product
// representation e^{-(1+gamma_E) l^2} prod_k (1 - l^2/k^2)^k e^{l^2/k}.
cplx g_tilde(cplx lambda);

// Integral representation of ln g~(lambda) for real lambda, |lambda| <= 1/2.
double ln_g_integral(double lambda);

} // namespace fhchain
