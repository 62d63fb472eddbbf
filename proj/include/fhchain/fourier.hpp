#pragma once

// Fourier data of symbols: log-coefficients l_k of ln f0, the Szego sum,
// Wiener-Hopf factor values, and Toeplitz coefficients c_k of f.

#include "fhchain/symbol.hpp"

#include <utility>
#include <vector>

namespace fhchain {

struct FourierData {
    std::vector<cplx> l;     // l_k for k in [-K, K], stored at index k + K
    int K = 0;
    cplx szego_sum{};        // sum_{k>=1} k l_k l_{-k}
    double tail_estimate = 0.0;

    cplx lk(int k) const { return l[static_cast<std::size_t>(k + K)]; }
};

// Analytic log-coefficients of a smooth zero-winding symbol (constant +
// factors with |lambda| < 1).  Jumps are allowed and contribute the exact
// sawtooth coefficients i lambda_r e^{i k x_r} / k; the Szego sum is then
// only stored for the smooth part.
FourierData log_coefficients(const Symbol& f0, int K);

// Szego sum in closed form for a smooth factor symbol:
//   sum_k k l_k l_{-k} = - sum_{i in 1/z, j in z} p_i p_j ln(1 - lambda_i lambda_j)
cplx szego_sum_closed(const Symbol& f0);

// Wiener-Hopf factor values at x_r, closed form over the factor list:
//   f_+(x) = prod_{z-factors} (1 - lambda e^{ix})^p,
//   f_-(x) = prod_{1/z-factors} (1 - lambda e^{-ix})^p.
std::pair<cplx, cplx> wiener_hopf_values(const Symbol& f0, double x_r);

// Series route for f_+/f_- from stored l_k (used to cross-check the closed
// form); throws SeriesDiverged if the partial sums fail a Cauchy check.
std::pair<cplx, cplx> wiener_hopf_series(const FourierData& fd, double x_r);

struct ToeplitzCoefficients {
    std::vector<cplx> c;     // c_k for k in [-n_max, n_max] at index k + n_max
    int n_max = 0;

    cplx at(int k) const { return c[static_cast<std::size_t>(k + n_max)]; }
};

// c_k = int dx/2pi e^{ikx} f(x).  Jump-only symbols integrate exactly arc by
// arc; smooth symbols use a uniform-grid DFT; mixed symbols use per-arc
// Gauss-Legendre panels.  OpenMP-parallel over k.
ToeplitzCoefficients symbol_coefficients(const Symbol& sym, int n_max, int quad_points);

// Serial reference implementation with identical summation order per k.
ToeplitzCoefficients symbol_coefficients_serial(const Symbol& sym, int n_max,
                                                int quad_points);

} // namespace fhchain
