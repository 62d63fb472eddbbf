#include "fhchain/specfun.hpp"
#include "fhchain/errors.hpp"
#include "fhchain/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace fhchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209;

// Hurwitz zeta(s, a) for integer s >= 2, real a >= 2, by Euler-Maclaurin.
double hurwitz_zeta(int s, double a) {
    // advance a few terms explicitly, then the asymptotic tail
    double sum = 0.0;
    int n_direct = 8;
    for (int j = 0; j < n_direct; ++j) sum += std::pow(a + j, -s);
    double A = a + n_direct;
    sum += std::pow(A, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(A, -s);
    // Bernoulli correction terms B2, B4, B6, B8
    static const double bern[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    double poch = s;           // (s)_{2i-1} built up incrementally
    double fact = 2.0;         // (2i)!
    double Apow = std::pow(A, -s - 1.0);
    for (int i = 0; i < 4; ++i) {
        sum += bern[i] / fact * poch * Apow;
        // update to the next correction order
        poch *= (s + 2.0 * i + 1.0) * (s + 2.0 * i + 2.0);
        fact *= (2.0 * i + 3.0) * (2.0 * i + 4.0);
        Apow /= A * A;
    }
    return sum;
}

} // namespace

cplx log_gamma(cplx z) {
    static const double lanczos[] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection; poles at nonpositive integers
        if (std::abs(z.imag()) < 1e-12 &&
            std::abs(z.real() - std::round(z.real())) < 1e-12)
            throw PoleArgument("log_gamma at nonpositive integer");
        return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    cplx zz = z - 1.0;
    cplx x = lanczos[0];
    for (int i = 1; i < 9; ++i) x += lanczos[i] / (zz + static_cast<double>(i));
    cplx t = zz + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (zz + 0.5) * std::log(t) - t + std::log(x);
}

namespace {

// log G(1+w) for Re w in [0,1): product formula plus zeta tail
cplx log_barnes_g_one_plus(cplx w) {
    const int K = 400;
    cplx sum = 0.0;
    for (int k = 1; k <= K; ++k) {
        double dk = k;
        sum += dk * std::log(1.0 + w / dk) - w + w * w / (2.0 * dk);
    }
    // tail: sum_{k>K} k log(1+w/k) - w + w^2/2k = sum_{m>=3} (-1)^{m+1} w^m/m zeta(m-1,K+1)
    cplx wp = w * w * w;
    for (int m = 3; m <= 60; ++m) {
        double zt = hurwitz_zeta(m - 1, K + 1.0);
        cplx term = ((m % 2 == 1) ? 1.0 : -1.0) * wp / static_cast<double>(m) * zt;
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
        wp *= w;
    }
    return 0.5 * w * std::log(2.0 * kPi) - 0.5 * w * (w + 1.0) -
           0.5 * kEulerGamma * w * w + sum;
}

} // namespace

BarnesGValue barnes_g(cplx z) {
    if (std::abs(z.imag()) < 1e-13 && z.real() <= 0.0 &&
        std::abs(z.real() - std::round(z.real())) < 1e-13)
        throw PoleArgument("barnes_g at nonpositive integer");

    // reduce into Re z in [1,2) with G(z+1) = Gamma(z) G(z)
    cplx acc = 0.0;
    cplx zz = z;
    while (zz.real() < 1.0) {
        acc -= log_gamma(zz);
        zz += 1.0;
    }
    while (zz.real() >= 2.0) {
        zz -= 1.0;
        acc += log_gamma(zz);
    }
    return {z, acc + log_barnes_g_one_plus(zz - 1.0)};
}

cplx g_tilde(cplx lambda) {
    const cplx l2 = lambda * lambda;
    const int K = std::max(400, static_cast<int>(4.0 * std::abs(lambda)) + 4);
    cplx sum = 0.0;
    for (int k = 1; k <= K; ++k) {
        double dk = k;
        sum += dk * std::log(1.0 - l2 / (dk * dk)) + l2 / dk;
    }
    // tail: -sum_{m>=2} lambda^{2m}/m zeta(2m-1, K+1)
    cplx lp = l2 * l2;
    for (int m = 2; m <= 40; ++m) {
        cplx term = -lp / static_cast<double>(m) * hurwitz_zeta(2 * m - 1, K + 1.0);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
        lp *= l2;
    }
    return std::exp(-(1.0 + kEulerGamma) * l2 + sum);
}

double ln_g_integral(double lambda) {
    const double l2 = lambda * lambda;
    if (l2 == 0.0) return 0.0;

    auto integrand = [&](double t) -> double {
        if (t < 1e-3) {
            // series around t = 0; the two pieces cancel to an integrable rest
            double c1 = (l2 - 1.0) / 12.0;
            double c3 = (l2 * l2 - 1.0) / 360.0 - (l2 - 1.0) / 144.0;
            return l2 * (std::expm1(-t) / t - c1 * t - c3 * t * t * t);
        }
        double sh = std::sinh(0.5 * lambda * t) / std::sinh(0.5 * t);
        return (l2 * std::exp(-t) - sh * sh) / t;
    };

    static const GaussLegendre gl(16);
    return gl.integrate(integrand, 0.0, 80.0, 200);
}

} // namespace fhchain
