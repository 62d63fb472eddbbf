#include "fhchain/fourier.hpp"
#include "fhchain/errors.hpp"
#include "fhchain/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fhchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx cpow(cplx w, cplx p) { return std::exp(p * std::log(w)); }

// jump-like singular points: explicit jumps plus a = 0 FH singularities
struct JumpPoint {
    double angle;
    cplx lambda;
};

std::vector<JumpPoint> jump_points(const Symbol& sym) {
    std::vector<JumpPoint> pts;
    for (const auto& j : sym.jumps) pts.push_back({j.angle, j.lambda});
    for (const auto& s : sym.singularities) {
        if (std::abs(s.a) > 1e-14)
            throw Error("symbol_coefficients: FH singularity with a != 0 unsupported");
        pts.push_back({s.angle, cplx(0.0, -1.0) * s.b});
    }
    std::sort(pts.begin(), pts.end(),
              [](const JumpPoint& a, const JumpPoint& b) { return a.angle < b.angle; });
    return pts;
}

double factor_radius(const Symbol& sym) {
    double r = 0.0;
    for (const auto& f : sym.factors) r = std::max(r, std::abs(f.lambda));
    return r;
}

} // namespace

FourierData log_coefficients(const Symbol& f0, int K) {
    if (winding_number(f0) != 0)
        throw WindingNonzero("log_coefficients: nonzero winding");
    if (factor_radius(f0) > 1.0 - kCircleTol)
        throw AnnulusViolation("log_coefficients: factor with |lambda| >= 1");

    FourierData fd;
    fd.K = K;
    fd.l.assign(2 * K + 1, cplx{});
    std::vector<cplx> smooth(2 * K + 1, cplx{});

    smooth[K] += std::log(f0.constant);
    for (const auto& f : f0.factors) {
        cplx lm = f.lambda;
        for (int m = 1; m <= K; ++m) {
            cplx term = -f.exponent * lm / static_cast<double>(m);
            if (f.orient == Orientation::Z)
                smooth[K - m] += term;
            else
                smooth[K + m] += term;
            lm *= f.lambda;
        }
    }

    fd.l = smooth;
    for (const auto& j : jump_points(f0)) {
        for (int k = -K; k <= K; ++k) {
            if (k == 0) continue;
            fd.l[K + k] += cplx(0.0, 1.0) * j.lambda *
                           std::polar(1.0, k * j.angle) / static_cast<double>(k);
        }
    }

    cplx s{};
    for (int k = 1; k <= K; ++k)
        s += static_cast<double>(k) * smooth[K + k] * smooth[K - k];
    fd.szego_sum = s;

    double r = factor_radius(f0);
    fd.tail_estimate = (r > 0.0) ? std::pow(r, K + 1) : 0.0;
    if (!f0.jumps.empty() || !f0.singularities.empty())
        fd.tail_estimate += 1.0 / (K + 1.0);
    return fd;
}

cplx szego_sum_closed(const Symbol& f0) {
    cplx s{};
    for (const auto& fi : f0.factors) {
        if (fi.orient != Orientation::InvZ) continue;
        for (const auto& fj : f0.factors) {
            if (fj.orient != Orientation::Z) continue;
            s -= fi.exponent * fj.exponent * std::log(1.0 - fi.lambda * fj.lambda);
        }
    }
    return s;
}

std::pair<cplx, cplx> wiener_hopf_values(const Symbol& f0, double x_r) {
    cplx fp = 1.0, fm = 1.0;
    for (const auto& f : f0.factors) {
        if (f.orient == Orientation::Z)
            fp *= cpow(1.0 - f.lambda * std::polar(1.0, x_r), f.exponent);
        else
            fm *= cpow(1.0 - f.lambda * std::polar(1.0, -x_r), f.exponent);
    }
    return {fp, fm};
}

std::pair<cplx, cplx> wiener_hopf_series(const FourierData& fd, double x_r) {
    if (fd.tail_estimate > 1e-6)
        throw SeriesDiverged("wiener_hopf_series: coefficients not converged");
    cplx lp{}, lm{};
    for (int k = 1; k <= fd.K; ++k) {
        lp += fd.lk(-k) * std::polar(1.0, k * x_r);
        lm += fd.lk(k) * std::polar(1.0, -k * x_r);
    }
    return {std::exp(lp), std::exp(lm)};
}

namespace {

ToeplitzCoefficients coefficients_impl(const Symbol& sym, int n_max, int quad_points,
                                       bool parallel) {
    ToeplitzCoefficients tc;
    tc.n_max = n_max;
    tc.c.assign(2 * n_max + 1, cplx{});

    auto pts = jump_points(sym);

    if (pts.empty()) {
        // smooth symbol: uniform-grid DFT, spectrally accurate
        if (quad_points < 8 * std::max(n_max, 1))
            throw QuadratureUnderResolved("symbol_coefficients: quad_points < 8 n_max");
        const int Q = quad_points;
        std::vector<cplx> vals(Q);
#pragma omp parallel for schedule(static) if (parallel)
        for (int q = 0; q < Q; ++q)
            vals[q] = sym.eval(-kPi + kTwoPi * q / Q);
#pragma omp parallel for schedule(static) if (parallel)
        for (int k = -n_max; k <= n_max; ++k) {
            cplx s{};
            for (int q = 0; q < Q; ++q)
                s += vals[q] * std::polar(1.0, k * (-kPi + kTwoPi * q / Q));
            tc.c[k + n_max] = s / static_cast<double>(Q);
        }
        return tc;
    }

    // arc decomposition between consecutive singular angles
    struct Arc {
        double a, b;
    };
    std::vector<Arc> arcs;
    for (std::size_t r = 0; r + 1 < pts.size(); ++r)
        arcs.push_back({pts[r].angle, pts[r + 1].angle});
    arcs.push_back({pts.back().angle, pts.front().angle + kTwoPi});

    if (sym.factors.empty()) {
        // piecewise-exponential symbol: exact arc integrals.
        // On each arc ln f is linear: f = C e^{mu x},
        // mu = i power - sum_r lambda_r  (each sawtooth has slope -1).
        cplx mu = cplx(0.0, static_cast<double>(sym.power));
        for (const auto& p : pts) mu -= p.lambda;
#pragma omp parallel for schedule(static) if (parallel)
        for (int k = -n_max; k <= n_max; ++k) {
            cplx s{};
            for (const auto& arc : arcs) {
                double mid = 0.5 * (arc.a + arc.b);
                cplx C = sym.eval(mid) * std::exp(-mu * mid);
                cplx e = mu + cplx(0.0, static_cast<double>(k));
                if (std::abs(e) < 1e-12)
                    s += C * (arc.b - arc.a) / kTwoPi;
                else
                    s += C * (std::exp(e * arc.b) - std::exp(e * arc.a)) / (e * kTwoPi);
            }
            tc.c[k + n_max] = s;
        }
        return tc;
    }

    // mixed smooth * jump symbol: per-arc Gauss-Legendre panels
    static const GaussLegendre gl(12);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int k = -n_max; k <= n_max; ++k) {
        cplx s{};
        for (const auto& arc : arcs) {
            int panels = 8 + static_cast<int>(std::abs(k) * (arc.b - arc.a) / kPi) * 2;
            s += gl.integrate(
                [&](double x) { return sym.eval(x) * std::polar(1.0, k * x); },
                arc.a, arc.b, panels);
        }
        tc.c[k + n_max] = s / kTwoPi;
    }
    return tc;
}

} // namespace

ToeplitzCoefficients symbol_coefficients(const Symbol& sym, int n_max, int quad_points) {
    return coefficients_impl(sym, n_max, quad_points, true);
}

ToeplitzCoefficients symbol_coefficients_serial(const Symbol& sym, int n_max,
                                                int quad_points) {
    return coefficients_impl(sym, n_max, quad_points, false);
}

} // namespace fhchain
