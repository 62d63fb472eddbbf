#include "fhchain/toeplitz.hpp"
#include "fhchain/dd.hpp"
#include "fhchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fhchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPivotFloor = 1e-300;

double wrap_phase(double p) {
    p = std::fmod(p, 2.0 * kPi);
    if (p > kPi) p -= 2.0 * kPi;
    if (p <= -kPi) p += 2.0 * kPi;
    return p;
}

void fill_matrix(const ToeplitzInstance& inst, std::vector<cplx>& m) {
    const int n = inst.n;
    const auto& tc = inst.coefficients;
    m.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = i - j + inst.offset;
            if (std::abs(k) > tc.n_max)
                throw OutOfDomain("log_det: coefficient index out of range");
            m[static_cast<std::size_t>(i) * n + j] = tc.at(k);
        }
}

LogDet lu_log_det(std::vector<cplx>& m, int n, bool parallel) {
    double logmod = 0.0, phase = 0.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(m[static_cast<std::size_t>(col) * n + col]);
        for (int i = col + 1; i < n; ++i) {
            double v = std::abs(m[static_cast<std::size_t>(i) * n + col]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < kPivotFloor)
            return {-std::numeric_limits<double>::infinity(), 0.0, true};
        if (piv != col) {
            for (int j = col; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(piv) * n + j],
                          m[static_cast<std::size_t>(col) * n + j]);
            phase += kPi;  // row swap flips the sign
        }
        cplx p = m[static_cast<std::size_t>(col) * n + col];
        logmod += std::log(std::abs(p));
        phase += std::arg(p);
#pragma omp parallel for schedule(static) if (parallel && n - col > 64)
        for (int i = col + 1; i < n; ++i) {
            cplx f = m[static_cast<std::size_t>(i) * n + col] / p;
            for (int j = col + 1; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] -=
                    f * m[static_cast<std::size_t>(col) * n + j];
        }
    }
    return {logmod, wrap_phase(phase), false};
}

LogDet lu_log_det_dd(std::vector<ddcomplex>& m, int n) {
    double logmod = 0.0, phase = 0.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        dd best = abs2(m[static_cast<std::size_t>(col) * n + col]);
        for (int i = col + 1; i < n; ++i) {
            dd v = abs2(m[static_cast<std::size_t>(i) * n + col]);
            if (best < v) {
                best = v;
                piv = i;
            }
        }
        if (best.hi < kPivotFloor * kPivotFloor)
            return {-std::numeric_limits<double>::infinity(), 0.0, true};
        if (piv != col) {
            for (int j = col; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(piv) * n + j],
                          m[static_cast<std::size_t>(col) * n + j]);
            phase += kPi;
        }
        ddcomplex p = m[static_cast<std::size_t>(col) * n + col];
        logmod += 0.5 * log_pos(abs2(p));
        phase += std::atan2(to_double(p.im), to_double(p.re));
        for (int i = col + 1; i < n; ++i) {
            ddcomplex f = m[static_cast<std::size_t>(i) * n + col] / p;
            for (int j = col + 1; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] =
                    m[static_cast<std::size_t>(i) * n + j] -
                    f * m[static_cast<std::size_t>(col) * n + j];
        }
    }
    return {logmod, wrap_phase(phase), false};
}

} // namespace

cplx LogDet::value() const {
    if (sign_exact_zero) return {0.0, 0.0};
    return std::exp(log_modulus) * std::polar(1.0, phase);
}

LogDet log_det(const ToeplitzInstance& inst) {
    if (inst.n < 1) throw OutOfDomain("log_det: N >= 1 required");
    std::vector<cplx> m;
    fill_matrix(inst, m);
    return lu_log_det(m, inst.n, true);
}

LogDet log_det_serial(const ToeplitzInstance& inst) {
    if (inst.n < 1) throw OutOfDomain("log_det: N >= 1 required");
    std::vector<cplx> m;
    fill_matrix(inst, m);
    return lu_log_det(m, inst.n, false);
}

LogDet high_precision_log_det(const ToeplitzInstance& inst) {
    if (inst.n < 1) throw OutOfDomain("log_det: N >= 1 required");
    std::vector<cplx> md;
    fill_matrix(inst, md);
    std::vector<ddcomplex> m(md.size());
    for (std::size_t i = 0; i < md.size(); ++i)
        m[i] = ddcomplex(md[i].real(), md[i].imag());
    return lu_log_det_dd(m, inst.n);
}

std::vector<std::pair<int, LogDet>> det_sweep(const Symbol& sym,
                                              const std::vector<int>& n_list,
                                              const SweepOptions& opt) {
    int n_max = 0;
    for (int n : n_list) n_max = std::max(n_max, n);
    auto tc = symbol_coefficients(sym, n_max - 1 + std::abs(opt.offset) + 1,
                                  std::max(opt.quad_points, 8 * (n_max + 2)));
    std::vector<std::pair<int, LogDet>> out(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        ToeplitzInstance inst{tc, n_list[i], opt.offset};
        out[i] = {n_list[i], opt.high_precision ? high_precision_log_det(inst)
                                                : log_det(inst)};
    }
    return out;
}

} // namespace fhchain
