#include "fhchain/xy_chain.hpp"
#include "fhchain/errors.hpp"
#include "fhchain/quadrature.hpp"
#include "fhchain/specfun.hpp"

#include <cmath>
#include <numbers>

namespace fhchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRegimeTol = 1e-12;

double g_half_sq() {
    // g(1/2)^2 = pi G(1/2)^4, with g(1/2) = sqrt(pi) G(1/2)^2
    static const double v = [] {
        double g12 = barnes_g(cplx(0.5)).value().real();
        double g = std::sqrt(kPi) * g12 * g12;
        return g * g;
    }();
    return v;
}

double reduce_alpha(double alpha) {
    double a = std::remainder(alpha, kTwoPi);   // (-pi, pi] up to the edge
    if (a <= -kPi + 1e-15) a = kPi;
    return a;
}

cplx sign_gamma(const Dispersion& d, double x) {
    cplx num(d.eps(x), d.delta(x));
    return num / std::abs(num);
}

} // namespace

XYParams make_params(double gamma, double h) {
    if (gamma <= 0.0 || gamma > 1.0)
        throw OutOfDomain("make_params: gamma must be in (0, 1]");
    h = std::abs(h);   // h < 0 mapped by symmetry

    XYParams p;
    p.gamma = gamma;
    p.h = h;
    p.a = (1.0 - gamma) / (1.0 + gamma);

    double disc = h * h + gamma * gamma - 1.0;
    cplx s = (disc >= 0.0) ? cplx(std::sqrt(disc), 0.0) : cplx(0.0, std::sqrt(-disc));
    p.lambda1 = (h - s) / (1.0 + gamma);
    p.lambda2 = (h + s) / (1.0 + gamma);

    if (std::abs(h - 1.0) < kRegimeTol)
        p.regime = Regime::R3_line;
    else if (std::abs(disc) <= kRegimeTol)
        p.regime = (p.a < kRegimeTol) ? Regime::R1_disk : Regime::B_circle;
    else if (disc < 0.0)
        p.regime = Regime::R1_disk;
    else if (h < 1.0)
        p.regime = Regime::R2_band;
    else
        p.regime = Regime::R4_high;

    if (p.regime == Regime::R1_disk)
        p.phi = (std::abs(p.lambda2) > kRegimeTol) ? std::arg(p.lambda2) : kPi / 2.0;
    return p;
}

std::pair<Symbol, Symbol> correlator_symbols(const XYParams& p) {
    Symbol f1;
    for (cplx lam : {p.lambda1, p.lambda2}) {
        double r = std::abs(lam);
        if (r > 1.0 + kCircleTol) {
            // ((1-lam/z)/(1-lam z))^{1/2} = -z^{-1} (1-mu z)^{1/2} (1-mu/z)^{-1/2}
            cplx mu = 1.0 / lam;
            f1.factors.push_back({mu, Orientation::Z, 0.5});
            f1.factors.push_back({mu, Orientation::InvZ, -0.5});
            f1.power -= 1;
            f1.constant = -f1.constant;
        } else {
            f1.factors.push_back({lam, Orientation::InvZ, 0.5});
            f1.factors.push_back({lam, Orientation::Z, -0.5});
        }
    }
    f1 = canonicalize(f1);

    // pin the residual branch constant against e^{-ix} sign_gamma(x)
    Dispersion d{p.gamma, p.h};
    double x0 = 2.0;
    cplx target = std::polar(1.0, -x0) * sign_gamma(d, x0);
    cplx ratio = target / f1.eval(x0);
    if (std::abs(std::abs(ratio) - 1.0) > 1e-8)
        throw Error("correlator_symbols: factor form does not match sign_gamma");
    f1.constant *= ratio;

    Symbol f2 = f1;
    f2.power += 2;
    return {f1, f2};
}

Symbol prepare_contour(const Symbol& sym, const XYParams& p, int which) {
    if (p.regime == Regime::B_circle)
        throw BoundaryRegime("prepare_contour: h^2 + gamma^2 = 1 double root");

    double rho = 1.0;
    double l2 = p.lambda2.real();
    switch (p.regime) {
        case Regime::R1_disk:
            rho = (which == 2) ? std::sqrt(p.a) : 1.0;
            break;
        case Regime::R2_band:
            rho = (which == 2) ? l2 : 1.0;
            break;
        case Regime::R3_line:
            rho = 1.0;   // no deformation on the critical line
            break;
        case Regime::R4_high:
            rho = (which == 2) ? 1.0 / l2 : l2;
            break;
        default:
            break;
    }
    if (rho == 1.0) return canonicalize(sym);
    return canonicalize(contour_rescale(sym, rho));
}

CorrelatorValue closed_form_gxx(const XYParams& p, double x) {
    double v = 0.0;
    switch (p.regime) {
        case Regime::R1_disk:
        case Regime::R2_band:
            v = 0.25 * std::sqrt(1.0 - p.a * p.a) *
                std::pow(1.0 - p.h * p.h, 0.25);
            break;
        case Regime::R3_line: {
            double g12 = barnes_g(cplx(0.5)).value().real();
            v = std::pow(x, -0.25) * std::pow(p.gamma, 0.75) /
                (2.0 * (1.0 + p.gamma)) * std::sqrt(kPi) * g12 * g12;
            break;
        }
        case Regime::R4_high: {
            double l1 = p.lambda1.real(), l2 = p.lambda2.real();
            v = std::pow(x, -0.5) * std::pow(l2, -x) / (4.0 * std::sqrt(kPi)) *
                std::pow(1.0 - l1 * l1, 0.25) *
                std::pow(1.0 - 1.0 / (l2 * l2), -0.25) *
                std::sqrt(1.0 - l1 * l2);
            break;
        }
        case Regime::B_circle:
            throw BoundaryRegime("closed_form_gxx: boundary circle");
    }
    return {Kind::Gxx, x, cplx(v), Method::closed_form};
}

CorrelatorValue closed_form_gyy(const XYParams& p, double x) {
    double v = 0.0;
    switch (p.regime) {
        case Regime::R1_disk: {
            double a = p.a, phi = p.phi;
            v = std::pow(a, x) / x * (1.0 / kTwoPi) * std::sin(phi) *
                std::pow(1.0 - a, -0.5) *
                std::pow(1.0 + a * a - 2.0 * a * std::cos(2.0 * phi), -0.25);
            break;
        }
        case Regime::R2_band: {
            double l1 = p.lambda1.real(), l2 = p.lambda2.real();
            v = -std::pow(x, -3.0) * std::pow(l2 * l2, x) / (8.0 * kPi) *
                std::pow(1.0 - l1 * l1, 0.25) * std::pow(1.0 - l2 * l2, -0.75) *
                std::pow(1.0 - l1 * l2, -0.5) / (1.0 - l1 / l2);
            break;
        }
        case Regime::R3_line: {
            double g12 = barnes_g(cplx(0.5)).value().real();
            v = -std::pow(x, -2.25) * std::sqrt(kPi) / 32.0 *
                std::pow(p.gamma, -1.25) * (1.0 + p.gamma) * g12 * g12;
            break;
        }
        case Regime::R4_high: {
            double l1 = p.lambda1.real(), l2 = p.lambda2.real();
            v = -std::pow(x, -1.5) * std::pow(l2, -x) / (8.0 * std::sqrt(kPi)) *
                std::pow(1.0 - l1 * l1, 0.25) *
                std::pow(1.0 - 1.0 / (l2 * l2), 0.75) /
                (1.0 - l1 / l2) * std::pow(1.0 - l1 * l2, -0.5);
            break;
        }
        case Regime::B_circle:
            throw BoundaryRegime("closed_form_gyy: boundary circle");
    }
    return {Kind::Gyy, x, cplx(v), Method::closed_form};
}

Symbol xx_alpha_symbol(double alpha, double p_f) {
    if (p_f <= 0.0 || p_f >= kPi)
        throw OutOfDomain("xx_alpha_symbol: p_F must be in (0, pi)");
    return Symbol::piecewise_phases(p_f, 0.0, reduce_alpha(alpha), 0.0);
}

std::pair<Symbol, Symbol> xx_spin_symbols(double p_f) {
    if (p_f <= 0.0 || p_f >= kPi)
        throw OutOfDomain("xx_spin_symbols: p_F must be in (0, pi)");
    Symbol f1 = Symbol::piecewise_phases(p_f, -kPi, 0.0, kPi, -1);
    Symbol f2 = Symbol::piecewise_phases(p_f, kPi, 0.0, -kPi, +1);
    return {f1, f2};
}

CorrelatorValue xx_exponential_correlator(const XXParams& xp, double x) {
    double a = reduce_alpha(xp.alpha);
    if (std::abs(a) < 1e-12)
        return {Kind::G_alpha, x, cplx(1.0), Method::fh_asymptotic};
    if (std::abs(std::abs(a) - kPi) < 1e-12) {
        // two degenerate representations interfere (zeros at odd x)
        auto res = fh_asymptotics(xx_alpha_symbol(kPi, xp.p_f));
        return {Kind::G_pi, x, res.evaluate(x), Method::fh_asymptotic};
    }
    auto res = basor_asymptotics(xx_alpha_symbol(a, xp.p_f));
    return {Kind::G_alpha, x, res.evaluate(x), Method::fh_asymptotic};
}

CorrelatorValue xx_spin_correlator(const XXParams& xp, double x) {
    double v = std::pow(x, -0.5) * std::sqrt(std::sin(xp.p_f)) / std::sqrt(2.0) *
               g_half_sq();
    return {Kind::G_pm, x, cplx(v), Method::closed_form};
}

FermionAverages fermion_averages(const Dispersion& d, int x) {
    static const GaussLegendre gl(12);
    const int panels = 512;

    auto occ = [&](double k) {
        double e = d.energy(k);
        if (e < 1e-300) return 0.5;
        return 0.5 + 0.5 * d.eps(k) / e;
    };
    double aa = gl.integrate(
        [&](double k) { return std::cos(k * x) * occ(k) / kPi; }, 0.0, kPi, panels);

    double pp = gl.integrate(
        [&](double k) {
            double e = d.energy(k);
            if (e < 1e-300) return 0.0;
            return -std::sin(k * x) * d.delta(k) / e / kTwoPi;
        },
        0.0, kPi, panels);

    cplx ba = gl.integrate(
        [&](double k) -> cplx {
            return std::polar(1.0, k * x) * sign_gamma(d, k) / kTwoPi;
        },
        -kPi, kPi, panels);

    return {aa, cplx(pp), ba};
}

namespace {

LogDet determinant_for(const Symbol& sym, int x, Precision prec, double predicted,
                       int quad_points) {
    auto tc = symbol_coefficients(sym, x, std::max(quad_points, 8 * (x + 1)));
    ToeplitzInstance inst{tc, x, 0};
    bool extended = (prec == Precision::extended) ||
                    (prec == Precision::automatic && std::abs(predicted) < 1e-8);
    return extended ? high_precision_log_det(inst) : log_det(inst);
}

} // namespace

CorrelatorValue exact_correlator(Kind kind, const XYParams& p, int x, Precision prec,
                                 int quad_points) {
    if (x < 1) throw OutOfDomain("exact_correlator: x >= 1 required");
    auto symbols = correlator_symbols(p);

    auto predict = [&](Kind k) -> double {
        if (p.regime == Regime::B_circle) return 1.0;
        try {
            auto cf = (k == Kind::Gxx) ? closed_form_gxx(p, x) : closed_form_gyy(p, x);
            return 4.0 * std::abs(cf.value);
        } catch (const Error&) {
            return 1.0;
        }
    };

    switch (kind) {
        case Kind::Gxx: {
            auto d = determinant_for(symbols.first, x, prec, predict(Kind::Gxx),
                                     quad_points);
            return {Kind::Gxx, static_cast<double>(x), 0.25 * d.value(),
                    Method::exact_oracle};
        }
        case Kind::Gyy: {
            auto d = determinant_for(symbols.second, x, prec, predict(Kind::Gyy),
                                     quad_points);
            return {Kind::Gyy, static_cast<double>(x), 0.25 * d.value(),
                    Method::exact_oracle};
        }
        case Kind::G_pm: {
            auto gx = exact_correlator(Kind::Gxx, p, x, prec, quad_points);
            auto gy = exact_correlator(Kind::Gyy, p, x, prec, quad_points);
            return {Kind::G_pm, static_cast<double>(x), gx.value + gy.value,
                    Method::exact_oracle};
        }
        default:
            throw OutOfDomain("exact_correlator: kind requires XX parameters");
    }
}

CorrelatorValue exact_correlator(Kind kind, const XXParams& xp, int x, Precision prec) {
    if (x < 1) throw OutOfDomain("exact_correlator: x >= 1 required");
    switch (kind) {
        case Kind::G_alpha:
        case Kind::G_pi: {
            double a = (kind == Kind::G_pi) ? kPi : xp.alpha;
            auto d = determinant_for(xx_alpha_symbol(a, xp.p_f), x, prec, 1.0, 0);
            return {kind, static_cast<double>(x), d.value(), Method::exact_oracle};
        }
        case Kind::G_pm: {
            auto [f1, f2] = xx_spin_symbols(xp.p_f);
            auto d1 = determinant_for(f1, x, prec, 1.0, 0);
            auto d2 = determinant_for(f2, x, prec, 1.0, 0);
            return {Kind::G_pm, static_cast<double>(x),
                    0.25 * (d1.value() + d2.value()), Method::exact_oracle};
        }
        default:
            throw OutOfDomain("exact_correlator: kind requires XY parameters");
    }
}

} // namespace fhchain
