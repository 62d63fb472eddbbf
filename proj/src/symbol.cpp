#include "fhchain/symbol.hpp"
#include "fhchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fhchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod_two_pi(double u) {
    double m = u - kTwoPi * std::floor(u / kTwoPi);
    if (m <= 0.0) m += kTwoPi;
    if (m > kTwoPi) m -= kTwoPi;
    return m;
}

double circle_distance(double x, double y) {
    double d = std::abs(mod_two_pi(x - y));
    return std::min(d, kTwoPi - d);
}

cplx cpow(cplx w, cplx p) { return std::exp(p * std::log(w)); }

bool near_angle(double x, double y) { return circle_distance(x, y) < kAngleTol; }

} // namespace

double sawtooth(double x, double x_r) { return kPi - mod_two_pi(x - x_r); }

cplx Symbol::eval(double x) const {
    for (const auto& j : jumps)
        if (near_angle(x, j.angle))
            throw EvaluationAtSingularity("eval at jump angle");
    for (const auto& s : singularities)
        if (near_angle(x, s.angle))
            throw EvaluationAtSingularity("eval at FH singularity");

    const cplx z = std::polar(1.0, x);
    cplx f = constant * std::polar(1.0, power * x);
    for (const auto& fc : factors) {
        cplx arg = (fc.orient == Orientation::Z) ? 1.0 - fc.lambda * z
                                                 : 1.0 - fc.lambda / z;
        f *= cpow(arg, fc.exponent);
    }
    for (const auto& j : jumps)
        f *= std::exp(j.lambda * sawtooth(x, j.angle));
    for (const auto& s : singularities) {
        double w = sawtooth(x, s.angle);
        f *= std::pow(2.0 - 2.0 * std::cos(x - s.angle), s.a) *
             std::exp(cplx(0.0, -1.0) * s.b * w);
    }
    return f;
}

Symbol Symbol::identity() { return Symbol{}; }

Symbol Symbol::constant_symbol(cplx c) {
    Symbol s;
    s.constant = c;
    return s;
}

Symbol Symbol::piecewise_phases(double p_f, double phi_minus, double phi_mid,
                                double phi_plus, int extra_power) {
    Symbol s;
    const cplx i1(0.0, 1.0);
    cplx l1 = i1 * (phi_mid - phi_minus) / kTwoPi;
    cplx l2 = i1 * (phi_plus - phi_mid) / kTwoPi;
    s.jumps.push_back({-p_f, l1});
    s.jumps.push_back({+p_f, l2});

    // residual winding after the sawtooth drift of the jump factors
    double m = extra_power + (phi_plus - phi_minus) / kTwoPi;
    double m_round = std::round(m);
    if (std::abs(m - m_round) > 1e-9)
        throw NotJumpForm("piecewise phases do not close to integer winding");
    s.power = static_cast<int>(m_round);

    // fix the constant by matching the value at x = 0 (mid arc)
    cplx jump_at_zero = std::exp(l1 * (kPi - p_f) + l2 * (p_f - kPi));
    s.constant = std::polar(1.0, phi_mid) / jump_at_zero;
    return s;
}

Symbol multiply(const Symbol& s1, const Symbol& s2) {
    Symbol r = s1;
    r.constant *= s2.constant;
    r.power += s2.power;

    for (const auto& f : s2.factors) {
        auto it = std::find_if(r.factors.begin(), r.factors.end(), [&](const Factor& g) {
            return g.orient == f.orient && std::abs(g.lambda - f.lambda) < 1e-14;
        });
        if (it != r.factors.end())
            it->exponent += f.exponent;
        else
            r.factors.push_back(f);
    }
    std::erase_if(r.factors, [](const Factor& f) { return std::abs(f.exponent) < 1e-15; });

    for (const auto& j : s2.jumps) {
        auto it = std::find_if(r.jumps.begin(), r.jumps.end(),
                               [&](const Jump& k) { return near_angle(k.angle, j.angle); });
        if (it != r.jumps.end())
            it->lambda += j.lambda;
        else
            r.jumps.push_back(j);
    }
    std::erase_if(r.jumps, [](const Jump& j) { return std::abs(j.lambda) < 1e-15; });

    for (const auto& s : s2.singularities) {
        auto it = std::find_if(r.singularities.begin(), r.singularities.end(),
                               [&](const FHSingularity& t) { return near_angle(t.angle, s.angle); });
        if (it != r.singularities.end()) {
            it->a += s.a;
            it->b += s.b;
        } else {
            r.singularities.push_back(s);
        }
    }
    std::erase_if(r.singularities, [](const FHSingularity& s) {
        return std::abs(s.a) < 1e-15 && std::abs(s.b) < 1e-15;
    });
    return r;
}

Symbol contour_rescale(const Symbol& sym, double rho) {
    if (rho <= 0.0)
        throw OutOfDomain("contour_rescale: rho must be positive");
    if (rho == 1.0) return sym;
    if (!sym.jumps.empty() || !sym.singularities.empty())
        throw AnnulusViolation("contour_rescale: symbol is singular on the unit circle");

    const double lo = std::min(rho, 1.0), hi = std::max(rho, 1.0);
    for (const auto& f : sym.factors) {
        // zero/pole of the factor sits at |z| = 1/|lambda| (Z) or |lambda| (1/z)
        double r = (f.orient == Orientation::Z) ? 1.0 / std::abs(f.lambda)
                                                : std::abs(f.lambda);
        if (r > lo + kCircleTol && r < hi - kCircleTol)
            throw AnnulusViolation("contour_rescale: zero or pole inside the annulus");
    }

    Symbol out = sym;
    for (auto& f : out.factors) {
        if (f.orient == Orientation::Z)
            f.lambda *= rho;
        else
            f.lambda /= rho;
    }
    out.constant *= std::pow(rho, sym.power);
    return out;
}

int winding_number(const Symbol& sym) {
    double w = sym.power;
    for (const auto& f : sym.factors) {
        if (std::abs(f.lambda) > 1.0 + kCircleTol)
            w += (f.orient == Orientation::Z) ? f.exponent : -f.exponent;
    }
    double wr = std::round(w);
    if (std::abs(w - wr) > 1e-9)
        throw NotJumpForm("winding number is not an integer");
    return static_cast<int>(wr);
}

Symbol canonicalize(const Symbol& sym) {
    Symbol out;
    out.constant = sym.constant;
    out.power = sym.power;
    out.jumps = {};

    auto add_sing = [&](double angle, double a, cplx b) {
        for (auto& s : out.singularities) {
            if (near_angle(s.angle, angle)) {
                s.a += a;
                s.b += b;
                return;
            }
        }
        out.singularities.push_back({angle, a, b});
    };

    for (const auto& s : sym.singularities) add_sing(s.angle, s.a, s.b);
    for (const auto& j : sym.jumps) add_sing(j.angle, 0.0, cplx(0.0, 1.0) * j.lambda);

    for (const auto& f : sym.factors) {
        double r = std::abs(f.lambda);
        if (std::abs(r - 1.0) < kCircleTol) {
            // (1 - e^{i x_r}/z)^p  ->  (a,b) += (p/2, -p/2) at x_r
            // (1 - e^{-i x_r} z)^p ->  (a,b) += (p/2, +p/2) at x_r
            double xr = (f.orient == Orientation::InvZ) ? std::arg(f.lambda)
                                                        : -std::arg(f.lambda);
            double sgn = (f.orient == Orientation::InvZ) ? -1.0 : 1.0;
            add_sing(xr, f.exponent / 2.0, cplx(sgn * f.exponent / 2.0, 0.0));
        } else if (r > 1.0) {
            throw AnnulusViolation("canonicalize: factor with |lambda| > 1; rescale first");
        } else {
            out.factors.push_back(f);
        }
    }
    std::erase_if(out.singularities, [](const FHSingularity& s) {
        return std::abs(s.a) < 1e-15 && std::abs(s.b) < 1e-15;
    });
    return out;
}

cplx FHRepresentation::eval(double x) const {
    cplx f = f0.eval(x);
    for (const auto& s : singularities) {
        if (near_angle(x, s.angle))
            throw EvaluationAtSingularity("representation eval at singular angle");
        double w = sawtooth(x, s.angle);
        f *= std::pow(2.0 - 2.0 * std::cos(x - s.angle), s.a) *
             std::exp(cplx(0.0, -1.0) * s.b * w);
    }
    return f;
}

namespace detail {

bool fh_excluded(const std::vector<FHSingularity>& sing) {
    auto neg_int = [](cplx v) {
        if (std::abs(v.imag()) > 1e-9) return false;
        double r = std::round(v.real());
        return r <= -1.0 + 1e-9 && std::abs(v.real() - r) < 1e-9;
    };
    for (const auto& s : sing)
        if (neg_int(s.a + s.b) || neg_int(s.a - s.b)) return true;
    return false;
}

} // namespace detail

std::vector<FHRepresentation> enumerate_representations(const Symbol& raw, int max_shift) {
    Symbol sym = canonicalize(raw);
    const int n_sing = static_cast<int>(sym.singularities.size());
    const int m = winding_number(sym);

    if (n_sing == 0) {
        if (m != 0)
            throw NotJumpForm("smooth symbol with nonzero winding");
        return {FHRepresentation{sym, {}, 0.0, false}};
    }

    std::vector<FHRepresentation> reps;
    std::vector<int> shift(n_sing, -max_shift);
    while (true) {
        int total = 0;
        for (int s : shift) total += s;
        if (total == m) {
            FHRepresentation rep;
            rep.f0.constant = sym.constant;
            rep.f0.factors = sym.factors;
            rep.f0.power = 0;
            double expo = 0.0;
            for (int r = 0; r < n_sing; ++r) {
                FHSingularity s = sym.singularities[r];
                s.b += static_cast<double>(shift[r]);
                rep.singularities.push_back(s);
                // absorbing exp(i n w_r) into f0 contributes (-1)^n e^{i n x_r} z^{-n}
                int n = shift[r];
                if (n % 2 != 0) rep.f0.constant = -rep.f0.constant;
                rep.f0.constant *= std::polar(1.0, n * s.angle);
                expo += s.a * s.a - (s.b * s.b).real();
            }
            rep.exponent = expo;
            rep.excluded = detail::fh_excluded(rep.singularities);
            reps.push_back(std::move(rep));
        }
        // odometer
        int i = 0;
        for (; i < n_sing; ++i) {
            if (shift[i] < max_shift) {
                ++shift[i];
                break;
            }
            shift[i] = -max_shift;
        }
        if (i == n_sing) break;
    }

    std::sort(reps.begin(), reps.end(),
              [](const FHRepresentation& a, const FHRepresentation& b) {
                  return a.exponent > b.exponent;
              });
    return reps;
}

} // namespace fhchain
