#include "fhchain/fh_engine.hpp"
#include "fhchain/errors.hpp"
#include "fhchain/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace fhchain {

namespace {

cplx cpow(cplx w, cplx p) { return std::exp(p * std::log(w)); }

bool has_half_jump(const std::vector<FHSingularity>& sing) {
    for (const auto& s : sing)
        if (std::abs(s.a) < 1e-14 && std::abs(s.b) >= 0.5 - 1e-12) return true;
    return false;
}

} // namespace

cplx AsymptoticResult::evaluate(double n) const {
    cplx d{};
    for (const auto& t : terms)
        d += std::exp(t.l0 * n) * std::pow(n, t.power) * t.E;
    return d;
}

AsymptoticTerm szego_asymptotics(const Symbol& f0) {
    if (!f0.smooth())
        throw NotJumpForm("szego_asymptotics: symbol is not smooth");
    if (winding_number(f0) != 0)
        throw WindingNonzero("szego_asymptotics: nonzero winding");
    AsymptoticTerm t;
    t.l0 = std::log(f0.constant);
    t.power = 0.0;
    t.E = std::exp(szego_sum_closed(f0));
    t.representation = {f0, {}, 0.0, false};
    return t;
}

cplx fh_constant_E(const FHRepresentation& rep) {
    if (rep.excluded)
        throw ExcludedCase("fh_constant_E: a_r +- b_r is a negative integer");

    cplx e = std::exp(szego_sum_closed(rep.f0));

    for (const auto& s : rep.singularities) {
        auto [fp, fm] = wiener_hopf_values(rep.f0, s.angle);
        e *= cpow(fp, -s.a + s.b) * cpow(fm, -s.a - s.b);
    }

    const auto& sg = rep.singularities;
    for (std::size_t r = 0; r < sg.size(); ++r)
        for (std::size_t s = 0; s < sg.size(); ++s) {
            if (r == s) continue;
            cplx base = 1.0 - std::polar(1.0, sg[s].angle - sg[r].angle);
            e *= cpow(base, -(sg[r].a + sg[r].b) * (sg[s].a - sg[s].b));
        }

    for (const auto& s : sg) {
        e *= barnes_g(1.0 + s.a + s.b).value() * barnes_g(1.0 + s.a - s.b).value() /
             barnes_g(cplx(1.0 + 2.0 * s.a)).value();
    }
    return e;
}

AsymptoticResult fh_asymptotics(const Symbol& sym, int max_shift) {
    auto reps = enumerate_representations(sym, max_shift);
    std::erase_if(reps, [](const FHRepresentation& r) { return r.excluded; });
    if (reps.empty())
        throw NoAdmissibleRepresentation("fh_asymptotics: no admissible representation");

    const double top = reps.front().exponent;
    AsymptoticResult res;
    for (const auto& r : reps) {
        if (r.exponent < top - 1e-9) break;
        AsymptoticTerm t;
        t.l0 = std::log(r.f0.constant);
        t.power = r.exponent;
        t.E = fh_constant_E(r);
        t.representation = r;
        res.terms.push_back(std::move(t));
        if (has_half_jump(r.singularities)) res.conjectural = true;
    }
    return res;
}

AsymptoticResult basor_asymptotics(const Symbol& raw) {
    Symbol sym = canonicalize(raw);
    if (std::abs(sym.constant) < 1e-300)
        throw VanishingSymbol("basor_asymptotics: vanishing symbol");
    for (const auto& s : sym.singularities)
        if (std::abs(s.a) > 1e-12)
            throw NotJumpForm("basor_asymptotics: power-law singularity present");
    if (sym.power != 0)
        throw NotJumpForm("basor_asymptotics: argument not continuously defined");

    // jump strengths lambda_r = -i b_r
    struct JP {
        double x;
        cplx lam;
    };
    std::vector<JP> jumps;
    for (const auto& s : sym.singularities)
        jumps.push_back({s.angle, cplx(0.0, -1.0) * s.b});

    AsymptoticTerm t;
    t.l0 = std::log(sym.constant);
    cplx sum_l2{};
    for (const auto& j : jumps) sum_l2 += j.lam * j.lam;
    t.power = sum_l2.real();

    cplx s = szego_sum_closed(sym);
    // jump-jump part of sum_k [k l_k l_{-k} - (1/k) sum_r lambda_r^2]
    for (const auto& jr : jumps)
        for (const auto& js : jumps) {
            if (&jr == &js) continue;
            s -= jr.lam * js.lam * std::log(1.0 - std::polar(1.0, jr.x - js.x));
        }
    // cross terms with the smooth factors: i lambda_r (ln f_+ - ln f_-)(x_r)
    for (const auto& j : jumps) {
        auto [fp, fm] = wiener_hopf_values(sym, j.x);
        s += cplx(0.0, 1.0) * j.lam * (std::log(fp) - std::log(fm));
    }

    cplx e = std::exp(s);
    for (const auto& j : jumps) e *= g_tilde(cplx(0.0, -1.0) * j.lam);
    t.E = e;

    FHRepresentation rep;
    rep.f0.constant = sym.constant;
    rep.f0.factors = sym.factors;
    rep.singularities = sym.singularities;
    rep.exponent = t.power;
    t.representation = std::move(rep);

    AsymptoticResult res;
    res.conjectural = has_half_jump(sym.singularities);
    res.terms.push_back(std::move(t));
    return res;
}

bool check_excluded(const FHRepresentation& rep) {
    return detail::fh_excluded(rep.singularities);
}

} // namespace fhchain
