// fhchain: determinant sweeps, asymptotic evaluation, correlator comparison
// tables, and special-function values, as CSV or JSON.

#include <CLI11.hpp>

#include "fhchain/errors.hpp"
#include "fhchain/fh_engine.hpp"
#include "fhchain/specfun.hpp"
#include "fhchain/toeplitz.hpp"
#include "fhchain/xy_chain.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fhchain;

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- output

struct Table {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes;
};

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

void check_finite(const Table& t) {
    for (const auto& row : t.rows)
        for (double v : row)
            if (!std::isfinite(v))
                throw Error("non-finite value in output");
}

void emit_csv(const Table& t, std::ostream& os, int digits) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << fmt(row[i], digits);
        os << "\n";
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void emit_json(const Table& t, std::ostream& os) {
    os << "{\n  \"command\": \"" << json_escape(t.command) << "\",\n";
    os << "  \"parameters\": {";
    bool first = true;
    for (const auto& [k, v] : t.parameters) {
        os << (first ? "" : ", ") << "\"" << json_escape(k) << "\": \""
           << json_escape(v) << "\"";
        first = false;
    }
    os << "},\n  \"columns\": [";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? ", " : "") << "\"" << json_escape(t.columns[i]) << "\"";
    os << "],\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "    [";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i)
            os << (i ? ", " : "") << fmt(t.rows[r][i], 17);
        os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"notes\": [";
    for (std::size_t i = 0; i < t.notes.size(); ++i)
        os << (i ? ", " : "") << "\"" << json_escape(t.notes[i]) << "\"";
    os << "]\n}\n";
}

// ---------------------------------------------------------------- parsing

// "0.5pi", "pi", "-pi", plain numbers
double parse_angle(const std::string& s) {
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        std::string head = s.substr(0, s.size() - 2);
        if (head.empty() || head == "+") return kPi;
        if (head == "-") return -kPi;
        return std::stod(head) * kPi;
    }
    return std::stod(s);
}

// "1.5", "-2e-3", "1+0.5i", "-i"
cplx parse_complex(std::string s) {
    if (s.empty()) throw CLI::ValidationError("empty number");
    if (s.back() == 'i' || s.back() == 'j') {
        s.pop_back();
        std::size_t split = s.size();
        for (std::size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        std::string re = (split == s.size()) ? "0" : s.substr(0, split);
        std::string im = s.substr(split == s.size() ? 0 : split);
        if (im.empty() || im == "+") im = "1";
        if (im == "-") im = "-1";
        return {std::stod(re.empty() ? "0" : re), std::stod(im)};
    }
    return {std::stod(s), 0.0};
}

// "1..16" or "8" or "4,8,16"
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

struct SymbolArgs {
    std::string name = "identity";
    std::string alpha = "0", pf = "0.5pi";
    double gamma = 0.5, h = 0.5;
    int which = 1;       // xy-f1 vs xy-f2 / xx-spin pair member
    std::string generic; // factors=(..);jumps=(..);power=..;const=..
};

Symbol parse_generic(const std::string& spec) {
    Symbol sym;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("symbol spec: expected key=value in '" + part + "'");
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "power") {
            sym.power = std::stoi(val);
        } else if (key == "const") {
            sym.constant = parse_complex(val);
        } else if (key == "factors" || key == "jumps") {
            std::size_t pos = 0;
            while ((pos = val.find('(', pos)) != std::string::npos) {
                auto end = val.find(')', pos);
                if (end == std::string::npos)
                    throw CLI::ValidationError("symbol spec: unclosed '(' at position " +
                                               std::to_string(pos));
                std::stringstream gs(val.substr(pos + 1, end - pos - 1));
                std::vector<std::string> fields;
                std::string f;
                while (std::getline(gs, f, ',')) fields.push_back(f);
                if (key == "factors") {
                    if (fields.size() != 3)
                        throw CLI::ValidationError("factor group needs (lambda,orient,p)");
                    Orientation o = (fields[1] == "z") ? Orientation::Z
                                  : (fields[1] == "invz") ? Orientation::InvZ
                                  : throw CLI::ValidationError("orient must be z|invz");
                    sym.factors.push_back({parse_complex(fields[0]), o,
                                           std::stod(fields[2])});
                } else {
                    if (fields.size() != 2)
                        throw CLI::ValidationError("jump group needs (x_r,lambda_r)");
                    sym.jumps.push_back({parse_angle(fields[0]),
                                         parse_complex(fields[1])});
                }
                pos = end + 1;
            }
        } else {
            throw CLI::ValidationError("symbol spec: unknown key '" + key + "'");
        }
    }
    return sym;
}

// Resolve a preset (or generic spec) to a concrete symbol.  For the xy
// presets `prepared` additionally applies the regime contour deformation,
// which the asymptotic engines need but the determinant oracle does not.
Symbol resolve_symbol(const SymbolArgs& a, bool prepared) {
    if (!a.generic.empty()) return parse_generic(a.generic);
    if (a.name == "identity") return Symbol::identity();
    if (a.name == "xx-jump")
        return xx_alpha_symbol(parse_angle(a.alpha), parse_angle(a.pf));
    if (a.name == "xx-spin") {
        auto [f1, f2] = xx_spin_symbols(parse_angle(a.pf));
        return a.which == 2 ? f2 : f1;
    }
    if (a.name == "xy-f1" || a.name == "xy-f2") {
        auto p = make_params(a.gamma, a.h);
        auto [f1, f2] = correlator_symbols(p);
        int which = (a.name == "xy-f2") ? 2 : 1;
        Symbol s = (which == 2) ? f2 : f1;
        return prepared ? prepare_contour(s, p, which) : s;
    }
    throw CLI::ValidationError("unknown symbol preset '" + a.name + "'");
}

void record_symbol_params(const SymbolArgs& a, Table& t) {
    t.parameters["symbol"] = a.generic.empty() ? a.name : a.generic;
    if (a.name == "xx-jump") t.parameters["alpha"] = a.alpha;
    if (a.name == "xx-jump" || a.name == "xx-spin") t.parameters["pf"] = a.pf;
    if (a.name == "xy-f1" || a.name == "xy-f2") {
        t.parameters["gamma"] = fmt(a.gamma, 17);
        t.parameters["h"] = fmt(a.h, 17);
    }
}

void add_symbol_options(CLI::App* cmd, SymbolArgs& a) {
    cmd->set_help_flag("--help", "print help");   // frees -h for --h
    cmd->add_option("--symbol", a.name, "preset: identity, xx-jump, xx-spin, xy-f1, xy-f2");
    cmd->add_option("--spec", a.generic,
                    "generic form factors=(lam,orient,p)...;jumps=(x,lam)...;power=m;const=c");
    cmd->add_option("--alpha", a.alpha, "jump phase (accepts e.g. 0.5pi)");
    cmd->add_option("--pf", a.pf, "Fermi momentum (accepts e.g. 0.5pi)");
    cmd->add_option("--gamma", a.gamma, "anisotropy");
    cmd->add_option("--h", a.h, "transverse field");
    cmd->add_option("--which", a.which, "pair member for xx-spin (1 or 2)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz determinants, Fisher-Hartwig asymptotics, and XY/XX "
                 "spin-chain correlators"};
    app.require_subcommand(1);

    std::string format = "csv", out_path;
    int quad_points = 16384, digits = 12;
    std::string precision = "double";
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--quad-points", quad_points, "quadrature points for smooth symbols")
        ->envname("FHCHAIN_QUAD_POINTS");
    app.add_option("--precision", precision, "double or extended")
        ->check(CLI::IsMember({"double", "extended"}));
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--digits", digits, "CSV significant digits");

    SymbolArgs det_sym, asym_sym, coeff_sym;
    std::string det_n = "1..8", coeff_n = "8";
    auto* det = app.add_subcommand("det", "exact determinant sweep");
    add_symbol_options(det, det_sym);
    det->add_option("--n", det_n, "matrix sizes, e.g. 1..16 or 8,16,32");

    auto* asym = app.add_subcommand("asym", "Fisher-Hartwig representations and constants");
    add_symbol_options(asym, asym_sym);
    int max_shift = 2;
    asym->add_option("--max-shift", max_shift, "representation shift bound");

    auto* coeffs = app.add_subcommand("coeffs", "Toeplitz coefficients c_k");
    add_symbol_options(coeffs, coeff_sym);
    coeffs->add_option("--n", coeff_n, "max |k|");

    auto* compare = app.add_subcommand("compare", "exact vs asymptotic convergence report");
    compare->set_help_flag("--help", "print help");
    std::string kind = "gxx", ladder = "16,32,64";
    double cmp_gamma = 0.5, cmp_h = 0.5, tol = 0.05;
    std::string cmp_alpha = "0.5pi", cmp_pf = "0.5pi";
    compare->add_option("--kind", kind, "gxx, gyy, gpm, gpm-xx, galpha, gpi")
        ->check(CLI::IsMember({"gxx", "gyy", "gpm", "gpm-xx", "galpha", "gpi"}));
    compare->add_option("--x", ladder, "ladder of distances");
    compare->add_option("--gamma", cmp_gamma, "anisotropy");
    compare->add_option("--h", cmp_h, "transverse field");
    compare->add_option("--alpha", cmp_alpha, "exponential correlator phase");
    compare->add_option("--pf", cmp_pf, "Fermi momentum");
    compare->add_option("--tol", tol, "relative tolerance for pass/fail");

    auto* specfun = app.add_subcommand("specfun", "special function values");
    std::string fn_name, fn_arg = "0";
    specfun->add_option("function", fn_name, "barnes-g, g-tilde, ln-g-integral, g-cross-check")
        ->required();
    specfun->add_option("argument", fn_arg, "argument (complex accepted as a+bi)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    bool extended = (precision == "extended");
    int exit_code = 0;
    Table t;

    try {
        if (det->parsed()) {
            t.command = "det";
            record_symbol_params(det_sym, t);
            t.parameters["n"] = det_n;
            Symbol sym = resolve_symbol(det_sym, false);
            SweepOptions opt;
            opt.quad_points = quad_points;
            opt.high_precision = extended;
            auto sweep = det_sweep(sym, parse_range(det_n), opt);
            t.columns = {"n", "det_re", "det_im", "abs_det"};
            for (auto& [n, d] : sweep) {
                cplx v = d.value();
                t.rows.push_back({double(n), v.real(), v.imag(), std::abs(v)});
            }
        } else if (asym->parsed()) {
            t.command = "asym";
            record_symbol_params(asym_sym, t);
            Symbol sym = resolve_symbol(asym_sym, true);
            AsymptoticResult res = sym.smooth()
                ? [&] {
                      AsymptoticResult r;
                      r.terms.push_back(szego_asymptotics(sym));
                      return r;
                  }()
                : fh_asymptotics(sym, max_shift);
            if (res.conjectural)
                t.notes.push_back("conjectural: a jump strength |b_r| >= 1/2");
            t.columns = {"term", "exponent", "l0_re", "l0_im", "E_re", "E_im",
                         "n_sing"};
            int i = 0;
            for (const auto& term : res.terms) {
                t.rows.push_back({double(i++), term.power, term.l0.real(),
                                  term.l0.imag(), term.E.real(), term.E.imag(),
                                  double(term.representation.singularities.size())});
                for (const auto& s : term.representation.singularities)
                    t.notes.push_back("term " + std::to_string(i - 1) + " singularity x=" +
                                      fmt(s.angle, 6) + " a=" + fmt(s.a, 6) + " b=" +
                                      fmt(s.b.real(), 6) +
                                      (s.b.imag() != 0.0 ? "+" + fmt(s.b.imag(), 6) + "i" : ""));
            }
        } else if (coeffs->parsed()) {
            t.command = "coeffs";
            record_symbol_params(coeff_sym, t);
            Symbol sym = resolve_symbol(coeff_sym, false);
            int n_max = parse_range(coeff_n).back();
            auto tc = symbol_coefficients(sym, n_max, quad_points);
            t.columns = {"k", "c_re", "c_im"};
            for (int k = -n_max; k <= n_max; ++k)
                t.rows.push_back({double(k), tc.at(k).real(), tc.at(k).imag()});
        } else if (compare->parsed()) {
            t.command = "compare";
            t.parameters["kind"] = kind;
            t.parameters["x"] = ladder;
            t.parameters["tol"] = fmt(tol, 17);
            Precision prec = extended ? Precision::extended : Precision::automatic;
            bool all_pass = true;
            t.columns = {"x", "exact_re", "exact_im", "asym_re", "asym_im",
                         "ratio", "tolerance_met"};
            for (int x : parse_range(ladder)) {
                CorrelatorValue ex, as;
                if (kind == "gxx" || kind == "gyy" || kind == "gpm") {
                    t.parameters["gamma"] = fmt(cmp_gamma, 17);
                    t.parameters["h"] = fmt(cmp_h, 17);
                    auto p = make_params(cmp_gamma, cmp_h);
                    Kind k = (kind == "gxx") ? Kind::Gxx
                           : (kind == "gyy") ? Kind::Gyy : Kind::G_pm;
                    ex = exact_correlator(k, p, x, prec, quad_points);
                    if (k == Kind::G_pm) {
                        as = closed_form_gxx(p, x);
                        as.value += closed_form_gyy(p, x).value;
                        as.kind = Kind::G_pm;
                    } else {
                        as = (k == Kind::Gxx) ? closed_form_gxx(p, x)
                                              : closed_form_gyy(p, x);
                    }
                } else {
                    t.parameters["pf"] = cmp_pf;
                    XXParams xp{parse_angle(cmp_pf), parse_angle(cmp_alpha)};
                    if (kind == "gpm-xx") {
                        ex = exact_correlator(Kind::G_pm, xp, x, prec);
                        as = xx_spin_correlator(xp, x);
                    } else {
                        if (kind == "gpi") xp.alpha = kPi;
                        t.parameters["alpha"] = (kind == "gpi") ? "pi" : cmp_alpha;
                        ex = exact_correlator(kind == "gpi" ? Kind::G_pi : Kind::G_alpha,
                                              xp, x, prec);
                        as = xx_exponential_correlator(xp, x);
                    }
                }
                double ratio = std::abs(as.value) > 0.0
                                   ? std::abs(ex.value) / std::abs(as.value)
                                   : 0.0;
                bool pass = std::abs(ratio - 1.0) <= tol;
                all_pass = all_pass && pass;
                t.rows.push_back({double(x), ex.value.real(), ex.value.imag(),
                                  as.value.real(), as.value.imag(), ratio,
                                  pass ? 1.0 : 0.0});
            }
            if (!all_pass) exit_code = 1;
        } else if (specfun->parsed()) {
            t.command = "specfun";
            t.parameters["function"] = fn_name;
            t.parameters["argument"] = fn_arg;
            cplx z = parse_complex(fn_arg);
            if (fn_name == "barnes-g") {
                cplx v = barnes_g(z).value();
                t.columns = {"re", "im"};
                t.rows.push_back({v.real(), v.imag()});
            } else if (fn_name == "g-tilde") {
                cplx v = g_tilde(z);
                t.columns = {"re", "im"};
                t.rows.push_back({v.real(), v.imag()});
            } else if (fn_name == "ln-g-integral") {
                t.columns = {"value"};
                t.rows.push_back({ln_g_integral(z.real())});
            } else if (fn_name == "g-cross-check") {
                // three routes to g~: product formula, Barnes product, integral
                cplx prod = g_tilde(z);
                cplx barnes = barnes_g(1.0 + z).value() * barnes_g(1.0 - z).value();
                double integ = std::exp(ln_g_integral(z.real()));
                t.columns = {"product", "barnes", "integral", "max_residual"};
                double r = std::max(std::abs(prod - barnes),
                                    std::abs(prod - cplx(integ)));
                t.rows.push_back({prod.real(), barnes.real(), integ, r});
            } else {
                throw CLI::ValidationError("unknown function '" + fn_name + "'");
            }
        }

        check_finite(t);
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw Error("cannot open output file " + out_path);
            os = &file;
        }
        if (format == "json")
            emit_json(t, *os);
        else
            emit_csv(t, *os, digits);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
