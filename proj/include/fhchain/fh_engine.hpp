#pragma once

// Asymptotic evaluation of Toeplitz determinants: strong Szego theorem, the
// generalized Fisher-Hartwig sum over representations, and the jump-only
// (Basor) formula.

#include "fhchain/fourier.hpp"
#include "fhchain/symbol.hpp"

#include <vector>

namespace fhchain {

struct AsymptoticTerm {
    cplx l0;                 // growth rate per N; imaginary part oscillates
    double power = 0.0;      // exponent of N
    cplx E;                  // N-independent constant
    FHRepresentation representation;
};

struct AsymptoticResult {
    std::vector<AsymptoticTerm> terms;   // all maximal-exponent representations
    bool conjectural = false;            // some |lambda_r| >= 1/2

    cplx evaluate(double n) const;
    double power() const { return terms.empty() ? 0.0 : terms.front().power; }
};

// D(N) ~ e^{l0 N} E for a smooth nonvanishing zero-winding symbol.
AsymptoticTerm szego_asymptotics(const Symbol& f0);

// The constant E of one representation (Szego exponential, Wiener-Hopf jump
// factors, pairwise factor, Barnes-G triple ratio).
cplx fh_constant_E(const FHRepresentation& rep);

// Sum over maximal-exponent representations; excluded representations are
// dropped before the maximum is taken.
AsymptoticResult fh_asymptotics(const Symbol& sym, int max_shift = 2);

// Jump-only route with E = exp(sum_k [k l_k l_{-k} - sum_r lambda_r^2 / k])
// prod_r g~(-i lambda_r).
AsymptoticResult basor_asymptotics(const Symbol& sym);

// true iff a_r + b_r or a_r - b_r is a negative integer for some r
bool check_excluded(const FHRepresentation& rep);

} // namespace fhchain
