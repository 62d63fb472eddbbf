#pragma once

// Exact finite-N Toeplitz determinant oracle.  Determinants are carried as
// (log-modulus, phase); the Gyy regimes push |D| to 1e-10 and below.

#include "fhchain/fourier.hpp"
#include "fhchain/symbol.hpp"

#include <vector>

namespace fhchain {

struct ToeplitzInstance {
    ToeplitzCoefficients coefficients;
    int n = 1;
    int offset = 0;          // M_{ij} = c_{i-j+offset}
};

struct LogDet {
    double log_modulus = 0.0;
    double phase = 0.0;      // in (-pi, pi]
    bool sign_exact_zero = false;

    cplx value() const;
};

// LU with partial pivoting in complex double; deterministic pivot
// tie-breaking (lowest row index).  OpenMP-parallel row updates.
LogDet log_det(const ToeplitzInstance& inst);

// Serial reference implementation, kept for testing the parallel kernel.
LogDet log_det_serial(const ToeplitzInstance& inst);

// Same contract in double-double arithmetic, for determinants whose expected
// magnitude is below ~1e-8.
LogDet high_precision_log_det(const ToeplitzInstance& inst);

struct SweepOptions {
    int offset = 0;
    int quad_points = 16384;
    bool high_precision = false;
};

std::vector<std::pair<int, LogDet>> det_sweep(const Symbol& sym,
                                              const std::vector<int>& n_list,
                                              const SweepOptions& opt = {});

} // namespace fhchain
