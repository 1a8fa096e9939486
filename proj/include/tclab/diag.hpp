#pragma once

#include <string>
#include <vector>

#include "tclab/fock.hpp"
#include "tclab/types.hpp"

namespace tc {

/// Eigenvalues of a Hermitian matrix, ascending. The input is checked
/// against ||M - M^dag||_max <= 1e-10 and rejected otherwise.
RealVector hermitian_eigenvalues(const DenseMatrix& m);

/// exp(M), scaling-and-squaring. Unitary to ~1e-11 for skew-Hermitian M.
DenseMatrix matrix_exponential(const DenseMatrix& m);

struct SpectrumResult {
    std::string method;
    std::vector<double> labels;
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> analytic;     // closed-form prediction, when available
};

/// Exact eigenvalues of H on the invariant block (q_ab, q_ac).
SpectrumResult block_spectrum(const ModelParams& params, int q_ab, int q_ac);

/// Scalar-coupling su(1,1) surrogate
///   H = S K0 + lambda K+ + lambda* K- + (delta/2) N_d - S/2
/// on the fixed-N_d sector with N_d = m_nd, truncated at `cutoff` radial
/// excitations. Requires the elliptic regime |2 lambda| < S. The analytic
/// list holds sqrt(S^2-4|lambda|^2)(k+n) + (delta/2) m_nd - S/2,
/// k = (|m_nd|+1)/2.
SpectrumResult surrogate_su11_spectrum(double S, double delta, Complex lambda,
                                       int m_nd, int cutoff);

/// Scalar-coupling su(2) surrogate H = d J0 + lambda J+ + lambda* J- on a
/// single j multiplet. The analytic list holds sqrt(d^2+4|lambda|^2) mu,
/// mu = -j..j. Exact, no truncation.
SpectrumResult surrogate_su2_spectrum(double d, Complex lambda, double j);

struct DiscrepancyRow {
    int q_ab, q_ac;
    double g;
    double deviation;  // optimal-assignment max |exact - analytic|
};

struct DiscrepancyTable {
    std::vector<DiscrepancyRow> rows;
    double loglog_slope;  // of max-deviation vs g over the positive-g grid
};

/// Per-block gap between exact spectra and the su(1,1)-form analytic
/// candidates generated from the block's own occupations. Both multisets
/// are sorted before comparison (optimal assignment).
DiscrepancyTable discrepancy_table(const ModelParams& params, int q_ab_max,
                                   int q_ac_max, const std::vector<double>& g_grid);

}  // namespace tc
