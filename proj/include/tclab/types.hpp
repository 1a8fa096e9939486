#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace tc {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Thrown when an operation is not defined on the given basis
/// (e.g. a single-mode ladder on an invariant block).
struct UnsupportedOperation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown when an analytic method does not apply to the given parameters
/// (e.g. the Bogoliubov route with omega2 != omega3).
struct MethodInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a requested tolerance cannot be met (truncation too small,
/// non-convergent series, parameter outside the convergent domain).
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse complex operator on a fixed finite basis. Entries are assembled
/// from coordinate triplets; duplicates are summed.
struct SparseOperator {
    Eigen::SparseMatrix<Complex> mat;
    bool hermitian_hint{false};

    Eigen::Index dim() const { return mat.rows(); }
    DenseMatrix dense() const { return DenseMatrix(mat); }
};

SparseOperator assemble(Eigen::Index dim,
                        const std::vector<Eigen::Triplet<Complex>>& entries,
                        bool hermitian_hint = false);

/// A B - B A. Dimensions must agree.
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// max_ij |M - M^dagger|_ij
double hermiticity_residual(const DenseMatrix& m);

}  // namespace tc
