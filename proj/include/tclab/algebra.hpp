#pragma once

#include "tclab/fock.hpp"
#include "tclab/types.hpp"

namespace tc {

enum class Group { SU11, SU2 };

/// Jordan-Schwinger su(1,1) generators on a (b, c) two-mode basis:
///   K0 = (b^dag b + c^dag c + 1)/2,  K+ = b^dag c^dag,  K- = b c,
///   N_d = c^dag c - b^dag b.
struct SU11Generators {
    SparseOperator k0, kplus, kminus, nd;
    Eigen::Index dim() const { return k0.dim(); }
};

/// Jordan-Schwinger su(2) generators on an (a, b) two-mode basis:
///   J0 = (a^dag a - b^dag b)/2,  J+ = a^dag b,  J- = b^dag a,
///   N_s = a^dag a + b^dag b.
struct SU2Generators {
    SparseOperator j0, jplus, jminus, ns;
    Eigen::Index dim() const { return j0.dim(); }
};

SU11Generators su11_generators(const TwoModeTruncated& basis);
SU2Generators su2_generators(const TwoModeTruncated& basis);

/// K^2 = K0^2 - (K+K- + K-K+)/2, which equals N_d^2/4 - 1/4 here.
SparseOperator casimir(const SU11Generators& gen);
/// J^2 = J0^2 + (J+J- + J-J+)/2, which equals (N_s/2)(N_s/2 + 1) here.
SparseOperator casimir(const SU2Generators& gen);

/// Gaussian-decomposition parameters of D(xi):
///   D(xi) = exp(zeta K+) exp(eta K0) exp(-zeta* K-)
/// with zeta = tanh|xi| xi/|xi|, eta = ln(1-|zeta|^2) for su(1,1), and
/// zeta = tan|xi| xi/|xi|, eta = ln(1+|zeta|^2) for su(2).
struct DisplacementParams {
    Group group;
    Complex xi;
    Complex zeta;
    double eta;

    static DisplacementParams su11(Complex xi);
    static DisplacementParams su2(Complex xi);
};

/// BCH similarity-transform coefficients:
///   su(1,1): alpha = sinh(2|xi|), beta = (cosh(2|xi|)-1)/2
///   su(2):   delta = sin(2|xi|),  epsilon = (cos(2|xi|)-1)/2
/// stored as (first, second) in that order.
struct BCHCoefficients {
    Group group;
    double first;
    double second;
};

BCHCoefficients bch_coefficients(Group group, Complex xi);

/// D(xi) = exp(xi K+ - xi* K-) (resp. J+/J-), dense matrix exponential.
DenseMatrix displacement_exact(const SU11Generators& gen, Complex xi);
DenseMatrix displacement_exact(const SU2Generators& gen, Complex xi);

/// The normal-ordered product exp(zeta K+) exp(eta K0) exp(-zeta* K-).
/// Agrees with displacement_exact away from the truncation edge.
DenseMatrix displacement_normal_order(const SU11Generators& gen, Complex xi);
DenseMatrix displacement_normal_order(const SU2Generators& gen, Complex xi);

/// Amplitudes of the su(1,1) Perelomov number coherent state D(xi)|k,n>
/// over |k,m>, m = 0..truncation. The outer series is extended until the
/// appended tail norm drops below 1e-14 (capped at 500 terms).
ComplexVector pncs_su11(double k, int n, Complex xi, int truncation);

/// Amplitudes of the su(2) Perelomov number coherent state D(xi)|j,mu>
/// over |j,mu'>, mu' = -j..j (2j+1 components, finite sums).
ComplexVector pncs_su2(double j, double mu, Complex xi);

struct TransformedGenerators {
    DenseMatrix k0;      // D^dag K0 D  (or J0)
    DenseMatrix kplus;   // D^dag K+ D  (or J+)
    DenseMatrix kminus;  // D^dag K- D  (or J-)
};

/// Closed-form BCH similarity transforms of the generator triple.
/// xi = 0 returns the generators unchanged.
TransformedGenerators similarity_closed_form(const SU11Generators& gen, Complex xi);
TransformedGenerators similarity_closed_form(const SU2Generators& gen, Complex xi);

}  // namespace tc
