#pragma once

#include <compare>
#include <variant>
#include <vector>

#include "tclab/types.hpp"

namespace tc {

/// Photon numbers of the three modes (a, b, c).
struct Occupation {
    int n_a{0}, n_b{0}, n_c{0};
    auto operator<=>(const Occupation&) const = default;
};

/// Full three-mode Fock cube with per-mode hard cutoffs,
/// ordered lexicographically in (n_a, n_b, n_c).
struct TruncatedCube {
    int cut_a, cut_b, cut_c;
};

/// Joint eigenspace of the conserved charges n_a+n_b and n_a+n_c.
/// The trilinear coupling acts exactly on this finite space.
struct SingleBlock {
    int q_ab, q_ac;
};

enum class ModePair { BC, AB };

/// Two-mode truncated space for the Jordan-Schwinger realizations:
/// pair BC hosts su(1,1), pair AB hosts su(2). States are ordered
/// lexicographically in (n_1, n_2).
struct TwoModeTruncated {
    int cut_1, cut_2;
    ModePair pair{ModePair::BC};
};

using BasisSpec = std::variant<TruncatedCube, SingleBlock, TwoModeTruncated>;

struct Block {
    int q_ab{0}, q_ac{0};
    std::vector<Occupation> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Canonical basis of the invariant block with charges (q_ab, q_ac):
/// { (n_a, q_ab-n_a, q_ac-n_a) : 0 <= n_a <= min(q_ab, q_ac) },
/// ascending in n_a.
Block block_basis(int q_ab, int q_ac);

/// Canonical ordered state list of any basis variant.
std::vector<Occupation> basis_states(const BasisSpec& basis);
Eigen::Index basis_dimension(const BasisSpec& basis);

enum class Mode { A, B, C };
enum class Kind { Annihilate, Create, Number };

/// Matrix of a single-mode ladder/number operator on the given basis.
/// Amplitudes that leave a truncated basis are dropped (hard truncation).
/// On SingleBlock only Kind::Number is defined; on TwoModeTruncated the
/// inactive mode is rejected.
SparseOperator ladder_matrix(const BasisSpec& basis, Mode mode, Kind kind);

/// The four scalars of the trilinear model (hbar = 1).
struct ModelParams {
    double omega1{1.0}, omega2{1.0}, omega3{1.0};
    double g{0.0};
};

/// H = w1 n_a + w2 n_b + w3 n_c + g (a^dag b c + a b^dag c^dag)
/// on a TruncatedCube or SingleBlock basis.
SparseOperator hamiltonian_matrix(const ModelParams& params, const BasisSpec& basis);

}  // namespace tc
