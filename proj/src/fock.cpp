#include "tclab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tc {

SparseOperator assemble(Eigen::Index dim,
                        const std::vector<Eigen::Triplet<Complex>>& entries,
                        bool hermitian_hint) {
    for (const auto& t : entries) {
        if (t.row() < 0 || t.row() >= dim || t.col() < 0 || t.col() >= dim)
            throw std::invalid_argument("assemble: entry index out of range");
    }
    SparseOperator op;
    op.mat.resize(dim, dim);
    op.mat.setFromTriplets(entries.begin(), entries.end());  // duplicates summed
    op.mat.makeCompressed();
    op.hermitian_hint = hermitian_hint;
    return op;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("commutator: dimension mismatch");
    SparseOperator op;
    op.mat = (a.mat * b.mat - b.mat * a.mat).pruned();
    return op;
}

double hermiticity_residual(const DenseMatrix& m) {
    return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

Block block_basis(int q_ab, int q_ac) {
    if (q_ab < 0 || q_ac < 0)
        throw std::invalid_argument("block_basis: negative charge");
    Block blk{q_ab, q_ac, {}};
    const int n_max = std::min(q_ab, q_ac);
    blk.basis.reserve(n_max + 1);
    for (int n_a = 0; n_a <= n_max; ++n_a)
        blk.basis.push_back({n_a, q_ab - n_a, q_ac - n_a});
    return blk;
}

namespace {

void validate(const BasisSpec& basis) {
    std::visit([](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, TruncatedCube>) {
            if (b.cut_a < 0 || b.cut_b < 0 || b.cut_c < 0)
                throw std::invalid_argument("TruncatedCube: negative cutoff");
        } else if constexpr (std::is_same_v<T, SingleBlock>) {
            if (b.q_ab < 0 || b.q_ac < 0)
                throw std::invalid_argument("SingleBlock: negative charge");
        } else {
            if (b.cut_1 < 0 || b.cut_2 < 0)
                throw std::invalid_argument("TwoModeTruncated: negative cutoff");
        }
    }, basis);
}

// Active physical modes of a two-mode basis, in slot order.
std::pair<Mode, Mode> active_modes(const TwoModeTruncated& b) {
    return b.pair == ModePair::BC ? std::pair{Mode::B, Mode::C}
                                  : std::pair{Mode::A, Mode::B};
}

int& component(Occupation& s, Mode m) {
    switch (m) {
        case Mode::A: return s.n_a;
        case Mode::B: return s.n_b;
        default: return s.n_c;
    }
}

int component(const Occupation& s, Mode m) {
    Occupation t = s;
    return component(t, m);
}

// Index lookup for the canonical ordering.
std::map<Occupation, int> index_of(const std::vector<Occupation>& states) {
    std::map<Occupation, int> idx;
    for (int i = 0; i < static_cast<int>(states.size()); ++i)
        idx.emplace(states[i], i);
    return idx;
}

}  // namespace

std::vector<Occupation> basis_states(const BasisSpec& basis) {
    validate(basis);
    std::vector<Occupation> states;
    std::visit([&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, TruncatedCube>) {
            states.reserve(static_cast<size_t>(b.cut_a + 1) * (b.cut_b + 1) * (b.cut_c + 1));
            for (int na = 0; na <= b.cut_a; ++na)
                for (int nb = 0; nb <= b.cut_b; ++nb)
                    for (int nc = 0; nc <= b.cut_c; ++nc)
                        states.push_back({na, nb, nc});
        } else if constexpr (std::is_same_v<T, SingleBlock>) {
            states = block_basis(b.q_ab, b.q_ac).basis;
        } else {
            auto [m1, m2] = active_modes(b);
            for (int n1 = 0; n1 <= b.cut_1; ++n1)
                for (int n2 = 0; n2 <= b.cut_2; ++n2) {
                    Occupation s{};
                    component(s, m1) = n1;
                    component(s, m2) = n2;
                    states.push_back(s);
                }
        }
    }, basis);
    return states;
}

Eigen::Index basis_dimension(const BasisSpec& basis) {
    return static_cast<Eigen::Index>(basis_states(basis).size());
}

SparseOperator ladder_matrix(const BasisSpec& basis, Mode mode, Kind kind) {
    if (std::holds_alternative<SingleBlock>(basis) && kind != Kind::Number)
        throw UnsupportedOperation("single-mode ladder leaves an invariant block");
    if (const auto* tm = std::get_if<TwoModeTruncated>(&basis)) {
        auto [m1, m2] = active_modes(*tm);
        if (mode != m1 && mode != m2)
            throw UnsupportedOperation("mode not present in two-mode basis");
    }

    const auto states = basis_states(basis);
    const auto idx = index_of(states);
    const auto dim = static_cast<Eigen::Index>(states.size());

    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(states.size());
    for (int i = 0; i < dim; ++i) {
        const int n = component(states[i], mode);
        switch (kind) {
            case Kind::Number:
                if (n > 0) entries.emplace_back(i, i, Complex(n, 0.0));
                break;
            case Kind::Annihilate: {
                if (n == 0) break;
                Occupation t = states[i];
                component(t, mode) = n - 1;
                if (auto it = idx.find(t); it != idx.end())
                    entries.emplace_back(it->second, i, Complex(std::sqrt(double(n)), 0.0));
                break;
            }
            case Kind::Create: {
                Occupation t = states[i];
                component(t, mode) = n + 1;
                if (auto it = idx.find(t); it != idx.end())
                    entries.emplace_back(it->second, i, Complex(std::sqrt(double(n + 1)), 0.0));
                break;
            }
        }
    }
    return assemble(dim, entries, kind == Kind::Number);
}

SparseOperator hamiltonian_matrix(const ModelParams& params, const BasisSpec& basis) {
    if (std::holds_alternative<TwoModeTruncated>(basis))
        throw std::invalid_argument("hamiltonian_matrix: needs all three modes");

    const auto states = basis_states(basis);
    const auto idx = index_of(states);
    const auto dim = static_cast<Eigen::Index>(states.size());

    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(3 * states.size());
    for (int i = 0; i < dim; ++i) {
        const auto& s = states[i];
        const double diag = params.omega1 * s.n_a + params.omega2 * s.n_b + params.omega3 * s.n_c;
        if (diag != 0.0) entries.emplace_back(i, i, Complex(diag, 0.0));

        // raising direction a^dag b c
        if (s.n_b >= 1 && s.n_c >= 1) {
            Occupation t{s.n_a + 1, s.n_b - 1, s.n_c - 1};
            if (auto it = idx.find(t); it != idx.end()) {
                const double amp = params.g * std::sqrt(double(s.n_a + 1) * s.n_b * s.n_c);
                entries.emplace_back(it->second, i, Complex(amp, 0.0));
            }
        }
        // lowering direction a b^dag c^dag
        if (s.n_a >= 1) {
            Occupation t{s.n_a - 1, s.n_b + 1, s.n_c + 1};
            if (auto it = idx.find(t); it != idx.end()) {
                const double amp = params.g * std::sqrt(double(s.n_a) * (s.n_b + 1) * (s.n_c + 1));
                entries.emplace_back(it->second, i, Complex(amp, 0.0));
            }
        }
    }
    return assemble(dim, entries, true);
}

}  // namespace tc
