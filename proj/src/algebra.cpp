#include "tclab/algebra.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "tclab/diag.hpp"

namespace tc {

namespace {

void require_pair(const TwoModeTruncated& basis, ModePair pair, const char* who) {
    if (basis.pair != pair)
        throw std::invalid_argument(std::string(who) + ": wrong mode pair for this realization");
}

SparseOperator identity(Eigen::Index dim) {
    SparseOperator op;
    op.mat.resize(dim, dim);
    op.mat.setIdentity();
    op.hermitian_hint = true;
    return op;
}

SparseOperator combine(const Eigen::SparseMatrix<Complex>& m, bool herm = false) {
    SparseOperator op;
    op.mat = m;
    op.mat.makeCompressed();
    op.hermitian_hint = herm;
    return op;
}

// Exponential of a block-diagonal matrix whose invariant sectors are given
// per basis index. The generators of both displacement operators conserve
// N_d (su(1,1)) resp. N_s (su(2)), so this is exact and much cheaper than
// a full dense exponential.
DenseMatrix sector_expm(const Eigen::SparseMatrix<Complex>& a, const std::vector<int>& sector) {
    const Eigen::Index dim = a.rows();
    std::map<int, std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < dim; ++i) groups[sector[i]].push_back(i);

    DenseMatrix result = DenseMatrix::Zero(dim, dim);
    for (const auto& [tag, members] : groups) {
        const auto n = static_cast<Eigen::Index>(members.size());
        DenseMatrix blockm(n, n);
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c) blockm(r, c) = a.coeff(members[r], members[c]);
        DenseMatrix e = matrix_exponential(blockm);
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c) result(members[r], members[c]) = e(r, c);
    }
    return result;
}

// The conserved charge (N_d or N_s) is diagonal; read sector tags off it.
std::vector<int> sector_tags(const SparseOperator& charge) {
    std::vector<int> tags;
    tags.reserve(charge.dim());
    for (Eigen::Index i = 0; i < charge.dim(); ++i)
        tags.push_back(static_cast<int>(std::lround(charge.mat.coeff(i, i).real())));
    return tags;
}

// exp(A) for a strictly raising (or lowering) nilpotent generator, by the
// terminating power series in sparse arithmetic.
Eigen::SparseMatrix<Complex> expm_nilpotent(const Eigen::SparseMatrix<Complex>& a) {
    Eigen::SparseMatrix<Complex> result(a.rows(), a.cols());
    result.setIdentity();
    Eigen::SparseMatrix<Complex> term(a.rows(), a.cols());
    term.setIdentity();
    for (Eigen::Index m = 1; m <= a.rows(); ++m) {
        term = (term * a).pruned();
        term *= Complex(1.0 / double(m), 0.0);
        if (term.nonZeros() == 0) break;
        result += term;
    }
    return result;
}

double lg(double x) { return std::lgamma(x); }

}  // namespace

SU11Generators su11_generators(const TwoModeTruncated& basis) {
    require_pair(basis, ModePair::BC, "su11_generators");
    const BasisSpec spec{basis};
    const auto nb = ladder_matrix(spec, Mode::B, Kind::Number);
    const auto nc = ladder_matrix(spec, Mode::C, Kind::Number);
    const auto bdag = ladder_matrix(spec, Mode::B, Kind::Create);
    const auto cdag = ladder_matrix(spec, Mode::C, Kind::Create);
    const auto b = ladder_matrix(spec, Mode::B, Kind::Annihilate);
    const auto c = ladder_matrix(spec, Mode::C, Kind::Annihilate);
    const auto id = identity(nb.dim());

    SU11Generators gen;
    gen.k0 = combine(0.5 * (nb.mat + nc.mat + id.mat), true);
    gen.kplus = combine(bdag.mat * cdag.mat);
    gen.kminus = combine(b.mat * c.mat);
    gen.nd = combine(nc.mat - nb.mat, true);
    return gen;
}

SU2Generators su2_generators(const TwoModeTruncated& basis) {
    require_pair(basis, ModePair::AB, "su2_generators");
    const BasisSpec spec{basis};
    const auto na = ladder_matrix(spec, Mode::A, Kind::Number);
    const auto nb = ladder_matrix(spec, Mode::B, Kind::Number);
    const auto adag = ladder_matrix(spec, Mode::A, Kind::Create);
    const auto bdag = ladder_matrix(spec, Mode::B, Kind::Create);
    const auto a = ladder_matrix(spec, Mode::A, Kind::Annihilate);
    const auto b = ladder_matrix(spec, Mode::B, Kind::Annihilate);

    SU2Generators gen;
    gen.j0 = combine(0.5 * (na.mat - nb.mat), true);
    gen.jplus = combine(adag.mat * b.mat);
    gen.jminus = combine(bdag.mat * a.mat);
    gen.ns = combine(na.mat + nb.mat, true);
    return gen;
}

SparseOperator casimir(const SU11Generators& gen) {
    return combine(gen.k0.mat * gen.k0.mat -
                   0.5 * (gen.kplus.mat * gen.kminus.mat + gen.kminus.mat * gen.kplus.mat));
}

SparseOperator casimir(const SU2Generators& gen) {
    return combine(gen.j0.mat * gen.j0.mat +
                   0.5 * (gen.jplus.mat * gen.jminus.mat + gen.jminus.mat * gen.jplus.mat));
}

DisplacementParams DisplacementParams::su11(Complex xi) {
    DisplacementParams p{Group::SU11, xi, Complex(0.0), 0.0};
    const double r = std::abs(xi);
    if (r == 0.0) return p;
    p.zeta = std::tanh(r) * xi / r;
    p.eta = std::log(1.0 - std::norm(p.zeta));
    return p;
}

DisplacementParams DisplacementParams::su2(Complex xi) {
    DisplacementParams p{Group::SU2, xi, Complex(0.0), 0.0};
    const double r = std::abs(xi);
    if (r == 0.0) return p;
    if (std::cos(r) <= 1e-12)
        throw std::domain_error("DisplacementParams::su2: |xi| too close to pi/2");
    p.zeta = std::tan(r) * xi / r;
    p.eta = std::log(1.0 + std::norm(p.zeta));
    return p;
}

BCHCoefficients bch_coefficients(Group group, Complex xi) {
    const double r = std::abs(xi);
    if (group == Group::SU11)
        return {group, std::sinh(2.0 * r), 0.5 * (std::cosh(2.0 * r) - 1.0)};
    return {group, std::sin(2.0 * r), 0.5 * (std::cos(2.0 * r) - 1.0)};
}

DenseMatrix displacement_exact(const SU11Generators& gen, Complex xi) {
    // K+ and K- commute with N_d: the generator is N_d block diagonal.
    Eigen::SparseMatrix<Complex> a = xi * gen.kplus.mat - std::conj(xi) * gen.kminus.mat;
    return sector_expm(a, sector_tags(gen.nd));
}

DenseMatrix displacement_exact(const SU2Generators& gen, Complex xi) {
    Eigen::SparseMatrix<Complex> a = xi * gen.jplus.mat - std::conj(xi) * gen.jminus.mat;
    return sector_expm(a, sector_tags(gen.ns));
}

namespace {

DenseMatrix normal_order_product(const Eigen::SparseMatrix<Complex>& raise,
                                 const Eigen::SparseMatrix<Complex>& lower,
                                 const Eigen::SparseMatrix<Complex>& weight,
                                 const DisplacementParams& p) {
    if (p.group == Group::SU11 && std::abs(p.zeta) >= 1.0)
        throw std::domain_error("displacement_normal_order: |zeta| >= 1");
    Eigen::SparseMatrix<Complex> left = expm_nilpotent((p.zeta * raise).eval());
    Eigen::SparseMatrix<Complex> right = expm_nilpotent((-std::conj(p.zeta) * lower).eval());
    // weight is diagonal; exponentiate entrywise
    DenseMatrix mid = DenseMatrix::Zero(weight.rows(), weight.cols());
    for (Eigen::Index i = 0; i < weight.rows(); ++i)
        mid(i, i) = std::exp(p.eta * weight.coeff(i, i));
    return DenseMatrix(left) * mid * DenseMatrix(right);
}

}  // namespace

DenseMatrix displacement_normal_order(const SU11Generators& gen, Complex xi) {
    return normal_order_product(gen.kplus.mat, gen.kminus.mat, gen.k0.mat,
                                DisplacementParams::su11(xi));
}

DenseMatrix displacement_normal_order(const SU2Generators& gen, Complex xi) {
    return normal_order_product(gen.jplus.mat, gen.jminus.mat, gen.j0.mat,
                                DisplacementParams::su2(xi));
}

ComplexVector pncs_su11(double k, int n, Complex xi, int truncation) {
    if (k <= 0.0) throw std::invalid_argument("pncs_su11: Bargmann index must be positive");
    if (n < 0 || truncation < 0) throw std::invalid_argument("pncs_su11: negative label");

    ComplexVector amps = ComplexVector::Zero(truncation + 1);
    if (xi == Complex(0.0)) {
        if (n > truncation) throw std::invalid_argument("pncs_su11: truncation below n");
        amps[n] = 1.0;
        return amps;
    }
    const auto p = DisplacementParams::su11(xi);

    constexpr int kMaxOuter = 500;
    double dropped_mass = 0.0;
    int s = 0;
    for (; s <= kMaxOuter; ++s) {
        Complex zs = std::pow(p.zeta, s) / std::exp(lg(s + 1.0));
        double shell_norm2 = 0.0;
        for (int j = 0; j <= n; ++j) {
            const Complex term =
                zs * std::pow(-std::conj(p.zeta), j) / std::exp(lg(j + 1.0)) *
                std::exp(p.eta * (k + n - j)) *
                std::exp(0.5 * (lg(2 * k + n) + lg(2 * k + n - j + s)) - lg(2 * k + n - j)) *
                std::exp(0.5 * (lg(n + 1.0) + lg(n - j + s + 1.0)) - lg(n - j + 1.0));
            const int m = n - j + s;
            shell_norm2 += std::norm(term);
            if (m <= truncation)
                amps[m] += term;
            else
                dropped_mass += std::norm(term);
        }
        if (std::sqrt(shell_norm2) < 1e-14 && s > n) break;
    }
    if (s > kMaxOuter)
        throw AccuracyError("pncs_su11: outer series not converged after 500 terms");
    if (dropped_mass > 1e-12)
        throw AccuracyError("pncs_su11: truncation too small, tail mass " +
                            std::to_string(dropped_mass));
    return amps;
}

ComplexVector pncs_su2(double j, double mu, Complex xi) {
    const double two_j = 2.0 * j;
    if (j < 0 || std::abs(two_j - std::round(two_j)) > 1e-12)
        throw std::invalid_argument("pncs_su2: j must be a nonnegative half-integer");
    const double jm = j - mu, jp = j + mu;
    if (jm < -1e-12 || jp < -1e-12 || std::abs(jm - std::round(jm)) > 1e-12)
        throw std::invalid_argument("pncs_su2: invalid (j, mu)");

    const int dim = static_cast<int>(std::lround(two_j)) + 1;
    ComplexVector amps = ComplexVector::Zero(dim);  // index i <-> mu' = -j + i
    if (xi == Complex(0.0)) {
        amps[static_cast<int>(std::lround(jp))] = 1.0;
        return amps;
    }
    const auto p = DisplacementParams::su2(xi);

    const int n_max = static_cast<int>(std::lround(jp));
    for (int n = 0; n <= n_max; ++n) {
        const int s_max = static_cast<int>(std::lround(jm)) + n;
        for (int s = 0; s <= s_max; ++s) {
            const Complex term =
                std::pow(p.zeta, s) / std::exp(lg(s + 1.0)) *
                std::pow(-std::conj(p.zeta), n) / std::exp(lg(n + 1.0)) *
                std::exp(p.eta * (mu - n)) *
                std::exp(lg(jm + n + 1.0) - lg(jp - n + 1.0)) *
                std::exp(0.5 * (lg(jp + 1.0) + lg(jp - n + s + 1.0) - lg(jm + 1.0) -
                                lg(jm + n - s + 1.0)));
            const int i = static_cast<int>(std::lround(jp - n + s));
            amps[i] += term;
        }
    }
    return amps;
}

namespace {

TransformedGenerators transform_triple(const DenseMatrix& g0, const DenseMatrix& gp,
                                       const DenseMatrix& gm, Complex xi, Group group) {
    TransformedGenerators out;
    const double r = std::abs(xi);
    if (r == 0.0) {
        out.k0 = g0;
        out.kplus = gp;
        out.kminus = gm;
        return out;
    }
    const auto [first, second] = [&] {
        auto c = bch_coefficients(group, xi);
        return std::pair{c.first, c.second};
    }();
    const Complex u = xi / r;
    const Complex ub = std::conj(u);
    const double sgn = group == Group::SU11 ? 1.0 : -1.0;

    out.k0 = (2.0 * second + 1.0) * g0 + (first * u / 2.0) * gp + (first * ub / 2.0) * gm;
    out.kplus = sgn * ub * first * g0 + second * (gp + (ub / u) * gm) + gp;
    out.kminus = sgn * u * first * g0 + second * (gm + (u / ub) * gp) + gm;
    return out;
}

}  // namespace

TransformedGenerators similarity_closed_form(const SU11Generators& gen, Complex xi) {
    return transform_triple(gen.k0.dense(), gen.kplus.dense(), gen.kminus.dense(), xi,
                            Group::SU11);
}

TransformedGenerators similarity_closed_form(const SU2Generators& gen, Complex xi) {
    return transform_triple(gen.j0.dense(), gen.jplus.dense(), gen.jminus.dense(), xi,
                            Group::SU2);
}

}  // namespace tc
