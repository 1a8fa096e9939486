#include "tclab/diag.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace tc {

RealVector hermitian_eigenvalues(const DenseMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    const double res = hermiticity_residual(m);
    if (res > 1e-10)
        throw std::invalid_argument("hermitian_eigenvalues: non-Hermitian input, residual " +
                                    std::to_string(res));
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw AccuracyError("hermitian_eigenvalues: solver failed to converge");
    return solver.eigenvalues();
}

DenseMatrix matrix_exponential(const DenseMatrix& m) {
    if (!m.allFinite())
        throw std::invalid_argument("matrix_exponential: non-finite entries");
    DenseMatrix e = m.exp();
    if (!e.allFinite())
        throw AccuracyError("matrix_exponential: overflow");
    return e;
}

SpectrumResult block_spectrum(const ModelParams& params, int q_ab, int q_ac) {
    const auto h = hamiltonian_matrix(params, SingleBlock{q_ab, q_ac});
    const RealVector ev = hermitian_eigenvalues(h.dense());
    SpectrumResult r;
    r.method = "exact";
    r.labels = {double(q_ab), double(q_ac)};
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    return r;
}

SpectrumResult surrogate_su11_spectrum(double S, double delta, Complex lambda,
                                       int m_nd, int cutoff) {
    if (2.0 * std::abs(lambda) >= S)
        throw std::domain_error("surrogate_su11_spectrum: hyperbolic regime, |2 lambda| >= S");
    if (cutoff < 40)
        throw std::invalid_argument("surrogate_su11_spectrum: cutoff < 40");

    const double k = (std::abs(m_nd) + 1) / 2.0;
    const int dim = cutoff + 1;
    DenseMatrix h = DenseMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        h(n, n) = S * (k + n) + 0.5 * delta * m_nd - 0.5 * S;
        if (n + 1 < dim) {
            const double amp = std::sqrt(double(n + 1) * (2.0 * k + n));
            h(n + 1, n) = lambda * amp;
            h(n, n + 1) = std::conj(lambda) * amp;
        }
    }
    const RealVector ev = hermitian_eigenvalues(h);

    SpectrumResult r;
    r.method = "surrogate";
    r.labels = {double(m_nd)};
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    const double gap = std::sqrt(S * S - 4.0 * std::norm(lambda));
    for (int n = 0; n < dim; ++n)
        r.analytic.push_back(gap * (k + n) + 0.5 * delta * m_nd - 0.5 * S);
    return r;
}

SpectrumResult surrogate_su2_spectrum(double d, Complex lambda, double j) {
    const double two_j = 2.0 * j;
    if (j < 0 || std::abs(two_j - std::round(two_j)) > 1e-12)
        throw std::invalid_argument("surrogate_su2_spectrum: j must be a nonnegative half-integer");
    const int dim = static_cast<int>(std::lround(two_j)) + 1;

    DenseMatrix h = DenseMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double mu = -j + i;
        h(i, i) = d * mu;
        if (i + 1 < dim) {
            const double amp = std::sqrt((j - mu) * (j + mu + 1.0));
            h(i + 1, i) = lambda * amp;
            h(i, i + 1) = std::conj(lambda) * amp;
        }
    }
    const RealVector ev = hermitian_eigenvalues(h);

    SpectrumResult r;
    r.method = "surrogate";
    r.labels = {j};
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    const double gap = std::sqrt(d * d + 4.0 * std::norm(lambda));
    for (int i = 0; i < dim; ++i)
        r.analytic.push_back(gap * (-j + i));
    std::sort(r.analytic.begin(), r.analytic.end());
    return r;
}

namespace {

// su(1,1)-form analytic candidate for one occupation, signed m_n = n_c - n_b.
// A negative radicand contributes no real part (principal square root).
double su11_candidate(const ModelParams& p, const Occupation& s) {
    const double ws = p.omega2 + p.omega3;
    const double radicand = ws * ws - 4.0 * p.g * p.g * s.n_a;
    const double root = radicand >= 0.0 ? std::sqrt(radicand) : 0.0;
    const int m_n = s.n_c - s.n_b;
    return root * 0.5 * (s.n_b + s.n_c + 1) + p.omega1 * s.n_a +
           0.5 * (p.omega3 - p.omega2) * m_n - 0.5 * ws;
}

}  // namespace

DiscrepancyTable discrepancy_table(const ModelParams& params, int q_ab_max,
                                   int q_ac_max, const std::vector<double>& g_grid) {
    DiscrepancyTable table;
    std::vector<double> log_g, log_dev;
    for (double g : g_grid) {
        ModelParams p = params;
        p.g = g;
        double max_dev = 0.0;
        for (int q_ab = 0; q_ab <= q_ab_max; ++q_ab) {
            for (int q_ac = 0; q_ac <= q_ac_max; ++q_ac) {
                const auto blk = block_basis(q_ab, q_ac);
                auto exact = block_spectrum(p, q_ab, q_ac).eigenvalues;
                std::vector<double> candidates;
                candidates.reserve(blk.basis.size());
                for (const auto& s : blk.basis) candidates.push_back(su11_candidate(p, s));
                std::sort(candidates.begin(), candidates.end());
                double dev = 0.0;
                for (size_t i = 0; i < exact.size(); ++i)
                    dev = std::max(dev, std::abs(exact[i] - candidates[i]));
                table.rows.push_back({q_ab, q_ac, g, dev});
                max_dev = std::max(max_dev, dev);
            }
        }
        if (g > 0.0 && max_dev > 0.0) {
            log_g.push_back(std::log(g));
            log_dev.push_back(std::log(max_dev));
        }
    }

    // least-squares slope of log(dev) vs log(g)
    table.loglog_slope = 0.0;
    const size_t n = log_g.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) {
            sx += log_g[i];
            sy += log_dev[i];
            sxx += log_g[i] * log_g[i];
            sxy += log_g[i] * log_dev[i];
        }
        table.loglog_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return table;
}

}  // namespace tc
