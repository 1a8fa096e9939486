#include "tclab/wavefn.hpp"

#include <cmath>

#include "tclab/algebra.hpp"

namespace tc {

namespace {

double lg(double x) { return std::lgamma(x); }

template <typename Scalar>
Scalar laguerre_impl(int n, int m, Scalar x) {
    if (n == 0) return Scalar(1.0);
    Scalar lm1 = Scalar(1.0);            // L_0
    Scalar l = Scalar(1.0 + m) - x;      // L_1
    for (int i = 1; i < n; ++i) {
        Scalar next = ((Scalar(2.0 * i + 1.0 + m) - x) * l - Scalar(double(i + m)) * lm1) /
                      Scalar(double(i + 1));
        lm1 = l;
        l = next;
    }
    return l;
}

}  // namespace

double hermite(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: n < 0");
    if (n == 0) return 1.0;
    double hm1 = 1.0;
    double h = 2.0 * x;
    for (int i = 1; i < n; ++i) {
        const double next = 2.0 * x * h - 2.0 * i * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double assoc_laguerre(int n, int m, double x) {
    if (n < 0 || m < 0) throw std::invalid_argument("assoc_laguerre: negative index");
    return laguerre_impl<double>(n, m, x);
}

Complex assoc_laguerre(int n, int m, Complex x) {
    if (n < 0 || m < 0) throw std::invalid_argument("assoc_laguerre: negative index");
    return laguerre_impl<Complex>(n, m, x);
}

double ho1d(int n, double x) {
    if (n < 0) throw std::invalid_argument("ho1d: n < 0");
    const double psi0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return psi0;
    double pm1 = psi0;
    double p = std::sqrt(2.0) * x * psi0;
    for (int i = 2; i <= n; ++i) {
        const double next = x * std::sqrt(2.0 / i) * p - std::sqrt((i - 1.0) / i) * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

Complex ho2d(int n_l, int m_n, double rho, double phi) {
    if (n_l < 0 || m_n < 0) throw std::invalid_argument("ho2d: negative quantum number");
    const double norm =
        std::exp(0.5 * (lg(n_l + 1.0) - lg(n_l + m_n + 1.0))) / std::sqrt(M_PI);
    const double sign = (n_l % 2 == 0) ? 1.0 : -1.0;
    const double radial = std::pow(rho, m_n) * assoc_laguerre(n_l, m_n, rho * rho) *
                          std::exp(-0.5 * rho * rho);
    return sign * norm * radial * std::exp(Complex(0.0, m_n * phi));
}

Complex ho2d_signed(int n_r, int m, double rho, double phi) {
    if (m >= 0) return ho2d(n_r, m, rho, phi);
    return ho2d(n_r, -m, rho, -phi);  // e^{i m phi} with |m| radial part
}

PolarGrid PolarGrid::uniform(double rho_max, int n_rho, int n_phi) {
    if (rho_max <= 0.0 || n_rho < 2 || n_phi < 2)
        throw std::invalid_argument("PolarGrid::uniform: bad grid parameters");
    PolarGrid g;
    g.rho.reserve(n_rho);
    for (int i = 0; i < n_rho; ++i) g.rho.push_back(rho_max * (i + 0.5) / n_rho);
    g.phi.reserve(n_phi);
    for (int i = 0; i < n_phi; ++i) g.phi.push_back(2.0 * M_PI * i / n_phi);
    return g;
}

namespace {

const PolarGrid& as_polar(const GridSpec& grid) {
    const auto* p = std::get_if<PolarGrid>(&grid);
    if (!p) throw std::invalid_argument("pncs wavefunctions require a polar grid");
    return *p;
}

// Closed-form displaced 2D oscillator state,
//   psi = prefactor e^{i m phi} rho^m e^{gauss_coef rho^2} L_{n_l}^{m_n}(arg_coef rho^2),
// obtained by collapsing the mode expansion with the Laguerre generating
// function. With q = 1 + zeta and A = 1 - |zeta|^2:
//   prefactor = sqrt(n_l!/(n_l+m_n)!) A^{(m_n+1)/2} (-conj(q)/q)^{n_l} / (sqrt(pi) q^{m_n+1})
//   gauss_coef = zeta/q - 1/2,  arg_coef = A/|q|^2  (real).
// Defined for every |zeta| < 1 since q never vanishes there.
struct Su11ClosedForm {
    Complex prefactor;
    Complex gauss_coef;
    double arg_coef;
    int n_l, m_n;
};

Su11ClosedForm su11_closed_form(int n_l, int m_n, Complex zeta) {
    Su11ClosedForm f;
    f.n_l = n_l;
    f.m_n = m_n;
    const Complex q = 1.0 + zeta;
    const double a = 1.0 - std::norm(zeta);
    const double norm =
        std::exp(0.5 * (lg(n_l + 1.0) - lg(n_l + m_n + 1.0))) / std::sqrt(M_PI);
    f.prefactor = norm * std::pow(a, 0.5 * (m_n + 1.0)) *
                  std::pow(-std::conj(q) / q, n_l) / std::pow(q, m_n + 1);
    f.gauss_coef = zeta / q - 0.5;
    f.arg_coef = a / std::norm(q);
    return f;
}

Complex eval_closed(const Su11ClosedForm& f, double rho, double phi) {
    const double r2 = rho * rho;
    return f.prefactor * std::exp(Complex(0.0, f.m_n * phi)) * std::pow(rho, f.m_n) *
           std::exp(f.gauss_coef * r2) * assoc_laguerre(f.n_l, f.m_n, f.arg_coef * r2);
}

}  // namespace

std::vector<WaveSample> pncs_wavefunction_su11(int n_l, int m_n, Complex zeta,
                                               const GridSpec& grid) {
    if (n_l < 0 || m_n < 0) throw std::invalid_argument("pncs_wavefunction_su11: negative label");
    if (std::abs(zeta) >= 1.0)
        throw std::domain_error("pncs_wavefunction_su11: |zeta| >= 1");
    const PolarGrid& g = as_polar(grid);

    std::vector<WaveSample> samples;
    samples.reserve(g.rho.size() * g.phi.size());

    if (zeta == Complex(0.0)) {
        for (double rho : g.rho)
            for (double phi : g.phi)
                samples.push_back({{rho, phi}, ho2d(n_l, m_n, rho, phi)});
        return samples;
    }

    const Su11ClosedForm f = su11_closed_form(n_l, m_n, zeta);
    for (double rho : g.rho)
        for (double phi : g.phi)
            samples.push_back({{rho, phi}, eval_closed(f, rho, phi)});
    return samples;
}

std::vector<WaveSample> pncs_wavefunction_su2(int n_l, int m_n, Complex zeta,
                                              const GridSpec& grid) {
    if (n_l < 0 || m_n < 0) throw std::invalid_argument("pncs_wavefunction_su2: negative label");
    const PolarGrid& g = as_polar(grid);

    const double j = n_l + 0.5 * m_n;
    const double mu = 0.5 * m_n;
    const double eta = std::log(1.0 + std::norm(zeta));

    // Finite double sum, directly from the closed expression. m' = m_n-2n+2s
    // is the target angular momentum; nu = n_l+n-s the formal radial index.
    // Negative Laguerre upper indices are reduced via
    //   L_nu^{m'}(x) = (-x)^{-m'} (nu+m')!/nu! L_{nu+m'}^{-m'}(x).
    struct Term {
        Complex coef;
        int lag_n, lag_m;  // L_{lag_n}^{lag_m}(rho^2)
        int rho_pow;
        int m_p;
    };
    std::vector<Term> terms;
    const int n_max = static_cast<int>(std::lround(j + mu));
    for (int n = 0; n <= n_max; ++n) {
        const int s_max = static_cast<int>(std::lround(j - mu)) + n;
        for (int s = 0; s <= s_max; ++s) {
            const int m_p = m_n - 2 * n + 2 * s;
            const int nu = n_l + n - s;
            const double sign = ((n_l + n - s) % 2 == 0) ? 1.0 : -1.0;
            Complex coef = std::pow(zeta, s) / std::exp(lg(s + 1.0)) *
                           std::pow(-std::conj(zeta), n) / std::exp(lg(n + 1.0)) *
                           std::exp(eta * (mu - n)) * sign *
                           std::exp(lg(n_l + n + 1.0) - lg(n_l + m_n - n + 1.0)) *
                           std::exp(0.5 * (lg(n_l + m_n + 1.0) - lg(n_l + 1.0)));
            Term t{coef, nu, m_p, m_p, m_p};
            if (m_p < 0) {
                t.lag_n = nu + m_p;  // = j + mu' >= 0
                t.lag_m = -m_p;
                t.rho_pow = -m_p;
                const double parity = (m_p % 2 == 0) ? 1.0 : -1.0;
                t.coef *= parity * std::exp(lg(t.lag_n + 1.0) - lg(nu + 1.0));
            }
            terms.push_back(t);
        }
    }

    std::vector<WaveSample> samples;
    samples.reserve(g.rho.size() * g.phi.size());
    for (double rho : g.rho)
        for (double phi : g.phi) {
            const double r2 = rho * rho;
            Complex psi(0.0);
            for (const auto& t : terms)
                psi += t.coef * std::pow(rho, t.rho_pow) * assoc_laguerre(t.lag_n, t.lag_m, r2) *
                       std::exp(Complex(0.0, t.m_p * phi));
            psi *= std::exp(-0.5 * r2) / std::sqrt(M_PI);
            samples.push_back({{rho, phi}, psi});
        }
    return samples;
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double bk = k / std::sqrt(4.0 * k * k - 1.0);
        jac(k, k - 1) = bk;
        jac(k - 1, k) = bk;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jac);
    nodes.resize(n);
    weights.resize(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        nodes[i] = mid + half * solver.eigenvalues()[i];
        weights[i] = 2.0 * half * solver.eigenvectors()(0, i) * solver.eigenvectors()(0, i);
    }
}

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n < 1");
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double bk = std::sqrt(0.5 * k);
        jac(k, k - 1) = bk;
        jac(k - 1, k) = bk;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jac);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = solver.eigenvalues()[i];
        weights[i] =
            std::sqrt(M_PI) * solver.eigenvectors()(0, i) * solver.eigenvectors()(0, i);
    }
}

double quadrature_norm_1d(const std::function<double(double)>& psi, int n_nodes) {
    std::vector<double> x, w;
    gauss_hermite(n_nodes, x, w);
    double sum = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        const double v = psi(x[i]);
        sum += w[i] * std::exp(x[i] * x[i]) * v * v;  // restore the e^{-x^2} weight
    }
    return sum;
}

double quadrature_norm_polar(const std::function<Complex(double, double)>& psi,
                             double rho_max, int n_rho, int n_phi) {
    return polar_inner_product(psi, psi, rho_max, n_rho, n_phi).real();
}

Complex polar_inner_product(const std::function<Complex(double, double)>& f,
                            const std::function<Complex(double, double)>& g,
                            double rho_max, int n_rho, int n_phi) {
    std::vector<double> r, wr;
    gauss_legendre(n_rho, 0.0, rho_max, r, wr);
    const double dphi = 2.0 * M_PI / n_phi;
    Complex sum(0.0);
    for (int i = 0; i < n_rho; ++i)
        for (int k = 0; k < n_phi; ++k) {
            const double phi = k * dphi;
            sum += wr[i] * dphi * r[i] * std::conj(f(r[i], phi)) * g(r[i], phi);
        }
    return sum;
}

}  // namespace tc
