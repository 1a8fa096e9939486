#pragma once

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "tclab/types.hpp"

namespace tc {

/// Physicists' Hermite polynomial H_n(x), three-term recurrence.
double hermite(int n, double x);

/// Associated Laguerre L_n^m(x), recurrence in n. The complex-argument
/// overload serves the displaced-state closed forms.
double assoc_laguerre(int n, int m, double x);
Complex assoc_laguerre(int n, int m, Complex x);

/// Normalized 1D oscillator eigenfunction (unit mass/frequency, hbar = 1),
/// evaluated by the normalized recurrence (stable for large n).
double ho1d(int n, double x);

/// 2D oscillator eigenfunction psi_{n_l,m_n}(rho, phi), m_n >= 0:
///   (1/sqrt(pi)) e^{i m_n phi} (-1)^{n_l} sqrt(n_l!/(n_l+m_n)!)
///   rho^{m_n} L_{n_l}^{m_n}(rho^2) e^{-rho^2/2}
/// Orthonormal under the measure rho drho dphi.
Complex ho2d(int n_l, int m_n, double rho, double phi);

/// Same family with signed angular momentum m; the radial index n_r counts
/// nodes, total quanta N = 2 n_r + |m|.
Complex ho2d_signed(int n_r, int m, double rho, double phi);

struct CartesianGrid {
    std::vector<double> x;
};
struct PolarGrid {
    std::vector<double> rho;
    std::vector<double> phi;
    static PolarGrid uniform(double rho_max, int n_rho, int n_phi);
};
using GridSpec = std::variant<CartesianGrid, PolarGrid>;

struct WaveSample {
    std::array<double, 2> coords;  // (x, 0) or (rho, phi)
    Complex psi;
};

/// su(1,1) Perelomov number coherent state of the 2D oscillator on a polar
/// grid, evaluated through the Gaussian-Laguerre closed form (defined for
/// every |zeta| < 1).
std::vector<WaveSample> pncs_wavefunction_su11(int n_l, int m_n, Complex zeta,
                                               const GridSpec& grid);

/// su(2) Perelomov number coherent state of the 2D oscillator (finite
/// double sum) on a polar grid.
std::vector<WaveSample> pncs_wavefunction_su2(int n_l, int m_n, Complex zeta,
                                              const GridSpec& grid);

/// Gauss-Legendre nodes/weights on [a, b] (Golub-Welsch).
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);
/// Gauss-Hermite nodes/weights for weight e^{-x^2} on the real line.
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// integral |psi(x)|^2 dx by Gauss-Hermite quadrature (weight restored).
double quadrature_norm_1d(const std::function<double(double)>& psi, int n_nodes = 96);

/// integral |psi(rho,phi)|^2 rho drho dphi, Gauss-Legendre radial on
/// [0, rho_max], trapezoid (periodic) angular.
double quadrature_norm_polar(const std::function<Complex(double, double)>& psi,
                             double rho_max = 9.0, int n_rho = 96, int n_phi = 128);

/// integral conj(f) g rho drho dphi, same rule as quadrature_norm_polar.
Complex polar_inner_product(const std::function<Complex(double, double)>& f,
                            const std::function<Complex(double, double)>& g,
                            double rho_max = 9.0, int n_rho = 96, int n_phi = 128);

}  // namespace tc
