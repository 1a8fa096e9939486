#pragma once

#include "tclab/fock.hpp"
#include "tclab/types.hpp"

namespace tc {

/// Energy value with a non-real flag. When the radicand of an analytic
/// spectrum goes negative the value carries the real part and the
/// imaginary magnitude instead of failing.
struct Energy {
    double value{0.0};
    bool is_real{true};
    double imag_magnitude{0.0};
};

struct QuantumNumbersSU11 {
    int n_a{0};
    int n_l{0};
    int m_n{0};  // >= 0 in this representation; k = (m_n+1)/2
};

struct QuantumNumbersNM {
    int n_c{0}, n_1{0}, n_2{0};
};

struct QuantumNumbersSU2 {
    int n_c{0};
    int n_l{0};
    int m_n{0};  // j = n_l + m_n/2, mu = m_n/2
};

/// Bogoliubov squeeze parameter r = (1/2) ln[(w + |g| sqrt(n_a)) / (w - |g| sqrt(n_a))]
/// at the number-operator eigenvalue n_a. Requires omega2 == omega3.
/// domain_ok is false at or beyond the log singularity |g| sqrt(n_a) >= w.
struct BogoliubovParams {
    double r{0.0};
    bool domain_ok{true};
};
BogoliubovParams bogoliubov_params(const ModelParams& params, int n_a);

/// E = sqrt(w^2 - g^2 n_a)(n_abar + n_d + 1) + w1 n_a - w, omega2 == omega3 == w.
Energy energy_bogoliubov(const ModelParams& params, int n_a, int n_abar, int n_d);

/// E = sqrt((w2+w3)^2 - 4 g^2 n_a)(n_l + m_n/2 + 1/2) + w1 n_a
///     + (w3-w2) m_n/2 - (w2+w3)/2
Energy energy_su11(const ModelParams& params, const QuantumNumbersSU11& q);

/// theta = artanh(2 g sqrt(n_a) / (w2+w3)); domain_ok false at the
/// singularity |2 g sqrt(n_a)| >= w2+w3.
struct TiltParams {
    double theta{0.0};
    bool domain_ok{true};
};
TiltParams tilt_params_su11(const ModelParams& params, int n_a);

/// Normal-mode mixing coefficients at c-number eigenvalue n_c:
///   Omega = sqrt(Delta^2 + 4 g^2 n_c), Delta = w1 - w2,
///   |Y|^2 = (Omega-Delta)/(2 Omega), |X|^2 = (Omega+Delta)/(2 Omega).
/// Omega = 0 falls back to the identity transformation X2=1, Y2=0.
struct NormalModeCoeffs {
    double x2{1.0}, y2{0.0}, omega{0.0};
};
NormalModeCoeffs normal_mode_coeffs(const ModelParams& params, int n_c);

enum class DeltaSign { Paper, Alt };

/// E = (1/2) sqrt((w2-w1)^2 + 4 g^2 N_c)(N_1 - N_2)
///     + ((w2-w1)/2)(N_1 + N_2) + w3 N_c, as printed.
/// DeltaSign::Alt evaluates the (N_1+N_2) prefactor with (w1-w2)/2 instead,
/// matching the in-text detuning definition.
Energy energy_normal_mode(const ModelParams& params, const QuantumNumbersNM& q,
                          DeltaSign sign = DeltaSign::Paper);

/// E = (1/2) sqrt((w2-w1)^2 + 4 g^2 n_c) m_n + (w2+w1)(n_l + m_n/2) + w3 n_c
Energy energy_su2(const ModelParams& params, const QuantumNumbersSU2& q);

/// theta = arctan2(2 g sqrt(n_c), w2 - w1), continuous through resonance.
TiltParams tilt_params_su2(const ModelParams& params, int n_c);

/// <H_su(1,1)>_alpha = (1/2) sqrt((w2+w3)^2 - 4 g^2 |alpha|^2)(n+1)
///     + w1 |alpha|^2 + (w3-w2) m_n/2 - (w2+w3)/2
Energy expval_su11(const ModelParams& params, Complex alpha, int n, int m_n);

/// <H_su(2)>_beta = (1/2) sqrt((w2-w1)^2 + 4 g^2 |beta|^2) m'
///     + ((w2+w1)/2) n' + w3 |beta|^2
Energy expval_su2(const ModelParams& params, Complex beta, int n_prime, int m_prime);

/// Isotropic matching |alpha| = |beta| / sqrt(1 - (g/omega)^2); requires g < omega.
double matching_alpha(double g, double omega, double beta_abs);

}  // namespace tc
