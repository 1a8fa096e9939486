#include "tclab/spectra.hpp"

#include <cmath>

namespace tc {

namespace {

constexpr double kFreqTol = 1e-12;

void require_degenerate(const ModelParams& p, const char* who) {
    if (std::abs(p.omega2 - p.omega3) > kFreqTol)
        throw MethodInapplicable(std::string(who) + ": requires omega2 == omega3");
}

void validate_frequencies(const ModelParams& p) {
    if (p.omega1 <= 0.0 || p.omega2 <= 0.0 || p.omega3 <= 0.0)
        throw std::invalid_argument("ModelParams: frequencies must be positive");
}

Energy from_radicand(double radicand, double multiplier, double rest) {
    Energy e;
    if (radicand >= 0.0) {
        e.value = std::sqrt(radicand) * multiplier + rest;
    } else {
        e.value = rest;
        e.is_real = false;
        e.imag_magnitude = std::sqrt(-radicand) * std::abs(multiplier);
    }
    return e;
}

}  // namespace

BogoliubovParams bogoliubov_params(const ModelParams& params, int n_a) {
    validate_frequencies(params);
    require_degenerate(params, "bogoliubov_params");
    if (n_a < 0) throw std::invalid_argument("bogoliubov_params: n_a < 0");

    const double w = params.omega2;
    const double s = std::abs(params.g) * std::sqrt(double(n_a));  // sqrt(beta^dag beta) eigenvalue
    BogoliubovParams out;
    if (s >= w) {
        out.domain_ok = false;
        return out;
    }
    out.r = 0.5 * std::log((w + s) / (w - s));
    return out;
}

Energy energy_bogoliubov(const ModelParams& params, int n_a, int n_abar, int n_d) {
    validate_frequencies(params);
    require_degenerate(params, "energy_bogoliubov");
    if (n_a < 0 || n_abar < 0 || n_d < 0)
        throw std::invalid_argument("energy_bogoliubov: negative quantum number");

    const double w = params.omega2;
    const double radicand = w * w - params.g * params.g * n_a;
    return from_radicand(radicand, n_abar + n_d + 1.0, params.omega1 * n_a - w);
}

Energy energy_su11(const ModelParams& params, const QuantumNumbersSU11& q) {
    validate_frequencies(params);
    if (q.n_a < 0 || q.n_l < 0 || q.m_n < 0)
        throw std::invalid_argument("energy_su11: negative quantum number");

    const double ws = params.omega2 + params.omega3;
    const double radicand = ws * ws - 4.0 * params.g * params.g * q.n_a;
    const double rest = params.omega1 * q.n_a +
                        0.5 * (params.omega3 - params.omega2) * q.m_n - 0.5 * ws;
    return from_radicand(radicand, q.n_l + 0.5 * q.m_n + 0.5, rest);
}

TiltParams tilt_params_su11(const ModelParams& params, int n_a) {
    validate_frequencies(params);
    if (n_a < 0) throw std::invalid_argument("tilt_params_su11: n_a < 0");

    const double ws = params.omega2 + params.omega3;
    const double x = 2.0 * params.g * std::sqrt(double(n_a));
    TiltParams out;
    if (std::abs(x) >= ws) {
        out.domain_ok = false;
        return out;
    }
    out.theta = std::atanh(x / ws);
    return out;
}

NormalModeCoeffs normal_mode_coeffs(const ModelParams& params, int n_c) {
    validate_frequencies(params);
    if (n_c < 0) throw std::invalid_argument("normal_mode_coeffs: n_c < 0");

    const double delta = params.omega1 - params.omega2;
    const double omega = std::sqrt(delta * delta + 4.0 * params.g * params.g * n_c);
    NormalModeCoeffs out;
    out.omega = omega;
    if (omega == 0.0) return out;  // identity transformation by convention
    // (Omega+Delta)/(2 Omega) equals 2 g^2 n_c / (Omega (Omega-Delta)) with
    // the removable singularity at n_c = 0 already cancelled.
    out.x2 = 0.5 * (omega + delta) / omega;
    out.y2 = 0.5 * (omega - delta) / omega;
    return out;
}

Energy energy_normal_mode(const ModelParams& params, const QuantumNumbersNM& q,
                          DeltaSign sign) {
    validate_frequencies(params);
    if (q.n_c < 0 || q.n_1 < 0 || q.n_2 < 0)
        throw std::invalid_argument("energy_normal_mode: negative quantum number");

    const double d21 = params.omega2 - params.omega1;
    const double omega = std::sqrt(d21 * d21 + 4.0 * params.g * params.g * q.n_c);
    const double sym = sign == DeltaSign::Paper ? 0.5 * d21 : -0.5 * d21;
    Energy e;
    e.value = 0.5 * omega * (q.n_1 - q.n_2) + sym * (q.n_1 + q.n_2) + params.omega3 * q.n_c;
    return e;
}

Energy energy_su2(const ModelParams& params, const QuantumNumbersSU2& q) {
    validate_frequencies(params);
    const double j = q.n_l + 0.5 * q.m_n;
    if (q.n_c < 0 || j < std::abs(0.5 * q.m_n) - 1e-12)
        throw std::invalid_argument("energy_su2: invalid multiplet");

    const double d21 = params.omega2 - params.omega1;
    const double omega = std::sqrt(d21 * d21 + 4.0 * params.g * params.g * q.n_c);
    Energy e;
    e.value = 0.5 * omega * q.m_n + (params.omega2 + params.omega1) * (q.n_l + 0.5 * q.m_n) +
              params.omega3 * q.n_c;
    return e;
}

TiltParams tilt_params_su2(const ModelParams& params, int n_c) {
    validate_frequencies(params);
    if (n_c < 0) throw std::invalid_argument("tilt_params_su2: n_c < 0");

    TiltParams out;
    out.theta = std::atan2(2.0 * params.g * std::sqrt(double(n_c)),
                           params.omega2 - params.omega1);
    return out;
}

Energy expval_su11(const ModelParams& params, Complex alpha, int n, int m_n) {
    validate_frequencies(params);
    if (n < 0) throw std::invalid_argument("expval_su11: n < 0");

    const double a2 = std::norm(alpha);
    const double ws = params.omega2 + params.omega3;
    const double radicand = ws * ws - 4.0 * params.g * params.g * a2;
    const double rest = params.omega1 * a2 +
                        0.5 * (params.omega3 - params.omega2) * m_n - 0.5 * ws;
    return from_radicand(radicand, 0.5 * (n + 1.0), rest);
}

Energy expval_su2(const ModelParams& params, Complex beta, int n_prime, int m_prime) {
    validate_frequencies(params);
    const double b2 = std::norm(beta);
    const double d21 = params.omega2 - params.omega1;
    const double omega = std::sqrt(d21 * d21 + 4.0 * params.g * params.g * b2);
    Energy e;
    e.value = 0.5 * omega * m_prime + 0.5 * (params.omega2 + params.omega1) * n_prime +
              params.omega3 * b2;
    return e;
}

double matching_alpha(double g, double omega, double beta_abs) {
    if (omega <= 0.0) throw std::invalid_argument("matching_alpha: omega must be positive");
    const double ratio = g / omega;
    if (std::abs(ratio) >= 1.0)
        throw std::domain_error("matching_alpha: requires |g| < omega");
    return beta_abs / std::sqrt(1.0 - ratio * ratio);
}

}  // namespace tc
