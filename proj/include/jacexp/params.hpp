#ifndef JACEXP_PARAMS_HPP
#define JACEXP_PARAMS_HPP

#include <cmath>
#include <stdexcept>

namespace jacexp {

/// Parameter pair (alpha, beta) of a Jacobi weight w(t) = (1-t)^alpha (1+t)^beta
/// on [-1,1]. Both exponents must exceed -1 or the weight is not integrable.
struct JacobiParams {
    double alpha;
    double beta;

    JacobiParams(double a, double b) : alpha(a), beta(b) {
        if (!std::isfinite(a) || !std::isfinite(b) || a <= -1.0 || b <= -1.0)
            throw std::invalid_argument("JacobiParams: alpha and beta must be finite and > -1");
    }

    JacobiParams swapped() const { return {beta, alpha}; }

    bool operator==(const JacobiParams& o) const { return alpha == o.alpha && beta == o.beta; }
};

/// Growth exponent sigma = max(0, 1/2 + max(alpha, beta)); the sup norm of the
/// n-th orthonormal polynomial grows like n^sigma.
inline double sigma(const JacobiParams& p) {
    return std::max(0.0, 0.5 + std::max(p.alpha, p.beta));
}

/// Jacobi weight evaluated at t in (-1, 1). Infinite at an endpoint with a
/// negative exponent; callers integrate through such points, never evaluate.
inline double jacobi_weight(const JacobiParams& p, double t) {
    return std::pow(1.0 - t, p.alpha) * std::pow(1.0 + t, p.beta);
}

/// Total mass of the weight: integral of w over [-1,1]
///   = 2^(alpha+beta+1) Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+2).
inline double weight_mass(const JacobiParams& p) {
    const double lg = (p.alpha + p.beta + 1.0) * std::log(2.0) + std::lgamma(p.alpha + 1.0) +
                      std::lgamma(p.beta + 1.0) - std::lgamma(p.alpha + p.beta + 2.0);
    return std::exp(lg);
}

/// log of h_n, the L2(w) norm of the classical Jacobi polynomial P_n.
/// Computed from log-gamma differences; finite for any n and alpha, beta > -1.
/// The n = 0 case is folded into Gamma(alpha+beta+2) so every gamma argument
/// stays positive even when alpha + beta + 1 < 0.
inline double log_norm_constant(const JacobiParams& p, int n) {
    if (n < 0) throw std::invalid_argument("log_norm_constant: n must be >= 0");
    const double a = p.alpha, b = p.beta;
    double lg;
    if (n == 0) {
        lg = (a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
             std::lgamma(a + b + 2.0);
    } else {
        lg = (a + b + 1.0) * std::log(2.0) + std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) -
             std::log(2.0 * n + a + b + 1.0) - std::lgamma(n + 1.0) - std::lgamma(n + a + b + 1.0);
    }
    return 0.5 * lg;
}

/// h_n itself.
inline double norm_constant(const JacobiParams& p, int n) {
    return std::exp(log_norm_constant(p, n));
}

}  // namespace jacexp

#endif
