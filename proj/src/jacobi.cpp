#include "jacexp/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jacexp {

namespace {

void check_domain(double t) {
    if (!(t >= -1.0 && t <= 1.0))
        throw std::domain_error("jacobi evaluation requires t in [-1, 1]");
}

}  // namespace

RecurrenceCoefficients recurrence_coefficients(const JacobiParams& params, int count) {
    const double a = params.alpha, b = params.beta;
    RecurrenceCoefficients rc;
    rc.a.resize(count);
    rc.b.resize(count);
    if (count == 0) return rc;

    const double ab = a + b;
    rc.a[0] = (b - a) / (ab + 2.0);
    rc.b[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((ab + 3.0) * (ab + 2.0) * (ab + 2.0)));
    for (int i = 1; i < count; ++i) {
        const double k = i + 1.0;          // index of b_i in the 1-based classical formula
        const double d = 2.0 * k + ab;     // 2(i+1) + alpha + beta
        rc.a[i] = (b * b - a * a) / ((d - 2.0) * d);
        rc.b[i] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + ab) / ((d * d - 1.0) * d * d));
    }
    return rc;
}

double eval_jacobi(const JacobiParams& params, int n, double t) {
    check_domain(t);
    if (n < 0) throw std::invalid_argument("eval_jacobi: n must be >= 0");
    const double a = params.alpha, b = params.beta;
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * ((a + b + 2.0) * t + (a - b));
    const double ab = a + b;
    for (int q = 2; q <= n; ++q) {
        // 2q(q+ab)(2q+ab-2) P_q = (2q+ab-1)[(2q+ab)(2q+ab-2) t + a^2-b^2] P_{q-1}
        //                         - 2(q+a-1)(q+b-1)(2q+ab) P_{q-2}
        const double c = 2.0 * q + ab;
        const double denom = 2.0 * q * (q + ab) * (c - 2.0);
        const double c1 = (c - 1.0) * (c * (c - 2.0) * t + a * a - b * b);
        const double c2 = 2.0 * (q + a - 1.0) * (q + b - 1.0) * c;
        const double next = (c1 * p - c2 * pm1) / denom;
        pm1 = p;
        p = next;
    }
    return p;
}

std::vector<double> eval_jacobi_all(const JacobiParams& params, int degree, double t) {
    check_domain(t);
    if (degree < 0) throw std::invalid_argument("eval_jacobi_all: degree must be >= 0");
    std::vector<double> out(degree + 1);
    const double a = params.alpha, b = params.beta;
    const double ab = a + b;
    out[0] = 1.0;
    if (degree >= 1) out[1] = 0.5 * ((a + b + 2.0) * t + (a - b));
    for (int q = 2; q <= degree; ++q) {
        const double c = 2.0 * q + ab;
        const double denom = 2.0 * q * (q + ab) * (c - 2.0);
        const double c1 = (c - 1.0) * (c * (c - 2.0) * t + a * a - b * b);
        const double c2 = 2.0 * (q + a - 1.0) * (q + b - 1.0) * c;
        out[q] = (c1 * out[q - 1] - c2 * out[q - 2]) / denom;
    }
    return out;
}

double eval_orthonormal(const JacobiParams& params, int n, double t) {
    return eval_jacobi(params, n, t) / norm_constant(params, n);
}

OrthonormalEvaluator::OrthonormalEvaluator(const JacobiParams& params, int degree)
    : degree_(degree), p0_(1.0 / std::sqrt(weight_mass(params))),
      rc_(recurrence_coefficients(params, degree)) {
    if (degree < 0) throw std::invalid_argument("OrthonormalEvaluator: degree must be >= 0");
}

void OrthonormalEvaluator::eval(double t, std::vector<double>& out) const {
    check_domain(t);
    out.resize(degree_ + 1);
    out[0] = p0_;
    double prev = 0.0;
    for (int n = 0; n < degree_; ++n) {
        const double next = ((t - rc_.a[n]) * out[n] - (n > 0 ? rc_.b[n - 1] : 0.0) * prev) / rc_.b[n];
        prev = out[n];
        out[n + 1] = next;
    }
}

double OrthonormalEvaluator::dot(double t, const std::vector<double>& coeffs) const {
    check_domain(t);
    const int top = std::min<int>(degree_, static_cast<int>(coeffs.size()) - 1);
    double acc = 0.0;
    double cur = p0_, prev = 0.0;
    if (top >= 0) acc = coeffs[0] * cur;
    for (int n = 0; n < top; ++n) {
        const double next = ((t - rc_.a[n]) * cur - (n > 0 ? rc_.b[n - 1] : 0.0) * prev) / rc_.b[n];
        prev = cur;
        cur = next;
        acc += coeffs[n + 1] * cur;
    }
    return acc;
}

void eval_orthonormal_all(const JacobiParams& params, int degree, double t, std::vector<double>& out) {
    OrthonormalEvaluator(params, degree).eval(t, out);
}

std::vector<double> eval_orthonormal_all(const JacobiParams& params, int degree, double t) {
    std::vector<double> out;
    eval_orthonormal_all(params, degree, t, out);
    return out;
}

double endpoint_value(const JacobiParams& params, int n) {
    if (n < 0) throw std::invalid_argument("endpoint_value: n must be >= 0");
    const double log_p1 = std::lgamma(n + params.alpha + 1.0) - std::lgamma(params.alpha + 1.0) -
                          std::lgamma(n + 1.0);
    return std::exp(log_p1 - log_norm_constant(params, n));
}

std::vector<double> chebyshev_grid(int degree) {
    const int m = std::max(64, 10 * degree + 1);
    std::vector<double> grid;
    grid.reserve(m + 2);
    grid.push_back(-1.0);
    for (int k = m; k-- > 0;)
        grid.push_back(std::cos(std::numbers::pi * (k + 0.5) / m));
    grid.push_back(1.0);
    return grid;
}

double sup_norm_orthonormal(const JacobiParams& params, int n) {
    const OrthonormalEvaluator ev(params, n);
    double best = 0.0;
    std::vector<double> vals;
    for (double t : chebyshev_grid(n)) {
        ev.eval(t, vals);
        best = std::max(best, std::abs(vals[n]));
    }
    return best;
}

}  // namespace jacexp
