#include "jacexp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "jacexp/jacobi.hpp"

namespace jacexp {

namespace {

// Implicit-QL diagonalization of a symmetric tridiagonal matrix, with the
// orthogonal transforms accumulated into a single vector z (initially
// sqrt(mass) * e_0), so that on exit z[i] is sqrt(mass) times the first
// component of the i-th normalized eigenvector. Classical IQPACK scheme.
// d: diagonal, e: subdiagonal in e[0..n-2]. Returns false on non-convergence.
bool tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return true;
    const double prec = std::numeric_limits<double>::epsilon();
    const int max_iter = 30;
    e[n - 1] = 0.0;

    for (int l = 1; l <= n; ++l) {
        int iter = 0;
        for (;;) {
            int m;
            for (m = l; m < n; ++m)
                if (std::abs(e[m - 1]) <= prec * (std::abs(d[m - 1]) + std::abs(d[m]))) break;
            double p = d[l - 1];
            if (m == l) break;
            if (++iter > max_iter) return false;

            double g = (d[l] - p) / (2.0 * e[l - 1]);
            double r = std::hypot(g, 1.0);
            g = d[m - 1] - p + e[l - 1] / (g + (g < 0.0 ? -r : r));
            double s = 1.0, c = 1.0;
            p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i - 1];
                const double b = c * e[i - 1];
                if (std::abs(g) <= std::abs(f)) {
                    c = g / f;
                    r = std::hypot(c, 1.0);
                    e[i] = f * r;
                    s = 1.0 / r;
                    c *= s;
                } else {
                    s = f / g;
                    r = std::hypot(s, 1.0);
                    e[i] = g * r;
                    c = 1.0 / r;
                    s *= c;
                }
                g = d[i] - p;
                r = (d[i - 1] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i] = g + p;
                g = c * r - b;
                f = z[i];
                z[i] = s * z[i - 1] + c * f;
                z[i - 1] = c * z[i - 1] - s * f;
            }
            d[l - 1] -= p;
            e[l - 1] = g;
            e[m - 1] = 0.0;
        }
    }

    // Sort eigenvalues ascending, carrying z along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n), zs(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[order[i]];
        zs[i] = z[order[i]];
    }
    d = std::move(ds);
    z = std::move(zs);
    return true;
}

}  // namespace

QuadratureRule gauss_jacobi_rule(const JacobiParams& params, int m) {
    if (m < 1) throw std::invalid_argument("gauss_jacobi_rule: node count must be >= 1");
    const RecurrenceCoefficients rc = recurrence_coefficients(params, m);
    std::vector<double> d = rc.a;
    std::vector<double> e = rc.b;  // only e[0..m-2] belongs to the matrix
    const double mass = weight_mass(params);
    std::vector<double> z(m, 0.0);
    z[0] = std::sqrt(mass);

    if (!tridiag_ql(d, e, z))
        throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigensolve did not converge");

    QuadratureRule rule{params, std::move(d), std::vector<double>(m)};
    double weight_sum = 0.0;
    for (int i = 0; i < m; ++i) {
        rule.weights[i] = z[i] * z[i];
        weight_sum += rule.weights[i];
    }

    for (int i = 0; i < m; ++i) {
        if (!(rule.nodes[i] > -1.0 && rule.nodes[i] < 1.0) || !(rule.weights[i] > 0.0) ||
            (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])))
            throw std::runtime_error("gauss_jacobi_rule: invalid node/weight layout from eigensolve");
    }
    if (std::abs(weight_sum - mass) > 1e-9 * mass)
        throw std::runtime_error("gauss_jacobi_rule: weight sum deviates from the weight mass");
    return rule;
}

int rule_size_for_degree(int degree) {
    return (degree + 2) / 2 + 8;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

namespace detail {

const QuadratureRule& cached_rule(const JacobiParams& params, int m) {
    using Key = std::tuple<double, double, int>;
    thread_local std::map<Key, QuadratureRule> cache;
    const Key key{params.alpha, params.beta, m};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gauss_jacobi_rule(params, m)).first;
    return it->second;
}

}  // namespace detail

namespace {

// One doubling ladder on a fixed rule family. eval(rule) must return the
// estimate and accumulate an absolute-scale figure used in the tolerance.
IntegralResult doubling_ladder(const JacobiParams& params,
                               const std::function<double(double)>& g,
                               const AdaptiveOptions& opts) {
    IntegralResult res;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int m = opts.initial_nodes;; m *= 2) {
        const QuadratureRule& rule = detail::cached_rule(params, m);
        double val = 0.0, abs_val = 0.0;
        for (int i = 0; i < m; ++i) {
            const double fi = g(rule.nodes[i]);
            val += rule.weights[i] * fi;
            abs_val += rule.weights[i] * std::abs(fi);
        }
        res.value = val;
        res.nodes_used = m;
        if (!std::isnan(prev)) {
            const double tol = opts.rel_tol * std::abs(val) + 1e-14 * (1.0 + abs_val);
            if (std::abs(val - prev) <= tol) {
                res.converged = true;
                return res;
            }
        }
        if (2 * m > opts.max_nodes) return res;
        prev = val;
    }
}

}  // namespace

IntegralResult integrate_adaptive(const JacobiParams& params, const std::function<double(double)>& f,
                                  const AdaptiveOptions& opts) {
    return doubling_ladder(params, f, opts);
}

IntegralResult weighted_integral(double exponent_right, double exponent_left,
                                 const std::function<double(double)>& u,
                                 const std::vector<double>& breakpoints, const AdaptiveOptions& opts) {
    if (exponent_right <= -1.0 || exponent_left <= -1.0)
        throw std::invalid_argument("weighted_integral: endpoint exponents must be > -1");

    std::vector<double> cuts;
    for (double b : breakpoints)
        if (b > -1.0 && b < 1.0) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<double> edges{-1.0};
    edges.insert(edges.end(), cuts.begin(), cuts.end());
    edges.push_back(1.0);

    IntegralResult total{0.0, true, 0};
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double a = edges[k], b = edges[k + 1];
        const bool right_end = (b == 1.0), left_end = (a == -1.0);
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        const JacobiParams piece_params(right_end ? exponent_right : 0.0,
                                        left_end ? exponent_left : 0.0);
        // Jacobian plus the endpoint factors the mapped rule weight absorbed.
        const double scale = std::pow(half, 1.0 + (right_end ? exponent_right : 0.0) +
                                                (left_end ? exponent_left : 0.0));
        auto g = [&](double s) {
            const double t = mid + half * s;
            double v = u(t);
            if (!right_end) v *= std::pow(1.0 - t, exponent_right);
            if (!left_end) v *= std::pow(1.0 + t, exponent_left);
            return v;
        };
        IntegralResult piece = doubling_ladder(piece_params, g, opts);
        total.value += scale * piece.value;
        total.converged = total.converged && piece.converged;
        total.nodes_used += piece.nodes_used;
    }
    return total;
}

}  // namespace jacexp
