#ifndef JACEXP_QUADRATURE_HPP
#define JACEXP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "jacexp/params.hpp"

namespace jacexp {

/// Gauss rule for integrals against the Jacobi weight: nodes strictly inside
/// (-1,1) and increasing, weights positive, exact for polynomials up to
/// degree 2m-1.
struct QuadratureRule {
    JacobiParams params;
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Build the m-point Gauss-Jacobi rule by diagonalizing the symmetric
/// tridiagonal recurrence matrix (Golub-Welsch). Throws std::runtime_error if
/// the eigensolve fails to converge.
QuadratureRule gauss_jacobi_rule(const JacobiParams& params, int m);

/// Number of nodes needed to integrate a polynomial of the given degree
/// exactly, with a small safety margin: ceil((degree+1)/2) + 8.
int rule_size_for_degree(int degree);

/// Sum of weights[i] * f(nodes[i]).
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

struct AdaptiveOptions {
    double rel_tol = 1e-9;
    int initial_nodes = 16;
    int max_nodes = 1 << 14;
};

struct IntegralResult {
    double value = 0.0;
    bool converged = false;
    int nodes_used = 0;
};

/// Adaptive integral of f against the full Jacobi weight: the node count
/// doubles until two successive estimates agree to rel_tol or max_nodes is
/// exceeded (converged = false, best value still returned).
IntegralResult integrate_adaptive(const JacobiParams& params, const std::function<double(double)>& f,
                                  const AdaptiveOptions& opts = {});

/// Adaptive integral of u(t) (1-t)^A (1+t)^B dt over [-1,1], where u is
/// smooth between the given interior breakpoints. Each subinterval is mapped
/// to its own Gauss rule whose weight absorbs the endpoint factor the piece
/// actually touches; the remaining weight factors are smooth on the piece and
/// folded into the integrand. Requires A, B > -1.
IntegralResult weighted_integral(double exponent_right, double exponent_left,
                                 const std::function<double(double)>& u,
                                 const std::vector<double>& breakpoints,
                                 const AdaptiveOptions& opts = {});

namespace detail {
/// Thread-local rule cache; construction is O(m^2), reuse is common.
const QuadratureRule& cached_rule(const JacobiParams& params, int m);
}  // namespace detail

}  // namespace jacexp

#endif
