#ifndef JACEXP_JACOBI_HPP
#define JACEXP_JACOBI_HPP

#include <vector>

#include "jacexp/params.hpp"

namespace jacexp {

/// Diagonal (a) and off-diagonal (b) entries of the symmetric tridiagonal
/// recurrence matrix for the orthonormal Jacobi polynomials:
///   b_n Ptilde_{n+1} = (t - a_n) Ptilde_n - b_{n-1} Ptilde_{n-1}.
/// Also the input to the Golub-Welsch quadrature construction.
struct RecurrenceCoefficients {
    std::vector<double> a;
    std::vector<double> b;
};

RecurrenceCoefficients recurrence_coefficients(const JacobiParams& params, int count);

/// Classical Jacobi polynomial P_n(t) via the three-term recurrence in n.
/// Throws std::domain_error for t outside [-1, 1].
double eval_jacobi(const JacobiParams& params, int n, double t);

/// P_0(t) .. P_N(t) in one recurrence pass.
std::vector<double> eval_jacobi_all(const JacobiParams& params, int degree, double t);

/// Orthonormal polynomial Ptilde_n(t) = P_n(t) / h_n.
double eval_orthonormal(const JacobiParams& params, int n, double t);

/// Ptilde_0(t) .. Ptilde_N(t), evaluated with the orthonormal recurrence
/// (normalization never forms the unnormalized values, so no overflow at
/// large n). Writes degree+1 values into out.
void eval_orthonormal_all(const JacobiParams& params, int degree, double t, std::vector<double>& out);
std::vector<double> eval_orthonormal_all(const JacobiParams& params, int degree, double t);

/// Repeated-evaluation form of eval_orthonormal_all: precomputes the
/// recurrence coefficients once for a fixed degree.
class OrthonormalEvaluator {
  public:
    OrthonormalEvaluator(const JacobiParams& params, int degree);

    /// Fills out[0..degree] with Ptilde_n(t).
    void eval(double t, std::vector<double>& out) const;

    /// Sum of coeffs[n] * Ptilde_n(t) for n = 0..min(degree, coeffs.size()-1).
    double dot(double t, const std::vector<double>& coeffs) const;

    int degree() const { return degree_; }

  private:
    int degree_;
    double p0_;
    RecurrenceCoefficients rc_;
};

/// Ptilde_n(1) from the closed form P_n(1) = Gamma(n+alpha+1) / (Gamma(alpha+1) n!),
/// computed in log space. This is the sup norm of Ptilde_n when max(alpha,beta)
/// is alpha and alpha >= -1/2.
double endpoint_value(const JacobiParams& params, int n);

/// Evaluation grid for sup-norm estimates of a degree-n polynomial:
/// max(64, 10n+1) Chebyshev points plus both endpoints, ascending.
std::vector<double> chebyshev_grid(int degree);

/// Grid sup of |Ptilde_n| over chebyshev_grid(n).
double sup_norm_orthonormal(const JacobiParams& params, int n);

}  // namespace jacexp

#endif
