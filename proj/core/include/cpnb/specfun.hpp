#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cpnb/types.hpp"

namespace cpnb::specfun {

/// Compensated (Kahan) accumulator used for every terminating series.
template <typename Real = double>
struct KahanAccumulator {
  Real sum{};
  Real comp{};

  void add(Real x) {
    const Real y = x - comp;
    const Real t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  Real value() const { return sum; }
};

using KahanSum = KahanAccumulator<>;

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
/// Throws std::overflow_error if the product leaves the representable range.
double pochhammer(double a, int k);

double factorial(int k);
double binomial(int n, int k);

/// True if x is within 1e-9 of an integer <= 0.
bool is_nonpositive_integer(double x);

/// Sign of Gamma(x) for non-pole x (positive for x > 0, alternating between
/// negative poles).
int gamma_sign(double x);

/// 1/Gamma(x); returns exactly 0 at nonpositive integers.
double inv_gamma(double x);

/// Gamma(num)/Gamma(den) via log-gamma differences with sign tracking.
/// Neither argument may be a pole.
double gamma_ratio(double num, double den);

/// P_k^{(alpha,beta)}(x) by the standard three-term recurrence.
/// x may exceed [-1,1] by at most 1e-12 (clamped).
double jacobi_p(const JacobiIndex& idx, double x);

/// P_k^{(alpha,beta)}(1) = (alpha+1)_k / k!, no recurrence.
double jacobi_p_at_one(const JacobiIndex& idx);

/// Squared L2 norm of P_k^{(alpha,beta)} against (1-x)^alpha (1+x)^beta:
/// 2^{a+b+1}/(2k+a+b+1) * Gamma(k+a+1)Gamma(k+b+1)/(Gamma(k+a+b+1) k!).
double jacobi_norm(const JacobiIndex& idx);

/// Terminating 2F1(a,b;c;x): a or b must be a nonpositive integer.
/// Throws DegenerateParameterError if (c)_j vanishes inside the sum range.
double hyp_2f1_terminating(double a, double b, double c, double x);

/// Terminating 4F3 at argument x; some upper parameter must be a nonpositive
/// integer. Throws DegenerateParameterError on a lower Pochhammer vanishing
/// inside the range (this signals the degenerate k > 2*nu regime upstream).
double hyp_4f3_terminating(const std::array<double, 4>& upper,
                           const std::array<double, 3>& lower, double x);

/// Extended-precision variant: the alternating outer sums built on top of
/// these values cancel heavily, so the intermediate must not round to double.
long double hyp_4f3_terminating_ext(const std::array<double, 4>& upper,
                                    const std::array<double, 3>& lower, double x);

/// Kampe de Feriet double series at (1,1), direct double sum.
double kdf_f2222(const KdFParams& p);

/// Same series reorganized as an outer s-sum of terminating 4F3 values via
/// (a)_{l+s} = (a+s)_l (a)_s. Independent evaluation route used as a
/// cross-check.
double kdf_f2222_nested(const KdFParams& p);

/// Gauss-Jacobi quadrature: exact for polynomials of degree <= 2*size-1
/// against (1-x)^alpha (1+x)^beta on [-1,1].
struct QuadratureRule {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double integrate(const std::function<double(double)>& g) const;
};

/// Golub-Welsch construction: eigenvalues of the symmetric tridiagonal Jacobi
/// matrix give the nodes, squared first eigenvector components the weights.
/// Throws std::runtime_error if the eigenvalue iteration fails to converge.
QuadratureRule gauss_jacobi_rule(int size, double alpha, double beta);

}  // namespace cpnb::specfun
