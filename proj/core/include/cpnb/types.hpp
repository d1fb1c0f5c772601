#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpnb {

using Complex = std::complex<double>;

/// Point of CP^n in the standard affine chart: z in C^n represents the
/// homogeneous line [1 : z_1 : ... : z_n].
using ProjectivePoint = std::vector<Complex>;

/// Index triple of a generalized Bergman space: complex dimension n >= 1,
/// integer magnetic strength 2*nu >= 0, Landau level m >= 0.
struct LevelParams {
  int n = 1;
  int two_nu = 0;
  int m = 0;

  double nu() const { return 0.5 * two_nu; }

  void validate() const {
    if (n < 1) throw std::invalid_argument("LevelParams: n must be >= 1");
    if (two_nu < 0) throw std::invalid_argument("LevelParams: two_nu must be >= 0");
    if (m < 0) throw std::invalid_argument("LevelParams: m must be >= 0");
  }
};

/// Degree/exponent triple of a Jacobi polynomial P_k^{(alpha,beta)}.
struct JacobiIndex {
  int degree = 0;
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const {
    if (degree < 0) throw std::invalid_argument("JacobiIndex: degree must be >= 0");
    if (!(alpha > -1.0) || !(beta > -1.0))
      throw std::invalid_argument("JacobiIndex: alpha and beta must be > -1");
  }
};

/// Parameters of the double hypergeometric series F^{2:2,2}_{2:1,1} at (1,1):
/// sum over l,s of
///   (a1)_{l+s}(a2)_{l+s} / ((c1)_{l+s}(c2)_{l+s})
///   * (b1)_l(b2)_l(b3)_s(b4)_s / ((d1)_l (d2)_s l! s!).
/// Termination requires one of b1,b2 and one of b3,b4 to be a nonpositive
/// integer.
struct KdFParams {
  double a1, a2;
  double b1, b2, b3, b4;
  double c1, c2;
  double d1, d2;
};

/// A series denominator Pochhammer vanished at or before the terminating
/// index: the 0*inf regime of the truncated expansions. Callers that probe
/// past the support catch this and record the entry as undefined.
class DegenerateParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Clamp the chord variable x = cos(2 d_FS) to [-1,1]. Floating excursions up
/// to 1e-12 are absorbed; anything larger is a caller bug.
inline double clamp_chord(double x) {
  if (x > 1.0) {
    if (x > 1.0 + 1e-12) throw std::domain_error("chord value outside [-1,1]");
    return 1.0;
  }
  if (x < -1.0) {
    if (x < -1.0 - 1e-12) throw std::domain_error("chord value outside [-1,1]");
    return -1.0;
  }
  return x;
}

}  // namespace cpnb
