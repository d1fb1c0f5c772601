#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "cpnb/geometry.hpp"
#include "cpnb/types.hpp"

namespace cpnb::berezin {

/// Berezin transform kernel as a function of the chord variable:
/// (c / P_m^{(n-1,2nu)}(1)) ((1+x)/2)^{2nu} [P_m^{(n-1,2nu)}(x)]^2 = K(x)^2/N.
double berezin_kernel(const LevelParams& p, double x);

/// Inverse of Lambda = 4k(k+n): R_n(Lambda) = (sqrt(n^2+Lambda) - n)/2.
/// Exact integer recovery at Lambda = 4k(k+n).
double r_inverse(int n, double lambda);

/// Constant gamma_{n,m,nu} = (2m+2nu+n)(m+2nu+1)_{n-1}((2nu+m)!)^2(n-1)!/((n)_m m!).
double gamma_factor(const LevelParams& p);

/// Closed-form variational weight W(Lambda_k) with the integer index k as
/// primary bookkeeping. Returns exactly 0 for k > 2nu+2m (vanishing 1/Gamma
/// prefactor); throws DegenerateParameterError on the interior 0*inf window
/// 2nu < k <= 2nu+2m that opens for m >= 1.
double w_formula(const LevelParams& p, int k);

/// Ground-truth weight: exact Gauss-Jacobi projection of the Berezin kernel
/// onto the k-th spectral function.
double w_oracle(const LevelParams& p, int k);

struct WRow {
  int k = 0;
  double lambda = 0.0;
  std::optional<double> w_formula;  // empty when the evaluation is degenerate
  double w_oracle = 0.0;
  std::optional<double> residual;   // |w_formula - w_oracle| where both defined
};

struct WTable {
  LevelParams params;
  std::vector<WRow> rows;
  double termination_report = 0.0;  // max |w_oracle| over k > 2nu
};

/// Rows for k = 0..kmax (default 2nu+2m+2). Formula errors are recorded as
/// undefined entries, never silently merged with the oracle.
WTable build_wtable(const LevelParams& p, int kmax = -1);

/// Coefficient check of the Jacobi product linearization
/// t^mu [P_m^{(a1,b)}(1-2t)]^2 = sum_k coeff_k P_k^{(a,b)}(1-2t):
/// formula coefficients for k <= mu against an exact-rational polynomial
/// projection, plus the total mass sitting above k = mu.
struct LinearizationResult {
  double max_residual_low = 0.0;  // max |formula - exact| over k <= mu
  double residual_tail = 0.0;     // sum of |exact coeff| over k > mu
};
LinearizationResult linearization_check(int alpha1, int beta, int alpha, int mu, int m);

/// sum_k coeffs[k] * psi_n(k; x).
double spectral_synthesis(int n, const std::map<int, double>& coeffs, double x);

/// How a transform value is integrated.
struct IntegrationMethod {
  enum class Kind { radial, monte_carlo };
  Kind kind = Kind::radial;
  int order = 64;                  // radial quadrature order
  std::uint64_t seed = 0;          // monte carlo
  std::size_t samples = 1000000;   // monte carlo

  static IntegrationMethod radial(int order = 64) { return {Kind::radial, order, 0, 0}; }
  static IntegrationMethod monte_carlo(std::uint64_t seed, std::size_t samples) {
    return {Kind::monte_carlo, 0, seed, samples};
  }
};

/// Observable in both shapes: the radial profile g of the chord about the
/// evaluation point (valid only for biinvariant f), and the general point
/// function. Each method requires its shape.
struct Observable {
  std::function<double(double)> radial;
  std::function<double(const ProjectivePoint&)> point;
};

struct TransformResult {
  double value = 0.0;
  std::optional<double> std_error;  // Monte Carlo only
};

/// B[f](z). Radial integrates g against the kernel about z; Monte Carlo
/// averages over the sampled measure. Throws std::invalid_argument on a
/// method/shape mismatch.
TransformResult berezin_apply(const LevelParams& p, const Observable& f,
                              const ProjectivePoint& z, const IntegrationMethod& method);

/// B[f](z) for a biinvariant observable f = g(cos 2 d_FS(z, .)): the radial
/// reduction of the transform integral about the pole z.
double berezin_apply_radial(const LevelParams& p, const std::function<double(double)>& g,
                            int order = 64);

/// B[f](z) for a general bounded observable, Monte Carlo estimate with
/// standard error.
geometry::McEstimate berezin_apply_mc(const LevelParams& p,
                                      const std::function<double(const ProjectivePoint&)>& f,
                                      const ProjectivePoint& z, std::uint64_t seed,
                                      std::size_t samples);

/// Partial Weierstrass product for the n=1, m=0 weight:
/// prod_{p=1}^{P} (1 - k(k+1)/((p+2nu)(p+2nu+1))). Converges to
/// w_formula((1,2nu,0), k) at rate O(1/P).
double weierstrass_w(int two_nu, int k, long long terms);

/// Product route evaluated to the limit: Richardson extrapolation of the
/// partial products at P, 2P, 4P (error O(1/P^3)).
double weierstrass_w_limit(int two_nu, int k, long long base_terms = 100000);

}  // namespace cpnb::berezin
