#pragma once

#include <functional>

#include "cpnb/types.hpp"

namespace cpnb::spectra {

/// Eigenvalue label of -Delta_FS attached to the integer index k: 4k(k+n).
double laplace_eigenvalue(int n, int k);

/// Index/eigenvalue pair for the Fubini-Study Laplacian spectrum.
struct SpectralIndex {
  int k = 0;
  double lambda = 0.0;

  static SpectralIndex make(int n, int k) { return {k, laplace_eigenvalue(n, k)}; }
};

/// dim of the spherical harmonics of bidegree (p,q) in C^n:
/// (p+q+n-1)(p+n-2)!(q+n-2)!/(p!q!(n-1)!(n-2)!). Refuses n = 1, where the
/// formula is undefined.
long long dim_spherical(int n, int p, int q);

/// Dimension of the generalized Bergman space; asserts the closed form lands
/// on an integer.
long long dim_level(const LevelParams& p);

/// Kernel constant c = (2m+2nu+n) Gamma(m+n+2nu) / (pi^n Gamma(m+2nu+1)).
double norm_const_c(const LevelParams& p);

/// Diagonal of the reproducing kernel: N = c (n)_m / m!.
double normalization_N(const LevelParams& p);

/// Reproducing kernel as a function of the chord variable:
/// K(x) = c ((1+x)/2)^nu P_m^{(n-1,2nu)}(x).
double reproducing_kernel(const LevelParams& p, double x);

/// Kernel of the orthogonal projection onto the k-th -Delta_FS eigenspace:
/// psi_n(k;x) = (2k+n) Gamma(n+k) / (pi^n k!) * P_k^{(n-1,0)}(x).
/// (The projector normalization is fixed by idempotence and by the trace
/// identity psi(1) * vol = eigenspace dimension.)
double spectral_function_psi(int n, int k, double x);

/// lambda parameter of the level: 2(m+nu)+n.
double lambda_parameter(const LevelParams& p);

/// Expected eigenvalue of Delta_nu on kernel sections, derived convention:
/// E = n^2 - lambda^2 + 4 nu^2 (equals -4m(m+n) at nu = 0).
double probe_expected_eigenvalue(const LevelParams& p);

/// Single (p,q)-term of the eigenspace expansion with a monomial harmonic:
/// (1+|z|^2)^{-(m+nu)} 2F1(p-m, q-m-2nu; n+p+q; -|z|^2) h(z),
/// h = z_1^p conj(z_2)^q for n >= 2, h = z^p or conj(z)^q for n = 1.
Complex eigenfunction_radial(const LevelParams& p, int pdeg, int qdeg,
                             const ProjectivePoint& z);

using ComplexField = std::function<Complex(const ProjectivePoint&)>;

/// Delta_nu f(z) by second-order central differences on the 2n real
/// coordinates; Wirtinger derivatives assembled from the real partials.
/// Error O(h^2).
Complex apply_delta_nu_fd(const LevelParams& p, const ComplexField& f,
                          const ProjectivePoint& z, double h);

struct EigenvalueProbe {
  double e_hat = 0.0;       // median of (Delta_nu K)/K over the sample points
  double spread = 0.0;      // max relative deviation from the median
  std::size_t points_used = 0;
};

/// Finite-difference eigenvalue probe of the reproducing-kernel section
/// w -> K(cos 2 d_FS(w, 0)). Points where the section vanishes are skipped;
/// all skipped is an error. Step h = 1e-3 (1+|z|) per point.
EigenvalueProbe eigenvalue_probe(const LevelParams& p,
                                 const std::vector<ProjectivePoint>& points);

}  // namespace cpnb::spectra
