#include "cpnb/spectra.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>

#include "cpnb/specfun.hpp"
#include "cpnb/geometry.hpp"

namespace cpnb::spectra {

using specfun::factorial;
using specfun::jacobi_p;
using specfun::pochhammer;

double laplace_eigenvalue(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("laplace_eigenvalue: bad index");
  return 4.0 * k * (k + static_cast<double>(n));
}

long long dim_spherical(int n, int p, int q) {
  if (n < 2)
    throw std::invalid_argument("dim_spherical: undefined for n = 1 (contains (n-2)!)");
  if (p < 0 || q < 0) throw std::invalid_argument("dim_spherical: p,q must be >= 0");

  // (p+q+n-1) C(p+n-2,p) C(q+n-2,q) / (n-1), assembled in integers.
  using Wide = boost::multiprecision::int128_t;
  auto binom = [](long long a, long long b) {
    Wide r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  const Wide num = Wide(p + q + n - 1) * binom(p + n - 2, p) * binom(q + n - 2, q);
  if (num % (n - 1) != 0)
    throw std::logic_error("dim_spherical: non-integral intermediate");
  return static_cast<long long>(num / (n - 1));
}

long long dim_level(const LevelParams& p) {
  p.validate();
  const double log_dim = std::log(2.0 * p.m + p.n + p.two_nu) + std::lgamma(p.m + p.n) +
                         std::lgamma(p.m + p.n + p.two_nu) - std::log(static_cast<double>(p.n)) -
                         2.0 * std::lgamma(p.n) - std::lgamma(p.m + 1.0) -
                         std::lgamma(p.m + p.two_nu + 1.0);
  const double value = std::exp(log_dim);
  const double rounded = std::round(value);
  if (std::abs(value - rounded) >= 1e-6)
    throw std::runtime_error("dim_level: closed form is not an integer (parameter corruption)");
  return static_cast<long long>(rounded);
}

double norm_const_c(const LevelParams& p) {
  p.validate();
  return (2.0 * p.m + p.two_nu + p.n) *
         specfun::gamma_ratio(p.m + p.n + p.two_nu, p.m + p.two_nu + 1.0) /
         std::pow(M_PI, p.n);
}

double normalization_N(const LevelParams& p) {
  return norm_const_c(p) * pochhammer(p.n, p.m) / factorial(p.m);
}

double reproducing_kernel(const LevelParams& p, double x) {
  p.validate();
  x = clamp_chord(x);
  const double cos2d = 0.5 * (1.0 + x);  // cos^2 d_FS, nonnegative
  return norm_const_c(p) * std::pow(cos2d, p.nu()) *
         jacobi_p({p.m, p.n - 1.0, static_cast<double>(p.two_nu)}, x);
}

double spectral_function_psi(int n, int k, double x) {
  if (n < 1 || k < 0) throw std::invalid_argument("spectral_function_psi: bad index");
  x = clamp_chord(x);
  // Gamma(n+k)/k! = (k+1)_{n-1}, an exact small product.
  const double front = (2.0 * k + n) * pochhammer(k + 1.0, n - 1) / std::pow(M_PI, n);
  return front * jacobi_p({k, n - 1.0, 0.0}, x);
}

double lambda_parameter(const LevelParams& p) {
  return 2.0 * (p.m + p.nu()) + p.n;
}

double probe_expected_eigenvalue(const LevelParams& p) {
  const double lam = lambda_parameter(p);
  const double nu = p.nu();
  return p.n * static_cast<double>(p.n) - lam * lam + 4.0 * nu * nu;
}

Complex eigenfunction_radial(const LevelParams& p, int pdeg, int qdeg,
                             const ProjectivePoint& z) {
  p.validate();
  if (static_cast<int>(z.size()) != p.n)
    throw std::invalid_argument("eigenfunction_radial: point dimension mismatch");
  if (pdeg < 0 || pdeg > p.m || qdeg < 0 || qdeg > p.m + p.two_nu)
    throw std::invalid_argument("eigenfunction_radial: (p,q) outside the expansion range");
  if (p.n == 1 && pdeg * qdeg != 0)
    throw std::invalid_argument(
        "eigenfunction_radial: n = 1 supports only pure-power harmonics (p*q = 0)");

  double r2 = 0.0;
  for (const auto& c : z) r2 += std::norm(c);

  const double radial = std::pow(1.0 + r2, -(p.m + p.nu())) *
                        specfun::hyp_2f1_terminating(pdeg - p.m, qdeg - p.m - p.two_nu,
                                                     p.n + pdeg + qdeg, -r2);
  // Harmonic factor, conjugate pairing: the p-index rides on conj(z), the
  // q-index on z. With the +nu(z d/dz - zbar d/dzbar) coupling this is what
  // makes a single term an eigenfunction of the operator (the finite-
  // difference eigencheck is the arbiter; the opposite pairing solves the
  // conjugated problem instead).
  Complex h = 1.0;
  if (p.n == 1) {
    if (pdeg > 0) h = std::pow(std::conj(z[0]), pdeg);
    else if (qdeg > 0) h = std::pow(z[0], qdeg);
  } else {
    h = std::pow(std::conj(z[0]), pdeg) * std::pow(z[1], qdeg);
  }
  return radial * h;
}

namespace {

// Real-coordinate layout: coordinate 2j   = Re z_j, 2j+1 = Im z_j.
ProjectivePoint displaced(const ProjectivePoint& z, int coord, double delta) {
  ProjectivePoint w = z;
  const int j = coord / 2;
  if (coord % 2 == 0)
    w[j] += delta;
  else
    w[j] += Complex(0.0, delta);
  return w;
}

}  // namespace

Complex apply_delta_nu_fd(const LevelParams& p, const ComplexField& f,
                          const ProjectivePoint& z, double h) {
  p.validate();
  if (static_cast<int>(z.size()) != p.n)
    throw std::invalid_argument("apply_delta_nu_fd: point dimension mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("apply_delta_nu_fd: step must be positive");

  const int n = p.n;
  const int dim = 2 * n;
  const Complex f0 = f(z);

  std::vector<Complex> d1(dim), d2(dim);
  std::vector<Complex> plus(dim), minus(dim);
  for (int a = 0; a < dim; ++a) {
    plus[a] = f(displaced(z, a, h));
    minus[a] = f(displaced(z, a, -h));
    d1[a] = (plus[a] - minus[a]) / (2.0 * h);
    d2[a] = (plus[a] - 2.0 * f0 + minus[a]) / (h * h);
  }

  // Mixed second partials d2f/(dx_a dx_b), a < b, four-point stencil.
  std::vector<std::vector<Complex>> mixed(dim, std::vector<Complex>(dim));
  for (int a = 0; a < dim; ++a) mixed[a][a] = d2[a];
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      const Complex fpp = f(displaced(displaced(z, a, h), b, h));
      const Complex fpm = f(displaced(displaced(z, a, h), b, -h));
      const Complex fmp = f(displaced(displaced(z, a, -h), b, h));
      const Complex fmm = f(displaced(displaced(z, a, -h), b, -h));
      mixed[a][b] = mixed[b][a] = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }

  const Complex I(0.0, 1.0);
  // d^2 f / (dz_i dzbar_j) from real partials.
  auto dz_dzbar = [&](int i, int j) {
    const int xi = 2 * i, yi = 2 * i + 1, xj = 2 * j, yj = 2 * j + 1;
    return 0.25 * (mixed[xi][xj] + mixed[yi][yj] + I * (mixed[xi][yj] - mixed[yi][xj]));
  };

  Complex second = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex coeff = (i == j ? 1.0 : 0.0) + z[i] * std::conj(z[j]);
      second += coeff * dz_dzbar(i, j);
    }
  }

  Complex first = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex dz = 0.5 * (d1[2 * j] - I * d1[2 * j + 1]);
    const Complex dzbar = 0.5 * (d1[2 * j] + I * d1[2 * j + 1]);
    first += z[j] * dz - std::conj(z[j]) * dzbar;
  }

  double r2 = 0.0;
  for (const auto& c : z) r2 += std::norm(c);
  const double nu = p.nu();

  return 4.0 * (1.0 + r2) * (second + nu * first - nu * nu * f0) + 4.0 * nu * nu * f0;
}

EigenvalueProbe eigenvalue_probe(const LevelParams& p,
                                 const std::vector<ProjectivePoint>& points) {
  p.validate();
  if (points.size() < 3)
    throw std::invalid_argument("eigenvalue_probe: need at least 3 sample points");

  const ProjectivePoint pole(p.n, Complex(0.0));
  auto section = [&](const ProjectivePoint& w) {
    return Complex(reproducing_kernel(p, geometry::cos2_fs(w, pole)));
  };
  const double scale = std::abs(normalization_N(p));

  std::vector<double> ratios;
  for (const auto& z : points) {
    const double value = reproducing_kernel(p, geometry::cos2_fs(z, pole));
    // Skip points close to a kernel zero: the ratio is meaningless there and
    // the finite-difference noise is amplified by 1/|K|.
    if (std::abs(value) < 0.02 * scale) continue;
    double r2 = 0.0;
    for (const auto& c : z) r2 += std::norm(c);
    const double h = 1e-3 * (1.0 + std::sqrt(r2));
    const Complex lap = apply_delta_nu_fd(p, section, z, h);
    ratios.push_back(std::real(lap) / value);
  }
  if (ratios.empty())
    throw std::runtime_error("eigenvalue_probe: kernel section vanished at every point");

  std::sort(ratios.begin(), ratios.end());
  const std::size_t nr = ratios.size();
  const double median = (nr % 2 == 1) ? ratios[nr / 2]
                                      : 0.5 * (ratios[nr / 2 - 1] + ratios[nr / 2]);
  // Relative deviation; absolute once the eigenvalue sits below 1 (the
  // constant-kernel case has E = 0 exactly).
  double spread = 0.0;
  const double denom = std::max(std::abs(median), 1.0);
  for (double r : ratios) spread = std::max(spread, std::abs(r - median) / denom);
  return {median, spread, nr};
}

}  // namespace cpnb::spectra
