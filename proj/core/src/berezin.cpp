#include "cpnb/berezin.hpp"

#include <cmath>

#include "cpnb/specfun.hpp"
#include "cpnb/spectra.hpp"
#include "jacobi_rational.hpp"

namespace cpnb::berezin {

using specfun::factorial;
using specfun::jacobi_p;
using specfun::jacobi_p_at_one;
using specfun::KahanSum;
using specfun::pochhammer;

double berezin_kernel(const LevelParams& p, double x) {
  p.validate();
  x = clamp_chord(x);
  const JacobiIndex idx{p.m, p.n - 1.0, static_cast<double>(p.two_nu)};
  const double pm = jacobi_p(idx, x);
  return spectra::norm_const_c(p) / jacobi_p_at_one(idx) *
         std::pow(0.5 * (1.0 + x), p.two_nu) * pm * pm;
}

double r_inverse(int n, double lambda) {
  if (n < 1) throw std::invalid_argument("r_inverse: n must be >= 1");
  if (lambda < 0.0) throw std::invalid_argument("r_inverse: Lambda must be >= 0");
  return 0.5 * (std::sqrt(n * static_cast<double>(n) + lambda) - n);
}

double gamma_factor(const LevelParams& p) {
  p.validate();
  return (2.0 * p.m + p.two_nu + p.n) * pochhammer(p.m + p.two_nu + 1.0, p.n - 1) *
         factorial(p.two_nu + p.m) * factorial(p.two_nu + p.m) * factorial(p.n - 1) /
         (pochhammer(p.n, p.m) * factorial(p.m));
}

double w_formula(const LevelParams& p, int k) {
  p.validate();
  if (k < 0) throw std::invalid_argument("w_formula: k must be >= 0");
  const int tn = p.two_nu;

  if (k > tn) {
    // The 1/Gamma(2nu-k+1) prefactor vanishes. For m >= 1 an interior
    // denominator Pochhammer also vanishes up to k = 2nu+2m; that 0*inf
    // window is an error, not a regularized limit.
    if (p.m >= 1 && k <= tn + 2 * p.m)
      throw DegenerateParameterError(
          "w_formula: interior denominator Pochhammer vanishes in the 2nu < k <= 2nu+2m window");
    return 0.0;
  }

  // The outer sum cancels down by many orders of magnitude for larger m and
  // 2nu; accumulate it in extended precision.
  specfun::KahanAccumulator<long double> ssum;
  for (int s = 0; s <= p.m; ++s) {
    const long double num = static_cast<long double>(pochhammer(-p.m, s)) *
                            pochhammer(tn + 1.0, s) * pochhammer(tn + p.m + p.n, s);
    const long double den = static_cast<long double>(factorial(s)) *
                            pochhammer(tn - k + 1.0, s) * pochhammer(p.n + tn + k + 1.0, s);
    const long double f43 = specfun::hyp_4f3_terminating_ext(
        {static_cast<double>(-p.m), tn + 1.0 + s, tn + 1.0 + s,
         static_cast<double>(tn + p.m + p.n)},
        {tn - k + 1.0 + s, p.n + tn + 1.0 + k + s, tn + 1.0}, 1.0);
    ssum.add(num / den * f43);
  }

  // gamma_{n,m,nu}/(Gamma(n) Gamma(2nu-k+1) Gamma(n+k+2nu+1)); the
  // Gamma(k+1)/Gamma(n+k) of the raw linearization cancels against (n)_k.
  // On the evaluated branch k <= 2nu, so every Gamma argument is a positive
  // integer and the factorials are exact.
  const long double scale =
      static_cast<long double>(gamma_factor(p)) /
      (static_cast<long double>(factorial(p.n - 1)) * factorial(tn - k) *
       factorial(p.n + k + tn));
  return static_cast<double>(scale * ssum.value());
}

double w_oracle(const LevelParams& p, int k) {
  p.validate();
  if (k < 0) throw std::invalid_argument("w_oracle: k must be >= 0");
  const int order = (p.two_nu + 2 * p.m + k) / 2 + 2;  // integrand is polynomial: exact
  const auto rule = specfun::gauss_jacobi_rule(order, p.n - 1.0, 0.0);
  const double proj = rule.integrate([&](double x) {
    return berezin_kernel(p, x) * jacobi_p({k, p.n - 1.0, 0.0}, x);
  });
  // Divide by A_k h_k with A_k = (2k+n)Gamma(n+k)/(pi^n k!) and h_k = 2^n/(2k+n).
  const double a_h = std::pow(2.0, p.n) * pochhammer(k + 1.0, p.n - 1) / std::pow(M_PI, p.n);
  return proj / a_h;
}

WTable build_wtable(const LevelParams& p, int kmax) {
  p.validate();
  if (kmax < 0) kmax = p.two_nu + 2 * p.m + 2;
  WTable table;
  table.params = p;
  table.rows.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    WRow row;
    row.k = k;
    row.lambda = spectra::laplace_eigenvalue(p.n, k);
    row.w_oracle = w_oracle(p, k);
    try {
      row.w_formula = w_formula(p, k);
      row.residual = std::abs(*row.w_formula - row.w_oracle);
    } catch (const DegenerateParameterError&) {
      // recorded as undefined
    }
    if (k > p.two_nu)
      table.termination_report = std::max(table.termination_report, std::abs(row.w_oracle));
    table.rows.push_back(std::move(row));
  }
  return table;
}

LinearizationResult linearization_check(int alpha1, int beta, int alpha, int mu, int m) {
  if (alpha1 < 0 || beta < 0 || alpha < 0 || mu < 0 || m < 0)
    throw std::invalid_argument("linearization_check: nonnegative integer parameters required");

  // Exact side: t^mu [P_m^{(a1,b)}(1-2t)]^2 expanded in P_k^{(a,b)}(1-2t).
  detail::RatPoly lhs{detail::Rational(1)};
  for (int i = 0; i < mu; ++i)
    lhs = detail::mul(lhs, detail::RatPoly{detail::Rational(0), detail::Rational(1)});
  const auto pm = detail::jacobi_shifted(m, alpha1, beta);
  lhs = detail::mul(lhs, detail::mul(pm, pm));
  const auto exact = detail::expand_in_jacobi_basis(lhs, alpha, beta);

  LinearizationResult result;
  const double prefactor =
      pochhammer(alpha + 1.0, mu) * specfun::binomial(alpha1 + m, m) *
      specfun::binomial(alpha1 + m, m);
  for (int k = 0; k < static_cast<int>(exact.size()); ++k) {
    const double exact_k = exact[k].convert_to<double>();
    if (k <= mu) {
      const KdFParams kdf{mu + 1.0,
                          alpha + mu + 1.0,
                          static_cast<double>(-m),
                          alpha1 + beta + m + 1.0,
                          static_cast<double>(-m),
                          alpha1 + beta + m + 1.0,
                          mu - k + 1.0,
                          alpha + beta + mu + 2.0 + k,
                          alpha1 + 1.0,
                          alpha1 + 1.0};
      const double formula_k = prefactor * (alpha + beta + 2.0 * k + 1.0) *
                               pochhammer(static_cast<double>(-mu), k) /
                               (pochhammer(alpha + 1.0, k) *
                                pochhammer(alpha + beta + k + 1.0, mu + 1)) *
                               specfun::kdf_f2222(kdf);
      result.max_residual_low =
          std::max(result.max_residual_low, std::abs(formula_k - exact_k));
    } else {
      result.residual_tail += std::abs(exact_k);
    }
  }
  // Low coefficients absent from the exact expansion (deg < mu) must come out
  // zero on the formula side as well.
  for (int k = static_cast<int>(exact.size()); k <= mu; ++k) {
    const double formula_k = prefactor * (alpha + beta + 2.0 * k + 1.0) *
                             pochhammer(static_cast<double>(-mu), k) /
                             (pochhammer(alpha + 1.0, k) *
                              pochhammer(alpha + beta + k + 1.0, mu + 1)) *
                             specfun::kdf_f2222({mu + 1.0, alpha + mu + 1.0,
                                                 static_cast<double>(-m), alpha1 + beta + m + 1.0,
                                                 static_cast<double>(-m), alpha1 + beta + m + 1.0,
                                                 mu - k + 1.0, alpha + beta + mu + 2.0 + k,
                                                 alpha1 + 1.0, alpha1 + 1.0});
    result.max_residual_low = std::max(result.max_residual_low, std::abs(formula_k));
  }
  return result;
}

double spectral_synthesis(int n, const std::map<int, double>& coeffs, double x) {
  if (n < 1) throw std::invalid_argument("spectral_synthesis: n must be >= 1");
  x = clamp_chord(x);
  KahanSum acc;
  for (const auto& [k, c] : coeffs) {
    if (c == 0.0) continue;
    acc.add(c * spectra::spectral_function_psi(n, k, x));
  }
  return acc.value();
}

TransformResult berezin_apply(const LevelParams& p, const Observable& f,
                              const ProjectivePoint& z, const IntegrationMethod& method) {
  if (method.kind == IntegrationMethod::Kind::radial) {
    if (!f.radial)
      throw std::invalid_argument(
          "berezin_apply: radial method needs a chord profile of the observable");
    return {berezin_apply_radial(p, f.radial, method.order), std::nullopt};
  }
  if (!f.point)
    throw std::invalid_argument("berezin_apply: monte_carlo method needs a point observable");
  const auto est = berezin_apply_mc(p, f.point, z, method.seed, method.samples);
  return {est.value, est.std_error};
}

double berezin_apply_radial(const LevelParams& p, const std::function<double(double)>& g,
                            int order) {
  p.validate();
  return geometry::radial_integral(
      p.n, [&](double x) { return berezin_kernel(p, x) * g(x); }, order);
}

geometry::McEstimate berezin_apply_mc(const LevelParams& p,
                                      const std::function<double(const ProjectivePoint&)>& f,
                                      const ProjectivePoint& z, std::uint64_t seed,
                                      std::size_t samples) {
  p.validate();
  if (static_cast<int>(z.size()) != p.n)
    throw std::invalid_argument("berezin_apply_mc: point dimension mismatch");
  return geometry::mc_integral(p.n, seed, samples, [&](const ProjectivePoint& w) {
    return berezin_kernel(p, geometry::cos2_fs(z, w)) * f(w);
  });
}

double weierstrass_w(int two_nu, int k, long long terms) {
  if (two_nu < 0 || k < 0) throw std::invalid_argument("weierstrass_w: bad parameters");
  if (terms < 1) throw std::invalid_argument("weierstrass_w: need at least one factor");
  const double lam = static_cast<double>(k) * (k + 1.0);
  double prod = 1.0;
  for (long long q = 1; q <= terms; ++q) {
    const double d = (q + static_cast<double>(two_nu)) * (q + two_nu + 1.0);
    prod *= 1.0 - lam / d;
  }
  return prod;
}

double weierstrass_w_limit(int two_nu, int k, long long base_terms) {
  // W_P = W + a/P + b/P^2 + ...; two Richardson steps on (P, 2P, 4P).
  const double w1 = weierstrass_w(two_nu, k, base_terms);
  const double w2 = weierstrass_w(two_nu, k, 2 * base_terms);
  const double w4 = weierstrass_w(two_nu, k, 4 * base_terms);
  const double r1 = 2.0 * w2 - w1;
  const double r2 = 2.0 * w4 - w2;
  return (4.0 * r2 - r1) / 3.0;
}

}  // namespace cpnb::berezin
