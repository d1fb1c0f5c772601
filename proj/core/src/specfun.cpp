#include "cpnb/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace cpnb::specfun {

namespace {

constexpr double kIntegerTol = 1e-9;

// Index at which a terminating series stops, taken from one nonpositive
// integer parameter: a = -M  =>  terms 0..M.
std::optional<int> termination_index(double a) {
  if (!is_nonpositive_integer(a)) return std::nullopt;
  return static_cast<int>(std::lround(-a));
}

// Smallest termination index among the candidates, if any.
std::optional<int> min_termination(std::initializer_list<double> params) {
  std::optional<int> best;
  for (double a : params) {
    if (auto t = termination_index(a)) {
      if (!best || *t < *best) best = t;
    }
  }
  return best;
}

// (x)_j vanishes for some j <= range iff x is one of 0,-1,...,-(range-1).
bool pochhammer_vanishes_within(double x, int range) {
  if (range <= 0 || !is_nonpositive_integer(x)) return false;
  return static_cast<int>(std::lround(-x)) <= range - 1;
}

// Extended precision for the series: the alternating sums downstream cancel
// by many orders of magnitude.
using KahanExt = KahanAccumulator<long double>;

long double poch_ext(long double a, int k) {
  long double prod = 1.0L;
  for (int i = 0; i < k; ++i) prod *= a + i;
  return prod;
}

}  // namespace

bool is_nonpositive_integer(double x) {
  if (x > 0.5) return false;
  return std::abs(x - std::round(x)) < kIntegerTol;
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: k must be >= 0");
  double prod = 1.0;
  for (int i = 0; i < k; ++i) prod *= a + i;
  if (!std::isfinite(prod)) throw std::overflow_error("pochhammer: result overflow");
  return prod;
}

double factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: k must be >= 0");
  return pochhammer(1.0, k);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double prod = 1.0;
  for (int i = 1; i <= k; ++i) prod = prod * (n - k + i) / i;
  return prod;
}

int gamma_sign(double x) {
  if (x > 0.0) return 1;
  if (is_nonpositive_integer(x)) throw std::domain_error("gamma_sign: pole");
  // Reflection: sign(Gamma(x)) = sign(sin(pi x)) for x < 0.
  return std::sin(M_PI * x) > 0.0 ? 1 : -1;
}

double inv_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return gamma_sign(x) * std::exp(-std::lgamma(x));
}

double gamma_ratio(double num, double den) {
  if (is_nonpositive_integer(num) || is_nonpositive_integer(den))
    throw std::domain_error("gamma_ratio: pole argument");
  const double mag = std::exp(std::lgamma(num) - std::lgamma(den));
  return gamma_sign(num) * gamma_sign(den) * mag;
}

double jacobi_p(const JacobiIndex& idx, double x) {
  idx.validate();
  x = clamp_chord(x);
  const int n = idx.degree;
  const double a = idx.alpha, b = idx.beta;
  if (n == 0) return 1.0;
  double y0 = 1.0;
  double y1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double denom = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double g1 = (2.0 * k + a + b - 1.0) *
                      ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x + a * a - b * b);
    const double g0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double yk = (g1 * y1 + g0 * y0) / denom;
    y0 = y1;
    y1 = yk;
  }
  return y1;
}

double jacobi_p_at_one(const JacobiIndex& idx) {
  idx.validate();
  return pochhammer(idx.alpha + 1.0, idx.degree) / factorial(idx.degree);
}

double jacobi_norm(const JacobiIndex& idx) {
  idx.validate();
  const int k = idx.degree;
  const double a = idx.alpha, b = idx.beta;
  return std::pow(2.0, a + b + 1.0) / (2.0 * k + a + b + 1.0) *
         gamma_ratio(k + a + 1.0, k + a + b + 1.0) * gamma_ratio(k + b + 1.0, k + 1.0);
}

double hyp_2f1_terminating(double a, double b, double c, double x) {
  const auto m = min_termination({a, b});
  if (!m) throw std::domain_error("hyp_2f1_terminating: neither a nor b is a nonpositive integer");
  if (pochhammer_vanishes_within(c, *m))
    throw DegenerateParameterError("hyp_2f1_terminating: (c)_j vanishes inside the sum range");
  KahanExt acc;
  long double term = 1.0L;
  acc.add(term);
  for (int j = 0; j < *m; ++j) {
    term *= (a + j) * (b + j) / ((static_cast<long double>(c) + j) * (j + 1.0L)) * x;
    acc.add(term);
  }
  return static_cast<double>(acc.sum);
}

long double hyp_4f3_terminating_ext(const std::array<double, 4>& upper,
                                    const std::array<double, 3>& lower, double x) {
  const auto m = min_termination({upper[0], upper[1], upper[2], upper[3]});
  if (!m) throw std::domain_error("hyp_4f3_terminating: no nonpositive-integer upper parameter");
  for (double l : lower) {
    if (pochhammer_vanishes_within(l, *m))
      throw DegenerateParameterError(
          "hyp_4f3_terminating: lower Pochhammer vanishes inside the sum range");
  }
  KahanExt acc;
  long double term = 1.0L;
  acc.add(term);
  for (int j = 0; j < *m; ++j) {
    long double num = x;
    for (double u : upper) num *= static_cast<long double>(u) + j;
    long double den = j + 1.0L;
    for (double l : lower) den *= static_cast<long double>(l) + j;
    term *= num / den;
    acc.add(term);
  }
  return acc.sum;
}

double hyp_4f3_terminating(const std::array<double, 4>& upper,
                           const std::array<double, 3>& lower, double x) {
  return static_cast<double>(hyp_4f3_terminating_ext(upper, lower, x));
}

namespace {

// Termination orders of the double series in l (from b1,b2) and s (from b3,b4),
// plus degeneracy screening of every denominator Pochhammer.
std::pair<int, int> kdf_orders_checked(const KdFParams& p) {
  const auto lb = min_termination({p.b1, p.b2});
  const auto ls = min_termination({p.b3, p.b4});
  if (!lb || !ls)
    throw std::domain_error("kdf_f2222: series does not terminate in both indices");
  if (pochhammer_vanishes_within(p.d1, *lb) || pochhammer_vanishes_within(p.d2, *ls) ||
      pochhammer_vanishes_within(p.c1, *lb + *ls) || pochhammer_vanishes_within(p.c2, *lb + *ls))
    throw DegenerateParameterError("kdf_f2222: denominator Pochhammer vanishes before termination");
  return {*lb, *ls};
}

}  // namespace

double kdf_f2222(const KdFParams& p) {
  const auto [lb, ls] = kdf_orders_checked(p);
  KahanExt acc;
  for (int s = 0; s <= ls; ++s) {
    for (int l = 0; l <= lb; ++l) {
      const long double num = poch_ext(p.a1, l + s) * poch_ext(p.a2, l + s) *
                              poch_ext(p.b1, l) * poch_ext(p.b2, l) * poch_ext(p.b3, s) *
                              poch_ext(p.b4, s);
      const long double den = poch_ext(p.c1, l + s) * poch_ext(p.c2, l + s) *
                              poch_ext(p.d1, l) * poch_ext(p.d2, s) * poch_ext(1.0L, l) *
                              poch_ext(1.0L, s);
      acc.add(num / den);
    }
  }
  return static_cast<double>(acc.sum);
}

double kdf_f2222_nested(const KdFParams& p) {
  const auto [lb, ls] = kdf_orders_checked(p);
  (void)lb;
  KahanExt acc;
  for (int s = 0; s <= ls; ++s) {
    const long double coeff = poch_ext(p.a1, s) * poch_ext(p.a2, s) * poch_ext(p.b3, s) *
                              poch_ext(p.b4, s) /
                              (poch_ext(p.c1, s) * poch_ext(p.c2, s) * poch_ext(p.d2, s) *
                               poch_ext(1.0L, s));
    const long double inner = hyp_4f3_terminating_ext({p.b1, p.b2, p.a1 + s, p.a2 + s},
                                                      {p.c1 + s, p.c2 + s, p.d1}, 1.0);
    acc.add(coeff * inner);
  }
  return static_cast<double>(acc.sum);
}

double QuadratureRule::integrate(const std::function<double(double)>& g) const {
  KahanSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc.add(weights[i] * g(nodes[i]));
  return acc.value();
}

namespace {

// Implicit-QL eigenvalue iteration for a symmetric tridiagonal matrix,
// carrying the first-row eigenvector components in z (Golub-Welsch).
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e.resize(n, 0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  const int max_iter = 40;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > max_iter)
        throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigenvalue iteration failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, pshift = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= pshift;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - pshift;
        r = (d[i] - g) * s + 2.0 * c * b;
        pshift = s * r;
        d[i + 1] = g + pshift;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (!underflow) {
        d[l] -= pshift;
        e[l] = g;
        e[m] = 0.0;
      }
    }
  }
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int size, double alpha, double beta) {
  if (size < 1) throw std::invalid_argument("gauss_jacobi_rule: size must be >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("gauss_jacobi_rule: alpha and beta must be > -1");

  const double ab = alpha + beta;
  std::vector<double> diag(size), offdiag(size > 1 ? size - 1 : 0);
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int i = 1; i < size; ++i) {
    diag[i] = (beta * beta - alpha * alpha) / ((2.0 * i + ab) * (2.0 * i + ab + 2.0));
  }
  for (int i = 1; i < size; ++i) {
    double b2;
    if (i == 1) {
      b2 = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      b2 = 4.0 * i * (i + alpha) * (i + beta) * (i + ab) /
           ((2.0 * i + ab) * (2.0 * i + ab) * (2.0 * i + ab + 1.0) * (2.0 * i + ab - 1.0));
    }
    offdiag[i - 1] = std::sqrt(b2);
  }

  // Total weight mu0 = 2^{a+b+1} B(a+1, b+1).
  const double mu0 = std::pow(2.0, ab + 1.0) *
                     std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));

  std::vector<double> z(size, 0.0);
  z[0] = 1.0;
  imtqlx(diag, offdiag, z);

  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return diag[a] < diag[b]; });

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(size);
  rule.weights.resize(size);
  for (int i = 0; i < size; ++i) {
    rule.nodes[i] = diag[order[i]];
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  return rule;
}

}  // namespace cpnb::specfun
