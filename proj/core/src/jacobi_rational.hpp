#pragma once

// Exact-rational polynomial machinery for the linearization oracle: shifted
// Jacobi polynomials P_k^{(a,b)}(1-2t) with integer exponents, and expansion
// of a rational polynomial in that basis by degree-descending reduction.
// Private to core; not installed.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace cpnb::detail {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Coefficients in t, ascending degree; normalized so trailing zeros are trimmed.
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline void sub_scaled(RatPoly& a, const Rational& c, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= c * b[i];
  trim(a);
}

inline BigInt big_binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// P_k^{(a,b)}(1-2t) = sum_j C(k+a,k-j) C(k+b,j) (-t)^j (1-t)^{k-j}.
inline RatPoly jacobi_shifted(int k, int a, int b) {
  if (k < 0 || a < 0 || b < 0)
    throw std::invalid_argument("jacobi_shifted: nonnegative integer parameters required");
  RatPoly sum{Rational(0)};
  for (int j = 0; j <= k; ++j) {
    RatPoly term{Rational(big_binomial(k + a, k - j) * big_binomial(k + b, j))};
    for (int i = 0; i < j; ++i) term = mul(term, RatPoly{Rational(0), Rational(-1)});
    for (int i = 0; i < k - j; ++i) term = mul(term, RatPoly{Rational(1), Rational(-1)});
    if (sum.size() < term.size()) sum.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
  }
  trim(sum);
  return sum;
}

// Exact coefficients of poly in the basis {P_k^{(a,b)}(1-2t)}, k = 0..deg,
// by leading-term elimination.
inline std::vector<Rational> expand_in_jacobi_basis(RatPoly poly, int a, int b) {
  trim(poly);
  const int deg = poly.empty() ? -1 : static_cast<int>(poly.size()) - 1;
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (int k = deg; k >= 0; --k) {
    if (static_cast<int>(poly.size()) <= k || poly[k] == 0) continue;
    const RatPoly basis = jacobi_shifted(k, a, b);
    const Rational c = poly[k] / basis[k];
    coeffs[k] = c;
    sub_scaled(poly, c, basis);
  }
  if (!poly.empty()) throw std::logic_error("expand_in_jacobi_basis: nonzero remainder");
  return coeffs;
}

}  // namespace cpnb::detail
