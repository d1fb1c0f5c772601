#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cpnb/specfun.hpp"
#include "support.hpp"

using namespace cpnb;
using namespace cpnb::specfun;
using testsupport::near_abs;
using testsupport::near_rel;

TEST_CASE("pochhammer basics and split identity") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(3.0, 2) * pochhammer(2.0, 1) == 24.0);
  // (a)_{l+s} = (a+s)_l (a)_s
  for (double a : {0.3, -1.7, 4.0}) {
    for (int l = 0; l <= 4; ++l)
      for (int s = 0; s <= 4; ++s)
        CHECK(near_rel(pochhammer(a, l + s), pochhammer(a + s, l) * pochhammer(a, s), 1e-14));
  }
  CHECK_THROWS_AS(pochhammer(300.0, 400), std::overflow_error);
}

TEST_CASE("jacobi_p recurrence values") {
  CHECK(jacobi_p({0, 1.3, 0.4}, -0.77) == 1.0);
  CHECK(jacobi_p({1, 0.0, 1.0}, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  // degree-2 closed form at (0,1): -1/2 - x + 5x^2/2
  for (double x : {-0.9, -0.3, 0.2, 0.8}) {
    CHECK(near_abs(jacobi_p({2, 0.0, 1.0}, x), -0.5 - x + 2.5 * x * x, 1e-14));
  }
  CHECK_THROWS_AS(jacobi_p({2, 0.0, 0.0}, 1.1), std::domain_error);
  CHECK_THROWS_AS(jacobi_p({2, -1.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("jacobi symmetry relation P_k^{(a,b)}(-x) = (-1)^k P_k^{(b,a)}(x)") {
  CHECK(near_abs(jacobi_p({2, 0.0, 1.0}, -0.3), jacobi_p({2, 1.0, 0.0}, 0.3), 1e-14));
  for (int k = 0; k <= 7; ++k) {
    for (double x = -1.0; x <= 1.0; x += 0.25) {
      const double lhs = jacobi_p({k, 2.0, 0.5}, -x);
      const double rhs = (k % 2 ? -1.0 : 1.0) * jacobi_p({k, 0.5, 2.0}, x);
      CHECK(near_abs(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs))));
    }
  }
}

TEST_CASE("jacobi_p_at_one closed form") {
  CHECK(jacobi_p_at_one({0, 5.0, 2.0}) == 1.0);
  CHECK(jacobi_p_at_one({3, 1.0, 7.0}) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(jacobi_p_at_one({2, 1.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-14));
  for (int k = 0; k <= 20; ++k) {
    const JacobiIndex idx{k, 1.5, 0.5};
    CHECK(near_rel(jacobi_p(idx, 1.0), jacobi_p_at_one(idx), 1e-13));
  }
}

TEST_CASE("terminating 2F1") {
  CHECK(hyp_2f1_terminating(0.0, 5.5, 2.2, 0.9) == 1.0);
  CHECK(hyp_2f1_terminating(-1.0, 2.0, 3.0, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(hyp_2f1_terminating(-2.0, 4.7, 1.9, 0.0) == 1.0);
  CHECK_THROWS_AS(hyp_2f1_terminating(0.5, 1.5, 2.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(hyp_2f1_terminating(-3.0, 2.0, -1.0, 0.5), DegenerateParameterError);
}

TEST_CASE("terminating 4F3") {
  CHECK(hyp_4f3_terminating({0.0, 1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, 0.7) == 1.0);
  CHECK(hyp_4f3_terminating({-1.0, 2.0, 2.0, 3.0}, {1.0, 4.0, 2.0}, 1.0) ==
        doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(hyp_4f3_terminating({-1.0, 3.0, 3.0, 3.0}, {2.0, 5.0, 2.0}, 1.0) ==
        doctest::Approx(-0.35).epsilon(1e-15));
  CHECK_THROWS_AS(hyp_4f3_terminating({-2.0, 1.0, 1.0, 1.0}, {-1.0, 2.0, 2.0}, 1.0),
                  DegenerateParameterError);
  CHECK_THROWS_AS(hyp_4f3_terminating({0.5, 1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}, 1.0),
                  std::domain_error);
}

TEST_CASE("Kampe de Feriet double series") {
  // only the (0,0) cell survives
  CHECK(kdf_f2222({2.0, 2.0, 0.0, 5.0, 0.0, 5.0, 3.0, 4.0, 2.0, 2.0}) == 1.0);
  CHECK(kdf_f2222({2.0, 2.0, -2.0, 0.0, -3.0, 0.0, 3.0, 4.0, 2.0, 2.0}) == 1.0);
  // paper-shaped specialization (2nu=1, m=1, n=1, k=1): four-cell sum
  const KdFParams spec{2.0, 2.0, -1.0, 3.0, -1.0, 3.0, 1.0, 4.0, 2.0, 2.0};
  CHECK(kdf_f2222(spec) == doctest::Approx(0.025).epsilon(1e-14));
  // equals the reorganized sum over 4F3 values: -1/2 + (-3/2)(-7/20)
  CHECK(kdf_f2222_nested(spec) == doctest::Approx(0.025).epsilon(1e-14));
  CHECK_THROWS_AS(kdf_f2222({2.0, 2.0, -1.0, 3.0, -1.0, 3.0, 0.0, 5.0, 2.0, 2.0}),
                  DegenerateParameterError);
  CHECK_THROWS_AS(kdf_f2222({2.0, 2.0, 1.1, 3.0, -1.0, 3.0, 1.0, 5.0, 2.0, 2.0}),
                  std::domain_error);
}

TEST_CASE("kdf double sum matches the nested route on generic parameters") {
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 2; ++k) {
      const double tn = 2.0;
      const KdFParams p{tn + 1.0, tn + 1.0, double(-m),     tn + m + 2.0, double(-m),
                        tn + m + 2.0, tn - k + 1.0, tn + k + 3.0, tn + 1.0,     tn + 1.0};
      CHECK(near_rel(kdf_f2222(p), kdf_f2222_nested(p), 1e-12));
    }
  }
}

TEST_CASE("gauss_jacobi_rule basics") {
  const auto mid = gauss_jacobi_rule(1, 0.0, 0.0);
  REQUIRE(mid.size() == 1);
  CHECK(near_abs(mid.nodes[0], 0.0, 1e-15));
  CHECK(near_abs(mid.weights[0], 2.0, 1e-14));

  const auto r2 = gauss_jacobi_rule(2, 1.0, 0.0);
  CHECK(near_rel(r2.integrate([](double) { return 1.0; }), 2.0, 1e-14));

  const auto r5 = gauss_jacobi_rule(5, 1.0, 0.0);
  CHECK(near_rel(r5.integrate([](double x) {
          const double p2 = jacobi_p({2, 1.0, 0.0}, x);
          return p2 * p2;
        }),
        2.0 / 3.0, 1e-13));

  CHECK_THROWS_AS(gauss_jacobi_rule(0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_jacobi_rule(4, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("gauss_jacobi_rule is exact through degree 2*size-1") {
  for (int size : {2, 5, 9}) {
    for (double alpha : {0.0, 1.0, 2.5}) {
      for (double beta : {0.0, 1.5}) {
        const auto rule = gauss_jacobi_rule(size, alpha, beta);
        const auto ref = gauss_jacobi_rule(size + 10, alpha, beta);
        auto poly = [&](double x) {
          double acc = 0.0, xn = 1.0;
          for (int d = 0; d <= 2 * size - 1; ++d, xn *= x) acc += (d + 1.0) * xn;
          return acc;
        };
        CHECK(near_rel(rule.integrate(poly), ref.integrate(poly), 1e-13));
      }
    }
  }
}

TEST_CASE("jacobi orthogonality under the matching rule") {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 4; b += 2) {
      const auto rule = gauss_jacobi_rule(12, a, b);
      for (int j = 0; j <= 8; ++j) {
        for (int k = j; k <= 8; ++k) {
          const double val = rule.integrate([&](double x) {
            return jacobi_p({j, double(a), double(b)}, x) *
                   jacobi_p({k, double(a), double(b)}, x);
          });
          if (j == k)
            CHECK(near_rel(val, jacobi_norm({k, double(a), double(b)}), 1e-12));
          else
            CHECK(near_abs(val, 0.0, 1e-12));
        }
      }
    }
  }
}

TEST_CASE("gamma helpers") {
  CHECK(inv_gamma(0.0) == 0.0);
  CHECK(inv_gamma(-3.0) == 0.0);
  CHECK(inv_gamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(inv_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(gamma_ratio(5.0, 3.0) == doctest::Approx(12.0).epsilon(1e-14));
  // Gamma(-0.5) = -2 sqrt(pi)
  CHECK(gamma_ratio(-0.5, 0.5) == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK(binomial(6, 2) == doctest::Approx(15.0).epsilon(1e-15));
}
