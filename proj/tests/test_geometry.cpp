#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "cpnb/geometry.hpp"
#include "support.hpp"

using namespace cpnb;
using namespace cpnb::geometry;
using testsupport::near_abs;
using testsupport::near_rel;

TEST_CASE("cos2_fs chart values") {
  const ProjectivePoint z1{Complex(0.3, -0.4)};
  CHECK(cos2_fs(z1, z1) == 1.0);
  CHECK(near_abs(cos2_fs({Complex(0.0)}, {Complex(1.0)}), 0.0, 1e-15));
  CHECK(near_abs(cos2_fs({Complex(0.0), Complex(0.0)}, {Complex(3.0), Complex(4.0)}),
                 -12.0 / 13.0, 1e-14));
  CHECK_THROWS_AS(cos2_fs({Complex(0.0)}, {Complex(0.0), Complex(0.0)}),
                  std::invalid_argument);
}

TEST_CASE("fs_distance values and symmetry") {
  CHECK(fs_distance({Complex(0.2, 0.7)}, {Complex(0.2, 0.7)}) == 0.0);
  CHECK(near_abs(fs_distance({Complex(0.0)}, {Complex(1.0)}), M_PI / 4.0, 1e-14));
  const auto pts = sample_fs(2, 7, 64);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    CHECK(fs_distance(pts[i], pts[i + 1]) == fs_distance(pts[i + 1], pts[i]));
    CHECK(fs_distance(pts[i], pts[i + 1]) <= M_PI / 2.0 + 1e-15);
  }
}

TEST_CASE("mu_density") {
  CHECK(mu_density({Complex(0.0), Complex(0.0)}) == 1.0);
  CHECK(near_abs(mu_density({Complex(0.0, 1.0)}), 0.25, 1e-15));
  CHECK(near_abs(mu_density({Complex(1.0), Complex(0.0, std::sqrt(2.0))}), 1.0 / 64.0, 1e-15));
}

TEST_CASE("radial_integral reduction constants") {
  CHECK(near_rel(radial_integral(1, [](double) { return 1.0; }, 8), M_PI, 1e-13));
  CHECK(near_rel(radial_integral(2, [](double) { return 1.0; }, 8), M_PI * M_PI / 2.0, 1e-13));
  CHECK(near_rel(radial_integral(2, [](double x) { return x; }, 8), -M_PI * M_PI / 6.0, 1e-13));
  for (int n = 1; n <= 5; ++n)
    CHECK(near_rel(radial_integral(n, [](double) { return 1.0; }, 16), cpn_volume(n), 1e-12));
}

TEST_CASE("sample_fs determinism and chunk structure") {
  const auto a = sample_fs(2, 12345, 5000);
  const auto b = sample_fs(2, 12345, 5000);
  REQUIRE(a.size() == 5000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i][0] == b[i][0]);
    CHECK(a[i][1] == b[i][1]);
  }
  // a shorter run is a prefix of a longer one (per-chunk seeding)
  const auto c = sample_fs(2, 12345, kSampleChunk + 10);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i][0] == a[i][0]);
    CHECK(c[i][1] == a[i][1]);
  }
  CHECK_THROWS_AS(sample_fs(0, 1, 10), std::invalid_argument);
}

TEST_CASE("sampler matches the radial reduction moments") {
  // n=1: E[cos 2d(z,0)] = 0; n=2: -1/3. 3-sigma bands with 1e6 samples.
  const ProjectivePoint pole1{Complex(0.0)};
  const auto est1 = mc_integral(1, 99, 1000000, [&](const ProjectivePoint& w) {
    return cos2_fs(w, pole1);
  });
  const double mean1 = est1.value / cpn_volume(1);
  const double sem1 = est1.std_error / cpn_volume(1);
  CHECK(std::abs(mean1) <= 3.0 * sem1);
  CHECK(sem1 < 3e-3);

  const ProjectivePoint pole2{Complex(0.0), Complex(0.0)};
  const auto est2 = mc_integral(2, 99, 1000000, [&](const ProjectivePoint& w) {
    return cos2_fs(w, pole2);
  });
  const double mean2 = est2.value / cpn_volume(2);
  const double sem2 = est2.std_error / cpn_volume(2);
  CHECK(std::abs(mean2 + 1.0 / 3.0) <= 3.0 * sem2);
}

TEST_CASE("mc_integral agrees with radial reduction for x^2") {
  const ProjectivePoint pole{Complex(0.0), Complex(0.0)};
  const auto mc = mc_integral(2, 4242, 400000, [&](const ProjectivePoint& w) {
    const double x = cos2_fs(w, pole);
    return x * x;
  });
  const double exact = radial_integral(2, [](double x) { return x * x; }, 8);
  CHECK(std::abs(mc.value - exact) <= 4.0 * mc.std_error);
}

TEST_CASE("mc_integral is independent of the worker count") {
  const ProjectivePoint pole{Complex(0.0)};
  auto f = [&](const ProjectivePoint& w) { return cos2_fs(w, pole); };
  setenv("CPNB_THREADS", "1", 1);
  const auto serial = mc_integral(1, 7, 50000, f);
  setenv("CPNB_THREADS", "8", 1);
  const auto parallel = mc_integral(1, 7, 50000, f);
  unsetenv("CPNB_THREADS");
  CHECK(serial.value == parallel.value);
  CHECK(serial.std_error == parallel.std_error);
}

TEST_CASE("triangle inequality on random triples") {
  for (int n = 1; n <= 3; ++n) {
    const auto pts = sample_fs(n, 31 + n, 3 * 3334);
    double worst = 0.0;
    for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
      const double v = fs_distance(pts[i], pts[i + 2]) - fs_distance(pts[i], pts[i + 1]) -
                       fs_distance(pts[i + 1], pts[i + 2]);
      worst = std::max(worst, v);
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("apply_unitary") {
  const ProjectivePoint z{Complex(0.3, 0.2), Complex(-0.1, 0.5)};
  ComplexMatrix id(3, std::vector<Complex>(3, Complex(0.0)));
  for (int i = 0; i < 3; ++i) id[i][i] = 1.0;
  const auto same = apply_unitary(id, z);
  CHECK(same[0] == z[0]);
  CHECK(same[1] == z[1]);

  std::mt19937_64 eng(5);
  for (int n = 1; n <= 3; ++n) {
    const auto u = testsupport::random_unitary(n + 1, eng);
    const auto pts = sample_fs(n, 17 + n, 20);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      const auto uz = apply_unitary(u, pts[i]);
      const auto uw = apply_unitary(u, pts[i + 1]);
      CHECK(near_abs(cos2_fs(uz, uw), cos2_fs(pts[i], pts[i + 1]), 1e-12));
    }
  }

  // pole swap: the origin maps to the hyperplane at infinity, nearby points
  // land near distance pi/2
  ComplexMatrix swap{{Complex(0.0), Complex(1.0)}, {Complex(1.0), Complex(0.0)}};
  CHECK_THROWS_AS(apply_unitary(swap, {Complex(0.0)}), std::domain_error);
  const auto far = apply_unitary(swap, {Complex(0.01)});
  CHECK(near_rel(std::abs(far[0]), 100.0, 1e-12));
  CHECK(fs_distance({Complex(0.0)}, far) > M_PI / 2.0 - 0.011);

  ComplexMatrix not_unitary{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(2.0)}};
  CHECK_THROWS_AS(apply_unitary(not_unitary, {Complex(0.1)}), std::invalid_argument);
}
