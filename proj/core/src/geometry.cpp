#include "cpnb/geometry.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "cpnb/specfun.hpp"

namespace cpnb::geometry {

namespace {

double squared_norm(const ProjectivePoint& z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  return s;
}

Complex inner(const ProjectivePoint& z, const ProjectivePoint& w) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(splitmix64(seed) ^ (0x9E3779B97F4A7C15ULL * (chunk + 1)));
}

// Box-Muller on top of mt19937_64: implementation-defined distributions are
// avoided so streams are reproducible across standard libraries.
Complex complex_gaussian(std::mt19937_64& eng) {
  const double u1 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
  const double u2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;          // [0,1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

ProjectivePoint draw_point(int n, std::mt19937_64& eng) {
  std::vector<Complex> u(n + 1);
  for (int rejections = 0;; ++rejections) {
    if (rejections >= 1000)
      throw std::runtime_error("sample_fs: 1000 consecutive chart-singular draws");
    double norm2 = 0.0;
    for (auto& c : u) {
      c = complex_gaussian(eng);
      norm2 += std::norm(c);
    }
    if (std::abs(u[0]) < 1e-9 * std::sqrt(norm2)) continue;
    ProjectivePoint z(n);
    for (int j = 0; j < n; ++j) z[j] = u[j + 1] / u[0];
    return z;
  }
}

struct ChunkStat {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Evaluates f over the deterministic chunked sample stream; per-chunk partial
// sums are combined in chunk order, so the result does not depend on how many
// workers ran.
std::vector<ChunkStat> accumulate_chunks(int n, std::uint64_t seed, std::size_t count,
                                         const std::function<double(const ProjectivePoint&)>& f) {
  const std::size_t n_chunks = (count + kSampleChunk - 1) / kSampleChunk;
  std::vector<ChunkStat> stats(n_chunks);

  auto run_chunk = [&](std::size_t c) {
    std::mt19937_64 eng(chunk_seed(seed, c));
    const std::size_t begin = c * kSampleChunk;
    const std::size_t len = std::min(kSampleChunk, count - begin);
    specfun::KahanSum sum, sum_sq;
    for (std::size_t i = 0; i < len; ++i) {
      const double v = f(draw_point(n, eng));
      sum.add(v);
      sum_sq.add(v * v);
    }
    stats[c] = {sum.value(), sum_sq.value()};
  };

  const unsigned workers = std::min<std::size_t>(thread_budget(), n_chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }
  return stats;
}

}  // namespace

double cos2_fs(const ProjectivePoint& z, const ProjectivePoint& w) {
  if (z.size() != w.size())
    throw std::invalid_argument("cos2_fs: dimension mismatch");
  const double num = std::norm(1.0 + inner(z, w));
  const double den = (1.0 + squared_norm(z)) * (1.0 + squared_norm(w));
  return clamp_chord(2.0 * num / den - 1.0);
}

double fs_distance(const ProjectivePoint& z, const ProjectivePoint& w) {
  const double x = cos2_fs(z, w);
  return std::acos(std::sqrt(0.5 * (1.0 + x)));
}

double mu_density(const ProjectivePoint& w) {
  const int n = static_cast<int>(w.size());
  return std::pow(1.0 + squared_norm(w), -(n + 1.0));
}

double cpn_volume(int n) {
  if (n < 1) throw std::invalid_argument("cpn_volume: n must be >= 1");
  return std::pow(M_PI, n) / specfun::factorial(n);
}

double radial_integral(int n, const std::function<double(double)>& g, int order) {
  if (n < 1) throw std::invalid_argument("radial_integral: n must be >= 1");
  const auto rule = specfun::gauss_jacobi_rule(order, n - 1.0, 0.0);
  const double front = std::pow(M_PI, n) / specfun::factorial(n - 1) * std::pow(2.0, -n);
  return front * rule.integrate(g);
}

std::vector<ProjectivePoint> sample_fs(int n, std::uint64_t seed, std::size_t count) {
  if (n < 1) throw std::invalid_argument("sample_fs: n must be >= 1");
  if (count < 1) throw std::invalid_argument("sample_fs: count must be >= 1");
  std::vector<ProjectivePoint> out;
  out.reserve(count);
  const std::size_t n_chunks = (count + kSampleChunk - 1) / kSampleChunk;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    std::mt19937_64 eng(chunk_seed(seed, c));
    const std::size_t begin = c * kSampleChunk;
    const std::size_t len = std::min(kSampleChunk, count - begin);
    for (std::size_t i = 0; i < len; ++i) out.push_back(draw_point(n, eng));
  }
  return out;
}

McEstimate mc_integral(int n, std::uint64_t seed, std::size_t count,
                       const std::function<double(const ProjectivePoint&)>& f) {
  if (n < 1) throw std::invalid_argument("mc_integral: n must be >= 1");
  if (count < 1) throw std::invalid_argument("mc_integral: count must be >= 1");
  const auto stats = accumulate_chunks(n, seed, count, f);
  specfun::KahanSum sum, sum_sq;
  for (const auto& s : stats) {
    sum.add(s.sum);
    sum_sq.add(s.sum_sq);
  }
  const double nn = static_cast<double>(count);
  const double mean = sum.value() / nn;
  const double var = std::max(0.0, sum_sq.value() / nn - mean * mean);
  const double sem = std::sqrt(var / nn);
  const double mass = cpn_volume(n);
  return {mass * mean, mass * sem, count};
}

ProjectivePoint apply_unitary(const ComplexMatrix& U, const ProjectivePoint& z) {
  const std::size_t dim = z.size() + 1;
  if (U.size() != dim)
    throw std::invalid_argument("apply_unitary: matrix size must be (n+1)x(n+1)");
  for (const auto& row : U)
    if (row.size() != dim) throw std::invalid_argument("apply_unitary: matrix is not square");

  // U^dagger U = I to 1e-12.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += std::conj(U[k][i]) * U[k][j];
      const Complex expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(s - expect) > 1e-12)
        throw std::invalid_argument("apply_unitary: matrix is not unitary to 1e-12");
    }
  }

  std::vector<Complex> hom(dim);
  hom[0] = 1.0;
  for (std::size_t j = 1; j < dim; ++j) hom[j] = z[j - 1];

  std::vector<Complex> v(dim, 0.0);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) v[i] += U[i][j] * hom[j];
    norm2 += std::norm(v[i]);
  }
  if (std::abs(v[0]) < 1e-12 * std::sqrt(norm2))
    throw std::domain_error("apply_unitary: image lies on the hyperplane at infinity");

  ProjectivePoint out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = v[j + 1] / v[0];
  return out;
}

unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CPNB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

}  // namespace cpnb::geometry
