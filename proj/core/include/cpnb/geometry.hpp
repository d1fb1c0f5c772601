#pragma once

#include <cstdint>
#include <functional>

#include "cpnb/types.hpp"

namespace cpnb::geometry {

/// Chord variable x = cos(2 d_FS(z,w)) = 2|1+<z,w>|^2/((1+|z|^2)(1+|w|^2)) - 1,
/// clamped to [-1,1].
double cos2_fs(const ProjectivePoint& z, const ProjectivePoint& w);

/// Fubini-Study distance in [0, pi/2].
double fs_distance(const ProjectivePoint& z, const ProjectivePoint& w);

/// Density of d(mu_n) against Lebesgue measure on C^n: (1+|w|^2)^{-(n+1)}.
double mu_density(const ProjectivePoint& w);

/// Total mass of d(mu_n): pi^n / n!.
double cpn_volume(int n);

/// Integral over CP^n of a biinvariant function g(cos 2 d_FS(.,pole)):
/// (pi^n/Gamma(n)) 2^{-n} * int_{-1}^{1} g(x)(1-x)^{n-1} dx, evaluated with a
/// Gauss-Jacobi rule of the given order. Exact for polynomial g with
/// order >= (deg g + n)/2 + 1.
double radial_integral(int n, const std::function<double(double)>& g, int order = 64);

/// i.i.d. draws from the normalized Fubini-Study measure: standard complex
/// Gaussian u in C^{n+1}, z_j = u_j/u_0; resamples while |u_0|/|u| < 1e-9.
/// Bitwise deterministic for a fixed seed; points are generated in chunks of
/// kSampleChunk with per-chunk derived seeds so that parallel consumers see
/// the same stream regardless of worker count.
std::vector<ProjectivePoint> sample_fs(int n, std::uint64_t seed, std::size_t count);

inline constexpr std::size_t kSampleChunk = 4096;

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

/// Monte Carlo estimate of int f d(mu_n) (unnormalized measure): the sample
/// mean of f under the normalized law times pi^n/n!, with its standard error.
/// Deterministic for a fixed seed, independent of the worker count.
McEstimate mc_integral(int n, std::uint64_t seed, std::size_t count,
                       const std::function<double(const ProjectivePoint&)>& f);

using ComplexMatrix = std::vector<std::vector<Complex>>;

/// Action of a unitary U on homogeneous coordinates [1 : z], back to the
/// chart. Throws if U is not unitary to 1e-12 or if the image lies on the
/// hyperplane at infinity.
ProjectivePoint apply_unitary(const ComplexMatrix& U, const ProjectivePoint& z);

/// Worker cap: min(hardware concurrency, CPNB_THREADS if set).
unsigned thread_budget();

}  // namespace cpnb::geometry
