#pragma once

// Shared helpers for the unit and acceptance suites: independent brute-force
// oracles and small utilities. Everything here is test-only and must stay
// independent of the implementation paths it checks.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cpnb/types.hpp"

namespace testsupport {

inline bool near_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near_rel(double a, double b, double tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * std::max(scale, 1e-300);
}

// ---------------------------------------------------------------------------
// Brute-force dimension of the harmonic bidegree-(p,q) polynomials in C^n:
// dim of the bidegree space minus the rank of L = sum_i d/dz_i d/dzbar_i
// mapped onto bidegree (p-1,q-1). Monomial bases, dense rank by elimination.

namespace detail {

inline void enumerate_compositions(int total, int parts, std::vector<int>& current,
                                   std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    current.push_back(head);
    enumerate_compositions(total - head, parts - 1, current, out);
    current.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  enumerate_compositions(total, parts, current, out);
  return out;
}

inline int rank(std::vector<std::vector<double>> mat) {
  int r = 0;
  const int rows = static_cast<int>(mat.size());
  const int cols = rows ? static_cast<int>(mat[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    double best = 1e-9;
    for (int i = r; i < rows; ++i)
      if (std::abs(mat[i][c]) > best) {
        best = std::abs(mat[i][c]);
        pivot = i;
      }
    if (pivot < 0) continue;
    std::swap(mat[r], mat[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      const double f = mat[i][c] / mat[r][c];
      for (int j = c; j < cols; ++j) mat[i][j] -= f * mat[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

inline long long dim_harmonic_bruteforce(int n, int p, int q) {
  const auto dom = detail::compositions(p, n);   // z-exponents
  const auto domq = detail::compositions(q, n);  // zbar-exponents
  const long long dim_pq = static_cast<long long>(dom.size()) * domq.size();
  if (p == 0 || q == 0) return dim_pq;  // L annihilates pure bidegrees

  const auto imgp = detail::compositions(p - 1, n);
  const auto imgq = detail::compositions(q - 1, n);
  auto index_of = [&](const std::vector<std::vector<int>>& basis, std::vector<int> key) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == key) return static_cast<int>(i);
    return -1;
  };

  const int rows = static_cast<int>(imgp.size() * imgq.size());
  const int cols = static_cast<int>(dim_pq);
  std::vector<std::vector<double>> mat(rows, std::vector<double>(cols, 0.0));
  int col = 0;
  for (const auto& a : dom) {
    for (const auto& b : domq) {
      for (int i = 0; i < n; ++i) {
        if (a[i] == 0 || b[i] == 0) continue;
        auto ai = a, bi = b;
        --ai[i];
        --bi[i];
        const int row = index_of(imgp, ai) * static_cast<int>(imgq.size()) + index_of(imgq, bi);
        mat[row][col] += static_cast<double>(a[i]) * b[i];
      }
      ++col;
    }
  }
  return dim_pq - detail::rank(std::move(mat));
}

// ---------------------------------------------------------------------------

inline std::vector<std::vector<cpnb::Complex>> random_unitary(int dim, std::mt19937_64& eng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<cpnb::Complex>> u(dim, std::vector<cpnb::Complex>(dim));
  for (auto& row : u)
    for (auto& c : row) c = cpnb::Complex(gauss(eng), gauss(eng));
  for (int j = 0; j < dim; ++j) {
    for (int prev = 0; prev < j; ++prev) {
      cpnb::Complex proj = 0.0;
      for (int i = 0; i < dim; ++i) proj += std::conj(u[i][prev]) * u[i][j];
      for (int i = 0; i < dim; ++i) u[i][j] -= proj * u[i][prev];
    }
    double norm = 0.0;
    for (int i = 0; i < dim; ++i) norm += std::norm(u[i][j]);
    norm = std::sqrt(norm);
    for (int i = 0; i < dim; ++i) u[i][j] /= norm;
  }
  return u;
}

}  // namespace testsupport
