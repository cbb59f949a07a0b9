#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's eigen/SVD solvers.

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuglede/doi.hpp"
#include "fuglede/matrix.hpp"
#include "fuglede/random.hpp"

namespace oracle {

using fuglede::Complex;
using fuglede::Matrix;

/// Eigenvalues of a real symmetric matrix (row-major, n x n) by classical
/// Jacobi (largest off-diagonal pivot each step).
inline std::vector<double> symmetric_eigenvalues(std::vector<double> s, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return s[i * n + j]; };
  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t p = 0, q = 1;
    double best = 0.0, off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += at(i, j) * at(i, j);
        if (i == j) continue;
        off += at(i, j) * at(i, j);
        if (i < j && std::abs(at(i, j)) > best) {
          best = std::abs(at(i, j));
          p = i;
          q = j;
        }
      }
    if (n < 2 || off <= 1e-30 * total) break;
    const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
    for (std::size_t k = 0; k < n; ++k) {
      const double x = at(k, p), y = at(k, q);
      at(k, p) = c * x - sn * y;
      at(k, q) = sn * x + c * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double x = at(p, k), y = at(q, k);
      at(p, k) = c * x - sn * y;
      at(q, k) = sn * x + c * y;
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Singular values via the real 2n x 2n embedding of A*A: each eigenvalue
/// appears twice; take every other one, square root, sort descending.
inline std::vector<double> singular_values(const Matrix& a) {
  const std::size_t n = a.dim();
  // G = A*A, computed with a plain triple loop.
  std::vector<Complex> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g[i * n + j] = s;
    }
  const std::size_t m = 2 * n;
  std::vector<double> r(m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r[i * m + j] = g[i * n + j].real();
      r[i * m + n + j] = -g[i * n + j].imag();
      r[(n + i) * m + j] = g[i * n + j].imag();
      r[(n + i) * m + n + j] = g[i * n + j].real();
    }
  const auto ev = symmetric_eigenvalues(std::move(r), m);
  std::vector<double> sv;
  for (std::size_t k = 0; k < m; k += 2) sv.push_back(std::sqrt(std::max(0.0, 0.5 * (ev[k] + ev[k + 1]))));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

/// sum_{i,j} phi(lambda_i, lambda_j) P_i X P_j with explicit projections.
inline Matrix doi_direct(const fuglede::SpectralMeasure& e, const fuglede::Symbol& phi, const Matrix& x) {
  Matrix out(x.dim());
  for (std::size_t i = 0; i < e.points.size(); ++i)
    for (std::size_t j = 0; j < e.points.size(); ++j)
      out += phi(e.points[i], e.points[j]) * (e.projections[i] * x * e.projections[j]);
  return out;
}

inline Matrix gaussian(std::size_t n, std::uint64_t seed, std::uint64_t trial) {
  fuglede::Rng rng(seed, trial, 99);
  Matrix g(n);
  for (auto& z : g.data()) z = rng.complex_normal();
  return g;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

} // namespace oracle
