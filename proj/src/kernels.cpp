#include "fuglede/kernels.hpp"

#include <cmath>

#include "fuglede/errors.hpp"

namespace fuglede::kernels {

namespace {

void gemm_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
  const std::size_t n = a.dim();
  auto out = c.row(i);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex aik = a(i, k);
    if (aik == Complex{}) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < n; ++j) out[j] += aik * brow[j];
  }
}

// Rotates columns i and j so they become orthogonal. Returns true when a
// rotation was applied.
bool rotate_pair(std::span<Complex> cols, std::size_t len, std::size_t i, std::size_t j, double rel_tol,
                 double abs_floor) {
  Complex* ci = cols.data() + i * len;
  Complex* cj = cols.data() + j * len;
  double alpha = 0.0;
  double beta = 0.0;
  Complex gamma = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    alpha += std::norm(ci[k]);
    beta += std::norm(cj[k]);
    gamma += std::conj(ci[k]) * cj[k];
  }
  const double g = std::abs(gamma);
  if (g <= abs_floor || g <= rel_tol * std::sqrt(alpha) * std::sqrt(beta)) return false;

  const Complex phase = gamma / g; // e^{i phi}
  const double zeta = (beta - alpha) / (2.0 * g);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = c * t;
  const Complex sp = s * std::conj(phase); // rotate against e^{-i phi} c_j
  const Complex cp = c * std::conj(phase);
  for (std::size_t k = 0; k < len; ++k) {
    const Complex x = ci[k];
    const Complex y = cj[k];
    ci[k] = c * x - sp * y;
    cj[k] = s * x + cp * y;
  }
  return true;
}

} // namespace

Matrix gemm(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("gemm: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix c(n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n >= 64)
  for (std::ptrdiff_t i = 0; i < rows; ++i) gemm_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

std::size_t jacobi_round(std::span<Complex> cols, std::size_t len, std::span<const IndexPair> pairs,
                         double rel_tol, double abs_floor) {
  std::size_t rotations = 0;
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(static) reduction(+ : rotations) if (len >= 64)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    if (rotate_pair(cols, len, i, j, rel_tol, abs_floor)) ++rotations;
  }
  return rotations;
}

std::vector<std::vector<IndexPair>> tournament_schedule(std::size_t n) {
  // Circle method on m = n rounded up to even; index m-1 is a bye when n is odd.
  std::vector<std::vector<IndexPair>> rounds;
  if (n < 2) return rounds;
  const std::size_t m = n + (n % 2);
  std::vector<std::size_t> ring(m);
  for (std::size_t k = 0; k < m; ++k) ring[k] = k;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    std::vector<IndexPair> round;
    for (std::size_t k = 0; k < m / 2; ++k) {
      std::size_t a = ring[k];
      std::size_t b = ring[m - 1 - k];
      if (a >= n || b >= n) continue;
      if (a > b) std::swap(a, b);
      round.emplace_back(a, b);
    }
    rounds.push_back(std::move(round));
    // Keep ring[0] fixed, rotate the rest by one.
    const std::size_t last = ring[m - 1];
    for (std::size_t k = m - 1; k > 1; --k) ring[k] = ring[k - 1];
    ring[1] = last;
  }
  return rounds;
}

namespace reference {

Matrix gemm(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("gemm: dimension mismatch");
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) gemm_row(a, b, c, i);
  return c;
}

std::size_t jacobi_round(std::span<Complex> cols, std::size_t len, std::span<const IndexPair> pairs,
                         double rel_tol, double abs_floor) {
  std::size_t rotations = 0;
  for (const auto& [i, j] : pairs)
    if (rotate_pair(cols, len, i, j, rel_tol, abs_floor)) ++rotations;
  return rotations;
}

} // namespace reference

} // namespace fuglede::kernels
