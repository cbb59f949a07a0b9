#include "fuglede/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fuglede/errors.hpp"
#include "fuglede/kernels.hpp"

namespace fuglede {

SingularProfile::SingularProfile(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i]))
      throw InvalidSpec("SingularProfile: entries must be finite and non-negative");
    if (i > 0 && values_[i] > values_[i - 1])
      throw InvalidSpec("SingularProfile: entries must be non-increasing");
  }
}

SingularProfile SingularProfile::from_unsorted(std::vector<double> values) {
  for (auto& v : values) v = std::max(v, 0.0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return SingularProfile(std::move(values));
}

SingularProfile singular_values(const Matrix& a, const JacobiOptions& opts) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  const double scale = a.max_abs();
  if (scale == 0.0) return SingularProfile(std::vector<double>(n, 0.0));
  if (!std::isfinite(scale)) throw NonConvergence("singular_values: non-finite input");

  std::vector<Complex> cols(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j * n + i] = a(i, j) / scale;

  const double fro = a.frobenius_norm() / scale;
  const double abs_floor = 1e-30 * fro * fro;
  const auto schedule = kernels::tournament_schedule(n);

  bool converged = (n == 1);
  for (std::size_t sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    std::size_t rotations = 0;
    for (const auto& round : schedule) rotations += kernels::jacobi_round(cols, n, round, opts.rel_tol, abs_floor);
    converged = (rotations == 0);
  }
  if (!converged)
    throw NonConvergence("singular_values: Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                         " sweeps (n=" + std::to_string(n) + ")");

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(cols[j * n + i]);
    sv[j] = scale * std::sqrt(s);
  }
  return SingularProfile::from_unsorted(std::move(sv));
}

HermitianEigen hermitian_eigen(const Matrix& input, const JacobiOptions& opts) {
  const std::size_t n = input.dim();
  Matrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  Matrix v = Matrix::identity(n);

  const double fro = h.frobenius_norm();
  const double threshold = 1e-15 * fro;
  bool converged = (n <= 1 || fro == 0.0);
  for (std::size_t sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double g = std::abs(hpq);
        if (g <= threshold) continue;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        if (g <= opts.rel_tol * std::sqrt(std::abs(app * aqq))) continue;
        ++rotations;
        const Complex u = hpq / g;
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex ub = std::conj(u);
        // Columns: H <- H J with J_pp = c, J_pq = s, J_qp = -s conj(u), J_qq = c conj(u).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = h(k, p);
          const Complex y = h(k, q);
          h(k, p) = c * x - s * ub * y;
          h(k, q) = s * x + c * ub * y;
          const Complex vx = v(k, p);
          const Complex vy = v(k, q);
          v(k, p) = c * vx - s * ub * vy;
          v(k, q) = s * vx + c * ub * vy;
        }
        // Rows: H <- J* H.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = h(p, k);
          const Complex y = h(q, k);
          h(p, k) = c * x - s * u * y;
          h(q, k) = s * x + c * u * y;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
      }
    }
    converged = (rotations == 0);
  }
  if (!converged) throw NonConvergence("hermitian_eigen: Jacobi did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return h(x, x).real() < h(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = h(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

bool eigenvalue_order(const Complex& x, const Complex& y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ax != ay) return ax > ay;
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

bool is_normal(const Matrix& a, double normality_tol) {
  const double fro = a.frobenius_norm();
  return normality_defect(a) <= normality_tol * fro * fro;
}

Matrix NormalEigen::reconstruct() const {
  const std::size_t n = vectors.dim();
  Matrix scaled = vectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= values[k];
  return scaled * adjoint(vectors);
}

namespace {

// Within each run of (nearly) equal eigenvalues of the real-part combination,
// re-diagonalise using the imaginary part so that coincidences of
// Re + c Im between distinct eigenvalues are split.
void refine_degenerate_groups(const Matrix& imag_part, const std::vector<double>& h_values, Matrix& v,
                              double gap_tol) {
  const std::size_t n = v.dim();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && h_values[end] - h_values[end - 1] <= gap_tol) ++end;
    const std::size_t g = end - start;
    if (g > 1) {
      // K = V_g^* H2 V_g
      Matrix k(g);
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
          Complex sum = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            Complex row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += imag_part(i, j) * v(j, start + b);
            sum += std::conj(v(i, start + a)) * row;
          }
          k(a, b) = sum;
        }
      const HermitianEigen sub = hermitian_eigen(k);
      std::vector<Complex> block(n * g);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < g; ++b) {
          Complex sum = 0.0;
          for (std::size_t a = 0; a < g; ++a) sum += v(i, start + a) * sub.vectors(a, b);
          block[i * g + b] = sum;
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < g; ++b) v(i, start + b) = block[i * g + b];
    }
    start = end;
  }
}

} // namespace

NormalEigen normal_eigendecomposition(const Matrix& a, double normality_tol) {
  const std::size_t n = a.dim();
  const double fro = a.frobenius_norm();
  if (!a.all_finite()) throw NonConvergence("normal_eigendecomposition: non-finite input");
  const double defect = normality_defect(a);
  if (defect > normality_tol * fro * fro)
    throw NotNormal("normal_eigendecomposition: ||A*A - AA*||_F = " + std::to_string(defect) +
                    " exceeds tolerance");
  if (fro == 0.0) return {std::vector<Complex>(n, 0.0), Matrix::identity(n)};

  // A = H1 + i H2 with commuting Hermitian H1, H2. Eigenvectors of
  // H1 + c H2 diagonalise A whenever Re + c Im separates the spectrum.
  const Matrix as = adjoint(a);
  const Matrix real_part = Complex(0.5) * (a + as);
  const Matrix imag_part = Complex(0.0, -0.5) * (a - as);
  constexpr double kMix = 0.6180339887498949;
  const HermitianEigen mixed = hermitian_eigen(real_part + Complex(kMix) * imag_part);

  Matrix v = mixed.vectors;
  refine_degenerate_groups(imag_part, mixed.values, v, 1e-7 * fro);

  const Matrix d = adjoint(v) * a * v;
  std::vector<Complex> lambda(n);
  for (std::size_t k = 0; k < n; ++k) lambda[k] = d(k, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return eigenvalue_order(lambda[x], lambda[y]); });
  NormalEigen out{std::vector<Complex>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = lambda[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }

  const double residual = (a - out.reconstruct()).frobenius_norm();
  if (residual > 1e-10 * fro)
    throw NonConvergence("normal_eigendecomposition: reconstruction residual " + std::to_string(residual / fro));
  return out;
}

} // namespace fuglede
