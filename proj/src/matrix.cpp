#include "fuglede/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "fuglede/errors.hpp"
#include "fuglede/kernels.hpp"

namespace fuglede {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()) + ")");
  }
}

} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()), data_(n_ * n_) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionMismatch("Matrix: initializer rows must form a square");
    std::copy(r.begin(), r.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t k, std::size_t l) {
  Matrix m(n);
  m(k, l) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

double Matrix::frobenius_norm() const {
  // Scaled accumulation keeps huge counterexample entries from overflowing.
  double scale = max_abs();
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z / scale);
  return scale * std::sqrt(sum);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "operator*");
  return kernels::gemm(a, b);
}

Matrix adjoint(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  Matrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

Matrix diag_part(const Matrix& a) {
  Matrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r(i, i) = a(i, i);
  return r;
}

double normality_defect(const Matrix& a) {
  const Matrix as = adjoint(a);
  return (as * a - a * as).frobenius_norm();
}

} // namespace fuglede
