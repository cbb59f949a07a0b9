#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fuglede {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix zero(std::size_t n) { return Matrix(n); }
  static Matrix identity(std::size_t n);
  /// Matrix unit E_{k,l} (0-based indices).
  static Matrix unit(std::size_t n, std::size_t k, std::size_t l);
  static Matrix diagonal(std::span<const Complex> d);
  static Matrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  bool all_finite() const;
  double frobenius_norm() const;
  double max_abs() const;
  Complex trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix adjoint(const Matrix& a);
/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Keeps the diagonal, zeros elsewhere.
Matrix diag_part(const Matrix& a);

/// ||A*A - AA*||_F
double normality_defect(const Matrix& a);

} // namespace fuglede
