#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuglede/matrix.hpp"

namespace fuglede {

/// Non-increasing list of non-negative reals: the singular value sequence mu(x).
class SingularProfile {
public:
  SingularProfile() = default;
  /// Throws InvalidSpec unless `values` is non-negative and non-increasing.
  explicit SingularProfile(std::vector<double> values);
  /// Sorts descending and clamps tiny negatives from roundoff to zero.
  static SingularProfile from_unsorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  /// mu_i with zero beyond the stored length.
  double at_or_zero(std::size_t i) const { return i < values_.size() ? values_[i] : 0.0; }
  double largest() const { return values_.empty() ? 0.0 : values_.front(); }

private:
  std::vector<double> values_;
};

struct JacobiOptions {
  double rel_tol = 1e-14;
  std::size_t max_sweeps = 64;
};

/// Singular values of a square matrix by one-sided Jacobi with a round-robin
/// ordering. Throws NonConvergence after `max_sweeps`.
SingularProfile singular_values(const Matrix& a, const JacobiOptions& opts = {});

struct HermitianEigen {
  std::vector<double> values; // ascending
  Matrix vectors;             // columns are eigenvectors
};

/// Cyclic two-sided Jacobi for a Hermitian matrix (only the Hermitian part of
/// the input is used).
HermitianEigen hermitian_eigen(const Matrix& h, const JacobiOptions& opts = {});

struct NormalEigen {
  std::vector<Complex> values; // descending by modulus, ties by (re, im)
  Matrix vectors;              // unitary; column k pairs with values[k]

  Matrix reconstruct() const;
};

inline constexpr double kDefaultNormalityTol = 1e-10;

/// Unitary diagonalisation of a normal matrix. Throws NotNormal when
/// ||A*A - AA*||_F > normality_tol * ||A||_F^2 and NonConvergence when the
/// reconstruction misses 1e-10 ||A||_F.
NormalEigen normal_eigendecomposition(const Matrix& a, double normality_tol = kDefaultNormalityTol);

bool is_normal(const Matrix& a, double normality_tol = kDefaultNormalityTol);

/// Descending-by-modulus ordering with lexicographic (re, im) tie break.
bool eigenvalue_order(const Complex& x, const Complex& y);

} // namespace fuglede
