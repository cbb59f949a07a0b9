#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fuglede/linalg.hpp"
#include "fuglede/matrix.hpp"

namespace fuglede {

/// Antisymmetric triangular truncation: entry (k, l) times sgn(k - l).
Matrix triangular_truncation(const Matrix& a);

/// Rank-one projection (1/n) J_n onto the all-ones vector.
Matrix davies_projection(std::size_t n);

/// A matrix of ambient dimension N whose only non-zero entries sit in the
/// rows `rows` and columns `cols`: entry (rows[i], cols[j]) = block(i, j).
/// Rows and columns are each distinct, so the singular values are those of
/// `block` padded with zeros.
struct EmbeddedBlock {
  std::size_t ambient = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Matrix block;

  Matrix to_dense() const;
  SingularProfile singular_values() const;
  bool same_support(const EmbeddedBlock& other) const;
};

/// Block-wise difference; both operands must share the support.
EmbeddedBlock operator-(const EmbeddedBlock& x, const EmbeddedBlock& y);

/// Largest ambient dimension for which dense forms are materialised.
inline constexpr std::size_t kMaxDenseAmbient = 4096;

/// iota_n(A) = sum a_{k,l} E_{1,l+1} (x) E_{k+1,1} in M_{(n+1)^2}.
/// Throws DimensionTooLarge when (n+1)^2 exceeds kMaxDenseAmbient.
Matrix iota(const Matrix& a);
/// Same operator in embedded form, for any n.
EmbeddedBlock iota_embedded(const Matrix& a);

/// The normal A_m^n (diagonal in the product basis) and B_m^n with
/// [A_m^n, B_m^n] = iota_n(A - diag A).
struct CounterexamplePair {
  std::vector<Complex> a_diag; // eigenvalue m^k + i m^l at basis index (k-1)(n+1) + (l-1)
  EmbeddedBlock b;             // support of iota_n
  double m = 0.0;
  std::size_t n = 0;

  std::size_t ambient() const noexcept { return a_diag.size(); }
  Matrix a_dense() const;
  Matrix b_dense() const;
  /// [a, b], computed entrywise as (a_r - a_c) b_{rc}.
  EmbeddedBlock commutator() const;
  /// [a*, b]
  EmbeddedBlock adjoint_commutator() const;
};

/// (n + 1) log10(m) <= 300.
bool counterexample_scale_admissible(std::size_t n, double m);

inline constexpr std::size_t kMaxCounterexampleSource = 2048;

/// Throws OverflowGuard when the scale is not admissible, DimensionTooLarge
/// for n > kMaxCounterexampleSource, InvalidSpec for m < 2, NumericalError
/// when a denominator vanishes.
CounterexamplePair counterexample_pair(const Matrix& a, double m);

/// Limit of [(A_m^n)*, B_m^n] as m -> inf: the entry of B at (1,l) x (k,1)
/// tends to sgn(k - l) times its coefficient, which is iota_n(-T(A)).
EmbeddedBlock counterexample_limit(const Matrix& a);

/// Operator-norm distance between [a*, b] and counterexample_limit(A).
double counterexample_residual(const CounterexamplePair& pair, const EmbeddedBlock& limit);

struct ConvergedCounterexample {
  CounterexamplePair pair;
  double residual = 0.0;
  /// (m, residual) for every scale visited, in order.
  std::vector<std::pair<double, double>> trace;
};

/// Doubles m from m_start until the residual is <= tol * ||A||_F. Throws
/// OverflowGuard (with best m and residual) if the scale guard trips first.
ConvergedCounterexample counterexample_converged(const Matrix& a, double tol, double m_start = 10.0);

inline constexpr std::size_t kMaxSignedAverageDim = 20;

/// 2^{-n} sum over eps in {-1,1}^n of U_eps A U_eps, U_eps = diag(eps).
/// Throws DimensionTooLarge for n > 20.
Matrix signed_diag_average(const Matrix& a);

} // namespace fuglede
