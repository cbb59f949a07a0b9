#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fuglede/linalg.hpp"
#include "fuglede/matrix.hpp"

namespace fuglede {

/// Finite spectral measure of a normal matrix: distinct points lambda_i with
/// orthogonal projections P_i summing to the identity.
struct SpectralMeasure {
  std::vector<Complex> points;
  std::vector<Matrix> projections;

  // Eigenbasis view of the same data: column k of `basis` lies in the range of
  // projections[label[k]].
  Matrix basis;
  std::vector<std::size_t> label;
  double cluster_tol = 0.0;

  std::size_t dim() const noexcept { return basis.dim(); }
  /// sum_i lambda_i P_i
  Matrix reconstruct() const;
};

/// cluster_tol <= 0 selects the default 1e-8 * (spectral diameter).
/// Throws NotNormal, or ClusterAmbiguity when two clusters lie within
/// 2 * cluster_tol of each other.
SpectralMeasure spectral_measure(const Matrix& a, double cluster_tol = 0.0);

/// Complex function on C x C, total (defined on the diagonal).
struct Symbol {
  std::string name;
  std::function<Complex(Complex, Complex)> eval;

  Complex operator()(Complex u, Complex v) const { return eval(u, v); }
};

Symbol constant_one();
/// u - v
Symbol difference();
/// conj(u) - conj(v)
Symbol conj_difference();
/// (conj(z) - conj(w)) / (z - w) off the diagonal, 0 on it.
Symbol omega();
Symbol symbol_product(const Symbol& phi, const Symbol& psi);

/// T^E_phi(X) = sum_{i,j} phi(lambda_i, lambda_j) P_i X P_j, evaluated as a
/// Schur multiplier in the eigenbasis.
Matrix doi_apply(const SpectralMeasure& e, const Symbol& phi, const Matrix& x);

struct Intertwining {
  Matrix lhs; // [Y*, T]
  Matrix rhs; // T^{E_Y}_Omega([Y, T])
};

/// Both sides of [Y*, T] = T^{E_Y}_Omega([Y, T]). Throws NotNormal.
Intertwining fuglede_intertwine(const Matrix& y, const Matrix& t, double cluster_tol = 0.0);

} // namespace fuglede
