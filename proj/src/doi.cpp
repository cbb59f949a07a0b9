#include "fuglede/doi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fuglede/errors.hpp"

namespace fuglede {

Matrix SpectralMeasure::reconstruct() const {
  Matrix r(dim());
  for (std::size_t i = 0; i < points.size(); ++i) r += points[i] * projections[i];
  return r;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

SpectralMeasure spectral_measure(const Matrix& a, double cluster_tol) {
  const NormalEigen eig = normal_eigendecomposition(a);
  const std::size_t n = a.dim();
  const auto& lam = eig.values;

  double diameter = 0.0;
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    radius = std::max(radius, std::abs(lam[i]));
    for (std::size_t j = i + 1; j < n; ++j) diameter = std::max(diameter, std::abs(lam[i] - lam[j]));
  }
  if (cluster_tol <= 0.0) {
    cluster_tol = 1e-8 * diameter;
    // A scalar matrix has zero diameter; any positive resolution gives one cluster.
    if (cluster_tol == 0.0) cluster_tol = std::max(1e-8 * radius, 1e-300);
  }

  // Single-linkage clustering at resolution cluster_tol.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(lam[i] - lam[j]) <= cluster_tol) parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = find_root(parent, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (root[i] != root[j] && std::abs(lam[i] - lam[j]) <= 2.0 * cluster_tol)
        throw ClusterAmbiguity("spectral_measure: eigenvalues " + std::to_string(i) + " and " + std::to_string(j) +
                               " lie within twice the cluster tolerance");

  // Distinct roots in order of first appearance; eigenvalues are already sorted.
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(roots.begin(), roots.end(), root[i]) == roots.end()) roots.push_back(root[i]);

  SpectralMeasure e;
  e.cluster_tol = cluster_tol;
  e.basis = eig.vectors;
  e.label.resize(n);
  std::vector<Complex> sums(roots.size(), 0.0);
  std::vector<std::size_t> counts(roots.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(std::find(roots.begin(), roots.end(), root[i]) - roots.begin());
    e.label[i] = c;
    sums[c] += lam[i];
    ++counts[c];
  }
  e.points.resize(roots.size());
  for (std::size_t c = 0; c < roots.size(); ++c) e.points[c] = sums[c] / static_cast<double>(counts[c]);

  e.projections.assign(roots.size(), Matrix(n));
  for (std::size_t k = 0; k < n; ++k) {
    Matrix& p = e.projections[e.label[k]];
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = e.basis(i, k);
      for (std::size_t j = 0; j < n; ++j) p(i, j) += vi * std::conj(e.basis(j, k));
    }
  }
  return e;
}

Symbol constant_one() {
  return {"1", [](Complex, Complex) { return Complex(1.0); }};
}

Symbol difference() {
  return {"u-v", [](Complex u, Complex v) { return u - v; }};
}

Symbol conj_difference() {
  return {"conj(u)-conj(v)", [](Complex u, Complex v) { return std::conj(u) - std::conj(v); }};
}

Symbol omega() {
  return {"omega", [](Complex z, Complex w) {
            if (z == w) return Complex(0.0);
            return (std::conj(z) - std::conj(w)) / (z - w);
          }};
}

Symbol symbol_product(const Symbol& phi, const Symbol& psi) {
  return {"(" + phi.name + ")*(" + psi.name + ")", [phi, psi](Complex u, Complex v) { return phi(u, v) * psi(u, v); }};
}

Matrix doi_apply(const SpectralMeasure& e, const Symbol& phi, const Matrix& x) {
  if (x.dim() != e.dim()) throw DimensionMismatch("doi_apply: dimension mismatch");
  const std::size_t m = e.points.size();
  std::vector<Complex> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = phi(e.points[i], e.points[j]);

  Matrix xt = adjoint(e.basis) * x * e.basis;
  for (std::size_t a = 0; a < xt.dim(); ++a)
    for (std::size_t b = 0; b < xt.dim(); ++b) xt(a, b) *= table[e.label[a] * m + e.label[b]];
  return e.basis * xt * adjoint(e.basis);
}

Intertwining fuglede_intertwine(const Matrix& y, const Matrix& t, double cluster_tol) {
  if (y.dim() != t.dim()) throw DimensionMismatch("fuglede_intertwine: dimension mismatch");
  const SpectralMeasure e = spectral_measure(y, cluster_tol);
  return {commutator(adjoint(y), t), doi_apply(e, omega(), commutator(y, t))};
}

} // namespace fuglede
