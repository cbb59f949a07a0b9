#include "fuglede/random.hpp"

#include <cmath>
#include <numbers>

#include "fuglede/linalg.hpp"

namespace fuglede {

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
  case EnsembleKind::NormalInUnitSquare: return "normal-in-unit-square";
  case EnsembleKind::HaarUnitary: return "haar-unitary";
  case EnsembleKind::Contraction: return "contraction";
  case EnsembleKind::SelfAdjoint: return "self-adjoint";
  }
  return "unknown";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(splitmix64(seed) ^ trial_index) ^ stream)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Matrix haar_unitary(std::size_t n, Rng& rng) {
  // Modified Gram-Schmidt on the columns; R then has a positive real diagonal,
  // which fixes the column phases uniquely.
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = rng.complex_normal();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
    }
    double norm = 0.0;
    for (const auto& z : cols[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[j]) z /= norm;
  }
  Matrix u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
  return u;
}

Matrix sample(const RandomEnsembleSpec& spec) {
  const std::size_t n = spec.dim;
  Rng rng(spec.seed, spec.trial_index, static_cast<std::uint64_t>(spec.kind) * 0x100000000ULL + n);
  switch (spec.kind) {
  case EnsembleKind::HaarUnitary: return haar_unitary(n, rng);
  case EnsembleKind::NormalInUnitSquare: {
    std::vector<Complex> lambda(n);
    for (auto& z : lambda) {
      const double re = rng.uniform();
      z = {re, rng.uniform()};
    }
    const Matrix u = haar_unitary(n, rng);
    return u * Matrix::diagonal(lambda) * adjoint(u);
  }
  case EnsembleKind::Contraction: {
    Matrix g(n);
    for (auto& z : g.data()) z = rng.complex_normal();
    const double top = singular_values(g).largest();
    g *= 1.0 / top;
    return g;
  }
  case EnsembleKind::SelfAdjoint: {
    Matrix g(n);
    for (auto& z : g.data()) z = rng.complex_normal();
    Matrix h = g + adjoint(g);
    h *= 0.5 / std::sqrt(static_cast<double>(n));
    return h;
  }
  }
  return Matrix(n);
}

} // namespace fuglede
