#include "fuglede/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuglede/errors.hpp"

namespace fuglede {

Matrix triangular_truncation(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix t(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (k > l) t(k, l) = a(k, l);
      else if (k < l) t(k, l) = -a(k, l);
    }
  return t;
}

Matrix davies_projection(std::size_t n) {
  if (n == 0) throw InvalidSpec("davies_projection: n must be >= 1");
  Matrix p(n);
  const double v = 1.0 / static_cast<double>(n);
  for (auto& z : p.data()) z = v;
  return p;
}

Matrix EmbeddedBlock::to_dense() const {
  if (ambient > kMaxDenseAmbient)
    throw DimensionTooLarge("EmbeddedBlock: ambient dimension " + std::to_string(ambient) + " too large for dense form");
  Matrix d(ambient);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) d(rows[i], cols[j]) = block(i, j);
  return d;
}

SingularProfile EmbeddedBlock::singular_values() const {
  const SingularProfile core = fuglede::singular_values(block);
  std::vector<double> v(core.values().begin(), core.values().end());
  v.resize(ambient, 0.0);
  return SingularProfile(std::move(v));
}

bool EmbeddedBlock::same_support(const EmbeddedBlock& other) const {
  return ambient == other.ambient && rows == other.rows && cols == other.cols;
}

EmbeddedBlock operator-(const EmbeddedBlock& x, const EmbeddedBlock& y) {
  if (!x.same_support(y)) throw DimensionMismatch("EmbeddedBlock: supports differ");
  return {x.ambient, x.rows, x.cols, x.block - y.block};
}

namespace {

// Support of iota_n: row e_1 (x) e_{k+1} <-> index k, column e_{l+1} (x) e_1 <-> index l (n+1),
// with k, l = 1..n.
EmbeddedBlock iota_support(std::size_t n) {
  EmbeddedBlock e;
  e.ambient = (n + 1) * (n + 1);
  e.rows.resize(n);
  e.cols.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    e.rows[k] = k + 1;
    e.cols[k] = (k + 1) * (n + 1);
  }
  e.block = Matrix(n);
  return e;
}

} // namespace

EmbeddedBlock iota_embedded(const Matrix& a) {
  EmbeddedBlock e = iota_support(a.dim());
  e.block = a;
  return e;
}

Matrix iota(const Matrix& a) {
  const std::size_t n = a.dim();
  const std::size_t np1 = n + 1;
  if (np1 * np1 > kMaxDenseAmbient)
    throw DimensionTooLarge("iota: (n+1)^2 = " + std::to_string(np1 * np1) + " too large for dense form");
  Matrix r(np1 * np1);
  // kron(E_{1,l+1}, E_{k+1,1}) has its single 1 at row (k+1)-1 and column l (n+1), 1-based k, l.
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = 1; l <= n; ++l) r(k, l * np1) = a(k - 1, l - 1);
  return r;
}

bool counterexample_scale_admissible(std::size_t n, double m) {
  return static_cast<double>(n + 1) * std::log10(m) <= 300.0;
}

CounterexamplePair counterexample_pair(const Matrix& a, double m) {
  const std::size_t n = a.dim();
  if (!(m >= 2.0)) throw InvalidSpec("counterexample_pair: m must be >= 2");
  if (n > kMaxCounterexampleSource)
    throw DimensionTooLarge("counterexample_pair: n = " + std::to_string(n) + " too large");
  if (!counterexample_scale_admissible(n, m))
    throw OverflowGuard("counterexample_pair: m^(n+1) leaves double range (n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");

  const std::size_t np1 = n + 1;
  std::vector<double> powers(np1 + 1);
  powers[0] = 1.0;
  for (std::size_t k = 1; k <= np1; ++k) powers[k] = powers[k - 1] * m;

  CounterexamplePair pair;
  pair.m = m;
  pair.n = n;
  pair.a_diag.resize(np1 * np1);
  for (std::size_t k = 1; k <= np1; ++k)
    for (std::size_t l = 1; l <= np1; ++l) pair.a_diag[(k - 1) * np1 + (l - 1)] = Complex(powers[k], powers[l]);

  // B = sum_{2 <= k != l <= n+1} a_{l-1,k-1} / (m + i m^l - m^k - i m) E_{1,k} (x) E_{l,1}.
  // E_{1,k} (x) E_{l,1} sits at row l-1, column (k-1)(n+1): block entry (l-2, k-2).
  pair.b = iota_support(n);
  for (std::size_t k = 2; k <= np1; ++k)
    for (std::size_t l = 2; l <= np1; ++l) {
      if (k == l) continue;
      const Complex coeff = a(l - 2, k - 2);
      if (coeff == Complex{}) continue;
      const Complex denom(m - powers[k], powers[l] - m);
      if (denom == Complex{} || !std::isfinite(denom.real()) || !std::isfinite(denom.imag()))
        throw NumericalError("counterexample_pair: degenerate denominator at k=" + std::to_string(k) +
                             ", l=" + std::to_string(l));
      pair.b.block(l - 2, k - 2) = coeff / denom;
    }
  return pair;
}

Matrix CounterexamplePair::a_dense() const {
  if (ambient() > kMaxDenseAmbient) throw DimensionTooLarge("CounterexamplePair: too large for dense form");
  return Matrix::diagonal(a_diag);
}

Matrix CounterexamplePair::b_dense() const { return b.to_dense(); }

EmbeddedBlock CounterexamplePair::commutator() const {
  EmbeddedBlock c = b;
  for (std::size_t i = 0; i < b.rows.size(); ++i)
    for (std::size_t j = 0; j < b.cols.size(); ++j)
      c.block(i, j) = (a_diag[b.rows[i]] - a_diag[b.cols[j]]) * b.block(i, j);
  return c;
}

EmbeddedBlock CounterexamplePair::adjoint_commutator() const {
  EmbeddedBlock c = b;
  for (std::size_t i = 0; i < b.rows.size(); ++i)
    for (std::size_t j = 0; j < b.cols.size(); ++j)
      c.block(i, j) = (std::conj(a_diag[b.rows[i]]) - std::conj(a_diag[b.cols[j]])) * b.block(i, j);
  return c;
}

EmbeddedBlock counterexample_limit(const Matrix& a) {
  return iota_embedded(Complex(-1.0) * triangular_truncation(a));
}

double counterexample_residual(const CounterexamplePair& pair, const EmbeddedBlock& limit) {
  return (pair.adjoint_commutator() - limit).singular_values().largest();
}

ConvergedCounterexample counterexample_converged(const Matrix& a, double tol, double m_start) {
  const double scale = a.frobenius_norm();
  const EmbeddedBlock limit = counterexample_limit(a);
  ConvergedCounterexample out;
  double best_m = m_start;
  double best_residual = std::numeric_limits<double>::infinity();
  for (double m = m_start; counterexample_scale_admissible(a.dim(), m); m *= 2.0) {
    CounterexamplePair pair = counterexample_pair(a, m);
    const double residual = counterexample_residual(pair, limit);
    out.trace.emplace_back(m, residual);
    if (residual < best_residual) {
      best_residual = residual;
      best_m = m;
    }
    if (residual <= tol * scale) {
      out.pair = std::move(pair);
      out.residual = residual;
      return out;
    }
  }
  throw OverflowGuard("counterexample_converged: scale guard reached before residual <= tol (best m=" +
                          std::to_string(best_m) + ", residual=" + std::to_string(best_residual) + ")",
                      best_m, best_residual);
}

Matrix signed_diag_average(const Matrix& a) {
  const std::size_t n = a.dim();
  if (n > kMaxSignedAverageDim)
    throw DimensionTooLarge("signed_diag_average: n = " + std::to_string(n) + " exceeds 20");
  const std::size_t terms = std::size_t{1} << n;
  Matrix r(n);
  const auto entries = static_cast<std::ptrdiff_t>(n * n);
  // (U_eps A U_eps)_{kl} = eps_k eps_l a_{kl}; each entry sums over eps in a
  // fixed order, so the result does not depend on the thread count.
#pragma omp parallel for schedule(static) if (terms * n * n >= (1u << 16))
  for (std::ptrdiff_t e = 0; e < entries; ++e) {
    const std::size_t k = static_cast<std::size_t>(e) / n;
    const std::size_t l = static_cast<std::size_t>(e) % n;
    Complex sum = 0.0;
    for (std::size_t mask = 0; mask < terms; ++mask) {
      const double ek = (mask >> k) & 1u ? -1.0 : 1.0;
      const double el = (mask >> l) & 1u ? -1.0 : 1.0;
      sum += (ek * el) * a(k, l);
    }
    r(k, l) = sum / static_cast<double>(terms);
  }
  return r;
}

} // namespace fuglede
