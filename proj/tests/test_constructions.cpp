#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "fuglede/constructions.hpp"
#include "fuglede/errors.hpp"
#include "fuglede/norms.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {

const Complex I(0.0, 1.0);

// Norms for which the triangle inequality holds.
std::vector<NormSpec> banach_norms() {
  std::vector<NormSpec> out;
  for (const auto& n : all_norms())
    if (n.kind() != NormSpec::Kind::WeakL1) out.push_back(n);
  return out;
}

// Orthogonal projection onto the range of |B| and its rank (cutoff 1e-10 s_1).
std::pair<Matrix, std::size_t> support_projection(const Matrix& b) {
  const std::size_t n = b.dim();
  const double s1 = singular_values(b).largest();
  const auto he = hermitian_eigen(adjoint(b) * b);
  Matrix p(n);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::sqrt(std::max(he.values[c], 0.0)) <= 1e-10 * s1) continue;
    ++rank;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += he.vectors(i, c) * std::conj(he.vectors(j, c));
  }
  return {p, rank};
}

Matrix rank_deficient(std::size_t n, std::uint64_t seed, std::uint64_t trial) {
  Matrix b = oracle::gaussian(n, seed, trial);
  const std::size_t drop = trial % n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < drop; ++j) b(i, j) = 0.0;
  return b;
}

} // namespace

TEST(TriangularTruncation, Examples) {
  const std::vector<double> d{1, 2, 3};
  EXPECT_EQ(triangular_truncation(Matrix::diagonal(d)), Matrix(3));
  EXPECT_EQ(triangular_truncation(Matrix::unit(2, 0, 1)), Complex(-1.0) * Matrix::unit(2, 0, 1));
  const Matrix expected{{0, -0.5}, {0.5, 0}};
  EXPECT_EQ(triangular_truncation(davies_projection(2)), expected);
  EXPECT_NEAR(matrix_norm(NormSpec::schatten(1), expected), 1.0, 1e-15);
}

TEST(DaviesProjection, Examples) {
  EXPECT_EQ(davies_projection(1), Matrix{{1.0}});
  EXPECT_EQ(davies_projection(2), (Matrix{{0.5, 0.5}, {0.5, 0.5}}));
  for (std::size_t n : {3u, 17u, 64u}) {
    const Matrix p = davies_projection(n);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-13);
    EXPECT_LT(oracle::max_abs_diff(p * p, p), 1e-15);
    EXPECT_EQ(adjoint(p), p);
    const auto s = singular_values(p);
    EXPECT_NEAR(s[0], 1.0, 1e-12);
    EXPECT_LT(s[1], 1e-12);
  }
  EXPECT_THROW(davies_projection(0), InvalidSpec);
}

TEST(DaviesGrowth, IncreasingAndLogarithmic) {
  std::vector<double> x, y;
  double prev = 0.0;
  for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
    const double v = matrix_norm(NormSpec::schatten(1), triangular_truncation(davies_projection(n)));
    EXPECT_GT(v, prev);
    prev = v;
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(v);
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  EXPECT_GE(sxy * sxy / (sxx * syy), 0.98);
}

TEST(Iota, Examples) {
  EXPECT_EQ(iota(Matrix(3)), Matrix(16));
  const Complex a(2.0, -1.0);
  const Matrix expected = a * kron(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0));
  EXPECT_EQ(iota(Matrix{{a}}), expected);
  const auto s = singular_values(iota(Matrix{{a}}));
  EXPECT_NEAR(s[0], std::abs(a), 1e-14);
  EXPECT_LT(s[1], 1e-14);
}

TEST(Iota, MatchesTensorDefinitionAndEmbeddedForm) {
  for (std::uint64_t t = 0; t < 6; ++t) {
    const std::size_t n = 1 + t;
    const Matrix a = oracle::gaussian(n, 60, t);
    Matrix direct((n + 1) * (n + 1));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        direct += a(k, l) * kron(Matrix::unit(n + 1, 0, l + 1), Matrix::unit(n + 1, k + 1, 0));
    EXPECT_EQ(iota(a), direct);
    EXPECT_EQ(iota_embedded(a).to_dense(), direct);
  }
}

TEST(Iota, SingularValuesArePadded) {
  for (std::uint64_t t = 0; t < 16; ++t) {
    const std::size_t n = 1 + t % 8;
    const Matrix a = oracle::gaussian(n, 61, t);
    const auto sa = singular_values(a);
    const auto si = singular_values(iota(a));
    ASSERT_EQ(si.size(), (n + 1) * (n + 1));
    for (std::size_t k = 0; k < si.size(); ++k) EXPECT_NEAR(si[k], sa.at_or_zero(k), 1e-12);
    const auto se = iota_embedded(a).singular_values();
    for (std::size_t k = 0; k < si.size(); ++k) EXPECT_NEAR(se[k], si[k], 1e-12);
  }
}

TEST(Iota, TooLargeForDense) {
  EXPECT_THROW(iota(Matrix(64)), DimensionTooLarge);
  EXPECT_NO_THROW(iota_embedded(Matrix(64)));
}

TEST(Counterexample, SwapMatrixAtScaleTen) {
  const Matrix a{{0, 1}, {1, 0}};
  const auto p = counterexample_pair(a, 10.0);
  EXPECT_LT(oracle::max_abs_diff(p.commutator().to_dense(), iota(a)), 1e-10);
  EXPECT_LT(oracle::max_abs_diff(commutator(p.a_dense(), p.b_dense()), iota(a)), 1e-10);
  EXPECT_LT(oracle::max_abs_diff(commutator(adjoint(p.a_dense()), p.b_dense()), p.adjoint_commutator().to_dense()),
            1e-12);
  EXPECT_EQ(p.ambient(), 9u);
}

TEST(Counterexample, ResidualDecreasesAlongScales) {
  const Matrix a{{0, 1}, {1, 0}};
  const auto limit = counterexample_limit(a);
  double prev = INFINITY;
  for (double m : {10.0, 100.0, 1000.0}) {
    const double r = counterexample_residual(counterexample_pair(a, m), limit);
    EXPECT_LT(r, prev);
    prev = r;
  }
  EXPECT_LT(prev, 1e-2);
  // The limit carries a minus sign relative to iota(T(A)).
  const auto plus = iota_embedded(triangular_truncation(a));
  EXPECT_GT((counterexample_pair(a, 1000.0).adjoint_commutator() - plus).singular_values().largest(), 1.9);
}

TEST(Counterexample, ExactCommutatorIdentity) {
  for (std::uint64_t t = 0; t < 24; ++t) {
    const std::size_t n = 1 + t % 12;
    const Matrix a = oracle::gaussian(n, 62, t);
    const auto target = iota_embedded(a - diag_part(a));
    for (double m : {2.0, 3.0, 10.0, 1e3, 1e6}) {
      if (!counterexample_scale_admissible(n, m)) continue;
      const auto p = counterexample_pair(a, m);
      EXPECT_LT((p.commutator() - target).block.max_abs(), 1e-8 * a.frobenius_norm()) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Counterexample, DenseAgreesWithStructured) {
  for (std::uint64_t t = 0; t < 5; ++t) {
    const std::size_t n = 2 + t;
    const Matrix a = oracle::gaussian(n, 63, t);
    const auto p = counterexample_pair(a, 5.0);
    const Matrix ad = p.a_dense(), bd = p.b_dense();
    EXPECT_EQ(normality_defect(ad), 0.0);
    const double scale = p.b.block.max_abs() * std::pow(5.0, n + 1);
    EXPECT_LT(oracle::max_abs_diff(commutator(ad, bd), p.commutator().to_dense()), 1e-13 * scale);
    EXPECT_LT(oracle::max_abs_diff(commutator(adjoint(ad), bd), p.adjoint_commutator().to_dense()), 1e-13 * scale);
  }
}

TEST(Counterexample, DiagonalSourceGivesZero) {
  const std::vector<Complex> d{1.0, I, 3.0};
  const auto p = counterexample_pair(Matrix::diagonal(d), 10.0);
  EXPECT_EQ(p.b.block.max_abs(), 0.0);
  EXPECT_EQ(p.commutator().block.max_abs(), 0.0);
  EXPECT_EQ(p.adjoint_commutator().block.max_abs(), 0.0);
}

TEST(Counterexample, Errors) {
  EXPECT_THROW(counterexample_pair(Matrix::identity(2), 1.5), InvalidSpec);
  EXPECT_THROW(counterexample_pair(Matrix::identity(400), 10.0), OverflowGuard);
  EXPECT_THROW(counterexample_converged(Matrix::identity(400), 1e-6, 10.0), OverflowGuard);
  EXPECT_TRUE(counterexample_scale_admissible(2, 1e100));
  EXPECT_FALSE(counterexample_scale_admissible(3, 1e100));
}

TEST(CounterexampleConverged, ZeroConvergesImmediately) {
  const auto c = counterexample_converged(Matrix(3), 1e-6, 10.0);
  EXPECT_EQ(c.pair.m, 10.0);
  EXPECT_EQ(c.residual, 0.0);
  EXPECT_EQ(c.trace.size(), 1u);
}

TEST(CounterexampleConverged, DaviesOffDiagonal) {
  const Matrix p4 = davies_projection(4);
  const Matrix a = p4 - diag_part(p4);
  const auto c = counterexample_converged(a, 1e-6, 10.0);
  EXPECT_TRUE(std::isfinite(c.pair.m));
  EXPECT_LE(c.residual, 1e-6 * a.frobenius_norm());
  for (std::size_t i = 1; i < c.trace.size(); ++i) {
    EXPECT_EQ(c.trace[i].first, 2.0 * c.trace[i - 1].first);
    EXPECT_LE(c.trace[i].second, c.trace[i - 1].second);
  }
}

TEST(CounterexampleConverged, GuardReportsBestScale) {
  // n = 64 cannot reach 1e-12 before (n+1) log10 m > 300.
  const Matrix p = davies_projection(64);
  try {
    counterexample_converged(p, 1e-12, 10.0);
    FAIL() << "expected OverflowGuard";
  } catch (const OverflowGuard& e) {
    EXPECT_TRUE(counterexample_scale_admissible(64, e.best_m()));
    EXPECT_TRUE(std::isfinite(e.best_residual()));
  }
}

TEST(SignedDiagAverage, Examples) {
  EXPECT_EQ(signed_diag_average(Matrix{{Complex(3.0, 1.0)}}), Matrix{{Complex(3.0, 1.0)}});
  const std::vector<double> d{1.0, 2.0};
  EXPECT_EQ(signed_diag_average(Matrix{{1, 5}, {7, 2}}), Matrix::diagonal(d));
  EXPECT_THROW(signed_diag_average(Matrix(21)), DimensionTooLarge);
}

TEST(SignedDiagAverage, MatchesLiteralSumAndDiagPart) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const std::size_t n = 1 + t % 6;
    const Matrix a = oracle::gaussian(n, 64, t);
    Matrix literal(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<double> eps(n);
      for (std::size_t k = 0; k < n; ++k) eps[k] = (mask >> k) & 1u ? -1.0 : 1.0;
      const Matrix u = Matrix::diagonal(eps);
      literal += u * a * u;
    }
    literal *= 1.0 / static_cast<double>(std::size_t{1} << n);
    EXPECT_LT(oracle::max_abs_diff(signed_diag_average(a), literal), 1e-12);
    EXPECT_LT(oracle::max_abs_diff(signed_diag_average(a), diag_part(a)), 1e-12);
  }
}

TEST(TensorFacts, DiagonalContractionBanachNorms) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 6, k = 1 + (t / 6) % 6;
    const Matrix a = oracle::gaussian(n, 65, t), x = oracle::gaussian(k, 66, t);
    for (const auto& spec : banach_norms())
      EXPECT_LE(matrix_norm(spec, kron(diag_part(a), x)), matrix_norm(spec, kron(a, x)) + 1e-10) << spec.name();
  }
}

TEST(TensorFacts, FourInequalitiesBanachNorms) {
  const auto s1 = NormSpec::schatten(1);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const std::size_t m = 1 + t % 6, k = 1 + (t / 6) % 6;
    const Matrix b = rank_deficient(m, 67, t), x = oracle::gaussian(k, 68, t);
    const auto [supp, rank] = support_projection(b);
    const double b_op = singular_values(b).largest(), b_1 = matrix_norm(s1, b);
    for (const auto& spec : banach_norms()) {
      const double bx = matrix_norm(spec, kron(b, x)), nx = matrix_norm(spec, x);
      EXPECT_LE(b_op * nx, bx + 1e-10) << "(i) " << spec.name();
      EXPECT_LE(b_1 * matrix_norm(spec, kron(supp, x)), bx * static_cast<double>(rank) + 1e-10)
          << "(ii) " << spec.name();
      EXPECT_LE(bx, b_1 * nx + 1e-10) << "(iii) " << spec.name();
      EXPECT_LE(bx, b_op * matrix_norm(spec, kron(Matrix::identity(m), x)) + 1e-10) << "(iv) " << spec.name();
    }
  }
}

// The weak-L1 quasi-norm has no triangle inequality; the averaging argument
// behind the contraction and inequality (ii) breaks down for it.
TEST(TensorFacts, WeakL1Witnesses) {
  const auto w = NormSpec::weak_l1();
  // A = [[1, 1/3], [1/3, 1]]: mu(A) = (4/3, 2/3) gives 4/3, while diag(A) = I gives 2.
  const Matrix a{{1.0, 1.0 / 3.0}, {1.0 / 3.0, 1.0}};
  const Matrix one{{1.0}};
  EXPECT_NEAR(matrix_norm(w, kron(a, one)), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(matrix_norm(w, kron(diag_part(a), one)), 2.0, 1e-14);
  // B = diag(1, 1/2) with full support: ||B||_1 ||1 (x) 1||_w = 1.5 * 2 = 3 > rank * ||B||_w = 2 * 1 = 2.
  const std::vector<double> bd{1.0, 0.5};
  const Matrix b = Matrix::diagonal(bd);
  const auto [supp, rank] = support_projection(b);
  EXPECT_EQ(rank, 2u);
  EXPECT_GT(matrix_norm(NormSpec::schatten(1), b) * matrix_norm(w, kron(supp, one)),
            static_cast<double>(rank) * matrix_norm(w, kron(b, one)));
}
