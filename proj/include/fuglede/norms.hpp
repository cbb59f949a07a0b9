#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fuglede/linalg.hpp"
#include "fuglede/matrix.hpp"

namespace fuglede {

/// Symmetric (quasi-)norm on singular profiles.
class NormSpec {
public:
  enum class Kind { Schatten, WeakL1, LambdaLog };

  /// p in [1, inf]; p < 1 throws InvalidSpec.
  static NormSpec schatten(double p);
  static NormSpec operator_norm() { return schatten(std::numeric_limits<double>::infinity()); }
  static NormSpec weak_l1() { return NormSpec(Kind::WeakL1, 0.0); }
  static NormSpec lambda_log() { return NormSpec(Kind::LambdaLog, 0.0); }

  /// Parses the CLI tokens s1, s1.5, s2, s4, sinf, weakl1, llog (any sP with P >= 1).
  static NormSpec parse(const std::string& token);

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

private:
  NormSpec(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

/// Schatten(p): (sum s_k^p)^{1/p}; Schatten(inf): s_1;
/// WeakL1: max_k k s_k (1-based), the sup of t mu(t) for the step function s_{floor(t)+1};
/// LambdaLog: sum_k s_k ln((k+1)/k), the integral of mu(t)/(1+t) over [k-1, k).
double norm(const NormSpec& spec, const SingularProfile& s);
double matrix_norm(const NormSpec& spec, const Matrix& a);

/// The norms implemented in this library, as used by the property suites.
std::vector<NormSpec> all_norms();

// Sequence dilations.

/// D_n: each entry repeated n times.
std::vector<double> dilate_up(std::size_t n, std::span<const double> x);
/// D_{1/n}: entries at 1-based positions n, 2n, 3n, ...
std::vector<double> dilate_down(std::size_t n, std::span<const double> x);

/// Rearrangement-invariant sequence spaces with closed-form dilation norms.
class SpaceSpec {
public:
  enum class Kind { EllP, WeakL1 };

  static SpaceSpec ell(double p);
  static SpaceSpec weak_l1() { return SpaceSpec(Kind::WeakL1, 1.0); }
  /// Same tokens as NormSpec::parse; llog has no dilation closed form and throws InvalidSpec.
  static SpaceSpec parse(const std::string& token);

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::string name() const;

  /// Space norm of a finite sequence (computed on its decreasing rearrangement).
  double norm(std::span<const double> x) const;

private:
  SpaceSpec(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

enum class DilationDirection { Up, Down };

/// Exact operator norm of D_n (Up) or D_{1/n} (Down) acting on decreasing
/// rearrangements in `space`:
///   l_p   Up: n^{1/p}     Down: n^{-1/p}      (l_inf: 1 and 1)
///   weak-l1 Up: n       Down: 1/n
/// Both are attained: Up by any finitely supported decreasing x, Down by the
/// constant block of length a multiple of n (l_p) or x_k = 1/k (weak-l1).
double dilation_norm_closed(const SpaceSpec& space, std::size_t n, DilationDirection direction);

struct BoydQuotient {
  std::size_t n;
  double lower; // log ||D_{1/n}|| / log(1/n)
  double upper; // log ||D_n|| / log n
};

struct BoydIndices {
  double alpha;
  double beta;
  std::vector<BoydQuotient> quotients;
};

/// Evaluates the defining quotients at n = 2..n_max and reports their value
/// at n_max (constant in n for every supported space). n_max >= 4.
BoydIndices boyd_indices(const SpaceSpec& space, std::size_t n_max);

} // namespace fuglede
