#pragma once

#include <span>
#include <vector>

#include "fuglede/linalg.hpp"
#include "fuglede/matrix.hpp"

namespace fuglede {

/// Finitely supported step function on (0, inf): value v_j on [t_{j-1}, t_j)
/// with t_0 = 0, and 0 on [t_K, inf).
class StepFunction {
public:
  StepFunction() = default;
  /// Throws InvalidSpec unless breakpoints are positive, strictly increasing,
  /// finite and match `values` in length, and values are not NaN.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  /// Indicator of (0, a).
  static StepFunction indicator(double a) { return StepFunction({a}, {1.0}); }

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t pieces() const noexcept { return values_.size(); }
  double support_end() const noexcept { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

  /// f(t), right-continuous.
  double operator()(double t) const;
  /// lim_{s -> t-} f(s)
  double left_limit(double t) const;
  /// Lebesgue measure of {s : |f(s)| > lambda}.
  double distribution(double lambda) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Non-increasing rearrangement of |f|.
StepFunction rearrange(const StepFunction& f);
/// Value s_k on [k-1, k); trailing zeros are dropped.
StepFunction profile_to_step(const SingularProfile& s);
/// (D_s f)(t) = f(t / s). Throws InvalidSpec for s <= 0.
StepFunction dilate_fn(double s, const StepFunction& f);
StepFunction operator+(const StepFunction& f, const StepFunction& g);

/// Closed-form image alpha + beta / t + gamma ln t on each interval [lo, hi);
/// the last interval extends to infinity.
class CalderonImage {
public:
  struct Piece {
    double lo;
    double hi; // +inf on the tail piece
    double alpha;
    double beta;
    double gamma;

    double eval(double t) const;
  };

  CalderonImage() = default;
  explicit CalderonImage(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  /// Evaluates at t > 0.
  double operator()(double t) const;

private:
  std::vector<Piece> pieces_;
};

/// (Cf)(t) = (1/t) int_0^t f
CalderonImage hardy_c(const StepFunction& f);
/// (C'f)(t) = int_t^inf f(s)/s ds
CalderonImage hardy_cprime(const StepFunction& f);
/// S = C + C'
CalderonImage calderon(const StepFunction& f);
/// Piecewise sum; both images must come from the same breakpoints.
CalderonImage operator+(const CalderonImage& x, const CalderonImage& y);
/// (D_s g)(t) = g(t / s) at the coefficient level.
CalderonImage dilate_image(double s, const CalderonImage& g);

struct MajorizationPoint {
  double t;
  double ratio;
};

struct MajorizationResult {
  double max_ratio = 0.0;
  std::vector<MajorizationPoint> query_points;
};

/// sup over an exact query grid of mu(t, [X*, Y]) / (S mu([X, Y]))(t).
/// The grid holds midpoints of the merged breakpoints, the left limit and
/// value at every breakpoint and one tail point; the ratio is monotone on
/// each piece, so this is the exact supremum. Throws NotNormal (per
/// `normality_tol`) or ZeroCommutator.
MajorizationResult fuglede_majorization(const Matrix& x, const Matrix& y,
                                        double normality_tol = kDefaultNormalityTol);

/// The same supremum for given profiles of [X*, Y] and [X, Y].
MajorizationResult majorization_ratio(const SingularProfile& adjoint_commutator,
                                      const SingularProfile& commutator);

} // namespace fuglede
