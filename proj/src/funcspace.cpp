#include "fuglede/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fuglede/errors.hpp"

namespace fuglede {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size()) throw InvalidSpec("StepFunction: breakpoints/values length mismatch");
  double prev = 0.0;
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    if (!std::isfinite(breakpoints_[j]) || !(breakpoints_[j] > prev))
      throw InvalidSpec("StepFunction: breakpoints must be positive, finite and strictly increasing");
    if (std::isnan(values_[j])) throw InvalidSpec("StepFunction: NaN value");
    prev = breakpoints_[j];
  }
}

double StepFunction::operator()(double t) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return it == breakpoints_.end() ? 0.0 : values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double StepFunction::left_limit(double t) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return it == breakpoints_.end() ? 0.0 : values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double StepFunction::distribution(double lambda) const {
  double measure = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (std::abs(values_[j]) > lambda) measure += breakpoints_[j] - prev;
    prev = breakpoints_[j];
  }
  return measure;
}

StepFunction rearrange(const StepFunction& f) {
  struct Run {
    double length;
    double value;
  };
  std::vector<Run> runs;
  double prev = 0.0;
  for (std::size_t j = 0; j < f.pieces(); ++j) {
    const double v = std::abs(f.values()[j]);
    if (v > 0.0) runs.push_back({f.breakpoints()[j] - prev, v});
    prev = f.breakpoints()[j];
  }
  std::stable_sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.value > b.value; });

  std::vector<double> bps;
  std::vector<double> vals;
  double end = 0.0;
  for (const auto& r : runs) {
    end += r.length;
    if (!vals.empty() && vals.back() == r.value) {
      bps.back() = end;
    } else {
      bps.push_back(end);
      vals.push_back(r.value);
    }
  }
  return {std::move(bps), std::move(vals)};
}

StepFunction profile_to_step(const SingularProfile& s) {
  std::size_t len = s.size();
  while (len > 0 && s[len - 1] == 0.0) --len;
  std::vector<double> bps(len);
  std::vector<double> vals(len);
  for (std::size_t k = 0; k < len; ++k) {
    bps[k] = static_cast<double>(k + 1);
    vals[k] = s[k];
  }
  return {std::move(bps), std::move(vals)};
}

StepFunction dilate_fn(double s, const StepFunction& f) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidSpec("dilate_fn: scale must be positive and finite");
  std::vector<double> bps(f.breakpoints().begin(), f.breakpoints().end());
  for (auto& t : bps) t *= s;
  return {std::move(bps), std::vector<double>(f.values().begin(), f.values().end())};
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  std::vector<double> bps;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(bps));
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<double> vals(bps.size());
  for (std::size_t j = 0; j < bps.size(); ++j) vals[j] = f.left_limit(bps[j]) + g.left_limit(bps[j]);
  return {std::move(bps), std::move(vals)};
}

double CalderonImage::Piece::eval(double t) const {
  double r = alpha;
  if (beta != 0.0) r += beta / t;
  if (gamma != 0.0) r += gamma * std::log(t);
  return r;
}

double CalderonImage::operator()(double t) const {
  if (pieces_.empty()) return 0.0;
  const auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                                   [](double x, const Piece& p) { return x < p.hi; });
  return (it == pieces_.end() ? pieces_.back() : *it).eval(t);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

CalderonImage hardy_c(const StepFunction& f) {
  std::vector<CalderonImage::Piece> pieces;
  double prev = 0.0;
  double integral = 0.0; // int_0^{prev} f
  for (std::size_t j = 0; j < f.pieces(); ++j) {
    const double v = f.values()[j];
    const double t = f.breakpoints()[j];
    // (1/t) (F(prev) + v (t - prev)) = v + (F(prev) - v prev) / t
    pieces.push_back({prev, t, v, integral - v * prev, 0.0});
    integral += v * (t - prev);
    prev = t;
  }
  pieces.push_back({prev, kInf, 0.0, integral, 0.0});
  return CalderonImage(std::move(pieces));
}

CalderonImage hardy_cprime(const StepFunction& f) {
  const std::size_t k = f.pieces();
  std::vector<CalderonImage::Piece> pieces(k + 1);
  double tail = 0.0; // int_{t_j}^inf f(s)/s ds
  for (std::size_t j = k; j-- > 0;) {
    const double v = f.values()[j];
    const double hi = f.breakpoints()[j];
    const double lo = j == 0 ? 0.0 : f.breakpoints()[j - 1];
    // v (ln hi - ln t) + tail
    pieces[j] = {lo, hi, v * std::log(hi) + tail, 0.0, -v};
    if (j > 0) tail += v * std::log(hi / lo);
  }
  pieces[k] = {f.support_end(), kInf, 0.0, 0.0, 0.0};
  return CalderonImage(std::move(pieces));
}

CalderonImage operator+(const CalderonImage& x, const CalderonImage& y) {
  const auto px = x.pieces();
  const auto py = y.pieces();
  if (px.size() != py.size()) throw DimensionMismatch("CalderonImage: piece grids differ");
  std::vector<CalderonImage::Piece> out(px.size());
  for (std::size_t j = 0; j < px.size(); ++j) {
    if (px[j].lo != py[j].lo || px[j].hi != py[j].hi) throw DimensionMismatch("CalderonImage: piece grids differ");
    out[j] = {px[j].lo, px[j].hi, px[j].alpha + py[j].alpha, px[j].beta + py[j].beta, px[j].gamma + py[j].gamma};
  }
  return CalderonImage(std::move(out));
}

CalderonImage calderon(const StepFunction& f) { return hardy_c(f) + hardy_cprime(f); }

CalderonImage dilate_image(double s, const CalderonImage& g) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidSpec("dilate_image: scale must be positive and finite");
  const double ls = std::log(s);
  std::vector<CalderonImage::Piece> out;
  for (const auto& p : g.pieces())
    out.push_back({p.lo * s, p.hi * s, p.alpha - p.gamma * ls, p.beta * s, p.gamma});
  return CalderonImage(std::move(out));
}

MajorizationResult majorization_ratio(const SingularProfile& adjoint_commutator, const SingularProfile& commutator) {
  const StepFunction top = profile_to_step(adjoint_commutator);
  const StepFunction base = profile_to_step(commutator);
  if (base.pieces() == 0) throw ZeroCommutator("majorization_ratio: [X, Y] = 0");
  const CalderonImage s = calderon(base);

  std::vector<double> grid;
  std::merge(top.breakpoints().begin(), top.breakpoints().end(), base.breakpoints().begin(),
             base.breakpoints().end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  MajorizationResult out;
  const auto add = [&](double t, double numerator) {
    const double r = numerator / s(t);
    out.query_points.push_back({t, r});
    out.max_ratio = std::max(out.max_ratio, r);
  };
  double prev = 0.0;
  for (double b : grid) {
    const double mid = 0.5 * (prev + b);
    add(mid, top(mid));
    add(b, top.left_limit(b));
    add(b, top(b));
    prev = b;
  }
  const double tail = 2.0 * prev + 1.0;
  add(tail, top(tail));
  return out;
}

MajorizationResult fuglede_majorization(const Matrix& x, const Matrix& y, double normality_tol) {
  if (x.dim() != y.dim()) throw DimensionMismatch("fuglede_majorization: dimension mismatch");
  if (!is_normal(x, normality_tol)) throw NotNormal("fuglede_majorization: X is not normal");
  const Matrix c = commutator(x, y);
  const double scale = x.frobenius_norm() * y.frobenius_norm();
  if (c.frobenius_norm() <= 1e-12 * scale) throw ZeroCommutator("fuglede_majorization: [X, Y] vanishes");
  return majorization_ratio(singular_values(commutator(adjoint(x), y)), singular_values(c));
}

} // namespace fuglede
