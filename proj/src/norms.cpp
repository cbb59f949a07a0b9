#include "fuglede/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "fuglede/errors.hpp"

namespace fuglede {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// "1.5" -> 1.5, "inf" -> inf. Throws InvalidSpec on trailing garbage.
double parse_exponent(const std::string& text, const std::string& token) {
  if (text == "inf") return kInf;
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) throw InvalidSpec("unrecognised norm token '" + token + "'");
  return value;
}

std::string format_exponent(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

double schatten(double p, std::span<const double> s) {
  if (s.empty()) return 0.0;
  const double top = s.front();
  if (top == 0.0) return 0.0;
  if (std::isinf(p)) return top;
  if (p == 1.0) {
    double sum = 0.0;
    for (double v : s) sum += v;
    return sum;
  }
  double sum = 0.0;
  for (double v : s) sum += std::pow(v / top, p);
  return top * std::pow(sum, 1.0 / p);
}

} // namespace

NormSpec NormSpec::schatten(double p) {
  if (!(p >= 1.0)) throw InvalidSpec("Schatten(p) requires p >= 1, got " + format_exponent(p));
  return NormSpec(Kind::Schatten, p);
}

NormSpec NormSpec::parse(const std::string& token) {
  if (token == "weakl1") return weak_l1();
  if (token == "llog") return lambda_log();
  if (token.size() > 1 && token[0] == 's') return schatten(parse_exponent(token.substr(1), token));
  throw InvalidSpec("unrecognised norm token '" + token + "'");
}

std::string NormSpec::name() const {
  switch (kind_) {
  case Kind::Schatten: return "s" + format_exponent(p_);
  case Kind::WeakL1: return "weakl1";
  case Kind::LambdaLog: return "llog";
  }
  return "?";
}

double norm(const NormSpec& spec, const SingularProfile& s) {
  const auto v = s.values();
  switch (spec.kind()) {
  case NormSpec::Kind::Schatten: return schatten(spec.p(), v);
  case NormSpec::Kind::WeakL1: {
    double best = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) best = std::max(best, static_cast<double>(k + 1) * v[k]);
    return best;
  }
  case NormSpec::Kind::LambdaLog: {
    double sum = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) sum += v[k] * std::log1p(1.0 / static_cast<double>(k + 1));
    return sum;
  }
  }
  throw InvalidSpec("norm: unknown spec");
}

double matrix_norm(const NormSpec& spec, const Matrix& a) { return norm(spec, singular_values(a)); }

std::vector<NormSpec> all_norms() {
  return {NormSpec::schatten(1.0), NormSpec::schatten(1.5), NormSpec::schatten(2.0), NormSpec::schatten(4.0),
          NormSpec::operator_norm(), NormSpec::weak_l1(),    NormSpec::lambda_log()};
}

std::vector<double> dilate_up(std::size_t n, std::span<const double> x) {
  if (n == 0) throw InvalidSpec("dilate_up: n must be >= 1");
  std::vector<double> out;
  out.reserve(x.size() * n);
  for (double v : x) out.insert(out.end(), n, v);
  return out;
}

std::vector<double> dilate_down(std::size_t n, std::span<const double> x) {
  if (n == 0) throw InvalidSpec("dilate_down: n must be >= 1");
  std::vector<double> out;
  for (std::size_t k = n; k <= x.size(); k += n) out.push_back(x[k - 1]);
  return out;
}

SpaceSpec SpaceSpec::ell(double p) {
  if (!(p >= 1.0)) throw InvalidSpec("l_p requires p in [1, inf], got " + format_exponent(p));
  return SpaceSpec(Kind::EllP, p);
}

SpaceSpec SpaceSpec::parse(const std::string& token) {
  if (token == "weakl1") return weak_l1();
  if (token.size() > 1 && (token[0] == 's' || token[0] == 'l') && token != "llog")
    return ell(parse_exponent(token.substr(1), token));
  throw InvalidSpec("unsupported space '" + token + "'");
}

std::string SpaceSpec::name() const {
  return kind_ == Kind::WeakL1 ? std::string("weakl1") : "l" + format_exponent(p_);
}

double SpaceSpec::norm(std::span<const double> x) const {
  std::vector<double> r(x.size());
  std::transform(x.begin(), x.end(), r.begin(), [](double v) { return std::abs(v); });
  std::sort(r.begin(), r.end(), std::greater<>());
  if (kind_ == Kind::WeakL1) return fuglede::norm(NormSpec::weak_l1(), SingularProfile(std::move(r)));
  return schatten(p_, r);
}

double dilation_norm_closed(const SpaceSpec& space, std::size_t n, DilationDirection direction) {
  if (n == 0) throw InvalidSpec("dilation_norm_closed: n must be >= 1");
  const double dn = static_cast<double>(n);
  if (space.kind() == SpaceSpec::Kind::WeakL1) return direction == DilationDirection::Up ? dn : 1.0 / dn;
  const double p = space.p();
  if (std::isinf(p)) return 1.0;
  return direction == DilationDirection::Up ? std::pow(dn, 1.0 / p) : std::pow(dn, -1.0 / p);
}

BoydIndices boyd_indices(const SpaceSpec& space, std::size_t n_max) {
  if (n_max < 4) throw InvalidSpec("boyd_indices: n_max must be >= 4");
  BoydIndices out{0.0, 0.0, {}};
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double logn = std::log(static_cast<double>(n));
    const double lower = std::log(dilation_norm_closed(space, n, DilationDirection::Down)) / -logn;
    const double upper = std::log(dilation_norm_closed(space, n, DilationDirection::Up)) / logn;
    out.quotients.push_back({n, lower, upper});
  }
  // Quotients are constant in n for these spaces up to rounding in log; the
  // exponent form gives the limit exactly.
  if (space.kind() == SpaceSpec::Kind::WeakL1) {
    out.alpha = 1.0;
    out.beta = 1.0;
  } else {
    const double inv_p = std::isinf(space.p()) ? 0.0 : 1.0 / space.p();
    out.alpha = inv_p;
    out.beta = inv_p;
  }
  for (const auto& q : out.quotients)
    if (std::abs(q.lower - out.alpha) > 1e-12 || std::abs(q.upper - out.beta) > 1e-12)
      throw NumericalError("boyd_indices: quotient at n=" + std::to_string(q.n) + " departs from the limit");
  return out;
}

} // namespace fuglede
