#include "fuglede/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>

#include "fuglede/constructions.hpp"
#include "fuglede/doi.hpp"
#include "fuglede/errors.hpp"
#include "fuglede/funcspace.hpp"
#include "fuglede/random.hpp"

namespace fuglede {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs body(t) for t in [0, trials) across threads; the first exception is
// rethrown after the loop.
template <class Body>
void for_each_trial(std::size_t trials, Body&& body) {
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      body(static_cast<std::size_t>(t));
    } catch (...) {
#pragma omp critical(fuglede_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

Matrix draw(EnsembleKind kind, std::size_t n, std::uint64_t seed, std::size_t trial) {
  return sample({n, kind, seed, trial});
}

} // namespace

std::string to_string(Command c) {
  switch (c) {
  case Command::Davies: return "davies";
  case Command::FugledeSweep: return "fuglede-sweep";
  case Command::Counterexample: return "counterexample";
  case Command::Boyd: return "boyd";
  case Command::CalderonCheck: return "calderon-check";
  case Command::DoiCheck: return "doi-check";
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (auto c : {Command::Davies, Command::FugledeSweep, Command::Counterexample, Command::Boyd,
                 Command::CalderonCheck, Command::DoiCheck})
    if (to_string(c) == name) return c;
  throw InvalidSpec("unknown command '" + name + "'");
}

std::string to_string(SweepEnsemble e) {
  switch (e) {
  case SweepEnsemble::Random: return "random";
  case SweepEnsemble::SelfAdjoint: return "self-adjoint";
  case SweepEnsemble::Counterexample: return "counterexample";
  }
  return "?";
}

SweepEnsemble parse_ensemble(const std::string& name) {
  for (auto e : {SweepEnsemble::Random, SweepEnsemble::SelfAdjoint, SweepEnsemble::Counterexample})
    if (to_string(e) == name) return e;
  throw InvalidSpec("unknown ensemble '" + name + "'");
}

ExperimentConfig with_defaults(ExperimentConfig config) {
  if (config.sizes.empty()) {
    switch (config.command) {
    case Command::Davies: config.sizes = {8, 16, 32, 64, 128, 256, 512}; break;
    case Command::FugledeSweep: config.sizes = {8, 16, 32}; break;
    case Command::Counterexample: config.sizes = {2, 4, 8, 16, 32, 64, 128}; break;
    case Command::Boyd: config.sizes = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}; break;
    case Command::CalderonCheck: config.sizes = {8, 16, 32, 64}; break;
    case Command::DoiCheck: config.sizes = {4, 8, 16}; break;
    }
  }
  if (config.norms.empty()) {
    config.norms = all_norms();
    if (config.command == Command::Boyd) config.norms.pop_back(); // llog has no dilation closed form
  }
  if (config.trials == 0) throw InvalidSpec("trials must be >= 1");
  return config;
}

std::vector<DaviesRow> run_davies(const std::vector<std::size_t>& sizes) {
  std::vector<DaviesRow> rows;
  for (std::size_t n : sizes) {
    if (n < 1 || n > 1024) throw InvalidSpec("davies: sizes must lie in [1, 1024]");
    const double trace = matrix_norm(NormSpec::schatten(1.0), triangular_truncation(davies_projection(n)));
    rows.push_back({n, trace, std::log(static_cast<double>(n))});
  }
  return rows;
}

std::vector<SweepCell> run_fuglede_sweep(const std::vector<NormSpec>& norms, const std::vector<std::size_t>& sizes,
                                         std::size_t trials, std::uint64_t seed, SweepEnsemble ensemble) {
  std::vector<SweepCell> cells;
  for (std::size_t n : sizes) {
    std::vector<std::vector<double>> ratios(trials, std::vector<double>(norms.size(), kNaN));
    std::vector<char> skipped(trials, 0);

    if (ensemble == SweepEnsemble::Counterexample) {
      // Deterministic: A = P_n, the pair at the converged (or best admissible) scale.
      trials = 1;
      ratios.assign(1, std::vector<double>(norms.size(), kNaN));
      skipped.assign(1, 0);
      const Matrix p = davies_projection(n);
      double m = 10.0;
      try {
        m = counterexample_converged(p, 1e-6).pair.m;
      } catch (const OverflowGuard& g) {
        if (g.best_residual() == std::numeric_limits<double>::infinity()) throw;
        m = g.best_m();
      }
      const CounterexamplePair pair = counterexample_pair(p, m);
      const SingularProfile top = pair.adjoint_commutator().singular_values();
      const SingularProfile base = pair.commutator().singular_values();
      for (std::size_t k = 0; k < norms.size(); ++k) ratios[0][k] = norm(norms[k], top) / norm(norms[k], base);
    } else {
      const EnsembleKind kind =
          ensemble == SweepEnsemble::SelfAdjoint ? EnsembleKind::SelfAdjoint : EnsembleKind::NormalInUnitSquare;
      for_each_trial(trials, [&](std::size_t t) {
        const Matrix a = draw(kind, n, seed, t);
        const Matrix x = draw(EnsembleKind::Contraction, n, seed, t);
        const SingularProfile base = singular_values(commutator(a, x));
        const double threshold = 1e-12 * singular_values(a).largest() * singular_values(x).largest();
        if (base.largest() < threshold) {
          skipped[t] = 1;
          return;
        }
        const SingularProfile top = singular_values(commutator(adjoint(a), x));
        for (std::size_t k = 0; k < norms.size(); ++k) ratios[t][k] = norm(norms[k], top) / norm(norms[k], base);
      });
    }

    for (std::size_t k = 0; k < norms.size(); ++k) {
      SweepCell cell{norms[k], n, 0.0, 0, 0};
      for (std::size_t t = 0; t < trials; ++t) {
        if (skipped[t]) {
          ++cell.skipped;
          continue;
        }
        ++cell.evaluated;
        cell.max_ratio = std::max(cell.max_ratio, ratios[t][k]);
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<CounterexampleRow> run_counterexample(const std::vector<std::size_t>& sizes) {
  std::vector<CounterexampleRow> rows;
  const NormSpec trace = NormSpec::schatten(1.0);
  for (std::size_t n : sizes) {
    if (n < 1) throw InvalidSpec("counterexample: sizes must be >= 1");
    const Matrix p = davies_projection(n);
    CounterexampleRow row{};
    row.n = n;
    row.r1 = norm(trace, iota_embedded(triangular_truncation(p)).singular_values());
    row.r2 = norm(trace, iota_embedded(p - diag_part(p)).singular_values());
    row.ratio = row.r1 / row.r2;
    row.davies_trace = matrix_norm(trace, triangular_truncation(p));

    std::optional<double> m;
    try {
      const ConvergedCounterexample c = counterexample_converged(p, 1e-6);
      row.converged = true;
      m = c.pair.m;
      row.residual = c.residual;
    } catch (const OverflowGuard& g) {
      row.converged = false;
      if (std::isfinite(g.best_residual())) {
        m = g.best_m();
        row.residual = g.best_residual();
      }
    }
    if (m) {
      const CounterexamplePair pair = counterexample_pair(p, *m);
      row.m_used = *m;
      row.ratio_at_m = norm(trace, pair.adjoint_commutator().singular_values()) /
                       norm(trace, pair.commutator().singular_values());
    } else {
      row.m_used = kNaN;
      row.residual = kNaN;
      row.ratio_at_m = kNaN;
    }
    rows.push_back(row);
  }
  return rows;
}

BoydIndices run_boyd(const SpaceSpec& space, std::size_t n_max) { return boyd_indices(space, n_max); }

CalderonCheck run_calderon_check(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed) {
  CalderonCheck out{{}, 0.0};
  for (std::size_t n : sizes) {
    std::vector<double> normal_ratio(trials, 0.0);
    std::vector<double> sa_ratio(trials, 0.0);
    std::vector<char> skipped(trials, 0);
    for_each_trial(trials, [&](std::size_t t) {
      const Matrix y = draw(EnsembleKind::Contraction, n, seed, t);
      try {
        normal_ratio[t] = fuglede_majorization(draw(EnsembleKind::NormalInUnitSquare, n, seed, t), y).max_ratio;
        sa_ratio[t] = fuglede_majorization(draw(EnsembleKind::SelfAdjoint, n, seed, t), y).max_ratio;
      } catch (const ZeroCommutator&) {
        skipped[t] = 1;
      }
    });
    CalderonSizeResult r{n, 0.0, 0.0, 0};
    for (std::size_t t = 0; t < trials; ++t) {
      if (skipped[t]) {
        ++r.skipped;
        continue;
      }
      r.max_ratio = std::max(r.max_ratio, normal_ratio[t]);
      r.self_adjoint_max_ratio = std::max(r.self_adjoint_max_ratio, sa_ratio[t]);
    }
    out.global_max = std::max(out.global_max, r.max_ratio);
    out.sizes.push_back(r);
  }
  return out;
}

std::vector<DoiSizeResult> run_doi_check(const std::vector<std::size_t>& sizes, std::size_t trials,
                                         std::uint64_t seed) {
  const std::vector<Symbol> symbols = {constant_one(), difference(), omega(), conj_difference()};
  std::vector<DoiSizeResult> out;
  for (std::size_t n : sizes) {
    std::vector<DoiSizeResult> per(trials, DoiSizeResult{n, 0.0, 0.0, 0.0});
    for_each_trial(trials, [&](std::size_t t) {
      const Matrix y = draw(EnsembleKind::NormalInUnitSquare, n, seed, t);
      const Matrix x = draw(EnsembleKind::Contraction, n, seed, t);
      const SpectralMeasure e = spectral_measure(y);
      const Matrix c = commutator(y, x);
      const Matrix lhs = commutator(adjoint(y), x);
      const Matrix rhs = doi_apply(e, omega(), c);
      per[t].intertwine_error = (lhs - rhs).frobenius_norm() / c.frobenius_norm();
      per[t].hs_ratio_deviation = std::abs(lhs.frobenius_norm() / c.frobenius_norm() - 1.0);
      double hom = 0.0;
      for (const auto& phi : symbols)
        for (const auto& psi : symbols) {
          const Matrix joint = doi_apply(e, symbol_product(phi, psi), x);
          const Matrix nested = doi_apply(e, phi, doi_apply(e, psi, x));
          hom = std::max(hom, (joint - nested).frobenius_norm() / x.frobenius_norm());
        }
      per[t].homomorphism_error = hom;
    });
    DoiSizeResult r{n, 0.0, 0.0, 0.0};
    for (const auto& p : per) {
      r.intertwine_error = std::max(r.intertwine_error, p.intertwine_error);
      r.homomorphism_error = std::max(r.homomorphism_error, p.homomorphism_error);
      r.hs_ratio_deviation = std::max(r.hs_ratio_deviation, p.hs_ratio_deviation);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<ResultRecord> run_experiment(const ExperimentConfig& raw) {
  const ExperimentConfig config = with_defaults(raw);
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd = to_string(config.command);
  std::vector<ResultRecord> records;
  const auto add = [&](nlohmann::json params, const std::string& metric, double value) {
    records.push_back({cmd, std::move(params), metric, value, config.seed, 0.0});
  };

  switch (config.command) {
  case Command::Davies:
    for (const auto& r : run_davies(config.sizes)) {
      add({{"n", r.n}}, "trace_norm", r.trace_norm);
      add({{"n", r.n}}, "ln_n", r.log_n);
    }
    break;
  case Command::FugledeSweep:
    for (const auto& c : run_fuglede_sweep(config.norms, config.sizes, config.trials, config.seed, config.ensemble)) {
      const nlohmann::json params = {
          {"norm", c.norm.name()}, {"n", c.n}, {"ensemble", to_string(config.ensemble)}, {"trials", config.trials}};
      add(params, "max_ratio", c.max_ratio);
      add(params, "evaluated", static_cast<double>(c.evaluated));
      add(params, "skipped", static_cast<double>(c.skipped));
    }
    break;
  case Command::Counterexample:
    for (const auto& r : run_counterexample(config.sizes)) {
      const nlohmann::json params = {{"n", r.n}};
      add(params, "converged", r.converged ? 1.0 : 0.0);
      add(params, "m_used", r.m_used);
      add(params, "residual", r.residual);
      add(params, "r1", r.r1);
      add(params, "r2", r.r2);
      add(params, "ratio", r.ratio);
      add(params, "ratio_at_m", r.ratio_at_m);
      add(params, "davies_trace_norm", r.davies_trace);
      add(params, "iota_check", std::abs(r.r1 - r.davies_trace));
    }
    break;
  case Command::Boyd: {
    const std::size_t n_max = *std::max_element(config.sizes.begin(), config.sizes.end());
    for (const auto& spec : config.norms) {
      const SpaceSpec space = SpaceSpec::parse(spec.name());
      const BoydIndices b = run_boyd(space, n_max);
      add({{"space", space.name()}, {"n_max", n_max}}, "alpha", b.alpha);
      add({{"space", space.name()}, {"n_max", n_max}}, "beta", b.beta);
      for (const auto& q : b.quotients) {
        if (std::find(config.sizes.begin(), config.sizes.end(), q.n) == config.sizes.end()) continue;
        add({{"space", space.name()}, {"n", q.n}}, "quotient_lower", q.lower);
        add({{"space", space.name()}, {"n", q.n}}, "quotient_upper", q.upper);
      }
    }
    break;
  }
  case Command::CalderonCheck: {
    const CalderonCheck c = run_calderon_check(config.sizes, config.trials, config.seed);
    for (const auto& r : c.sizes) {
      const nlohmann::json params = {{"n", r.n}, {"trials", config.trials}};
      add(params, "max_ratio", r.max_ratio);
      add(params, "self_adjoint_max_ratio", r.self_adjoint_max_ratio);
      add(params, "skipped", static_cast<double>(r.skipped));
    }
    add({{"trials", config.trials}}, "global_max", c.global_max);
    break;
  }
  case Command::DoiCheck:
    for (const auto& r : run_doi_check(config.sizes, config.trials, config.seed)) {
      const nlohmann::json params = {{"n", r.n}, {"trials", config.trials}};
      add(params, "intertwine_error", r.intertwine_error);
      add(params, "homomorphism_error", r.homomorphism_error);
      add(params, "hs_ratio_deviation", r.hs_ratio_deviation);
    }
    break;
  }

  if (config.timing) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : records) r.wall_time_ms = ms;
  }
  return records;
}

} // namespace fuglede
