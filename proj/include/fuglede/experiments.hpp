#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuglede/emit.hpp"
#include "fuglede/norms.hpp"

namespace fuglede {

enum class Command { Davies, FugledeSweep, Counterexample, Boyd, CalderonCheck, DoiCheck };

std::string to_string(Command c);
/// Throws InvalidSpec for unknown names.
Command parse_command(const std::string& name);

/// Operator pairs used by the Fuglede sweep.
enum class SweepEnsemble { Random, SelfAdjoint, Counterexample };
std::string to_string(SweepEnsemble e);
SweepEnsemble parse_ensemble(const std::string& name);

struct ExperimentConfig {
  Command command = Command::Davies;
  std::vector<std::size_t> sizes;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::vector<NormSpec> norms;
  SweepEnsemble ensemble = SweepEnsemble::Random;
  bool timing = false; // wall_time_ms is 0 unless set, keeping output reproducible
  std::string output_path = "-";
  OutputFormat format = OutputFormat::Csv;
};

/// Per-command defaults for sizes and norms when left empty.
ExperimentConfig with_defaults(ExperimentConfig config);

struct DaviesRow {
  std::size_t n;
  double trace_norm; // ||T(P_n)||_1
  double log_n;
};
std::vector<DaviesRow> run_davies(const std::vector<std::size_t>& sizes);

struct SweepCell {
  NormSpec norm;
  std::size_t n;
  double max_ratio; // max ||[A*,T]|| / ||[A,T]|| over evaluated trials
  std::size_t evaluated;
  std::size_t skipped; // ||[A,T]|| below 1e-12 ||A|| ||T||
};
std::vector<SweepCell> run_fuglede_sweep(const std::vector<NormSpec>& norms, const std::vector<std::size_t>& sizes,
                                         std::size_t trials, std::uint64_t seed, SweepEnsemble ensemble);

struct CounterexampleRow {
  std::size_t n;
  bool converged;       // residual <= 1e-6 ||P_n||_F within the scale guard
  double m_used;        // converged scale, or the best admissible one (nan if none)
  double residual;      // operator-norm residual at m_used
  double r1;            // ||iota_n(T(P_n))||_1
  double r2;            // ||iota_n(P_n - diag P_n)||_1
  double ratio;         // r1 / r2
  double ratio_at_m;    // ||[a*, b]||_1 / ||[a, b]||_1 at m_used
  double davies_trace;  // ||T(P_n)||_1 computed directly
};
std::vector<CounterexampleRow> run_counterexample(const std::vector<std::size_t>& sizes);

BoydIndices run_boyd(const SpaceSpec& space, std::size_t n_max);

struct CalderonSizeResult {
  std::size_t n;
  double max_ratio;              // normal-in-unit-square X
  double self_adjoint_max_ratio; // self-adjoint X
  std::size_t skipped;
};
struct CalderonCheck {
  std::vector<CalderonSizeResult> sizes;
  double global_max;
};
CalderonCheck run_calderon_check(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed);

struct DoiSizeResult {
  std::size_t n;
  double intertwine_error;    // max ||[Y*,T] - T_Omega([Y,T])||_F / ||[Y,T]||_F
  double homomorphism_error;  // max ||T_{phi psi} X - T_phi T_psi X||_F / ||X||_F
  double hs_ratio_deviation;  // max | ||[Y*,T]||_2 / ||[Y,T]||_2 - 1 |
};
std::vector<DoiSizeResult> run_doi_check(const std::vector<std::size_t>& sizes, std::size_t trials,
                                         std::uint64_t seed);

/// Runs the configured command and flattens its table into records.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& config);

} // namespace fuglede
