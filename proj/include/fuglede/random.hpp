#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "fuglede/matrix.hpp"

namespace fuglede {

enum class EnsembleKind { NormalInUnitSquare, HaarUnitary, Contraction, SelfAdjoint };

std::string_view to_string(EnsembleKind kind);

struct RandomEnsembleSpec {
  std::size_t dim = 1;
  EnsembleKind kind = EnsembleKind::NormalInUnitSquare;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
};

/// Portable generator: mt19937_64 seeded from a splitmix64 hash of
/// (seed, trial_index, stream). Uniforms and normals are produced by hand so
/// the stream does not depend on the standard library's distributions.
class Rng {
public:
  Rng(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t stream = 0);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  Complex complex_normal() { return {normal(), normal()}; }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic in every field of `spec`.
Matrix sample(const RandomEnsembleSpec& spec);

/// Haar unitary from Gram-Schmidt of a complex Gaussian matrix.
Matrix haar_unitary(std::size_t n, Rng& rng);

} // namespace fuglede
