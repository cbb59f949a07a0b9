#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version and a serial
// reference in `reference::` computing the same floating-point operations in
// the same order per output element, so the two agree bit-for-bit.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fuglede/matrix.hpp"

namespace fuglede::kernels {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// C = A * B.
Matrix gemm(const Matrix& a, const Matrix& b);

/// One round of one-sided Jacobi on column-major storage `cols` (n columns of
/// length `len`). The pairs must be disjoint. A pair (i, j) is rotated when
/// |<c_i, c_j>| > rel_tol * |c_i| |c_j| and |<c_i, c_j>| > abs_floor.
/// Returns the number of rotations applied.
std::size_t jacobi_round(std::span<Complex> cols, std::size_t len,
                         std::span<const IndexPair> pairs, double rel_tol, double abs_floor);

/// Round-robin (tournament) schedule over n columns: n-1 rounds (n even) or n
/// rounds (n odd), every unordered pair exactly once, pairs disjoint per round.
std::vector<std::vector<IndexPair>> tournament_schedule(std::size_t n);

namespace reference {

Matrix gemm(const Matrix& a, const Matrix& b);

std::size_t jacobi_round(std::span<Complex> cols, std::size_t len,
                         std::span<const IndexPair> pairs, double rel_tol, double abs_floor);

} // namespace reference

} // namespace fuglede::kernels
