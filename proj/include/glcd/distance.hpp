#pragma once

// Exact minimum-distance kernels. Each search comes as a serial reference and
// an OpenMP version; both return identical results (a minimum over a fixed
// finite set), so the serial form doubles as the test oracle for the parallel
// one and the benchmark baseline.

#include <cstdint>
#include <optional>

#include "glcd/matrix.hpp"

namespace glcd::distance {

/// Projective message count (q^l - 1)/(q - 1), saturating.
std::uint64_t message_cost(std::uint64_t q, std::size_t l);

/// Sum_{w=1..max_w} C(n, w), saturating.
std::uint64_t support_cost(std::size_t n, std::size_t max_w);

/// Minimum nonzero weight in the row space of a full-row-rank generator G,
/// enumerating one message per projective point.
unsigned min_weight_messages_serial(const Matrix& generator);
unsigned min_weight_messages_parallel(const Matrix& generator);

struct SupportSearch {
  /// Least w <= max_w such that some w columns are dependent.
  std::optional<unsigned> found;
  /// All column subsets of size <= checked_through are independent.
  unsigned checked_through = 0;
  std::uint64_t tests = 0;
};

/// Scans column subsets of the parity-check matrix by increasing size,
/// stopping before a level would push the test count over `budget`.
SupportSearch min_dependency_serial(const Matrix& parity, unsigned max_w, std::uint64_t budget);
SupportSearch min_dependency_parallel(const Matrix& parity, unsigned max_w, std::uint64_t budget);

}  // namespace glcd::distance
