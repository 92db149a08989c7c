#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bfc/truncated.hpp"

// Hot loops of the library in two builds: `serial` is the straightforward
// reference kept for testing, `omp` is the OpenMP version used by the public
// operations. Both return identical values for identical input.

namespace bfc {

enum class Execution { serial, parallel };

namespace kernels {

namespace serial {

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// f * prod (x_i - x_j) over the given 1-based variable pairs.
TruncatedPolynomial multiply_by_differences(const TruncatedPolynomial& f, std::span<const std::pair<int, int>> factors);

/// det(x_i^{e_j}) over n = exponents.size() variables, expanded by the
/// Leibniz formula.
TruncatedPolynomial alternant(std::span<const int> exponents);

/// chi^lambda(mu) for lambda, mu over partitions_of(n), row-major.
std::vector<std::int64_t> character_matrix(int n);

} // namespace serial

namespace omp {

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
TruncatedPolynomial multiply_by_differences(const TruncatedPolynomial& f, std::span<const std::pair<int, int>> factors);
TruncatedPolynomial alternant(std::span<const int> exponents);
std::vector<std::int64_t> character_matrix(int n);

} // namespace omp

} // namespace kernels
} // namespace bfc
