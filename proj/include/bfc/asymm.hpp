#pragma once

#include <string>

#include "bfc/combinatorics.hpp"
#include "bfc/linear.hpp"
#include "bfc/symm.hpp"
#include "bfc/truncated.hpp"

namespace bfc {

struct AsymmTag;

/// sum_l c_l S_l over the orthonormal basis of skew-symmetric functions
/// S_l = sum_sigma (-1)^sigma x_1^{w - l_sigma(1)} x_2^{w - l_sigma(2)} ...
using AsymmVector = LinearCombination<MayaIndex, AsymmTag, GradedOrder>;

/// Sign attached to s_lambda -> S_{maya(lambda)}. The finite-n
/// determinant check pins it to +1.
int basis_sign(const Partition& lambda);

AsymmVector schur_to_asymm(const SchurExpansion& f);
SchurExpansion asymm_to_schur(const AsymmVector& f);

/// Multiplication by the Vandermonde product, computed through the Schur
/// expansion: s_lambda * prod_{i<j}(x_i - x_j) = S_{maya(lambda)}.
AsymmVector apply_J(const SymmElement& f);
SymmElement apply_J_inverse(const AsymmVector& f);

Rational asymm_inner(const AsymmVector& f, const AsymmVector& g);

/// det(x_i^{n - l_j}) for i, j = 1..n, i.e. S_l with w := n and the
/// variables beyond x_n set to zero. Throws std::domain_error when n is
/// smaller than the number of parts of l's partition.
TruncatedPolynomial truncate_S(const MayaIndex& l, int n);
TruncatedPolynomial truncate_asymm(const AsymmVector& f, int n);

/// prod_{1 <= i < j <= n} (x_i - x_j), multiplied out factor by factor.
TruncatedPolynomial vandermonde(int n);

/// Checks truncate_symm(s_lambda, n) * vandermonde(n) against the
/// determinant expansion of apply_J(s_lambda) at n variables. Requires
/// n >= |lambda| (std::domain_error otherwise).
bool verify_J_oracle(const Partition& lambda, int n);

/// `S[-1,1]`, vacuum as `S[]`.
std::string to_string(const AsymmVector& f);

} // namespace bfc
