#include "bfc/asymm.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "bfc/kernels.hpp"

namespace bfc {

int basis_sign([[maybe_unused]] const Partition& lambda)
{
#ifdef BFC_MUTATE_BASIS_SIGN
    // Negative-control build: deliberately wrong sign for odd weights.
    return lambda.weight() % 2 ? -1 : 1;
#else
    return 1;
#endif
}

AsymmVector schur_to_asymm(const SchurExpansion& f)
{
    AsymmVector out;
    for (const auto& [lambda, c] : f)
        out.add_term(partition_to_maya(lambda), basis_sign(lambda) * c);
    return out;
}

SchurExpansion asymm_to_schur(const AsymmVector& f)
{
    SchurExpansion out;
    for (const auto& [l, c] : f) {
        Partition lambda = maya_to_partition(l);
        out.add_term(lambda, basis_sign(lambda) * c);
    }
    return out;
}

AsymmVector apply_J(const SymmElement& f)
{
    return schur_to_asymm(power_to_schur(f));
}

SymmElement apply_J_inverse(const AsymmVector& f)
{
    return schur_to_power(asymm_to_schur(f));
}

Rational asymm_inner(const AsymmVector& f, const AsymmVector& g)
{
    return diagonal_inner(f, g, [](const MayaIndex&) { return Rational(1); });
}

TruncatedPolynomial truncate_S(const MayaIndex& l, int n)
{
    if (n < 1 || n < l.partition().length())
        throw std::domain_error("truncate_S: " + std::to_string(n) + " variables are too few for S" + to_string(l));
    std::vector<int> exponents(n);
    for (int j = 1; j <= n; ++j)
        exponents[j - 1] = n - l.at(j);
    return kernels::omp::alternant(exponents);
}

TruncatedPolynomial truncate_asymm(const AsymmVector& f, int n)
{
    TruncatedPolynomial out(n);
    for (const auto& [l, c] : f) {
        TruncatedPolynomial term = truncate_S(l, n);
        term *= c;
        out += term;
    }
    return out;
}

namespace {

std::vector<std::pair<int, int>> difference_pairs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

} // namespace

TruncatedPolynomial vandermonde(int n)
{
    return kernels::omp::multiply_by_differences(TruncatedPolynomial::constant(n, 1), difference_pairs(n));
}

bool verify_J_oracle(const Partition& lambda, int n)
{
    if (n < 1 || n < lambda.weight())
        throw std::domain_error("verify_J_oracle: need at least |lambda| variables");
    const SymmElement schur = schur_to_power(SchurExpansion(lambda));
    const TruncatedPolynomial product = kernels::omp::multiply_by_differences(truncate_symm(schur, n), difference_pairs(n));
    return product == truncate_asymm(apply_J(schur), n);
}

std::string to_string(const AsymmVector& f)
{
    return render_combination(f, [](const MayaIndex& l) { return "S" + to_string(l); });
}

} // namespace bfc
