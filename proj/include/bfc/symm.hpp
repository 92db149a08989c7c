#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bfc/boson.hpp"
#include "bfc/combinatorics.hpp"
#include "bfc/kernels.hpp"
#include "bfc/linear.hpp"
#include "bfc/truncated.hpp"

namespace bfc {

struct PowerSumTag;
struct SchurTag;

/// sum_mu c_mu p_mu with p_mu = p_{mu_1} p_{mu_2} ...
using SymmElement = LinearCombination<Partition, PowerSumTag, GradedOrder>;
/// sum_lambda c_lambda s_lambda.
using SchurExpansion = LinearCombination<Partition, SchurTag, GradedOrder>;

/// p_mu * p_nu = p_{mu u nu}.
SymmElement operator*(const SymmElement& f, const SymmElement& g);

/// z_1^{k_1} z_2^{k_2} ... -> p_1^{k_1} p_2^{k_2} ...
SymmElement apply_I(const BosonPolynomial& f);
BosonPolynomial apply_I_inverse(const SymmElement& f);

/// <p_mu, p_nu> = delta_{mu nu} z_mu.
Rational hall_inner(const SymmElement& f, const SymmElement& g);

/// Substitutes p_k <- x_1^k + ... + x_n^k.
TruncatedPolynomial truncate_symm(const SymmElement& f, int n);

/// Symmetric-group character chi^lambda(mu) by Murnaghan-Nakayama ribbon
/// stripping. Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// chi^lambda(mu) for all lambda, mu of weight n, both indexed in
/// partitions_of(n) order.
class CharacterTable {
public:
    explicit CharacterTable(int n, Execution exec = Execution::parallel);

    int degree() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t index_of(const Partition& p) const;
    std::int64_t operator()(std::size_t lambda, std::size_t mu) const
    {
        return values_[lambda * partitions_.size() + mu];
    }
    std::int64_t at(const Partition& lambda, const Partition& mu) const
    {
        return (*this)(index_of(lambda), index_of(mu));
    }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::int64_t> values_;
};

/// Shared, lazily built table for degree n; safe to call concurrently.
std::shared_ptr<const CharacterTable> character_table(int n);

/// p_mu = sum_lambda chi^lambda(mu) s_lambda.
SchurExpansion power_to_schur(const SymmElement& f);
/// s_lambda = sum_mu chi^lambda(mu) / z_mu p_mu.
SymmElement schur_to_power(const SchurExpansion& f);

/// Highest weight among the keys; -1 for zero.
template <class Combination>
int max_partition_weight(const Combination& f)
{
    int w = -1;
    for (const auto& [key, coeff] : f)
        w = std::max(w, key.weight());
    return w;
}

/// `p2^2*p1 - 3*p4`.
std::string to_string(const SymmElement& f);
/// `s(2) - s(1,1)`.
std::string to_string(const SchurExpansion& f);
std::string power_monomial_string(const Partition& mu);

} // namespace bfc
