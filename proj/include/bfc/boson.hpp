#pragma once

#include <span>
#include <string>
#include <vector>

#include "bfc/combinatorics.hpp"
#include "bfc/linear.hpp"

namespace bfc {

/// z_1^{k_1} z_2^{k_2} ... with weight sum_j j*k_j (z_j has weight j).
class ZMonomial {
public:
    ZMonomial() = default;

    /// exponents[j-1] is the power of z_j; trailing zeros are dropped.
    explicit ZMonomial(std::vector<int> exponents);

    static ZMonomial variable(int j, int power = 1);

    /// Exponent k_j = multiplicity of part j.
    static ZMonomial from_partition(const Partition& mu);
    Partition to_partition() const { return Partition::from_multiplicities(exponents_); }

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    int exponent(int j) const noexcept
    {
        return j >= 1 && j <= static_cast<int>(exponents_.size()) ? exponents_[j - 1] : 0;
    }
    int weight() const noexcept { return weight_; }
    bool is_one() const noexcept { return exponents_.empty(); }

    ZMonomial operator*(const ZMonomial& other) const;

    friend bool operator==(const ZMonomial&, const ZMonomial&) = default;

private:
    std::vector<int> exponents_;
    int weight_ = 0;
};

/// Graded by weight, then lexicographically descending on (k_1, k_2, ...),
/// so `z1^2` precedes `z2`.
struct ZMonomialOrder {
    bool operator()(const ZMonomial& a, const ZMonomial& b) const noexcept
    {
        if (a.weight() != b.weight())
            return a.weight() < b.weight();
        return b.exponents() < a.exponents();
    }
};

struct BosonTag;
using BosonPolynomial = LinearCombination<ZMonomial, BosonTag, ZMonomialOrder>;

BosonPolynomial operator*(const BosonPolynomial& f, const BosonPolynomial& g);

/// Fock product: monomials orthogonal, <m, m> = prod_j k_j! j^{k_j}.
Rational boson_inner(const BosonPolynomial& f, const BosonPolynomial& g);
Rational boson_norm_squared(const ZMonomial& m);

/// Highest monomial weight; -1 for the zero polynomial.
int max_weight(const BosonPolynomial& f);

/// All z-monomials of weight d in the graded order.
std::vector<ZMonomial> z_monomials_of_weight(int d);

/// `z1^2*z3`, the constant monomial as `1`.
std::string to_string(const ZMonomial& m);
/// `3/2*z1^2 - z2`, zero as `0`.
std::string to_string(const BosonPolynomial& f);

} // namespace bfc
