#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library's polynomial kernels or character code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "bfc/boson.hpp"
#include "bfc/combinatorics.hpp"
#include "bfc/expression.hpp"
#include "bfc/fermion.hpp"
#include "bfc/symm.hpp"
#include "bfc/truncated.hpp"

namespace oracle {

/// Number of partitions of n by the classic coin-change recurrence.
inline std::int64_t count_partitions(int n)
{
    std::vector<std::int64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total)
            ways[total] += ways[total - part];
    return ways[n];
}

/// Integer polynomial in n variables, multiplied the schoolbook way.
struct Poly {
    int n;
    std::map<std::vector<int>, std::int64_t> terms;

    explicit Poly(int vars) : n(vars) {}

    static Poly constant(int vars, std::int64_t c)
    {
        Poly p(vars);
        p.terms[std::vector<int>(vars, 0)] = c;
        return p;
    }

    void add(const std::vector<int>& e, std::int64_t c)
    {
        auto& slot = terms[e];
        slot += c;
        if (slot == 0)
            terms.erase(e);
    }

    Poly operator*(const Poly& other) const
    {
        Poly out(n);
        for (const auto& [a, ca] : terms)
            for (const auto& [b, cb] : other.terms) {
                std::vector<int> e(n);
                for (int i = 0; i < n; ++i)
                    e[i] = a[i] + b[i];
                out.add(e, ca * cb);
            }
        return out;
    }
};

inline Poly power_sum(int n, int k)
{
    Poly p(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = k;
        p.add(e, 1);
    }
    return p;
}

inline Poly power_sum_product(const bfc::Partition& mu, int n)
{
    Poly p = Poly::constant(n, 1);
    for (int part : mu.parts())
        p = p * power_sum(n, part);
    return p;
}

/// prod_{i<j} (x_i - x_j), multiplied out naively.
inline Poly vandermonde(int n)
{
    Poly p = Poly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Poly f(n);
            std::vector<int> ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            f.add(ei, 1);
            f.add(ej, -1);
            p = p * f;
        }
    return p;
}

/// chi^lambda(mu) read off as the coefficient of x^{lambda + delta} in
/// p_mu(x_1..x_n) * prod_{i<j}(x_i - x_j), n = |mu| (the bialternant
/// expansion p_mu a_delta = sum_lambda chi^lambda(mu) a_{lambda+delta}).
inline std::int64_t character(const bfc::Partition& lambda, const bfc::Partition& mu)
{
    const int n = std::max(mu.weight(), 1);
    Poly product = power_sum_product(mu, n) * vandermonde(n);
    std::vector<int> e(n);
    for (int j = 1; j <= n; ++j)
        e[j - 1] = lambda.part(j) + n - j;
    auto it = product.terms.find(e);
    return it == product.terms.end() ? 0 : it->second;
}

inline int inversion_parity(const std::vector<int>& seq)
{
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            inversions += seq[i] > seq[j];
    return inversions % 2 ? -1 : 1;
}

/// Cycle type of a permutation of {0..n-1} as a partition.
inline bfc::Partition cycle_type(const std::vector<int>& sigma)
{
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = sigma[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return bfc::Partition(lengths);
}

/// Visits every permutation of {0..n-1}.
template <class F>
void for_each_permutation(int n, F&& visit)
{
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do
        visit(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
}

inline bfc::TruncatedPolynomial to_truncated(const Poly& p)
{
    bfc::TruncatedPolynomial out(p.n);
    for (const auto& [e, c] : p.terms)
        out.add_term(e, bfc::Rational(static_cast<long>(c)));
    return out;
}

// Random generators for property tests.

inline bfc::Rational random_rational(std::mt19937& rng, int bound = 9)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return bfc::make_rational(num(rng), den(rng));
}

inline bfc::Partition random_partition(std::mt19937& rng, int max_weight)
{
    std::uniform_int_distribution<int> weight(0, max_weight);
    auto all = bfc::partitions_of(weight(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

inline bfc::BosonPolynomial random_boson(std::mt19937& rng, int max_weight, int terms = 4)
{
    bfc::BosonPolynomial f;
    for (int t = 0; t < terms; ++t)
        f.add_term(bfc::ZMonomial::from_partition(random_partition(rng, max_weight)), random_rational(rng));
    return f;
}

inline bfc::SymmElement random_symm(std::mt19937& rng, int max_weight, int terms = 4)
{
    bfc::SymmElement f;
    for (int t = 0; t < terms; ++t)
        f.add_term(random_partition(rng, max_weight), random_rational(rng));
    return f;
}

inline bfc::FockVector random_fock(std::mt19937& rng, int max_weight, int terms = 4)
{
    bfc::FockVector f;
    for (int t = 0; t < terms; ++t)
        f.add_term(bfc::WedgeMonomial(bfc::MayaIndex(random_partition(rng, max_weight))), random_rational(rng));
    return f;
}

// Random trees in the shape the parser produces: sums of two or more
// terms (or one negated term), products of two or more factors.
inline bfc::ExpressionPtr random_expression(std::mt19937& rng, int depth)
{
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 4 : 1);
    std::uniform_int_distribution<int> small(0, 12);
    switch (kind(rng)) {
    case 0: {
        int num = small(rng);
        int den = 1 + small(rng) % 4;
        return bfc::make_number(bfc::make_rational(num, den));
    }
    case 1:
        return bfc::make_variable('z', 1 + small(rng) % 9);
    case 2: {
        std::vector<bfc::Expression::SumTerm> terms;
        int count = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < count; ++i)
            terms.push_back({small(rng) % 2 == 0, random_expression(rng, depth - 1)});
        if (count == 1)
            terms.front().negative = true;
        return bfc::make_sum(std::move(terms));
    }
    case 3: {
        std::vector<bfc::ExpressionPtr> factors;
        int count = std::uniform_int_distribution<int>(2, 3)(rng);
        for (int i = 0; i < count; ++i)
            factors.push_back(random_expression(rng, depth - 1));
        return bfc::make_product(std::move(factors));
    }
    default:
        return bfc::make_power(random_expression(rng, depth - 1), small(rng) % 9);
    }
}

} // namespace oracle
