#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bfc/kernels.hpp"
#include "bfc/symm.hpp"

namespace bfc::kernels::serial {

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    if (a.variables() != b.variables())
        throw std::invalid_argument("multiplying polynomials in different variable counts");
    TruncatedPolynomial product(a.variables());
    Exponents e(a.variables());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::transform(ea.begin(), ea.end(), eb.begin(), e.begin(), std::plus<>());
            product.add_term(e, ca * cb);
        }
    }
    return product;
}

TruncatedPolynomial multiply_by_differences(const TruncatedPolynomial& f, std::span<const std::pair<int, int>> factors)
{
    TruncatedPolynomial product = f;
    for (const auto& [i, j] : factors)
        product = multiply(product, TruncatedPolynomial::variable(f.variables(), i) -
                                        TruncatedPolynomial::variable(f.variables(), j));
    return product;
}

TruncatedPolynomial alternant(std::span<const int> exponents)
{
    const int n = static_cast<int>(exponents.size());
    TruncatedPolynomial det(n);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Exponents e(n);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += sigma[i] > sigma[j];
        for (int i = 0; i < n; ++i)
            e[i] = exponents[sigma[i]];
        det.add_term(e, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return det;
}

std::vector<std::int64_t> character_matrix(int n)
{
    auto parts = partitions_of(n);
    std::vector<std::int64_t> values;
    values.reserve(parts.size() * parts.size());
    for (const auto& lambda : parts)
        for (const auto& mu : parts)
            values.push_back(mn_character(lambda, mu));
    return values;
}

} // namespace bfc::kernels::serial
