#include "bfc/boson.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfc {

ZMonomial::ZMonomial(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    while (!exponents_.empty() && exponents_.back() == 0)
        exponents_.pop_back();
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (exponents_[j] < 0)
            throw std::invalid_argument("negative exponent in z-monomial");
        weight_ += static_cast<int>(j + 1) * exponents_[j];
    }
}

ZMonomial ZMonomial::variable(int j, int power)
{
    if (j < 1)
        throw std::invalid_argument("z-variable index must be >= 1");
    std::vector<int> k(j, 0);
    k[j - 1] = power;
    return ZMonomial(std::move(k));
}

ZMonomial ZMonomial::from_partition(const Partition& mu)
{
    return ZMonomial(mu.multiplicities());
}

ZMonomial ZMonomial::operator*(const ZMonomial& other) const
{
    std::vector<int> k(std::max(exponents_.size(), other.exponents_.size()), 0);
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        k[j] += exponents_[j];
    for (std::size_t j = 0; j < other.exponents_.size(); ++j)
        k[j] += other.exponents_[j];
    return ZMonomial(std::move(k));
}

BosonPolynomial operator*(const BosonPolynomial& f, const BosonPolynomial& g)
{
    BosonPolynomial product;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g)
            product.add_term(a * b, ca * cb);
    return product;
}

Rational boson_norm_squared(const ZMonomial& m)
{
    return Rational(z_mu(m.to_partition()));
}

Rational boson_inner(const BosonPolynomial& f, const BosonPolynomial& g)
{
    return diagonal_inner(f, g, [](const ZMonomial& m) { return boson_norm_squared(m); });
}

int max_weight(const BosonPolynomial& f)
{
    int w = -1;
    for (const auto& [m, c] : f)
        w = std::max(w, m.weight());
    return w;
}

std::vector<ZMonomial> z_monomials_of_weight(int d)
{
    std::vector<ZMonomial> out;
    for (const auto& mu : partitions_of(d))
        out.push_back(ZMonomial::from_partition(mu));
    std::sort(out.begin(), out.end(), ZMonomialOrder{});
    return out;
}

std::string to_string(const ZMonomial& m)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (int j = 1; j <= static_cast<int>(m.exponents().size()); ++j) {
        int k = m.exponent(j);
        if (k == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'z' + std::to_string(j);
        if (k > 1)
            out += '^' + std::to_string(k);
    }
    return out;
}

std::string to_string(const BosonPolynomial& f)
{
    return render_combination(f, [](const ZMonomial& m) { return m.is_one() ? std::string() : to_string(m); });
}

} // namespace bfc
