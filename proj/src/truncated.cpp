#include "bfc/truncated.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "bfc/kernels.hpp"

namespace bfc {

TruncatedPolynomial::TruncatedPolynomial(int variables) : variables_(variables)
{
    if (variables < 1)
        throw std::invalid_argument("truncation needs at least one variable");
}

TruncatedPolynomial TruncatedPolynomial::constant(int variables, const Rational& value)
{
    TruncatedPolynomial f(variables);
    f.add_term(Exponents(variables, 0), value);
    return f;
}

TruncatedPolynomial TruncatedPolynomial::variable(int variables, int i)
{
    if (i < 1 || i > variables)
        throw std::out_of_range("variable index out of range");
    TruncatedPolynomial f(variables);
    Exponents e(variables, 0);
    e[i - 1] = 1;
    f.add_term(e, 1);
    return f;
}

TruncatedPolynomial TruncatedPolynomial::power_sum(int variables, int k)
{
    TruncatedPolynomial f(variables);
    for (int i = 0; i < variables; ++i) {
        Exponents e(variables, 0);
        e[i] = k;
        f.add_term(e, 1);
    }
    return f;
}

TruncatedPolynomial TruncatedPolynomial::from_sorted_terms(int variables,
                                                           std::vector<std::pair<Exponents, Rational>> terms)
{
    TruncatedPolynomial f(variables);
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != variables || c == 0)
            throw std::invalid_argument("from_sorted_terms: malformed term");
        if (!f.terms_.empty() && !(f.terms_.rbegin()->first < e))
            throw std::invalid_argument("from_sorted_terms: terms out of order");
        f.terms_.emplace_hint(f.terms_.end(), std::move(e), std::move(c));
    }
    return f;
}

Rational TruncatedPolynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedPolynomial::add_term(const Exponents& e, const Rational& coeff)
{
    if (static_cast<int>(e.size()) != variables_)
        throw std::invalid_argument("exponent vector has the wrong number of variables");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0)
        terms_.clear();
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

TruncatedPolynomial TruncatedPolynomial::swapped(int i, int j) const
{
    if (i < 1 || j < 1 || i > variables_ || j > variables_)
        throw std::out_of_range("variable index out of range");
    TruncatedPolynomial out(variables_);
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        std::swap(e[i - 1], e[j - 1]);
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    return kernels::omp::multiply(a, b);
}

TruncatedPolynomial pow(const TruncatedPolynomial& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative power");
    TruncatedPolynomial result = TruncatedPolynomial::constant(f.variables(), 1);
    TruncatedPolynomial base = f;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

std::string to_string(const TruncatedPolynomial& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        Rational magnitude = abs(c);
        std::string key;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!key.empty())
                key += '*';
            key += 'x' + std::to_string(i + 1);
            if (e[i] > 1)
                key += '^' + std::to_string(e[i]);
        }
        if (key.empty())
            os << to_string(magnitude);
        else if (magnitude == 1)
            os << key;
        else
            os << to_string(magnitude) << '*' << key;
    }
    return os.str();
}

} // namespace bfc
