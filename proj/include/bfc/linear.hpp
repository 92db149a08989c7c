#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "bfc/rational.hpp"

namespace bfc {

/// Finite formal sum `sum_k c_k * k` over basis keys with nonzero rational
/// coefficients. `Tag` separates vector spaces that share a key type (the
/// power-sum and Schur bases are both indexed by partitions).
template <class Key, class Tag, class Compare = std::less<Key>>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    explicit LinearCombination(Key key, Rational coeff = 1)
    {
        add_term(std::move(key), coeff);
    }

    LinearCombination(std::initializer_list<std::pair<Key, Rational>> terms)
    {
        for (const auto& [key, coeff] : terms)
            add_term(key, coeff);
    }

    const map_type& terms() const noexcept { return terms_; }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Key& key, const Rational& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        for (const auto& [key, coeff] : other.terms_)
            add_term(key, coeff);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other)
    {
        for (const auto& [key, coeff] : other.terms_)
            add_term(key, -coeff);
        return *this;
    }

    LinearCombination& operator*=(const Rational& scalar)
    {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coeff] : terms_)
            coeff *= scalar;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination lhs, const LinearCombination& rhs)
    {
        return lhs += rhs;
    }
    friend LinearCombination operator-(LinearCombination lhs, const LinearCombination& rhs)
    {
        return lhs -= rhs;
    }
    friend LinearCombination operator-(LinearCombination value) { return value *= Rational(-1); }
    friend LinearCombination operator*(const Rational& scalar, LinearCombination value)
    {
        return value *= scalar;
    }

    friend bool operator==(const LinearCombination& lhs, const LinearCombination& rhs)
    {
        return lhs.terms_ == rhs.terms_;
    }

private:
    map_type terms_;
};

/// Bilinear form that is diagonal in the key basis: sum_k a_k b_k w(k).
template <class Combination, class Weight>
Rational diagonal_inner(const Combination& lhs, const Combination& rhs, Weight&& weight)
{
    Rational total = 0;
    const auto& small = lhs.size() <= rhs.size() ? lhs : rhs;
    const auto& large = lhs.size() <= rhs.size() ? rhs : lhs;
    for (const auto& [key, coeff] : small) {
        auto it = large.terms().find(key);
        if (it != large.terms().end())
            total += coeff * it->second * weight(key);
    }
    return total;
}

/// Renders `c1*k1 + c2*k2 - ...`; unit coefficients are omitted and a key
/// rendered as the empty string stands for the constant 1.
template <class Combination, class KeyFormatter>
std::string render_combination(const Combination& value, KeyFormatter&& format_key)
{
    if (value.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : value) {
        const bool negative = coeff < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        Rational magnitude = abs(coeff);
        std::string key_text = format_key(key);
        if (key_text.empty())
            out += to_string(magnitude);
        else if (magnitude == 1)
            out += key_text;
        else
            out += to_string(magnitude) + "*" + key_text;
    }
    return out;
}

} // namespace bfc
