#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bfc/rational.hpp"

namespace bfc {

using Exponents = std::vector<int>;

/// Polynomial in finitely many variables x_1..x_n with rational
/// coefficients; the finite-n stand-in for symmetric and skew-symmetric
/// functions. Every exponent vector has exactly n entries.
class TruncatedPolynomial {
public:
    using map_type = std::map<Exponents, Rational>;

    explicit TruncatedPolynomial(int variables);

    static TruncatedPolynomial constant(int variables, const Rational& value);
    /// x_i, 1-based.
    static TruncatedPolynomial variable(int variables, int i);
    /// x_1^k + ... + x_n^k.
    static TruncatedPolynomial power_sum(int variables, int k);

    /// Builds from terms already in strictly increasing exponent order with
    /// nonzero coefficients; throws std::invalid_argument otherwise.
    static TruncatedPolynomial from_sorted_terms(int variables, std::vector<std::pair<Exponents, Rational>> terms);

    int variables() const noexcept { return variables_; }
    const map_type& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& coeff);

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator*=(const Rational& scalar);

    /// The polynomial with x_i and x_j exchanged (1-based).
    TruncatedPolynomial swapped(int i, int j) const;

    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a) { return a *= Rational(-1); }
    /// Uses the parallel multiplication kernel.
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

    friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

private:
    int variables_;
    map_type terms_;
};

/// f^k by repeated squaring.
TruncatedPolynomial pow(const TruncatedPolynomial& f, int k);

/// `x1^2*x2 - 2*x3`, terms in descending lexicographic order.
std::string to_string(const TruncatedPolynomial& f);

} // namespace bfc
