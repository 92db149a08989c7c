#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bfc/boson.hpp"
#include "bfc/rational.hpp"
#include "bfc/symm.hpp"

namespace bfc {

/// Which variable family an expression may use: z_j for the bosonic space,
/// p_j for symmetric functions.
enum class Space { boson, symm };

struct Expression;
using ExpressionPtr = std::shared_ptr<const Expression>;

struct Expression {
    struct Number {
        Rational value;
        friend bool operator==(const Number&, const Number&) = default;
    };
    struct Variable {
        char family; // 'z' or 'p'
        int index;
        friend bool operator==(const Variable&, const Variable&) = default;
    };
    struct SumTerm {
        bool negative;
        ExpressionPtr operand;
    };
    struct Sum {
        std::vector<SumTerm> terms;
    };
    struct Product {
        std::vector<ExpressionPtr> factors;
    };
    struct Power {
        ExpressionPtr base;
        int exponent;
    };

    std::variant<Number, Variable, Sum, Product, Power> node;
};

/// Deep structural equality.
bool operator==(const Expression& a, const Expression& b);

ExpressionPtr make_number(Rational value);
ExpressionPtr make_variable(char family, int index);
ExpressionPtr make_sum(std::vector<Expression::SumTerm> terms);
ExpressionPtr make_product(std::vector<ExpressionPtr> factors);
ExpressionPtr make_power(ExpressionPtr base, int exponent);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Raised when evaluation produces a term above the configured degree cap.
class DegreeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grammar (whitespace-insensitive):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := uint ['/' uint] | ('z' | 'p') uint | '(' expr ')'
/// Variables must all come from the family of `space`; exponents above
/// `degree_cap` are rejected.
ExpressionPtr parse(std::string_view input, Space space, int degree_cap = 8);

/// Inverse of parse up to whitespace; nested sums and products are
/// parenthesized so that parse(render(e)) == e.
std::string render(const Expression& e);

/// Merges nested sums into sums and nested products into products and
/// unwraps single-operand nodes.
ExpressionPtr flatten(const ExpressionPtr& e);

BosonPolynomial evaluate_boson(const Expression& e, int degree_cap = 8);
SymmElement evaluate_symm(const Expression& e, int degree_cap = 8);

} // namespace bfc
