#include "bfc/expression.hpp"

#include <cctype>
#include <limits>

namespace bfc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExpressionPtr make(Expression::Number n) { return std::make_shared<const Expression>(Expression{std::move(n)}); }

} // namespace

bool operator==(const Expression& a, const Expression& b)
{
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        overloaded{
            [&](const Expression::Number& x) { return x == std::get<Expression::Number>(b.node); },
            [&](const Expression::Variable& x) { return x == std::get<Expression::Variable>(b.node); },
            [&](const Expression::Sum& x) {
                const auto& y = std::get<Expression::Sum>(b.node);
                if (x.terms.size() != y.terms.size())
                    return false;
                for (std::size_t i = 0; i < x.terms.size(); ++i)
                    if (x.terms[i].negative != y.terms[i].negative || !(*x.terms[i].operand == *y.terms[i].operand))
                        return false;
                return true;
            },
            [&](const Expression::Product& x) {
                const auto& y = std::get<Expression::Product>(b.node);
                if (x.factors.size() != y.factors.size())
                    return false;
                for (std::size_t i = 0; i < x.factors.size(); ++i)
                    if (!(*x.factors[i] == *y.factors[i]))
                        return false;
                return true;
            },
            [&](const Expression::Power& x) {
                const auto& y = std::get<Expression::Power>(b.node);
                return x.exponent == y.exponent && *x.base == *y.base;
            },
        },
        a.node);
}

ExpressionPtr make_number(Rational value)
{
    if (value < 0)
        throw std::invalid_argument("number literals are non-negative; negate through a sum");
    return make(Expression::Number{std::move(value)});
}

ExpressionPtr make_variable(char family, int index)
{
    if ((family != 'z' && family != 'p') || index < 1)
        throw std::invalid_argument("variables are z<j> or p<j> with j >= 1");
    return std::make_shared<const Expression>(Expression{Expression::Variable{family, index}});
}

ExpressionPtr make_sum(std::vector<Expression::SumTerm> terms)
{
    if (terms.empty())
        throw std::invalid_argument("empty sum");
    return std::make_shared<const Expression>(Expression{Expression::Sum{std::move(terms)}});
}

ExpressionPtr make_product(std::vector<ExpressionPtr> factors)
{
    if (factors.empty())
        throw std::invalid_argument("empty product");
    return std::make_shared<const Expression>(Expression{Expression::Product{std::move(factors)}});
}

ExpressionPtr make_power(ExpressionPtr base, int exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    return std::make_shared<const Expression>(Expression{Expression::Power{std::move(base), exponent}});
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view input, Space space, int degree_cap)
        : input_(input), expected_(space == Space::boson ? 'z' : 'p'), degree_cap_(degree_cap)
    {
    }

    ExpressionPtr run()
    {
        auto e = expr();
        skip_space();
        if (pos_ != input_.size())
            throw ParseError(std::string("unexpected '") + input_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_space()
    {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < input_.size() && input_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit()
    {
        skip_space();
        return pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]));
    }

    std::string digits()
    {
        if (!at_digit())
            throw ParseError(pos_ < input_.size() ? "expected a number" : "unexpected end of input", pos_);
        std::size_t start = pos_;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
        return std::string(input_.substr(start, pos_ - start));
    }

    int small_uint()
    {
        std::size_t start = (skip_space(), pos_);
        std::string text = digits();
        if (text.size() > 9)
            throw ParseError("integer too large", start);
        return std::stoi(text);
    }

    ExpressionPtr expr()
    {
        std::vector<Expression::SumTerm> terms;
        bool negative = accept('-');
        terms.push_back({negative, term()});
        while (true) {
            if (accept('+'))
                terms.push_back({false, term()});
            else if (accept('-'))
                terms.push_back({true, term()});
            else
                break;
        }
        if (terms.size() == 1 && !terms.front().negative)
            return terms.front().operand;
        return make_sum(std::move(terms));
    }

    ExpressionPtr term()
    {
        std::vector<ExpressionPtr> factors{factor()};
        while (accept('*'))
            factors.push_back(factor());
        if (factors.size() == 1)
            return factors.front();
        return make_product(std::move(factors));
    }

    ExpressionPtr factor()
    {
        auto base = atom();
        if (accept('^')) {
            std::size_t at = (skip_space(), pos_);
            int k = small_uint();
            if (k > degree_cap_)
                throw ParseError("exponent " + std::to_string(k) + " exceeds degree cap " + std::to_string(degree_cap_), at);
            return make_power(std::move(base), k);
        }
        return base;
    }

    ExpressionPtr atom()
    {
        skip_space();
        if (pos_ >= input_.size())
            throw ParseError("unexpected end of input", pos_);
        const std::size_t start = pos_;
        const char c = input_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits(), 10);
            Integer den = 1;
            if (accept('/')) {
                std::size_t at = (skip_space(), pos_);
                den = Integer(digits(), 10);
                if (den == 0)
                    throw ParseError("zero denominator", at);
            }
            Rational value(num, den);
            value.canonicalize();
            return make_number(std::move(value));
        }
        if (c == 'z' || c == 'p') {
            ++pos_;
            if (pos_ >= input_.size() || !std::isdigit(static_cast<unsigned char>(input_[pos_])))
                throw ParseError(std::string("expected an index after '") + c + "'", pos_);
            int index = small_uint();
            if (index < 1)
                throw ParseError("variable indices start at 1", start);
            if (seen_ == 0)
                seen_ = c;
            if (c != seen_)
                throw ParseError("mixed variable families (z and p)", start);
            if (c != expected_)
                throw ParseError(std::string("variable family '") + c + "' does not belong to the " +
                                     (expected_ == 'z' ? "boson" : "symm") + " space",
                                 start);
            return make_variable(c, index);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    char expected_;
    char seen_ = 0;
    int degree_cap_;
};

bool is_sum(const Expression& e) { return std::holds_alternative<Expression::Sum>(e.node); }
bool is_product(const Expression& e) { return std::holds_alternative<Expression::Product>(e.node); }
bool is_power(const Expression& e) { return std::holds_alternative<Expression::Power>(e.node); }

std::string wrapped(const Expression& e, bool parens)
{
    return parens ? "(" + render(e) + ")" : render(e);
}

} // namespace

ExpressionPtr parse(std::string_view input, Space space, int degree_cap)
{
    return Parser(input, space, degree_cap).run();
}

std::string render(const Expression& e)
{
    return std::visit(
        overloaded{
            [](const Expression::Number& x) { return to_string(x.value); },
            [](const Expression::Variable& x) { return x.family + std::to_string(x.index); },
            [](const Expression::Sum& x) {
                std::string out;
                for (std::size_t i = 0; i < x.terms.size(); ++i) {
                    if (i == 0)
                        out += x.terms[i].negative ? "-" : "";
                    else
                        out += x.terms[i].negative ? " - " : " + ";
                    out += wrapped(*x.terms[i].operand, is_sum(*x.terms[i].operand));
                }
                return out;
            },
            [](const Expression::Product& x) {
                std::string out;
                for (std::size_t i = 0; i < x.factors.size(); ++i) {
                    if (i)
                        out += '*';
                    out += wrapped(*x.factors[i], is_sum(*x.factors[i]) || is_product(*x.factors[i]));
                }
                return out;
            },
            [](const Expression::Power& x) {
                const bool parens = is_sum(*x.base) || is_product(*x.base) || is_power(*x.base);
                return wrapped(*x.base, parens) + "^" + std::to_string(x.exponent);
            },
        },
        e.node);
}

ExpressionPtr flatten(const ExpressionPtr& e)
{
    return std::visit(
        overloaded{
            [&](const Expression::Number&) { return e; },
            [&](const Expression::Variable&) { return e; },
            [&](const Expression::Sum& x) {
                std::vector<Expression::SumTerm> terms;
                for (const auto& t : x.terms) {
                    auto operand = flatten(t.operand);
                    if (const auto* inner = std::get_if<Expression::Sum>(&operand->node)) {
                        for (const auto& u : inner->terms)
                            terms.push_back({t.negative != u.negative, u.operand});
                    } else {
                        terms.push_back({t.negative, operand});
                    }
                }
                if (terms.size() == 1 && !terms.front().negative)
                    return terms.front().operand;
                return make_sum(std::move(terms));
            },
            [&](const Expression::Product& x) {
                std::vector<ExpressionPtr> factors;
                for (const auto& f : x.factors) {
                    auto operand = flatten(f);
                    if (const auto* inner = std::get_if<Expression::Product>(&operand->node))
                        factors.insert(factors.end(), inner->factors.begin(), inner->factors.end());
                    else
                        factors.push_back(operand);
                }
                if (factors.size() == 1)
                    return factors.front();
                return make_product(std::move(factors));
            },
            [&](const Expression::Power& x) { return make_power(flatten(x.base), x.exponent); },
        },
        e->node);
}

namespace {

template <class Ring, class MakeVariable, class Weight>
Ring evaluate(const Expression& e, int degree_cap, const Ring& one, MakeVariable&& variable, Weight&& weight)
{
    auto checked = [&](Ring value) {
        if (weight(value) > degree_cap)
            throw DegreeCapExceeded("expression has a term of weight " + std::to_string(weight(value)) +
                                    " above the degree cap " + std::to_string(degree_cap));
        return value;
    };
    auto recurse = [&](const Expression& sub) { return evaluate(sub, degree_cap, one, variable, weight); };
    return std::visit(
        overloaded{
            [&](const Expression::Number& x) {
                Ring r = one;
                r *= x.value;
                return r;
            },
            [&](const Expression::Variable& x) {
                if (x.index > degree_cap)
                    throw DegreeCapExceeded("variable of weight " + std::to_string(x.index) +
                                            " above the degree cap " + std::to_string(degree_cap));
                return variable(x.index);
            },
            [&](const Expression::Sum& x) {
                Ring r;
                for (const auto& t : x.terms) {
                    if (t.negative)
                        r -= recurse(*t.operand);
                    else
                        r += recurse(*t.operand);
                }
                return r;
            },
            [&](const Expression::Product& x) {
                Ring r = one;
                for (const auto& f : x.factors)
                    r = checked(r * recurse(*f));
                return r;
            },
            [&](const Expression::Power& x) {
                Ring base = recurse(*x.base);
                Ring r = one;
                for (int i = 0; i < x.exponent; ++i)
                    r = checked(r * base);
                return r;
            },
        },
        e.node);
}

void require_family(const Expression& e, char family)
{
    std::visit(overloaded{
                   [](const Expression::Number&) {},
                   [&](const Expression::Variable& x) {
                       if (x.family != family)
                           throw std::invalid_argument(std::string("expected ") + family + "-variables, found " +
                                                       x.family + std::to_string(x.index));
                   },
                   [&](const Expression::Sum& x) {
                       for (const auto& t : x.terms)
                           require_family(*t.operand, family);
                   },
                   [&](const Expression::Product& x) {
                       for (const auto& f : x.factors)
                           require_family(*f, family);
                   },
                   [&](const Expression::Power& x) { require_family(*x.base, family); },
               },
               e.node);
}

} // namespace

BosonPolynomial evaluate_boson(const Expression& e, int degree_cap)
{
    require_family(e, 'z');
    return evaluate(
        e, degree_cap, BosonPolynomial(ZMonomial()), [](int j) { return BosonPolynomial(ZMonomial::variable(j)); },
        [](const BosonPolynomial& f) { return max_weight(f); });
}

SymmElement evaluate_symm(const Expression& e, int degree_cap)
{
    require_family(e, 'p');
    return evaluate(
        e, degree_cap, SymmElement(Partition()), [](int j) { return SymmElement(Partition{j}); },
        [](const SymmElement& f) { return max_partition_weight(f); });
}

} // namespace bfc
