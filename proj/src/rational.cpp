#include "bfc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bfc {

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    auto valid_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!valid_digits(num) || !valid_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(std::string(num), 10), d);
    r.canonicalize();
    if (text.size() != body.size())
        r = -r;
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

} // namespace bfc
