#include "picardcalc/bigint.hpp"

#include <cctype>

namespace picard {

std::string to_string(const Integer& z)
{
    return z.get_str(10);
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer parse_integer(std::string_view text)
{
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        pos = 1;
    if (pos == text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer exact_div(const Integer& a, const Integer& b)
{
    if (b == 0 || !divides(b, a))
        throw DomainError(to_string(b) + " does not divide " + to_string(a));
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace picard
