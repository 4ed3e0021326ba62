#ifndef PICARDCALC_BIGINT_HPP
#define PICARDCALC_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace picard {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when inputs fall outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

std::string to_string(const Integer& z);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);

inline bool divides(const Integer& a, const Integer& b)
{
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

/// Exact quotient; throws DomainError when b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q)
{
    return q.get_den() == 1;
}

} // namespace picard

#endif
