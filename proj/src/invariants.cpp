#include "picardcalc/invariants.hpp"

namespace picard {

std::string_view regime_name(Regime regime)
{
    switch (regime) {
    case Regime::Interior:
        return "Interior";
    case Regime::BoundaryR3:
        return "BoundaryR3";
    case Regime::BoundaryRdg:
        return "BoundaryRdg";
    case Regime::Invalid:
        return "Invalid";
    }
    return "Invalid";
}

std::optional<std::string> degree_genus_violation(const Integer& d, const Integer& g)
{
    if (g < 4)
        return "g >= 4 violated";
    if (d < 2 * g + 1)
        return "d >= 2g+1 violated";
    return std::nullopt;
}

std::optional<std::string> params_violation(const Integer& d, const Integer& g, const Integer& r)
{
    if (auto v = degree_genus_violation(d, g))
        return v;
    if (r < 3)
        return "r >= 3 violated";
    if (r > d - g)
        return "r <= d-g violated";
    return std::nullopt;
}

Regime validate_params(const Integer& d, const Integer& g, const Integer& r)
{
    if (params_violation(d, g, r))
        return Regime::Invalid;
    const Integer top = d - g;
    if (r == top)
        return Regime::BoundaryRdg;
    if (r == 3)
        return Regime::BoundaryR3;
    return Regime::Interior;
}

Invariants compute_invariants(const Integer& d, const Integer& g)
{
    if (auto v = degree_genus_violation(d, g))
        throw DomainError(*v);

    const Integer canonical_degree = 2 * (g - 1);
    const Integer shifted = d + g - 1;

    Invariants inv;
    inv.s_d = gcd(canonical_degree, shifted);
    inv.k_d = exact_div(canonical_degree, gcd(canonical_degree, d - g + 1));

    // n(d+g-1) = s_d mod 2(g-1) reduces to n * ((d+g-1)/s_d) = 1 mod (2g-2)/s_d.
    const Integer modulus = exact_div(canonical_degree, inv.s_d);
    const Integer unit = exact_div(shifted, inv.s_d);
    if (modulus == 1) {
        inv.n = 1;
    } else {
        Integer inverse;
        if (mpz_invert(inverse.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t()) == 0)
            throw DomainError("(d+g-1)/s_d is not invertible modulo (2g-2)/s_d");
        inv.n = inverse;
    }
    inv.m = exact_div(inv.n * shifted - inv.s_d, canonical_degree);
    return inv;
}

Invariants compute_invariants(const Params& p)
{
    if (auto v = params_violation(p.d, p.g, p.r))
        throw DomainError("invalid parameters (" + *v + ")");
    return compute_invariants(p.d, p.g);
}

bool invariants_consistent(const Invariants& inv, const Integer& d, const Integer& g)
{
    if (degree_genus_violation(d, g))
        return false;
    return inv == compute_invariants(d, g);
}

NormalizingPair brute_force_nm(const Integer& d, const Integer& g, const Integer& bound)
{
    if (auto v = degree_genus_violation(d, g))
        throw DomainError(*v);
    const Integer canonical_degree = 2 * (g - 1);
    const Integer shifted = d + g - 1;
    const Integer s = gcd(canonical_degree, shifted);
    for (Integer n = 1; n <= bound; ++n) {
        const Integer lhs = n * shifted - s;
        if (divides(canonical_degree, lhs))
            return {n, lhs / canonical_degree};
    }
    throw SearchExhausted("no n <= " + to_string(bound) + " satisfies " + to_string(shifted)
                          + "n = " + to_string(s) + " mod " + to_string(canonical_degree));
}

} // namespace picard
