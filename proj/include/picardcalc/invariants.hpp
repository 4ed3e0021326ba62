#ifndef PICARDCALC_INVARIANTS_HPP
#define PICARDCALC_INVARIANTS_HPP

#include "picardcalc/bigint.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace picard {

/// Degree, genus and ambient dimension of the curves in P^r.
struct Params {
    Integer d;
    Integer g;
    Integer r;
};

enum class Regime {
    Interior,    // 3 < r < d-g
    BoundaryR3,  // r = 3 < d-g
    BoundaryRdg, // r = d-g
    Invalid,
};

std::string_view regime_name(Regime regime);

/// Classifies (d, g, r). Never throws; out-of-range input yields Regime::Invalid.
Regime validate_params(const Integer& d, const Integer& g, const Integer& r);
inline Regime validate_params(const Params& p)
{
    return validate_params(p.d, p.g, p.r);
}

/// The first standing inequality that (d, g, r) violates, e.g. "d >= 2g+1 violated".
std::optional<std::string> params_violation(const Integer& d, const Integer& g, const Integer& r);

/// Same as above but ignores r (only g >= 4 and d >= 2g+1 are checked).
std::optional<std::string> degree_genus_violation(const Integer& d, const Integer& g);

/// Derived integers of a (d, g) pair.
///
/// k_d is the multiple of theta carried by the normalized line bundle on the
/// universal Jacobian, s_d the minimal fiber degree of the Poincare-type bundle,
/// and (n, m) the normalizing pair with n(d+g-1) - m(2g-2) = s_d, n taken
/// minimal positive.
struct Invariants {
    Integer k_d;
    Integer s_d;
    Integer n;
    Integer m;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Throws DomainError unless g >= 4 and d >= 2g+1.
Invariants compute_invariants(const Integer& d, const Integer& g);

/// Throws DomainError when p is Regime::Invalid.
Invariants compute_invariants(const Params& p);

/// True iff inv is exactly what compute_invariants(d, g) produces.
bool invariants_consistent(const Invariants& inv, const Integer& d, const Integer& g);

struct NormalizingPair {
    Integer n;
    Integer m;

    friend bool operator==(const NormalizingPair&, const NormalizingPair&) = default;
};

/// Raised by brute_force_nm when no n <= bound satisfies the congruence.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear scan n = 1..bound for the first n with 2(g-1) | n(d+g-1) - s_d.
/// Independent of compute_invariants; used to cross-check it.
NormalizingPair brute_force_nm(const Integer& d, const Integer& g, const Integer& bound);

} // namespace picard

#endif
