#ifndef PICARDCALC_DIVISOR_BASIS_HPP
#define PICARDCALC_DIVISOR_BASIS_HPP

#include "picardcalc/exact_linalg.hpp"
#include "picardcalc/invariants.hpp"

#include <array>
#include <string_view>

namespace picard {

// Generators: (L_d, R, lambda), the pulled-back Jacobian bundle, the relative
//             generator over the Jacobian and the Hodge class.
// Natural:    (A, B, C) = (q_*(F^2), q_*(F w_q), q_*(w_q^2)).
enum class Basis { Generators, Natural };

std::string_view basis_name(Basis basis);

struct DivisorClass {
    std::array<Rational, 3> coords;
    Basis basis = Basis::Generators;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Rows A, B, C over columns (L_d, R, lambda):
///   A = [(nd - s_d)/(g-1), 2d/s_d, 0]
///   B = [n, (2g-2)/s_d, 0]
///   C = [0, 0, 12]
/// Throws DomainError when inv was not produced from (d, g).
RationalMatrix coefficient_matrix(const Invariants& inv, const Integer& d, const Integer& g);

/// Generators written in the natural basis, from the closed forms
///   R       = n/2 A - (nd - s_d)/(2(g-1)) B
///   L_d     = -(g-1)/s_d A + d/s_d B
///   lambda  = C/12
struct GeneratorClasses {
    DivisorClass relative; // R
    DivisorClass jacobian; // L_d
    DivisorClass hodge;    // lambda
};

GeneratorClasses generator_classes(const Invariants& inv, const Integer& d, const Integer& g);

/// Rewrites c in the other basis. Natural -> Generators multiplies the row
/// vector by the coefficient matrix, Generators -> Natural by its inverse.
DivisorClass change_basis(const DivisorClass& c, const Invariants& inv, const Integer& d,
                          const Integer& g);

} // namespace picard

#endif
