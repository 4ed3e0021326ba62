#include "picardcalc/divisor_basis.hpp"

namespace picard {

namespace {

void require_consistent(const Invariants& inv, const Integer& d, const Integer& g)
{
    if (auto v = degree_genus_violation(d, g))
        throw DomainError(*v);
    if (!invariants_consistent(inv, d, g))
        throw DomainError("invariants do not belong to (d, g) = (" + to_string(d) + ", "
                          + to_string(g) + ")");
}

DivisorClass row_times(const std::array<Rational, 3>& v, const RationalMatrix& m, Basis tag)
{
    DivisorClass out;
    out.basis = tag;
    for (std::size_t j = 0; j < 3; ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < 3; ++i)
            sum += v[i] * m(i, j);
        out.coords[j] = sum;
    }
    return out;
}

} // namespace

std::string_view basis_name(Basis basis)
{
    return basis == Basis::Generators ? "Generators" : "Natural";
}

RationalMatrix coefficient_matrix(const Invariants& inv, const Integer& d, const Integer& g)
{
    require_consistent(inv, d, g);
    const Integer& s = inv.s_d;
    RationalMatrix m(3, 3);
    m(0, 0) = make_rational(inv.n * d - s, g - 1);
    m(0, 1) = make_rational(2 * d, s);
    m(1, 0) = Rational(inv.n);
    m(1, 1) = make_rational(2 * g - 2, s);
    m(2, 2) = 12;
    return m;
}

GeneratorClasses generator_classes(const Invariants& inv, const Integer& d, const Integer& g)
{
    require_consistent(inv, d, g);
    const Integer& s = inv.s_d;
    GeneratorClasses out;
    out.relative = {{make_rational(inv.n, 2), -make_rational(inv.n * d - s, 2 * (g - 1)), 0},
                    Basis::Natural};
    out.jacobian = {{-make_rational(g - 1, s), make_rational(d, s), 0}, Basis::Natural};
    out.hodge = {{0, 0, Rational(1, 12)}, Basis::Natural};
    return out;
}

DivisorClass change_basis(const DivisorClass& c, const Invariants& inv, const Integer& d,
                          const Integer& g)
{
    const RationalMatrix m = coefficient_matrix(inv, d, g);
    if (c.basis == Basis::Natural)
        return row_times(c.coords, m, Basis::Generators);
    return row_times(c.coords, invert(m), Basis::Natural);
}

} // namespace picard
