#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picardcalc/exact_linalg.hpp"

#include <random>

using namespace picard;

namespace {

// Cofactor expansion along the first row; independent of the elimination paths.
Rational cofactor_det(const RationalMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Rational total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != col)
                    minor(i - 1, k++) = m(i, j);
        const Rational term = m(0, col) * cofactor_det(minor);
        total += (col % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = entry(rng);
    return m;
}

RationalMatrix random_rational_matrix(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = make_rational(num(rng), den(rng));
    return m;
}

const RationalMatrix kClasses115 = {{19, 22, 0}, {7, 8, 0}, {0, 0, 12}};

} // namespace

TEST_CASE("determinant")
{
    CHECK(det(RationalMatrix::identity(3)) == 1);
    CHECK(cofactor_det(kClasses115) == -24);
    CHECK(det(kClasses115) == -24);
    CHECK(det(RationalMatrix{{1, 2, 3}, {0, 0, 0}, {4, 5, 6}}) == 0);
    CHECK(det(IntMatrix{{19, 22, 0}, {7, 8, 0}, {0, 0, 12}}) == -24);
    CHECK_THROWS_AS(det(RationalMatrix(2, 3)), ShapeError);
}

TEST_CASE("inverse")
{
    CHECK(invert(RationalMatrix::identity(3)) == RationalMatrix::identity(3));

    const RationalMatrix expected = {
        {-4, 11, 0}, {Rational(7, 2), Rational(-19, 2), 0}, {0, 0, Rational(1, 12)}};
    const RationalMatrix inv = invert(kClasses115);
    CHECK(inv == expected);
    CHECK(kClasses115 * inv == RationalMatrix::identity(3));

    const RationalMatrix diag = {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}};
    CHECK(invert(diag) == RationalMatrix{{Rational(1, 2), 0, 0}, {0, Rational(1, 3), 0}, {0, 0, Rational(1, 4)}});

    CHECK_THROWS_AS(invert(RationalMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
    CHECK_THROWS_AS(invert(RationalMatrix(2, 3)), ShapeError);
}

TEST_CASE("Smith normal form worked cases")
{
    SUBCASE("zero matrix")
    {
        const IntMatrix zero(3, 2);
        const SmithForm snf = smith_normal_form(zero);
        CHECK(snf.S == zero);
        CHECK(snf.U == IntMatrix::identity(3));
        CHECK(snf.V == IntMatrix::identity(2));
    }
    SUBCASE("already diagonal row")
    {
        const IntMatrix a = {{96, 0, 0}};
        const SmithForm snf = smith_normal_form(a);
        CHECK(snf.S == a);
        CHECK(invariant_factors(snf) == std::vector<Integer>{96});
    }
    SUBCASE("2x2")
    {
        const IntMatrix a = {{2, 4}, {6, 8}};
        const SmithForm snf = smith_normal_form(a);
        CHECK(snf.S == IntMatrix{{2, 0}, {0, 4}});
        CHECK(snf.U * a * snf.V == snf.S);
    }
    SUBCASE("negative entries normalize to positive factors")
    {
        const IntMatrix a = {{-6, 0}, {0, -4}};
        const SmithForm snf = smith_normal_form(a);
        CHECK(snf.S == IntMatrix{{2, 0}, {0, 12}});
    }
}

TEST_CASE("cokernel")
{
    CHECK(cokernel(IntMatrix(3, 0), 3) == AbelianGroupStructure{3, {}});
    CHECK(cokernel(IntMatrix{{96}, {0}, {0}}, 3) == AbelianGroupStructure{2, {96}});
    CHECK(cokernel(IntMatrix{{6}, {0}, {0}}, 3) == AbelianGroupStructure{2, {6}});
    CHECK(cokernel(IntMatrix{{1}, {0}, {0}}, 3) == AbelianGroupStructure{2, {}});
    CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}, 2) == AbelianGroupStructure{0, {6}});
    CHECK_THROWS_AS(cokernel(IntMatrix{{6}, {0}}, 3), ShapeError);

    CHECK(AbelianGroupStructure{2, {96}}.display() == "Z^2 + Z/96");
    CHECK(AbelianGroupStructure{3, {}}.display() == "Z^3");
    CHECK(AbelianGroupStructure{1, {2, 4}}.display() == "Z + Z/2 + Z/4");
    CHECK(AbelianGroupStructure{0, {}}.display() == "0");
}

TEST_CASE("random Smith normal forms")
{
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix a = random_int_matrix(rng, dim(rng), dim(rng), 20);
        const SmithForm snf = smith_normal_form(a);
        REQUIRE(snf.U * a * snf.V == snf.S);
        CHECK(abs(det(snf.U)) == 1);
        CHECK(abs(det(snf.V)) == 1);
        for (std::size_t i = 0; i < snf.S.rows(); ++i)
            for (std::size_t j = 0; j < snf.S.cols(); ++j)
                if (i != j)
                    CHECK(snf.S(i, j) == 0);
        const auto factors = invariant_factors(snf);
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            CHECK(divides(factors[i], factors[i + 1]));
        for (const auto& f : factors)
            CHECK(f > 0);
        CHECK(factors.size() == rank(a));
        if (a.square()) {
            Integer product = 1;
            for (const auto& f : factors)
                product *= f;
            const Integer determinant = det(a);
            CHECK((determinant == 0 ? factors.size() < a.rows() : product == abs(determinant)));
        }
    }
}

TEST_CASE("determinant and inverse properties")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = dim(rng);
        const RationalMatrix a = random_rational_matrix(rng, n);
        const RationalMatrix b = random_rational_matrix(rng, n);
        CHECK(det(a) == cofactor_det(a));
        CHECK(det(a * b) == det(a) * det(b));
        if (det(a) != 0)
            CHECK(invert(invert(a)) == a);

        const IntMatrix z = random_int_matrix(rng, n, n, 20);
        CHECK(Rational(det(z)) == det(to_rational(z)));
    }
}
