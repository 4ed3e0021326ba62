#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picardcalc/moduli_report.hpp"

using namespace picard;

TEST_CASE("bad locus data")
{
    const BadLocusData r3 = bad_locus_data({9, 4, 3});
    CHECK(r3.codim_deg == 3);
    CHECK_FALSE(r3.deg_deg);
    CHECK(r3.codim_nemb.relation == CodimensionBound::Relation::Exactly);
    CHECK(r3.codim_nemb.value == 1);
    REQUIRE(r3.deg_nemb);
    CHECK(*r3.deg_nemb == 96);
    CHECK(r3.secant_degree == 24);
    CHECK(r3.grassmann_codim == 1);

    const BadLocusData rdg = bad_locus_data({9, 4, 5});
    CHECK(rdg.codim_deg == 1);
    REQUIRE(rdg.deg_deg);
    CHECK(*rdg.deg_deg == 6);
    CHECK_FALSE(rdg.deg_nemb);

    const BadLocusData interior = bad_locus_data({11, 5, 4});
    CHECK(interior.codim_deg == 3);
    CHECK(interior.codim_nemb.relation == CodimensionBound::Relation::AtLeast);
    CHECK(interior.codim_nemb.value == 2);
    CHECK_FALSE(interior.deg_deg);
    CHECK_FALSE(interior.deg_nemb);
    CHECK_FALSE(interior.overlap_modeled);

    CHECK_THROWS_AS(bad_locus_data({8, 4, 3}), DomainError);
}

TEST_CASE("degree fields present iff codimension one")
{
    for (long g = 4; g <= 12; ++g)
        for (long d = 2 * g + 1; d <= 2 * g + 12; ++d)
            for (long r = 3; r <= d - g; ++r) {
                const BadLocusData b = bad_locus_data({d, g, r});
                CHECK(b.deg_deg.has_value() == (b.codim_deg == 1));
                const bool nemb_divisor = b.codim_nemb.relation == CodimensionBound::Relation::Exactly
                    && b.codim_nemb.value == 1;
                CHECK(b.deg_nemb.has_value() == nemb_divisor);
                CHECK(2 * b.secant_degree == (d - 1) * (d - 2) - 2 * g);
            }
}

TEST_CASE("Picard structure per regime")
{
    const Params interior{11, 5, 4};
    const PicardReport a = picard_structure(interior, compute_invariants(interior));
    CHECK(a.regime == Regime::Interior);
    CHECK(a.group == AbelianGroupStructure{3, {}});
    CHECK(a.generators_descend);
    CHECK(a.generator_classes.jacobian == DivisorClass{{-4, 11, 0}, Basis::Natural});
    CHECK(a.coefficient_matrix * a.inverse_matrix == RationalMatrix::identity(3));

    const Params r3{9, 4, 3};
    const PicardReport b = picard_structure(r3, compute_invariants(r3));
    CHECK(b.regime == Regime::BoundaryR3);
    CHECK(b.group == AbelianGroupStructure{2, {96}});
    CHECK(b.group.display() == "Z^2 + Z/96");
    CHECK_FALSE(b.generators_descend);

    const Params rdg{9, 4, 5};
    const PicardReport c = picard_structure(rdg, compute_invariants(rdg));
    CHECK(c.regime == Regime::BoundaryRdg);
    CHECK(c.group.display() == "Z^2 + Z/6");

    for (const auto* report : {&a, &b, &c}) {
        CHECK(report->verification.size() == 7);
        for (const auto& v : report->verification)
            CHECK(v.passed);
        CHECK(report->group.free_rank + report->group.torsion.size() <= 3);
    }

    try {
        picard_structure({8, 4, 3}, compute_invariants(9, 4));
        FAIL("expected rejection");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("Invalid") != std::string::npos);
    }
}

TEST_CASE("boundary torsion is never trivial and matches the closed forms")
{
    for (long g = 4; g <= 15; ++g)
        for (long d = 2 * g + 1; d <= 2 * g + 25; ++d) {
            const AbelianGroupStructure r3 = cokernel(boundary_relations({d, g, 3}), 3);
            const AbelianGroupStructure rdg = cokernel(boundary_relations({d, g, d - g}), 3);
            REQUIRE(r3.torsion.size() == 1);
            REQUIRE(rdg.torsion.size() == 1);
            CHECK(r3.torsion[0] == 2 * (d - 1) * (d - 2) - 4 * g);
            CHECK(rdg.torsion[0] == d - g + 1);
            CHECK(r3.torsion[0] > 1);
            CHECK(rdg.torsion[0] >= g + 2);
        }
}

TEST_CASE("Picard equality certificate")
{
    const PicEqualityCertificate a = pic_equality_certificate({11, 5, 4});
    CHECK(a.valid);
    CHECK(a.codim_deg == 3);
    CHECK(a.codim_nemb.relation == CodimensionBound::Relation::AtLeast);
    CHECK(a.codim_nemb.value == 2);
    CHECK(a.evidence.size() == 2);

    const PicEqualityCertificate b = pic_equality_certificate({20, 4, 10});
    CHECK(b.valid);
    CHECK(b.codim_deg == 7);

    CHECK_THROWS_AS(pic_equality_certificate({9, 4, 5}), DomainError);
    CHECK_THROWS_AS(pic_equality_certificate({9, 4, 3}), DomainError);
}
