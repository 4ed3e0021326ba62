#include "picardcalc/moduli_report.hpp"

namespace picard {

namespace {

void require_valid(const Params& p)
{
    if (auto v = params_violation(p.d, p.g, p.r))
        throw DomainError("regime Invalid: " + *v);
}

} // namespace

BadLocusData bad_locus_data(const Params& p)
{
    require_valid(p);
    const Regime regime = validate_params(p);
    BadLocusData data;
    data.codim_deg = p.d - p.g - p.r + 1;
    if (regime == Regime::BoundaryRdg)
        data.deg_deg = p.d - p.g + 1;

    if (regime == Regime::BoundaryR3) {
        data.codim_nemb = {CodimensionBound::Relation::Exactly, 1};
        data.deg_nemb = 2 * (p.d - 1) * (p.d - 2) - 4 * p.g;
    } else {
        // Interior: the secant condition has codimension r - 2 >= 2. At r = d - g the
        // locus sits inside the degenerate divisor with codimension >= 1 there.
        data.codim_nemb = {CodimensionBound::Relation::AtLeast, 2};
    }

    data.secant_degree = exact_div((p.d - 1) * (p.d - 2), 2) - p.g;
    data.grassmann_codim = p.r - 2;
    return data;
}

IntMatrix boundary_relations(const Params& p)
{
    switch (validate_params(p)) {
    case Regime::Interior:
        return IntMatrix(3, 0);
    case Regime::BoundaryR3: {
        IntMatrix rel(3, 1);
        rel(0, 0) = 2 * (p.d - 1) * (p.d - 2) - 4 * p.g;
        return rel;
    }
    case Regime::BoundaryRdg: {
        IntMatrix rel(3, 1);
        rel(0, 0) = p.d - p.g + 1;
        return rel;
    }
    case Regime::Invalid:
        break;
    }
    require_valid(p);
    return {};
}

PicardReport picard_structure(const Params& p, const Invariants& inv, int max_symmetric_d)
{
    require_valid(p);
    PicardReport report{.params = p,
                        .regime = validate_params(p),
                        .invariants = inv,
                        .group = {},
                        .relations = boundary_relations(p),
                        .generator_classes = generator_classes(inv, p.d, p.g),
                        .generators_descend = false,
                        .coefficient_matrix = coefficient_matrix(inv, p.d, p.g),
                        .inverse_matrix = {},
                        .bad_locus = bad_locus_data(p),
                        .verification = {}};
    report.inverse_matrix = invert(report.coefficient_matrix);
    report.group = cokernel(report.relations, 3);
    report.generators_descend = report.regime == Regime::Interior;
    report.verification = chow::standard_suite(p.d, p.g, inv, max_symmetric_d);
    return report;
}

PicEqualityCertificate pic_equality_certificate(const Params& p)
{
    const Regime regime = validate_params(p);
    if (regime != Regime::Interior)
        throw DomainError("Picard equality certificate needs the Interior regime, got "
                          + std::string(regime_name(regime)));
    const BadLocusData data = bad_locus_data(p);
    PicEqualityCertificate cert{p, data.codim_deg, data.codim_nemb, false, {}};
    cert.evidence.push_back("codim U_deg = d-g-r+1 = " + to_string(p.d) + "-" + to_string(p.g) + "-"
                            + to_string(p.r) + "+1 = " + to_string(data.codim_deg) + " >= 2");
    cert.evidence.push_back("codim U_nemb >= r-2 = " + to_string(data.grassmann_codim) + " >= 2 (4 <= r = "
                            + to_string(p.r) + " < d-g = " + to_string(Integer(p.d - p.g)) + ")");
    cert.valid = data.codim_deg >= 2 && data.grassmann_codim >= 2
        && data.codim_nemb.relation == CodimensionBound::Relation::AtLeast && data.codim_nemb.value >= 2;
    return cert;
}

} // namespace picard
