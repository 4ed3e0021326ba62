#ifndef PICARDCALC_MODULI_REPORT_HPP
#define PICARDCALC_MODULI_REPORT_HPP

#include "picardcalc/chow_verify.hpp"
#include "picardcalc/divisor_basis.hpp"
#include "picardcalc/exact_linalg.hpp"
#include "picardcalc/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picard {

/// Codimension of the non-embedding locus: either a lower bound or an exact divisor.
struct CodimensionBound {
    enum class Relation { AtLeast, Exactly };
    Relation relation;
    Integer value;
};

/// Geometry of the complement of the Hilbert scheme in one fiber of P_d -> J^d.
struct BadLocusData {
    Integer codim_deg;               // d - g - r + 1
    std::optional<Integer> deg_deg;  // d - g + 1, only when r = d - g
    CodimensionBound codim_nemb;
    std::optional<Integer> deg_nemb; // 2(d-1)(d-2) - 4g, only when r = 3 < d - g
    Integer secant_degree;           // (d-1)(d-2)/2 - g
    Integer grassmann_codim;         // r - 2
    bool overlap_modeled = false;    // the intersection of the two loci is not modeled
};

/// Throws DomainError for invalid parameters.
BadLocusData bad_locus_data(const Params& p);

struct PicardReport {
    Params params;
    Regime regime;
    Invariants invariants;
    AbelianGroupStructure group;
    IntMatrix relations; // 3 x k, one relation per column, over (L_d, R, lambda)
    GeneratorClasses generator_classes;
    bool generators_descend; // false in boundary regimes: classes are pre-quotient representatives
    RationalMatrix coefficient_matrix;
    RationalMatrix inverse_matrix;
    BadLocusData bad_locus;
    std::vector<chow::Verdict> verification;
};

/// Relation column killed in Pic: empty for Interior, (N, 0, 0)^T at the boundary.
IntMatrix boundary_relations(const Params& p);

/// Assembles the full report. Throws DomainError naming the regime when p is Invalid.
PicardReport picard_structure(const Params& p, const Invariants& inv,
                              int max_symmetric_d = 8);

struct PicEqualityCertificate {
    Params params;
    Integer codim_deg;
    CodimensionBound codim_nemb;
    bool valid;
    std::vector<std::string> evidence; // instantiated inequalities
};

/// Codimension evidence that Pic H = Pic P_d. Interior regime only.
PicEqualityCertificate pic_equality_certificate(const Params& p);

} // namespace picard

#endif
