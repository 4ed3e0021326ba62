#ifndef PICARDCALC_CHOW_VERIFY_HPP
#define PICARDCALC_CHOW_VERIFY_HPP

#include "picardcalc/formal_expr.hpp"
#include "picardcalc/invariants.hpp"
#include "picardcalc/pushforward.hpp"

#include <string>
#include <utility>
#include <vector>

namespace picard::chow {

// Space tags.
namespace space {
inline const std::string moduli = "M_g";
inline const std::string curve = "C_g";
inline const std::string product = "C_g^d";               // ordinary fibered power
inline const std::string product_curve = "C_g^d x C_g";   // one extra factor
inline const std::string symmetric = "C_g^(d)";
inline const std::string symmetric_curve = "C_g^(d) x C_g";
inline const std::string jacobian = "J^d";
inline const std::string jacobian_curve = "J^d x C_g";
inline const std::string hilbert = "H";
inline const std::string hilbert_curve = "C_H";
} // namespace space

/// Outcome of checking one identity. Aggregate checks carry their pieces in `parts`.
struct Verdict {
    std::string lemma;
    std::vector<std::pair<std::string, std::string>> params;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> obstructions;
    std::vector<Verdict> parts;
};

/// Aggregates parts: passes iff every part passes; obstructions are concatenated.
Verdict combine(std::string lemma, std::vector<std::pair<std::string, std::string>> params,
                std::vector<Verdict> parts);

inline constexpr int kDefaultSymmetricCap = 10;

// Rule sets.

/// q_1 : C_g^d x C_g -> C_g^d, forgetting the last factor.
RuleSet diagonal_projection_rules(int d);

/// p_1 : C_g^(d) x C_g -> C_g^(d).
RuleSet symmetric_projection_rules(const Integer& d, const Integer& g);

/// nu : J^d x C_g -> J^d (Mumford's relation only).
RuleSet jacobian_projection_rules();

/// q : C_H -> H, with the Jacobian-level push-forwards imported as given.
RuleSet universal_curve_rules(const Integer& d, const Integer& g, const Invariants& inv,
                              const FormalExpr& pushed_square, const FormalExpr& pushed_mixed,
                              const FormalExpr& pushed_canonical_square);

// Standard classes.

/// u^* L_d = (d+g-1)/s_d L_omega - k_d Delta/2 on C_g^(d).
FormalExpr normalized_jacobian_pullback(const Integer& d, const Integer& g, const Invariants& inv);

/// u~^* P_d = s_d D + p_1^*(m L_omega - n Delta/2) on C_g^(d) x C_g.
FormalExpr poincare_pullback(const Invariants& inv);

// Verifiers.

/// q_1*(sum_i Delta_{i,d+1})^2 = c^*(2 Delta/2 - L_omega). Throws DomainError
/// unless 1 <= d <= cap.
Verdict verify_lemma_D(int d, int cap = kDefaultSymmetricCap);

/// Number of monomials in the distributed square (sum_i Delta_{i,d+1})^2.
std::size_t lemma_D_distributed_terms(int d);

/// The three push-forwards along nu. Part verdicts are "pushforward.1" .. "pushforward.3".
Verdict verify_pushforward_lemma(const Integer& d, const Integer& g, const Invariants& inv);

/// A, B, C over (L_d, R, lambda), matched against the coefficient matrix rows.
Verdict verify_classes_lemma(const Integer& d, const Integer& g, const Invariants& inv);

/// Degree restrictions to Abel-Jacobi fibers of the normalized bundles.
Verdict verify_fiber_triviality(const Integer& d, const Integer& g, const Invariants& inv);

/// c^* L_sigma(l) = L_K + d l chi^* lambda on C_g^d. Throws DomainError for d < 1 or l < 0.
Verdict verify_pullback_lemma(int d, int l);

/// The suite run for one (d, g): lemma D for 1..max_symmetric_d (one
/// aggregate verdict), pull-back lemma, fiber triviality, the three
/// push-forward parts and the classes lemma, seven verdicts in all.
std::vector<Verdict> standard_suite(const Integer& d, const Integer& g, const Invariants& inv,
                                    int max_symmetric_d, int cap = kDefaultSymmetricCap);

} // namespace picard::chow

#endif
