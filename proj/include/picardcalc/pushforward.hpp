#ifndef PICARDCALC_PUSHFORWARD_HPP
#define PICARDCALC_PUSHFORWARD_HPP

#include "picardcalc/formal_expr.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace picard::chow {

/// One declared push-forward fact. `apply` returns the image of a monomial
/// it recognizes and nullopt otherwise; `anchor` records the statement the
/// fact is taken from.
struct PushforwardRule {
    std::string name;
    std::string anchor;
    std::function<std::optional<FormalExpr>(const Monomial&)> apply;
};

/// Push-forward facts for one proper map `source -> target`.
class RuleSet {
public:
    RuleSet(std::string map_name, std::string source, std::string target);

    RuleSet& add(PushforwardRule rule);

    const std::string& map_name() const { return map_name_; }
    const std::string& source() const { return source_; }
    const std::string& target() const { return target_; }
    const std::vector<PushforwardRule>& rules() const { return rules_; }

private:
    std::string map_name_;
    std::string source_;
    std::string target_;
    std::vector<PushforwardRule> rules_;
};

struct Obstruction {
    enum class Kind { Unmatched, Ambiguous };
    Kind kind;
    std::string map;
    std::string monomial;
    std::vector<std::string> rules; // candidates, for Ambiguous

    std::string to_string() const;
};

struct PushforwardResult {
    FormalExpr value; // unevaluable terms appear as unknown symbols
    std::vector<Obstruction> obstructions;
};

/// Applies the rule set term by term (linearly). A term matched by no rule,
/// or by more than one, is kept as an explicit unknown and reported.
PushforwardResult pushforward(const FormalExpr& e, const RuleSet& rules);

/// Matcher for the part of a monomial that is not pulled back along the map.
using FiberMatcher = std::function<std::optional<FormalExpr>(const Monomial& fiber_part)>;

/// Projection-formula rule f_*(a * f^*Y) = f_*(a) * Y, where a is the factor
/// of the monomial not pulled back along f and Y (possibly 1) the rest. The
/// rule fires when `fiber` evaluates f_*(a).
PushforwardRule projection_rule(std::string name, std::string anchor, const RuleSet& set, FiberMatcher fiber);

/// FiberMatcher recognizing exactly one monomial.
FiberMatcher fiber_literal(Monomial fiber_part, FormalExpr image);

} // namespace picard::chow

#endif
