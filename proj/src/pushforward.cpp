#include "picardcalc/pushforward.hpp"

namespace picard::chow {

RuleSet::RuleSet(std::string map_name, std::string source, std::string target)
    : map_name_(std::move(map_name)), source_(std::move(source)), target_(std::move(target))
{
}

RuleSet& RuleSet::add(PushforwardRule rule)
{
    rules_.push_back(std::move(rule));
    return *this;
}

std::string Obstruction::to_string() const
{
    if (kind == Kind::Unmatched)
        return "no " + map + "_* rule for " + monomial;
    std::string out = "ambiguous " + map + "_* rules for " + monomial + ":";
    for (const auto& r : rules)
        out += " " + r;
    return out;
}

PushforwardResult pushforward(const FormalExpr& e, const RuleSet& rules)
{
    PushforwardResult result;
    for (const auto& [m, c] : e.terms()) {
        std::optional<FormalExpr> image;
        std::vector<std::string> matched;
        for (const auto& rule : rules.rules()) {
            if (auto value = rule.apply(m)) {
                if (matched.empty())
                    image = std::move(value);
                matched.push_back(rule.name);
            }
        }
        if (matched.size() == 1) {
            result.value += c * *image;
            continue;
        }
        const std::string text = m.to_string();
        result.value += FormalExpr(Monomial(unknown_symbol(rules.map_name(), text)), c);
        result.obstructions.push_back(Obstruction{
            matched.empty() ? Obstruction::Kind::Unmatched : Obstruction::Kind::Ambiguous,
            rules.map_name(), text, matched});
    }
    return result;
}

PushforwardRule projection_rule(std::string name, std::string anchor, const RuleSet& set, FiberMatcher fiber)
{
    auto apply = [map = set.map_name(), target = set.target(),
                  fiber = std::move(fiber)](const Monomial& m) -> std::optional<FormalExpr> {
        Monomial fiber_part;
        Monomial base_part;
        for (const auto& [sym, e] : m.factors()) {
            if (sym.pulled_back_by(map))
                base_part.multiply(descended(sym, target), e);
            else
                fiber_part.multiply(sym, e);
        }
        auto pushed = fiber(fiber_part);
        if (!pushed)
            return std::nullopt;
        return *pushed * FormalExpr(base_part);
    };
    return PushforwardRule{std::move(name), std::move(anchor), std::move(apply)};
}

FiberMatcher fiber_literal(Monomial fiber_part, FormalExpr image)
{
    return [fiber_part = std::move(fiber_part),
            image = std::move(image)](const Monomial& m) -> std::optional<FormalExpr> {
        if (m == fiber_part)
            return image;
        return std::nullopt;
    };
}

} // namespace picard::chow
