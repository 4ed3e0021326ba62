#include "picardcalc/chow_verify.hpp"

#include "picardcalc/divisor_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard::chow {

namespace {

// Largest degree at which the pull-back lemma is expanded inside standard_suite.
constexpr int kPullbackDegreeCap = 64;

FormalSymbol omega_i(int i)
{
    return indexed("omega", {i}, space::product);
}

FormalSymbol canonical_class()
{
    return symbol("L_omega", space::symmetric);
}

FormalSymbol half_diagonal()
{
    return symbol("Delta_half", space::symmetric);
}

FormalSymbol universal_divisor()
{
    return symbol("D", space::symmetric_curve);
}

FormalSymbol relative_dualizing_p1()
{
    return pulled_back(symbol("omega_pi", space::curve), "p2", space::symmetric_curve);
}

FormalSymbol jacobian_bundle()
{
    return symbol("L_d", space::jacobian);
}

FormalSymbol hodge_on_jacobian()
{
    return pulled_back(symbol("lambda", space::moduli), "psi", space::jacobian);
}

FormalSymbol poincare_on_hilbert_curve()
{
    return pulled_back(symbol("P_d", space::jacobian_curve), "alpha", space::hilbert_curve);
}

FormalSymbol omega_q()
{
    return symbol("omega_q", space::hilbert_curve);
}

FormalSymbol hilbert_generator(const std::string& name)
{
    return symbol(name, space::hilbert);
}

Rational q(const Integer& z)
{
    return Rational(z);
}

std::vector<std::pair<std::string, std::string>> dg_params(const Integer& d, const Integer& g)
{
    return {{"d", to_string(d)}, {"g", to_string(g)}};
}

Verdict compare(std::string lemma, std::vector<std::pair<std::string, std::string>> params,
                const PushforwardResult& lhs, const FormalExpr& rhs)
{
    Verdict v;
    v.lemma = std::move(lemma);
    v.params = std::move(params);
    v.lhs = lhs.value.to_string();
    v.rhs = rhs.to_string();
    for (const auto& o : lhs.obstructions)
        v.obstructions.push_back(o.to_string());
    v.passed = v.obstructions.empty() && lhs.value == rhs;
    return v;
}

// u^* on classes of J^d: L_d -> normalized pull-back.
FormalExpr abel_jacobi_pullback(const FormalExpr& e, const FormalExpr& normalized)
{
    return substitute(e, [&](const FormalSymbol& s) -> FormalExpr {
        if (s == jacobian_bundle())
            return normalized;
        throw std::logic_error("u^* is not declared on " + s.to_string());
    });
}

// phi^* from J^d to H.
FormalExpr to_hilbert(const FormalExpr& e)
{
    return substitute(e, [](const FormalSymbol& s) -> FormalExpr {
        if (s == jacobian_bundle())
            return hilbert_generator("L_d");
        if (s == hodge_on_jacobian())
            return hilbert_generator("lambda");
        throw std::logic_error("phi^* is not declared on " + s.to_string());
    });
}

struct PushforwardParts {
    Verdict square;
    Verdict mixed;
    Verdict canonical_square;
    FormalExpr square_claim;
    FormalExpr mixed_claim;
    FormalExpr canonical_square_claim;
};

PushforwardParts pushforward_parts(const Integer& d, const Integer& g, const Invariants& inv)
{
    if (auto v = degree_genus_violation(d, g))
        throw DomainError(*v);
    PushforwardParts out;
    const RuleSet p1 = symmetric_projection_rules(d, g);
    const FormalExpr normalized = normalized_jacobian_pullback(d, g, inv);
    const FormalExpr poincare = poincare_pullback(inv);
    const Integer& s = inv.s_d;

    // nu_*(P_d^2) = s_d^2 (nd - s_d)/(g-1) L_d
    out.square_claim = Rational(s * s * exact_div(inv.n * d - s, g - 1)) * FormalExpr(jacobian_bundle());
    const FormalExpr square = expand(Expr::power(Expr(poincare), 2));
    out.square = compare("pushforward.1", dg_params(d, g), pushforward(square, p1),
                         abel_jacobi_pullback(out.square_claim, normalized));

    // nu_*(P_d w_nu) = s_d n L_d, with u~^* w_nu = p_2^* w_pi
    out.mixed_claim = Rational(s * inv.n) * FormalExpr(jacobian_bundle());
    const FormalExpr mixed = expand(Expr(poincare) * Expr(relative_dualizing_p1()));
    out.mixed = compare("pushforward.2", dg_params(d, g), pushforward(mixed, p1),
                        abel_jacobi_pullback(out.mixed_claim, normalized));

    // nu_*(w_nu^2) = 12 psi^* lambda
    out.canonical_square_claim = Rational(12) * FormalExpr(hodge_on_jacobian());
    const FormalExpr omega_nu = FormalExpr(symbol("omega_nu", space::jacobian_curve));
    out.canonical_square = compare("pushforward.3", dg_params(d, g),
                                   pushforward(pow(omega_nu, 2), jacobian_projection_rules()),
                                   out.canonical_square_claim);
    return out;
}

} // namespace

Verdict combine(std::string lemma, std::vector<std::pair<std::string, std::string>> params,
                std::vector<Verdict> parts)
{
    Verdict v;
    v.lemma = std::move(lemma);
    v.params = std::move(params);
    v.passed = true;
    for (const auto& part : parts) {
        v.passed = v.passed && part.passed;
        v.obstructions.insert(v.obstructions.end(), part.obstructions.begin(), part.obstructions.end());
    }
    v.parts = std::move(parts);
    return v;
}

RuleSet diagonal_projection_rules(int d)
{
    RuleSet set("q1", space::product_curve, space::product);
    set.add(projection_rule("fiber_vanishing", "push-forward of a pull-back along a relative curve vanishes",
                            set, fiber_literal(Monomial{}, FormalExpr{})));
    const int last = d + 1;
    set.add(projection_rule(
        "diagonal_pair", "q_{1*}(Delta_{i,d+1} Delta_{j,d+1}) = Delta_{i,j} for i != j", set,
        [last](const Monomial& m) -> std::optional<FormalExpr> {
            if (m.degree() != 2 || m.factors().size() != 2)
                return std::nullopt;
            auto first = m.factors().begin();
            auto second = std::next(first);
            const auto& a = first->first;
            const auto& b = second->first;
            if (a.name != "Delta" || b.name != "Delta" || a.indices.size() != 2 || b.indices.size() != 2)
                return std::nullopt;
            if (a.indices[1] != last || b.indices[1] != last)
                return std::nullopt;
            return FormalExpr(diagonal(a.indices[0], b.indices[0], space::product));
        }));
    set.add(projection_rule(
        "diagonal_self_intersection", "q_{1*} Delta_{i,d+1}^2 = pi_i^* omega_{pi_i}^{-1}", set,
        [last](const Monomial& m) -> std::optional<FormalExpr> {
            if (m.factors().size() != 1)
                return std::nullopt;
            const auto& [a, e] = *m.factors().begin();
            if (e != 2 || a.name != "Delta" || a.indices.size() != 2 || a.indices[1] != last)
                return std::nullopt;
            return -FormalExpr(omega_i(a.indices[0]));
        }));
    return set;
}

RuleSet symmetric_projection_rules(const Integer& d, const Integer& g)
{
    RuleSet set("p1", space::symmetric_curve, space::symmetric);
    const FormalSymbol divisor = universal_divisor();
    const FormalSymbol omega = relative_dualizing_p1();
    set.add(projection_rule("fiber_vanishing", "p_{1*}(p_1^*Y p_1^*Z) = 0", set,
                            fiber_literal(Monomial{}, FormalExpr{})));
    set.add(projection_rule("universal_divisor_degree", "p_{1*}(D p_1^*Y) = d Y", set,
                            fiber_literal(Monomial(divisor), FormalExpr(q(d)))));
    set.add(projection_rule("relative_canonical_degree", "p_{1*}(p_1^*Y p_2^*omega_pi) = (2g-2) Y", set,
                            fiber_literal(Monomial(omega), FormalExpr(q(2 * g - 2)))));
    set.add(projection_rule("lemma_D", "p_{1*} D^2 = -L_omega + Delta", set,
                            fiber_literal(Monomial(divisor, 2),
                                          Rational(2) * FormalExpr(half_diagonal())
                                              - FormalExpr(canonical_class()))));
    set.add(projection_rule("addition_map", "sigma_* pi_2^* omega_pi = L_omega", set,
                            fiber_literal(Monomial(divisor) * Monomial(omega), FormalExpr(canonical_class()))));
    return set;
}

RuleSet jacobian_projection_rules()
{
    RuleSet set("nu", space::jacobian_curve, space::jacobian);
    set.add(projection_rule("fiber_vanishing", "nu_*(nu^*Y nu^*Z) = 0", set,
                            fiber_literal(Monomial{}, FormalExpr{})));
    set.add(projection_rule("mumford", "pi_*(omega_pi^2) = 12 lambda", set,
                            fiber_literal(Monomial(symbol("omega_nu", space::jacobian_curve), 2),
                                          Rational(12) * FormalExpr(hodge_on_jacobian()))));
    return set;
}

RuleSet universal_curve_rules(const Integer& d, const Integer& g, const Invariants& inv,
                              const FormalExpr& pushed_square, const FormalExpr& pushed_mixed,
                              const FormalExpr& pushed_canonical_square)
{
    RuleSet set("q", space::hilbert_curve, space::hilbert);
    const FormalSymbol poincare = poincare_on_hilbert_curve();
    const FormalSymbol omega = omega_q();
    set.add(projection_rule("fiber_vanishing", "q_*(q^*X q^*Y) = 0", set, fiber_literal(Monomial{}, FormalExpr{})));
    set.add(projection_rule("poincare_degree", "q_*(q^*X alpha^*P_d) = d s_d X", set,
                            fiber_literal(Monomial(poincare), FormalExpr(q(d * inv.s_d)))));
    set.add(projection_rule("relative_canonical_degree", "q_*(q^*X omega_q) = (2g-2) X", set,
                            fiber_literal(Monomial(omega), FormalExpr(q(2 * g - 2)))));
    set.add(projection_rule("poincare_square", "q_* alpha^* P_d^2 = phi^* nu_* P_d^2", set,
                            fiber_literal(Monomial(poincare, 2), to_hilbert(pushed_square))));
    set.add(projection_rule("poincare_canonical", "q_* alpha^*(P_d omega_nu) = phi^* nu_*(P_d omega_nu)", set,
                            fiber_literal(Monomial(poincare) * Monomial(omega), to_hilbert(pushed_mixed))));
    set.add(projection_rule("canonical_square", "q_*(omega_q^2) = phi^* nu_*(omega_nu^2)", set,
                            fiber_literal(Monomial(omega, 2), to_hilbert(pushed_canonical_square))));
    return set;
}

FormalExpr normalized_jacobian_pullback(const Integer& d, const Integer& g, const Invariants& inv)
{
    return make_rational(d + g - 1, inv.s_d) * FormalExpr(canonical_class())
        - Rational(inv.k_d) * FormalExpr(half_diagonal());
}

FormalExpr poincare_pullback(const Invariants& inv)
{
    const FormalExpr base = Rational(inv.m) * FormalExpr(canonical_class())
        - Rational(inv.n) * FormalExpr(half_diagonal());
    return Rational(inv.s_d) * FormalExpr(universal_divisor()) + pullback(base, "p1", space::symmetric_curve);
}

std::size_t lemma_D_distributed_terms(int d)
{
    std::vector<Expr> diagonals;
    for (int i = 1; i <= d; ++i)
        diagonals.emplace_back(diagonal(i, d + 1, space::product_curve));
    std::size_t count = 0;
    expand(Expr::power(Expr::sum(std::move(diagonals)), 2), &count);
    return count;
}

Verdict verify_lemma_D(int d, int cap)
{
    if (d < 1)
        throw DomainError("lemma D needs d >= 1");
    if (d > cap)
        throw DomainError("lemma D degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap));

    std::vector<Expr> diagonals;
    for (int i = 1; i <= d; ++i)
        diagonals.emplace_back(diagonal(i, d + 1, space::product_curve));
    std::size_t distributed = 0;
    const FormalExpr square = expand(Expr::power(Expr::sum(std::move(diagonals)), 2), &distributed);
    const PushforwardResult pushed = pushforward(square, diagonal_projection_rules(d));

    // c^*: L_omega -> L_K = sum omega_i, Delta/2 -> sum_{i<j} Delta_{i,j}.
    FormalExpr canonical_sum;
    FormalExpr big_diagonal;
    for (int i = 1; i <= d; ++i) {
        canonical_sum += FormalExpr(omega_i(i));
        for (int j = i + 1; j <= d; ++j)
            big_diagonal += FormalExpr(diagonal(i, j, space::product));
    }
    const FormalExpr lemma_rhs = Rational(2) * FormalExpr(half_diagonal()) - FormalExpr(canonical_class());
    const FormalExpr rhs = substitute(lemma_rhs, [&](const FormalSymbol& s) -> FormalExpr {
        if (s == canonical_class())
            return canonical_sum;
        if (s == half_diagonal())
            return big_diagonal;
        throw std::logic_error("c^* is not declared on " + s.to_string());
    });

    Verdict v = compare("lemma_D", {{"d", std::to_string(d)}, {"distributed_terms", std::to_string(distributed)}},
                        pushed, rhs);
    if (distributed != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
        v.passed = false;
        v.obstructions.push_back("distributed square has " + std::to_string(distributed) + " terms");
    }
    return v;
}

Verdict verify_pushforward_lemma(const Integer& d, const Integer& g, const Invariants& inv)
{
    PushforwardParts parts = pushforward_parts(d, g, inv);
    return combine("pushforward", dg_params(d, g),
                   {std::move(parts.square), std::move(parts.mixed), std::move(parts.canonical_square)});
}

Verdict verify_classes_lemma(const Integer& d, const Integer& g, const Invariants& inv)
{
    const PushforwardParts imported = pushforward_parts(d, g, inv);
    const RuleSet rules = universal_curve_rules(d, g, inv, imported.square_claim, imported.mixed_claim,
                                                imported.canonical_square_claim);
    const RationalMatrix matrix = coefficient_matrix(inv, d, g);

    // s_d F = q^*R + alpha^*P_d
    const FormalExpr relative = FormalExpr(pulled_back(hilbert_generator("R"), "q", space::hilbert_curve));
    const FormalExpr tautological
        = make_rational(Integer(1), inv.s_d) * (relative + FormalExpr(poincare_on_hilbert_curve()));
    const FormalExpr omega = FormalExpr(omega_q());

    const std::array<FormalSymbol, 3> basis
        = {hilbert_generator("L_d"), hilbert_generator("R"), hilbert_generator("lambda")};
    auto expected_row = [&](std::size_t row) {
        FormalExpr e;
        for (std::size_t j = 0; j < 3; ++j)
            e += matrix(row, j) * FormalExpr(basis[j]);
        return e;
    };

    const std::array<std::pair<std::string, FormalExpr>, 3> natural = {{
        {"classes.A", expand(Expr::power(Expr(tautological), 2))},
        {"classes.B", expand(Expr(tautological) * Expr(omega))},
        {"classes.C", expand(Expr::power(Expr(omega), 2))},
    }};
    const std::array<const Verdict*, 3> depends = {&imported.square, &imported.mixed, &imported.canonical_square};

    std::vector<Verdict> parts;
    for (std::size_t row = 0; row < 3; ++row) {
        Verdict v = compare(natural[row].first, dg_params(d, g), pushforward(natural[row].second, rules),
                            expected_row(row));
        if (!depends[row]->passed) {
            v.passed = false;
            v.obstructions.push_back("imported " + depends[row]->lemma + " does not hold");
        }
        parts.push_back(std::move(v));
    }
    return combine("classes", dg_params(d, g), std::move(parts));
}

Verdict verify_fiber_triviality(const Integer& d, const Integer& g, const Invariants& inv)
{
    if (auto v = degree_genus_violation(d, g))
        throw DomainError(*v);
    // Degrees on an Abel-Jacobi fiber P^{d-g}: L_omega ~ O(2g-2), Delta/2 ~ O(d+g-1), D ~ O(1).
    auto restrict_to_fiber = [&](const FormalSymbol& s) -> FormalExpr {
        if (s.name == "L_omega")
            return FormalExpr(q(2 * g - 2));
        if (s.name == "Delta_half")
            return FormalExpr(q(d + g - 1));
        if (s.name == "D")
            return FormalExpr(1);
        throw std::logic_error("no fiber degree for " + s.to_string());
    };
    auto check = [&](std::string id, const FormalExpr& e) {
        const FormalExpr restricted = substitute(e, restrict_to_fiber);
        Verdict v;
        v.lemma = std::move(id);
        v.params = dg_params(d, g);
        v.lhs = e.to_string() + " |-> " + restricted.to_string();
        v.rhs = "0";
        v.passed = restricted.is_zero();
        return v;
    };
    return combine("fiber_triviality", dg_params(d, g),
                   {check("fiber_triviality.jacobian", normalized_jacobian_pullback(d, g, inv)),
                    check("fiber_triviality.poincare", poincare_pullback(inv))});
}

Verdict verify_pullback_lemma(int d, int l)
{
    if (d < 1)
        throw DomainError("pull-back lemma needs d >= 1");
    if (l < 0)
        throw DomainError("pull-back lemma needs l >= 0");

    const FormalExpr hodge_on_product = FormalExpr(pulled_back(symbol("lambda", space::moduli), "chi", space::product));
    // O(sigma(l)) = omega_pi + l pi^* lambda on C_g
    const FormalExpr section = FormalExpr(symbol("omega_pi", space::curve))
        + Rational(l) * FormalExpr(pulled_back(symbol("lambda", space::moduli), "pi", space::curve));

    FormalExpr lhs;
    FormalExpr canonical_sum;
    for (int i = 1; i <= d; ++i) {
        // pi_i^*: omega_pi -> omega_i, pi^* lambda -> chi^* lambda since pi o pi_i = chi.
        lhs += substitute(section, [&](const FormalSymbol& s) -> FormalExpr {
            if (s.name == "omega_pi")
                return FormalExpr(omega_i(i));
            if (s.name == "lambda" && s.via == "pi")
                return hodge_on_product;
            throw std::logic_error("pi_i^* is not declared on " + s.to_string());
        });
        canonical_sum += FormalExpr(omega_i(i));
    }
    const FormalExpr rhs = canonical_sum + Rational(d * l) * hodge_on_product;

    Verdict v;
    v.lemma = "pullback";
    v.params = {{"d", std::to_string(d)}, {"l", std::to_string(l)}};
    v.lhs = lhs.to_string();
    v.rhs = rhs.to_string();
    v.passed = lhs == rhs;
    return v;
}

std::vector<Verdict> standard_suite(const Integer& d, const Integer& g, const Invariants& inv,
                                    int max_symmetric_d, int cap)
{
    if (max_symmetric_d < 1 || max_symmetric_d > cap)
        throw DomainError("max symmetric degree must lie in [1, " + std::to_string(cap) + "]");

    std::vector<Verdict> suite;

    std::vector<Verdict> lemma_d;
    for (int k = 1; k <= max_symmetric_d; ++k)
        lemma_d.push_back(verify_lemma_D(k, cap));
    suite.push_back(combine("lemma_D", {{"max_d", std::to_string(max_symmetric_d)}}, std::move(lemma_d)));

    const int pullback_degree = d > kPullbackDegreeCap ? kPullbackDegreeCap : static_cast<int>(d.get_si());
    std::vector<Verdict> pullbacks;
    for (int l = 0; l <= 3; ++l)
        pullbacks.push_back(verify_pullback_lemma(pullback_degree, l));
    suite.push_back(combine("pullback", {{"d", std::to_string(pullback_degree)}}, std::move(pullbacks)));

    suite.push_back(verify_fiber_triviality(d, g, inv));

    Verdict pushforward = verify_pushforward_lemma(d, g, inv);
    for (auto& part : pushforward.parts)
        suite.push_back(std::move(part));

    suite.push_back(verify_classes_lemma(d, g, inv));
    return suite;
}

} // namespace picard::chow
