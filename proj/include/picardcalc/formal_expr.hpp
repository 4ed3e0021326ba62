#ifndef PICARDCALC_FORMAL_EXPR_HPP
#define PICARDCALC_FORMAL_EXPR_HPP

#include "picardcalc/bigint.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace picard::chow {

/// A named Chow class living on a space. A symbol with a non-empty `via` is
/// the pull-back of the class `name` along the map `via` into `space`.
struct FormalSymbol {
    std::string name;
    std::vector<int> indices;
    std::string space;
    std::string via;

    auto operator<=>(const FormalSymbol&) const = default;
    bool operator==(const FormalSymbol&) const = default;

    bool pulled_back_by(const std::string& map) const { return !via.empty() && via == map; }
    std::string to_string() const;
};

FormalSymbol symbol(std::string name, std::string space);
FormalSymbol indexed(std::string name, std::vector<int> indices, std::string space);

/// Delta_{i,j} with the indices stored as i < j. Throws DomainError when i == j.
FormalSymbol diagonal(int i, int j, std::string space);

/// f^* s on the space `target`.
FormalSymbol pulled_back(const FormalSymbol& s, std::string map, std::string target);

/// Inverse of pulled_back for symbols carrying `via`: drops the map and
/// re-homes the class on `base`.
FormalSymbol descended(const FormalSymbol& s, std::string base);

/// Marker for a push-forward no rule could evaluate.
FormalSymbol unknown_symbol(const std::string& map, const std::string& monomial);
bool is_unknown(const FormalSymbol& s);

/// Commutative monomial: symbol -> exponent, exponents >= 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const FormalSymbol& s, unsigned exponent = 1);

    unsigned degree() const;
    bool empty() const { return factors_.empty(); }
    const std::map<FormalSymbol, unsigned>& factors() const { return factors_; }

    unsigned exponent(const FormalSymbol& s) const;
    void multiply(const FormalSymbol& s, unsigned exponent = 1);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::map<FormalSymbol, unsigned> factors_;
};

/// Polynomial over Q in formal symbols, always kept in canonical form:
/// terms ordered by monomial, like terms merged, zero coefficients dropped.
class FormalExpr {
public:
    FormalExpr() = default;
    FormalExpr(const Rational& constant);
    FormalExpr(int constant) : FormalExpr(Rational(constant)) {}
    FormalExpr(const FormalSymbol& s);
    FormalExpr(const Monomial& m, const Rational& coefficient = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of m (zero when absent).
    Rational coefficient(const Monomial& m) const;

    /// True when every term has total degree k.
    bool homogeneous(unsigned k) const;

    /// Unknown-marker symbols occurring anywhere in the expression.
    std::vector<FormalSymbol> unknowns() const;

    FormalExpr& operator+=(const FormalExpr& other);
    FormalExpr& operator-=(const FormalExpr& other);
    FormalExpr& operator*=(const Rational& scalar);

    friend FormalExpr operator+(FormalExpr a, const FormalExpr& b) { return a += b; }
    friend FormalExpr operator-(FormalExpr a, const FormalExpr& b) { return a -= b; }
    friend FormalExpr operator-(FormalExpr a) { return a *= Rational(-1); }
    friend FormalExpr operator*(const FormalExpr& a, const FormalExpr& b);
    friend FormalExpr operator*(const Rational& s, FormalExpr a) { return a *= s; }

    bool operator==(const FormalExpr&) const = default;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

FormalExpr pow(const FormalExpr& base, unsigned exponent);

/// Ring homomorphism determined by its values on symbols.
FormalExpr substitute(const FormalExpr& e, const std::function<FormalExpr(const FormalSymbol&)>& image);

/// f^* applied symbol-wise: every symbol becomes pulled_back(s, map, target).
FormalExpr pullback(const FormalExpr& e, const std::string& map, const std::string& target);

/// Unexpanded expression tree: sums, products and powers over canonical leaves.
class Expr {
public:
    Expr(FormalExpr leaf);
    Expr(const FormalSymbol& s) : Expr(FormalExpr(s)) {}

    static Expr sum(std::vector<Expr> parts);
    static Expr product(std::vector<Expr> parts);
    static Expr power(Expr base, unsigned exponent);

    friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend FormalExpr expand(const Expr& e, std::size_t* distributed_terms);
};

/// Expands to canonical form. When requested, reports how many monomials the
/// fully distributed product has before like terms are merged.
FormalExpr expand(const Expr& e, std::size_t* distributed_terms = nullptr);

/// Canonical forms are already expanded; provided so expand is total and idempotent.
inline FormalExpr expand(const FormalExpr& e)
{
    return e;
}

} // namespace picard::chow

#endif
