#include "picardcalc/formal_expr.hpp"

#include <variant>

namespace picard::chow {

namespace {

const std::string kUnknownSpace = "?";

} // namespace

std::string FormalSymbol::to_string() const
{
    std::string out;
    if (!via.empty())
        out = via + "^*";
    out += name;
    if (!indices.empty()) {
        out += "_{";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(indices[i]);
        }
        out += "}";
    }
    return out;
}

FormalSymbol symbol(std::string name, std::string space)
{
    return FormalSymbol{std::move(name), {}, std::move(space), {}};
}

FormalSymbol indexed(std::string name, std::vector<int> indices, std::string space)
{
    return FormalSymbol{std::move(name), std::move(indices), std::move(space), {}};
}

FormalSymbol diagonal(int i, int j, std::string space)
{
    if (i == j)
        throw DomainError("diagonal Delta_{i,j} needs distinct indices");
    if (i > j)
        std::swap(i, j);
    return indexed("Delta", {i, j}, std::move(space));
}

FormalSymbol pulled_back(const FormalSymbol& s, std::string map, std::string target)
{
    FormalSymbol out = s;
    out.via = std::move(map);
    out.space = std::move(target);
    return out;
}

FormalSymbol descended(const FormalSymbol& s, std::string base)
{
    FormalSymbol out = s;
    out.via.clear();
    out.space = std::move(base);
    return out;
}

FormalSymbol unknown_symbol(const std::string& map, const std::string& monomial)
{
    return symbol(map + "_*[" + monomial + "]", kUnknownSpace);
}

bool is_unknown(const FormalSymbol& s)
{
    return s.space == kUnknownSpace;
}

// Monomial

Monomial::Monomial(const FormalSymbol& s, unsigned exponent)
{
    multiply(s, exponent);
}

unsigned Monomial::degree() const
{
    unsigned total = 0;
    for (const auto& [sym, e] : factors_)
        total += e;
    return total;
}

unsigned Monomial::exponent(const FormalSymbol& s) const
{
    auto it = factors_.find(s);
    return it == factors_.end() ? 0 : it->second;
}

void Monomial::multiply(const FormalSymbol& s, unsigned exponent)
{
    if (exponent > 0)
        factors_[s] += exponent;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out = a;
    for (const auto& [sym, e] : b.factors_)
        out.multiply(sym, e);
    return out;
}

std::string Monomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& [sym, e] : factors_) {
        if (!out.empty())
            out += "*";
        out += sym.to_string();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

// FormalExpr

FormalExpr::FormalExpr(const Rational& constant)
{
    add_term(Monomial{}, constant);
}

FormalExpr::FormalExpr(const FormalSymbol& s)
{
    add_term(Monomial(s), 1);
}

FormalExpr::FormalExpr(const Monomial& m, const Rational& coefficient)
{
    add_term(m, coefficient);
}

void FormalExpr::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational FormalExpr::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool FormalExpr::homogeneous(unsigned k) const
{
    for (const auto& [m, c] : terms_)
        if (m.degree() != k)
            return false;
    return true;
}

std::vector<FormalSymbol> FormalExpr::unknowns() const
{
    std::vector<FormalSymbol> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [sym, e] : m.factors())
            if (is_unknown(sym))
                out.push_back(sym);
    return out;
}

FormalExpr& FormalExpr::operator+=(const FormalExpr& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

FormalExpr& FormalExpr::operator-=(const FormalExpr& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

FormalExpr& FormalExpr::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

FormalExpr operator*(const FormalExpr& a, const FormalExpr& b)
{
    FormalExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

std::string FormalExpr::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m.empty()) {
            out += picard::to_string(magnitude);
        } else {
            if (magnitude != 1)
                out += picard::to_string(magnitude) + "*";
            out += m.to_string();
        }
    }
    return out;
}

FormalExpr pow(const FormalExpr& base, unsigned exponent)
{
    FormalExpr result(1);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * base;
    return result;
}

FormalExpr substitute(const FormalExpr& e, const std::function<FormalExpr(const FormalSymbol&)>& image)
{
    FormalExpr out;
    for (const auto& [m, c] : e.terms()) {
        FormalExpr term(c);
        for (const auto& [sym, k] : m.factors())
            term = term * pow(image(sym), k);
        out += term;
    }
    return out;
}

FormalExpr pullback(const FormalExpr& e, const std::string& map, const std::string& target)
{
    return substitute(e, [&](const FormalSymbol& s) { return FormalExpr(pulled_back(s, map, target)); });
}

// Expression trees

struct Expr::Node {
    struct Sum {
        std::vector<Expr> parts;
    };
    struct Product {
        std::vector<Expr> parts;
    };
    struct Power {
        Expr base;
        unsigned exponent;
    };
    std::variant<FormalExpr, Sum, Product, Power> value;
};

Expr::Expr(FormalExpr leaf) : node_(std::make_shared<const Node>(Node{std::move(leaf)})) {}

Expr Expr::sum(std::vector<Expr> parts)
{
    return Expr(std::make_shared<const Node>(Node{Node::Sum{std::move(parts)}}));
}

Expr Expr::product(std::vector<Expr> parts)
{
    return Expr(std::make_shared<const Node>(Node{Node::Product{std::move(parts)}}));
}

Expr Expr::power(Expr base, unsigned exponent)
{
    return Expr(std::make_shared<const Node>(Node{Node::Power{std::move(base), exponent}}));
}

FormalExpr expand(const Expr& e, std::size_t* distributed_terms)
{
    std::size_t count = 0;
    FormalExpr result = std::visit(
        [&](const auto& node) -> FormalExpr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, FormalExpr>) {
                count = node.size();
                return node;
            } else if constexpr (std::is_same_v<T, Expr::Node::Sum>) {
                FormalExpr acc;
                for (const auto& part : node.parts) {
                    std::size_t n = 0;
                    acc += expand(part, &n);
                    count += n;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, Expr::Node::Product>) {
                FormalExpr acc(1);
                count = 1;
                for (const auto& part : node.parts) {
                    std::size_t n = 0;
                    acc = acc * expand(part, &n);
                    count *= n;
                }
                return acc;
            } else {
                std::size_t n = 0;
                const FormalExpr base = expand(node.base, &n);
                count = 1;
                for (unsigned i = 0; i < node.exponent; ++i)
                    count *= n;
                return pow(base, node.exponent);
            }
        },
        e.node_->value);
    if (distributed_terms)
        *distributed_terms = count;
    return result;
}

} // namespace picard::chow
