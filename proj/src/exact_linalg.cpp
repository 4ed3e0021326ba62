#include "picardcalc/exact_linalg.hpp"

#include <optional>
#include <utility>

namespace picard {

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

Rational det(const RationalMatrix& m)
{
    if (!m.square())
        throw ShapeError("determinant of a " + std::to_string(m.rows()) + "x"
                         + std::to_string(m.cols()) + " matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            a.swap_rows(pivot, col);
            result = -result;
        }
        result *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0)
                continue;
            const Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return result;
}

// Bareiss fraction-free elimination.
Integer det(const IntMatrix& m)
{
    if (!m.square())
        throw ShapeError("determinant of a " + std::to_string(m.rows()) + "x"
                         + std::to_string(m.cols()) + " matrix");
    IntMatrix a = m;
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RationalMatrix invert(const RationalMatrix& m)
{
    if (!m.square())
        throw ShapeError("cannot invert a " + std::to_string(m.rows()) + "x"
                         + std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular");
        a.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        const Rational scale = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0)
                continue;
            const Rational factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

std::size_t rank(const IntMatrix& m)
{
    RationalMatrix a = to_rational(m);
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, col) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        a.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0)
                continue;
            const Rational factor = a(i, col) / a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= factor * a(r, j);
        }
        ++r;
    }
    return r;
}

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& a, std::size_t from)
{
    std::optional<Position> best;
    for (std::size_t i = from; i < a.rows(); ++i)
        for (std::size_t j = from; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            if (!best || abs(a(i, j)) < abs(a(best->row, best->col)))
                best = Position{i, j};
        }
    return best;
}

// row[target] -= q * row[source], mirrored on the left transform.
void row_axpy(IntMatrix& a, IntMatrix& u, std::size_t target, std::size_t source, const Integer& q)
{
    for (std::size_t j = 0; j < a.cols(); ++j)
        a(target, j) -= q * a(source, j);
    for (std::size_t j = 0; j < u.cols(); ++j)
        u(target, j) -= q * u(source, j);
}

// col[target] -= q * col[source], mirrored on the right transform.
void col_axpy(IntMatrix& a, IntMatrix& v, std::size_t target, std::size_t source, const Integer& q)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        a(i, target) -= q * a(i, source);
    for (std::size_t i = 0; i < v.rows(); ++i)
        v(i, target) -= q * v(i, source);
}

Integer trunc_quotient(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& input)
{
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t diag = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            const auto pivot = smallest_nonzero(a, t);
            if (!pivot)
                return {std::move(u), std::move(a), std::move(v)};
            a.swap_rows(t, pivot->row);
            u.swap_rows(t, pivot->row);
            a.swap_cols(t, pivot->col);
            v.swap_cols(t, pivot->col);

            bool remainder = false;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                row_axpy(a, u, i, t, trunc_quotient(a(i, t), a(t, t)));
                remainder = remainder || a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                col_axpy(a, v, j, t, trunc_quotient(a(t, j), a(t, t)));
                remainder = remainder || a(t, j) != 0;
            }
            if (remainder)
                continue;

            // Pivot is isolated; enforce divisibility of the trailing block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (!divides(a(t, t), a(i, j))) {
                        row_axpy(a, u, t, i, -1);
                        fixed = true;
                        break;
                    }
                }
            if (!fixed)
                break;
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j)
                u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

std::vector<Integer> invariant_factors(const SmithForm& snf)
{
    std::vector<Integer> out;
    const std::size_t diag = std::min(snf.S.rows(), snf.S.cols());
    for (std::size_t i = 0; i < diag; ++i)
        if (snf.S(i, i) != 0)
            out.push_back(snf.S(i, i));
    return out;
}

std::string AbelianGroupStructure::display() const
{
    std::string out;
    if (free_rank == 1)
        out = "Z";
    else if (free_rank > 1)
        out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + to_string(t);
    }
    return out.empty() ? "0" : out;
}

AbelianGroupStructure cokernel(const IntMatrix& a, std::size_t ambient_rank)
{
    if (a.rows() != ambient_rank)
        throw ShapeError("relation matrix has " + std::to_string(a.rows())
                         + " rows but the ambient lattice has rank " + std::to_string(ambient_rank));
    const SmithForm snf = smith_normal_form(a);
    const auto factors = invariant_factors(snf);
    AbelianGroupStructure group;
    group.free_rank = ambient_rank - factors.size();
    for (const auto& f : factors)
        if (f > 1)
            group.torsion.push_back(f);
    return group;
}

} // namespace picard
