#include "picardcalc/report_json.hpp"

#include <limits>
#include <sstream>

namespace picard {

using nlohmann::json;

json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return to_string(z);
}

json rational_json(const Rational& q)
{
    return json{{"num", to_string(Integer(q.get_num()))}, {"den", to_string(Integer(q.get_den()))}};
}

Rational rational_from_json(const json& j)
{
    return make_rational(parse_integer(j.at("num").get<std::string>()),
                         parse_integer(j.at("den").get<std::string>()));
}

json to_json(const Params& p)
{
    return json{{"d", integer_json(p.d)}, {"g", integer_json(p.g)}, {"r", integer_json(p.r)}};
}

json to_json(const Invariants& inv)
{
    return json{{"k_d", integer_json(inv.k_d)},
                {"s_d", integer_json(inv.s_d)},
                {"n", integer_json(inv.n)},
                {"m", integer_json(inv.m)}};
}

json to_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const DivisorClass& c)
{
    json coords = json::array();
    for (const auto& x : c.coords)
        coords.push_back(rational_json(x));
    return json{{"basis", std::string(basis_name(c.basis))}, {"coords", std::move(coords)}};
}

json to_json(const AbelianGroupStructure& group)
{
    json torsion = json::array();
    for (const auto& t : group.torsion)
        torsion.push_back(integer_json(t));
    return json{{"free_rank", group.free_rank}, {"torsion", std::move(torsion)}, {"display", group.display()}};
}

json to_json(const BadLocusData& data)
{
    auto optional_integer = [](const std::optional<Integer>& z) { return z ? integer_json(*z) : json(nullptr); };
    return json{
        {"codim_deg", integer_json(data.codim_deg)},
        {"deg_deg", optional_integer(data.deg_deg)},
        {"codim_nemb",
         {{"relation", data.codim_nemb.relation == CodimensionBound::Relation::AtLeast ? ">=" : "="},
          {"value", integer_json(data.codim_nemb.value)}}},
        {"deg_nemb", optional_integer(data.deg_nemb)},
        {"secant_degree", integer_json(data.secant_degree)},
        {"grassmann_codim", integer_json(data.grassmann_codim)},
        {"overlap", data.overlap_modeled ? "modeled" : "not modeled"},
    };
}

json to_json(const chow::Verdict& v)
{
    json params = json::object();
    for (const auto& [key, value] : v.params)
        params[key] = value;
    json parts = json::array();
    for (const auto& part : v.parts)
        parts.push_back(to_json(part));
    return json{{"lemma", v.lemma},     {"params", std::move(params)},   {"passed", v.passed},
                {"lhs", v.lhs},         {"rhs", v.rhs},                  {"obstructions", v.obstructions},
                {"parts", std::move(parts)}};
}

json to_json(const PicardReport& report)
{
    json verdicts = json::array();
    for (const auto& v : report.verification)
        verdicts.push_back(to_json(v));
    const auto& gens = report.generator_classes;
    return json{
        {"params", to_json(report.params)},
        {"regime", std::string(regime_name(report.regime))},
        {"invariants", to_json(report.invariants)},
        {"coefficient_matrix", to_json(report.coefficient_matrix)},
        {"inverse_matrix", to_json(report.inverse_matrix)},
        {"generator_classes",
         {{"R", to_json(gens.relative)},
          {"L_d", to_json(gens.jacobian)},
          {"lambda", to_json(gens.hodge)},
          {"status", report.generators_descend ? "free generators" : "pre-quotient representatives"}}},
        {"group", to_json(report.group)},
        {"bad_locus", to_json(report.bad_locus)},
        {"verdicts", std::move(verdicts)},
    };
}

namespace {

std::string natural_combination(const DivisorClass& c)
{
    static const char* names[] = {"A", "B", "C"};
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (c.coords[i] == 0)
            continue;
        const bool negative = c.coords[i] < 0;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational magnitude = abs(c.coords[i]);
        if (magnitude != 1)
            out += is_integral(magnitude) ? to_string(magnitude) + "*" : "(" + to_string(magnitude) + ")";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

void write_matrix(std::ostringstream& os, const RationalMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "    [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << to_string(m(i, j));
        os << "]\n";
    }
}

} // namespace

std::string render_text(const chow::Verdict& v, int indent)
{
    std::ostringstream os;
    os << std::string(static_cast<std::size_t>(indent), ' ') << (v.passed ? "PASS " : "FAIL ") << v.lemma;
    for (const auto& [key, value] : v.params)
        os << " " << key << "=" << value;
    os << "\n";
    for (const auto& o : v.obstructions)
        if (v.parts.empty())
            os << std::string(static_cast<std::size_t>(indent + 2), ' ') << "obstruction: " << o << "\n";
    for (const auto& part : v.parts)
        os << render_text(part, indent + 2);
    return os.str();
}

std::string render_text(const PicardReport& report)
{
    std::ostringstream os;
    const auto& p = report.params;
    const auto& inv = report.invariants;
    os << "Hilbert scheme of curves d=" << p.d << " g=" << p.g << " r=" << p.r << "\n";
    os << "  regime:     " << regime_name(report.regime) << "\n";
    os << "  invariants: k_d=" << inv.k_d << " s_d=" << inv.s_d << " n=" << inv.n << " m=" << inv.m << "\n";
    os << "  Pic:        " << report.group.display() << "\n";
    os << "  generators" << (report.generators_descend ? "" : " (pre-quotient representatives)") << ":\n";
    os << "    R      = " << natural_combination(report.generator_classes.relative) << "\n";
    os << "    L_d    = " << natural_combination(report.generator_classes.jacobian) << "\n";
    os << "    lambda = " << natural_combination(report.generator_classes.hodge) << "\n";
    os << "  coefficient matrix (rows A, B, C over L_d, R, lambda):\n";
    write_matrix(os, report.coefficient_matrix);
    os << "  inverse:\n";
    write_matrix(os, report.inverse_matrix);
    const auto& bad = report.bad_locus;
    os << "  degenerate locus: codim " << bad.codim_deg;
    if (bad.deg_deg)
        os << ", degree " << *bad.deg_deg;
    os << "\n  non-embedding locus: codim "
       << (bad.codim_nemb.relation == CodimensionBound::Relation::AtLeast ? ">= " : "") << bad.codim_nemb.value;
    if (bad.deg_nemb)
        os << ", degree " << *bad.deg_nemb;
    os << "\n  secant degree " << bad.secant_degree << ", Grassmannian codim " << bad.grassmann_codim
       << ", overlap not modeled\n";
    os << "  verification:\n";
    for (const auto& v : report.verification)
        os << render_text(v, 4);
    return os.str();
}

} // namespace picard
