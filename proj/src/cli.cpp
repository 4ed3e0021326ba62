#include "picardcalc/cli.hpp"

#include "picardcalc/report_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace picard::cli {

using nlohmann::json;

namespace {

constexpr int kDefaultMaxSymmetricD = 8;

Integer integral_torsion(const IntMatrix& relations)
{
    const AbelianGroupStructure group = cokernel(relations, 3);
    Integer order = 1;
    for (const auto& t : group.torsion)
        order *= t;
    return order;
}

json sweep_json(const SweepRow& row)
{
    return json{{"g", integer_json(row.g)},
                {"d", integer_json(row.d)},
                {"k_d", integer_json(row.invariants.k_d)},
                {"s_d", integer_json(row.invariants.s_d)},
                {"n", integer_json(row.invariants.n)},
                {"m", integer_json(row.invariants.m)},
                {"det", rational_json(row.det)},
                {"oracle_agrees", row.oracle && row.oracle->n == row.invariants.n && row.oracle->m == row.invariants.m},
                {"inverse_agrees", row.inverse_agrees},
                {"torsion_r3", integer_json(row.torsion_r3)},
                {"torsion_rdg", integer_json(row.torsion_rdg)},
                {"ok", row.ok},
                {"failures", row.failures}};
}

std::string sweep_text_header()
{
    std::ostringstream os;
    os << std::setw(5) << "g" << std::setw(7) << "d" << std::setw(6) << "k_d" << std::setw(6) << "s_d"
       << std::setw(6) << "n" << std::setw(8) << "m" << std::setw(6) << "det" << std::setw(12) << "tors(r=3)"
       << std::setw(11) << "tors(d-g)" << "  status";
    return os.str();
}

std::string sweep_text(const SweepRow& row)
{
    std::ostringstream os;
    os << std::setw(5) << row.g << std::setw(7) << row.d << std::setw(6) << row.invariants.k_d << std::setw(6)
       << row.invariants.s_d << std::setw(6) << row.invariants.n << std::setw(8) << row.invariants.m
       << std::setw(6) << to_string(row.det) << std::setw(12) << row.torsion_r3 << std::setw(11)
       << row.torsion_rdg << "  " << (row.ok ? "ok" : "FAIL");
    for (const auto& f : row.failures)
        os << " [" << f << "]";
    return os.str();
}

struct RangeSpec {
    long low = 0;
    long high = -1;
};

RangeSpec parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    RangeSpec range;
    if (dots == std::string::npos) {
        range.low = range.high = parse_integer(text).get_si();
    } else {
        range.low = parse_integer(text.substr(0, dots)).get_si();
        range.high = parse_integer(text.substr(dots + 2)).get_si();
    }
    return range;
}

unsigned threads_from_env()
{
    const char* env = std::getenv("PICARDCALC_SWEEP_THREADS");
    if (!env)
        return 0;
    try {
        const long n = parse_integer(env).get_si();
        return n > 0 ? static_cast<unsigned>(n) : 0;
    } catch (const std::invalid_argument&) {
        return 0;
    }
}

bool all_passed(const std::vector<chow::Verdict>& verdicts)
{
    for (const auto& v : verdicts)
        if (!v.passed || !v.obstructions.empty())
            return false;
    return true;
}

} // namespace

SweepRow sweep_row(const Integer& d, const Integer& g)
{
    SweepRow row;
    row.g = g;
    row.d = d;
    row.invariants = compute_invariants(d, g);
    try {
        row.oracle = brute_force_nm(d, g, 2 * (g - 1));
    } catch (const SearchExhausted& e) {
        row.failures.push_back(e.what());
    }
    if (row.oracle && (row.oracle->n != row.invariants.n || row.oracle->m != row.invariants.m))
        row.failures.push_back("oracle disagrees on (n, m)");
    if (row.invariants.k_d * row.invariants.s_d != 2 * g - 2)
        row.failures.push_back("k_d * s_d != 2g-2");

    const RationalMatrix matrix = coefficient_matrix(row.invariants, d, g);
    row.det = det(matrix);
    if (row.det != -24)
        row.failures.push_back("det != -24");

    const RationalMatrix inverse = invert(matrix);
    const GeneratorClasses gens = generator_classes(row.invariants, d, g);
    // Inverse rows are ordered (L_d, R, lambda).
    row.inverse_agrees = true;
    const std::array<const DivisorClass*, 3> by_row = {&gens.jacobian, &gens.relative, &gens.hodge};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            row.inverse_agrees = row.inverse_agrees && inverse(i, j) == by_row[i]->coords[j];
    if (!row.inverse_agrees)
        row.failures.push_back("closed-form generators differ from the inverse matrix");

    row.torsion_r3 = integral_torsion(boundary_relations({d, g, 3}));
    row.torsion_rdg = integral_torsion(boundary_relations({d, g, d - g}));
    if (row.torsion_r3 != 2 * (d - 1) * (d - 2) - 4 * g)
        row.failures.push_back("r=3 torsion mismatch");
    if (row.torsion_rdg != d - g + 1)
        row.failures.push_back("r=d-g torsion mismatch");

    row.ok = row.failures.empty();
    return row;
}

std::vector<SweepRow> run_sweep(long g_min, long g_max, long d_span, unsigned threads)
{
    std::vector<std::pair<long, long>> points; // (g, d)
    for (long g = g_min; g <= g_max; ++g)
        for (long d = 2 * g + 1; d <= 2 * g + d_span; ++d)
            points.emplace_back(g, d);

    std::vector<SweepRow> rows(points.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, points.size())));

    auto work = [&](std::size_t start) {
        for (std::size_t i = start; i < points.size(); i += threads)
            rows[i] = sweep_row(Integer(points[i].second), Integer(points[i].first));
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool)
        t.join();
    return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Picard groups of Hilbert schemes of curves: reports, lemma checks and sweeps", "picardcalc"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string d_text;
    std::string g_text;
    std::string r_text;
    int max_symmetric_d = kDefaultMaxSymmetricD;

    auto* report = app.add_subcommand("report", "Picard group, generators and bad-locus data at (d, g, r)");
    report->add_option("--d", d_text, "Curve degree")->required();
    report->add_option("--g", g_text, "Genus")->required();
    report->add_option("--r", r_text, "Ambient projective dimension")->required();
    add_format(report);

    auto* verify = app.add_subcommand("verify", "Mechanically check the intersection lemmas at (d, g)");
    verify->add_option("--d", d_text, "Curve degree")->required();
    verify->add_option("--g", g_text, "Genus")->required();
    verify->add_option("--max-symmetric-d", max_symmetric_d, "Largest degree for the diagonal lemma")
        ->capture_default_str();
    add_format(verify);

    std::string g_range;
    long d_span = 0;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Tabulate invariants and self-checks over a (g, d) range");
    sweep->add_option("--g", g_range, "Genus range A..B")->required();
    sweep->add_option("--d-span", d_span, "Degrees 2g+1 .. 2g+N")->required();
    sweep->add_option("--out", out_path, "Write rows to PATH instead of stdout");
    add_format(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Integer d;
    Integer g;
    Integer r;
    try {
        if (*report || *verify) {
            d = parse_integer(d_text);
            g = parse_integer(g_text);
        }
        if (*report)
            r = parse_integer(r_text);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (*report) {
        if (auto v = params_violation(d, g, r)) {
            err << "error: invalid parameters (d=" << d << ", g=" << g << ", r=" << r << "): " << *v << "\n";
            return kDomainViolation;
        }
        const Params p{d, g, r};
        const PicardReport rep = picard_structure(p, compute_invariants(p));
        if (format == "json")
            out << to_json(rep).dump(2) << "\n";
        else
            out << render_text(rep);
        return all_passed(rep.verification) ? kOk : kVerificationFailed;
    }

    if (*verify) {
        if (auto v = degree_genus_violation(d, g)) {
            err << "error: invalid parameters (d=" << d << ", g=" << g << "): " << *v << "\n";
            return kDomainViolation;
        }
        std::vector<chow::Verdict> verdicts;
        try {
            verdicts = chow::standard_suite(d, g, compute_invariants(d, g), max_symmetric_d);
        } catch (const DomainError& e) {
            err << "error: " << e.what() << "\n";
            return kDomainViolation;
        }
        const bool passed = all_passed(verdicts);
        if (format == "json") {
            json list = json::array();
            for (const auto& v : verdicts)
                list.push_back(to_json(v));
            out << json{{"params",
                         {{"d", integer_json(d)}, {"g", integer_json(g)}, {"max_symmetric_d", max_symmetric_d}}},
                        {"passed", passed},
                        {"verdicts", std::move(list)}}
                       .dump(2)
                << "\n";
        } else {
            for (const auto& v : verdicts)
                out << render_text(v);
            out << (passed ? "all " : "NOT all ") << verdicts.size() << " verdicts passed\n";
        }
        return passed ? kOk : kVerificationFailed;
    }

    // sweep
    RangeSpec range;
    try {
        range = parse_range(g_range);
    } catch (const std::invalid_argument& e) {
        err << "error: bad --g range: " << e.what() << "\n";
        return kUsage;
    }
    if (d_span < 0) {
        err << "error: --d-span must be >= 0\n";
        return kUsage;
    }
    if (range.low <= range.high && range.low < 4) {
        err << "error: g >= 4 violated (g starts at " << range.low << ")\n";
        return kDomainViolation;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return kIoError;
        }
        sink = &file;
    }

    const std::vector<SweepRow> rows = run_sweep(range.low, range.high, d_span, threads_from_env());
    bool ok = true;
    if (format == "text")
        *sink << sweep_text_header() << "\n";
    for (const auto& row : rows) {
        ok = ok && row.ok;
        if (format == "json")
            *sink << sweep_json(row).dump() << "\n";
        else
            *sink << sweep_text(row) << "\n";
    }
    sink->flush();
    if (!*sink) {
        err << "error: write failed\n";
        return kIoError;
    }
    if (format == "text")
        out << rows.size() << " rows, " << (ok ? "all checks passed" : "FAILURES present") << "\n";
    return ok ? kOk : kVerificationFailed;
}

} // namespace picard::cli
