// Acceptance suite: one line per criterion, exact checks, wall-clock limits.

#include "picardcalc/chow_verify.hpp"
#include "picardcalc/cli.hpp"
#include "picardcalc/divisor_basis.hpp"
#include "picardcalc/moduli_report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace picard;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> check;
};

template <typename F>
void for_sweep(long g_lo, long g_hi, long span, F&& f)
{
    for (long g = g_lo; g <= g_hi; ++g)
        for (long d = 2 * g + 1; d <= 2 * g + span; ++d)
            f(Integer(d), Integer(g));
}

std::string point(const Integer& d, const Integer& g)
{
    return "(d=" + to_string(d) + ", g=" + to_string(g) + ")";
}

Outcome determinant_constant()
{
    Outcome o;
    long pairs = 0;
    for_sweep(4, 100, 300, [&](const Integer& d, const Integer& g) {
        ++pairs;
        if (det(coefficient_matrix(compute_invariants(d, g), d, g)) != -24)
            o.fail("det != -24 at " + point(d, g));
    });
    if (pairs != 97 * 300)
        o.fail("unexpected sweep size");
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs, det = -24";
    return o;
}

Outcome theorem_inversion()
{
    Outcome o;
    for_sweep(4, 100, 300, [&](const Integer& d, const Integer& g) {
        const Invariants inv = compute_invariants(d, g);
        const RationalMatrix m = coefficient_matrix(inv, d, g);
        const RationalMatrix inverse = invert(m);
        const GeneratorClasses gens = generator_classes(inv, d, g);
        const std::array<const DivisorClass*, 3> rows = {&gens.jacobian, &gens.relative, &gens.hodge};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (inverse(i, j) != rows[i]->coords[j])
                    o.fail("inverse mismatch at " + point(d, g));
        if (!is_integral(2 * make_rational(g - 1, inv.s_d)) || !is_integral(2 * make_rational(d, inv.s_d)))
            o.fail("half-integrality fails at " + point(d, g));
        if (!divides(g - 1, inv.n * d - inv.s_d))
            o.fail("(nd - s_d)/(g-1) not integral at " + point(d, g));
    });
    if (o.ok)
        o.detail = "closed forms = inverse rows; integrality holds";
    return o;
}

Outcome oracle_agreement()
{
    Outcome o;
    for_sweep(4, 100, 300, [&](const Integer& d, const Integer& g) {
        const Invariants inv = compute_invariants(d, g);
        const NormalizingPair scan = brute_force_nm(d, g, 2 * (g - 1));
        if (scan.n != inv.n || scan.m != inv.m)
            o.fail("(n, m) disagree at " + point(d, g));
        if (inv.k_d * inv.s_d != 2 * g - 2)
            o.fail("k_d s_d != 2g-2 at " + point(d, g));
    });
    if (o.ok)
        o.detail = "closed form = linear scan; k_d s_d = 2g-2";
    return o;
}

Outcome lemma_d()
{
    Outcome o;
    for (int d = 1; d <= 10; ++d) {
        const chow::Verdict v = chow::verify_lemma_D(d);
        if (!v.passed || !v.obstructions.empty())
            o.fail("lemma D fails at d=" + std::to_string(d));
        if (chow::lemma_D_distributed_terms(d) != static_cast<std::size_t>(d * d))
            o.fail("term count != d^2 at d=" + std::to_string(d));
    }
    if (o.ok)
        o.detail = "d = 1..10, d^2 distributed terms";
    return o;
}

Outcome pushforward_and_classes()
{
    Outcome o;
    long pairs = 0;
    for_sweep(4, 60, 120, [&](const Integer& d, const Integer& g) {
        ++pairs;
        const Invariants inv = compute_invariants(d, g);
        const chow::Verdict push = chow::verify_pushforward_lemma(d, g, inv);
        if (!push.passed || !push.obstructions.empty() || push.parts.size() != 3)
            o.fail("push-forward lemma fails at " + point(d, g));
        const chow::Verdict classes = chow::verify_classes_lemma(d, g, inv);
        if (!classes.passed || !classes.obstructions.empty())
            o.fail("classes lemma fails at " + point(d, g));
    });
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs, zero obstructions";
    return o;
}

Outcome boundary_structure()
{
    Outcome o;
    for_sweep(4, 40, 60, [&](const Integer& d, const Integer& g) {
        const AbelianGroupStructure r3 = cokernel(boundary_relations({d, g, 3}), 3);
        const AbelianGroupStructure rdg = cokernel(boundary_relations({d, g, d - g}), 3);
        if (r3.free_rank != 2 || r3.torsion != std::vector<Integer>{2 * (d - 1) * (d - 2) - 4 * g})
            o.fail("r=3 torsion mismatch at " + point(d, g));
        if (rdg.free_rank != 2 || rdg.torsion != std::vector<Integer>{d - g + 1})
            o.fail("r=d-g torsion mismatch at " + point(d, g));
    });
    const Params a{9, 4, 3};
    const Params b{9, 4, 5};
    const std::string sa = picard_structure(a, compute_invariants(a)).group.display();
    const std::string sb = picard_structure(b, compute_invariants(b)).group.display();
    if (sa != "Z^2 + Z/96")
        o.fail("(9,4,3) gives " + sa);
    if (sb != "Z^2 + Z/6")
        o.fail("(9,4,5) gives " + sb);
    if (o.ok)
        o.detail = "SNF torsion = closed forms; " + sa + ", " + sb;
    return o;
}

Outcome snf_correctness()
{
    Outcome o;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = entry(rng);
        const SmithForm snf = smith_normal_form(a);
        if (snf.U * a * snf.V != snf.S)
            o.fail("U A V != S at trial " + std::to_string(trial));
        if (abs(det(snf.U)) != 1 || abs(det(snf.V)) != 1)
            o.fail("non-unimodular transform at trial " + std::to_string(trial));
        for (std::size_t i = 0; i < snf.S.rows(); ++i)
            for (std::size_t j = 0; j < snf.S.cols(); ++j)
                if (i != j && snf.S(i, j) != 0)
                    o.fail("S not diagonal at trial " + std::to_string(trial));
        const auto factors = invariant_factors(snf);
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            if (!divides(factors[i], factors[i + 1]))
                o.fail("divisibility chain broken at trial " + std::to_string(trial));
        if (a.square() && det(a) != 0) {
            Integer product = 1;
            for (const auto& f : factors)
                product *= f;
            if (product != abs(det(a)))
                o.fail("product of invariant factors != |det| at trial " + std::to_string(trial));
        }
    }
    if (o.ok)
        o.detail = "500 random matrices";
    return o;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "picardcalc");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text)
{
    std::vector<json> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            rows.push_back(json::parse(line));
    return rows;
}

Outcome cli_contract()
{
    Outcome o;
    auto expect_code = [&](const CliRun& r, int code, const std::string& what) {
        if (r.code != code)
            o.fail(what + ": exit " + std::to_string(r.code) + ", expected " + std::to_string(code));
    };

    const CliRun r1 = cli_run({"report", "--d", "11", "--g", "5", "--r", "4", "--format", "json"});
    expect_code(r1, 0, "report 11 5 4");
    if (r1.code == 0) {
        const json j = json::parse(r1.out);
        if (j["group"]["display"] != "Z^3")
            o.fail("report 11 5 4: group is not Z^3");
        if (j.dump(2) + "\n" != r1.out)
            o.fail("report JSON round trip not byte identical");
    }
    const CliRun r2 = cli_run({"report", "--d", "9", "--g", "4", "--r", "3"});
    expect_code(r2, 0, "report 9 4 3");
    if (r2.out.find("Z^2 + Z/96") == std::string::npos)
        o.fail("report 9 4 3: group is not Z^2 + Z/96");
    const CliRun r3 = cli_run({"report", "--d", "8", "--g", "4", "--r", "3"});
    expect_code(r3, 2, "report 8 4 3");
    if (r3.err.find("d >= 2g+1 violated") == std::string::npos)
        o.fail("report 8 4 3: missing diagnostic");

    const CliRun v1 = cli_run({"verify", "--d", "9", "--g", "4", "--format", "json"});
    expect_code(v1, 0, "verify 9 4");
    if (v1.code == 0) {
        const json j = json::parse(v1.out);
        std::size_t passing = 0;
        for (const auto& v : j["verdicts"])
            passing += v["passed"] == true ? 1 : 0;
        if (j["verdicts"].size() != 7 || passing != 7)
            o.fail("verify 9 4: expected 7 passing verdicts");
        if (j.dump(2) + "\n" != v1.out)
            o.fail("verify JSON round trip not byte identical");
    }
    expect_code(cli_run({"verify", "--d", "11", "--g", "5", "--max-symmetric-d", "6"}), 0, "verify 11 5 6");
    expect_code(cli_run({"verify", "--d", "8", "--g", "4"}), 2, "verify 8 4");

    const CliRun s1 = cli_run({"sweep", "--g", "4..6", "--d-span", "10", "--format", "json"});
    expect_code(s1, 0, "sweep 4..6 10");
    const auto rows = lines(s1.out);
    if (rows.size() != 30)
        o.fail("sweep 4..6 10: expected 30 rows");
    for (const auto& row : rows)
        if (row["det"] != json{{"num", "-24"}, {"den", "1"}})
            o.fail("sweep 4..6 10: det != -24");
    const CliRun s2 = cli_run({"sweep", "--g", "4..4", "--d-span", "1", "--format", "json"});
    expect_code(s2, 0, "sweep 4..4 1");
    const auto single = lines(s2.out);
    if (single.size() != 1 || single[0]["d"] != 9 || single[0]["k_d"] != 1 || single[0]["s_d"] != 6
        || single[0]["n"] != 1)
        o.fail("sweep 4..4 1: wrong single row");
    const CliRun s3 = cli_run({"sweep", "--g", "5..4", "--d-span", "10", "--format", "json"});
    expect_code(s3, 0, "sweep empty");
    if (!lines(s3.out).empty())
        o.fail("sweep empty: rows emitted");

    expect_code(cli_run({"report", "--d"}), 64, "malformed flags");

    if (o.ok)
        o.detail = "9 example invocations + round trips";
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", "determinant constant", 5, determinant_constant},
        {"AC2", "generator closed forms = inverse", 10, theorem_inversion},
        {"AC3", "oracle agreement", 5, oracle_agreement},
        {"AC4", "diagonal lemma mechanized", 1, lemma_d},
        {"AC5", "push-forward and classes lemmas mechanized", 30, pushforward_and_classes},
        {"AC6", "boundary group structure", 5, boundary_structure},
        {"AC7", "Smith normal form correctness", 5, snf_correctness},
        {"AC8", "CLI contract", 60, cli_contract},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && seconds > c.limit_seconds)
            outcome.fail("too slow");
        failures += outcome.ok ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.limit_seconds);
        std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << timing
                  << "): " << outcome.detail << "\n";
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
