#ifndef PICARDCALC_CLI_HPP
#define PICARDCALC_CLI_HPP

#include "picardcalc/invariants.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace picard::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kDomainViolation = 2,
    kUsage = 64,
    kIoError = 66,
};

/// One (g, d) point of a sweep with its self-checks.
struct SweepRow {
    Integer g;
    Integer d;
    Invariants invariants;
    std::optional<NormalizingPair> oracle;
    Rational det;
    bool inverse_agrees = false;
    Integer torsion_r3;  // SNF torsion order at r = 3
    Integer torsion_rdg; // SNF torsion order at r = d - g
    bool ok = false;
    std::vector<std::string> failures;
};

SweepRow sweep_row(const Integer& d, const Integer& g);

/// Rows for g in [g_min, g_max], d in [2g+1, 2g+d_span], sorted by (g, d).
/// Evaluated on up to `threads` workers (0 = hardware concurrency).
std::vector<SweepRow> run_sweep(long g_min, long g_max, long d_span, unsigned threads = 0);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace picard::cli

#endif
