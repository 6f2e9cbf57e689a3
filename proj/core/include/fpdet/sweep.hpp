#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpdet/checks.hpp"
#include "fpdet/polyreduce.hpp"

namespace fpdet {

/// An arithmetic-progression filter: p mod modulus in residues.
struct ResidueClass {
    std::vector<std::int64_t> residues;
    std::uint64_t modulus = 1;
};

/// Parse "r1,r2 mod m" (e.g. "3,7 mod 20"). Usage error on malformed input.
ResidueClass parse_residue_class(const std::string& text);

struct SweepConfig {
    std::vector<std::string> checks;
    std::uint64_t pmin = 5;
    std::uint64_t pmax = 503;
    /// Residue-class override; nullopt uses each check's default class.
    std::optional<ResidueClass> klass;
    /// Explicit (c,d) for the form-parametrized checks (bracket, reduction).
    std::optional<QuadForm> form;
    unsigned jobs = 1;
    bool strict_diagnostics = false;
};

struct SweepSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t diagnostics = 0;
    /// Diagnostic records whose comparison found a mismatch; these count as
    /// failures only under the strict-diagnostics flag.
    std::size_t diag_mismatches = 0;
};

struct SweepResult {
    std::vector<CheckRecord> records;  // sorted by (check, p, c, d)
    SweepSummary summary;
};

const std::vector<std::string>& registered_checks();
bool is_registered_check(const std::string& check);

/// The residue class a check sweeps by default (e.g. thm_i -> "7 mod 8").
ResidueClass default_class_for(const std::string& check);

/// Run every requested check over every qualifying prime in [pmin, pmax].
/// Output is deterministic and independent of the worker count.
SweepResult run_sweep(const SweepConfig& config);

/// Exit-code contract: 0 all asserting checks pass, 1 any failed (or, under
/// strict, any mismatched diagnostic). Usage errors are 2 and I/O errors 3,
/// raised as exceptions by the operations themselves.
int exit_code_for(const SweepSummary& summary, bool strict_diagnostics);

}  // namespace fpdet
