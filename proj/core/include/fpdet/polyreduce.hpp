#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpdet/field.hpp"

namespace fpdet {

/// The quadratic form i^2 + c*i*j + d*j^2 (reduced mod p at use sites).
struct QuadForm {
    std::int64_t c = 0;
    std::int64_t d = 0;
    bool operator==(const QuadForm&) const = default;
};

/// Coefficients of the unique polynomial of degree <= p-2 agreeing with
/// (T^2 + cT + d)^(p-2) on {1, ..., p-1}. coeffs has length exactly p-1,
/// indexed k = 0..p-2.
struct ReducedPoly {
    PrimeCtx ctx;
    QuadForm form;
    std::vector<Residue> coeffs;
};

/// Interpolation oracle: a_k = -sum_{t=1}^{p-1} g(t) * t^((p-1-k) mod (p-1))
/// with g(t) = (t^2 + ct + d)^(p-2) mod p. Valid because the power sum
/// sum_t t^m over nonzero residues is -1 when (p-1) | m and 0 otherwise.
ReducedPoly reduce_power_form(const PrimeCtx& ctx, QuadForm form);

/// Evaluate a length-(p-1) coefficient vector at t (Horner), mod p.
Residue eval_poly(const PrimeCtx& ctx, const std::vector<Residue>& coeffs, Residue t);

/// Closed-form candidate coefficient vectors, evaluated verbatim:
///   f21 (form (2,2)): a_k = 4^{-1} * ((k+1)u'_{p-k+1} - 2(k-1)u'_{p-k-1}
///                                     + 2^{-k}((2k+4)u'_k - k u'_{k+2}))
///   f26 (form (3,3)): b_k = 3^{-1} * ((k+1)w_{p-k+1} - 3(k-1)w_{p-k-1}
///                                     + 3^{-k}((3k+6)w_k - k w_{k+2}))
/// where u' = closed_form_u(u22), w = closed_form_u(u33). No correction is
/// applied; the vectors are hypotheses measured against the oracle.
enum class CoeffFormula { f21, f26 };

std::vector<Residue> formula_coeffs(CoeffFormula variant, const PrimeCtx& ctx);

/// Coefficient-level claims compared against the interpolation oracle.
enum class CoeffClaim { f21, f23, f26, f210, f213, sym43 };

std::string to_string(CoeffClaim claim);
CoeffClaim claim_from_string(const std::string& name);
/// The form each claim is stated for ((2,2), (3,3) or (3,1)).
QuadForm claim_default_form(CoeffClaim claim);

struct DiagnosticEntry {
    std::uint64_t index = 0;
    Residue oracle = 0;
    Residue claimed = 0;
    bool match = false;
};

/// One claim's per-index comparison for one (p, form). Diagnostics report;
/// they never raise on a mismatch.
struct DiagnosticRecord {
    PrimeCtx ctx;
    QuadForm form;
    CoeffClaim claim;
    std::vector<DiagnosticEntry> entries;
    std::size_t match_count = 0;
    std::size_t mismatch_count = 0;
};

/// Index scope per claim:
///   f21/f26 : every k in [0, p-2], claimed = formula value
///   f23     : k == 1 (mod 4), claimed = 0
///   f210    : k == 2 (mod 6), claimed = 0
///   f213    : k in {(p-3)/2, (p+1)/2}, claimed = 0
///   sym43   : k in [1, p-2], claimed = oracle[p-1-k]
/// A claim paired with the wrong form is a usage error (sym43 accepts any).
std::vector<DiagnosticRecord> coeff_diagnostics(const PrimeCtx& ctx, QuadForm form,
                                                const std::vector<CoeffClaim>& claims);

}  // namespace fpdet
