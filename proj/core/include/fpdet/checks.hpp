#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fpdet/field.hpp"
#include "fpdet/polyreduce.hpp"

namespace fpdet {

enum class CheckStatus { pass, fail, diagnostic };

std::string to_string(CheckStatus status);
CheckStatus status_from_string(const std::string& name);

/// One verification outcome. `check` is drawn from the closed registry
/// (thm_i, thm_ii, thm_iii, d11, bracket, recip, wsn, reduction, halfindex,
/// diag_f21, diag_f23, diag_f26, diag_f210, diag_f213, diag_sym43).
/// `diag_mismatch` is in-process state for strict-diagnostics exit handling
/// and is not serialized.
struct CheckRecord {
    std::string check;
    std::uint64_t p = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    CheckStatus status = CheckStatus::diagnostic;
    std::string notes;
    std::uint64_t ms = 0;
    bool diag_mismatch = false;
};

/// Hat-product reduction of a coefficient vector:
///   hat_k = prod of all same-parity a_j with j != k,
///   value = 4 * (sum of even hats) * (sum of odd hats)   (mod p).
struct HatReduction {
    Residue even_sum = 0;
    Residue odd_sum = 0;
    Residue value = 0;
};

HatReduction reduced_det_from_coeffs(const PrimeCtx& ctx, std::span<const Residue> coeffs);
HatReduction reduced_det_from_coeffs(const ReducedPoly& poly);

/// det(dminus) == 0 for the three determinant statements:
///   i  : form (2,2), p == 7 (mod 8)
///   ii : form (3,3), p == 2 (mod 3), p > 5
///   iii: form (3,1), p == 3,7 (mod 20)
/// A prime outside the stated class is a usage error (callers filter).
enum class TheoremCase { i, ii, iii };

CheckRecord verify_theorem(TheoremCase which, const PrimeCtx& ctx);

/// The standalone determinant identities:
///   d11    : legendre(det dfull(1,1)) == legendre(-2), p == 2 (mod 3)
///   bracket: det legz(c,d) == factor * det leg(c,d) mod p, (d/p) = +1, where
///            factor = (p-1)/2 if p does not divide c^2-4d, else (-2)^{-1}
///   recip  : det recipsum == legendre(2) mod p, p == 3 (mod 4)
///   wsn    : legendre(2 * det recipmix) == +1 and det != 0, p == 5 (mod 6)
enum class IntroIdentity { d11, bracket, recip, wsn };

CheckRecord verify_intro_identity(IntroIdentity which, const PrimeCtx& ctx,
                                  std::optional<QuadForm> form = std::nullopt);

/// det(dminus(p, form)) vs the hat-reduction value of the oracle coefficients.
/// Equal -> pass; unequal -> diagnostic with the mismatch recorded (the hat
/// formula's domain of validity beyond the verified cases is being mapped,
/// not assumed).
CheckRecord reduction_crosscheck(const PrimeCtx& ctx, QuadForm form);

/// half_index_probe as a record: lhs = u, rhs = v, status always diagnostic;
/// notes record which of the two vanishes.
CheckRecord half_index_check(const PrimeCtx& ctx);

/// coeff_diagnostics summarized as a record (check id "diag_<claim>",
/// lhs = mismatch count, rhs = 0, status always diagnostic).
CheckRecord diagnostics_check(const PrimeCtx& ctx, CoeffClaim claim,
                              std::optional<QuadForm> form = std::nullopt);

}  // namespace fpdet
