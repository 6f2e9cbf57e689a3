#pragma once

#include <cstdint>

#include "fpdet/field.hpp"

namespace fpdet {

/// Recurrence parameters: u_{n+1} = a*u_n - b*u_{n-1} (same for v),
/// with u_0 = 0, u_1 = 1 and v_0 = 2, v_1 = a.
struct LucasParams {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

struct LucasPair {
    Residue u = 0;
    Residue v = 0;
};

/// (u_n mod p, v_n mod p) by iterating the defining recurrence mod p.
LucasPair lucas_uv_mod(LucasParams params, std::uint64_t n, const PrimeCtx& ctx);

/// The two closed-form sequences evaluated entirely in mod-p arithmetic:
///   u22: u_k(-2,2) = (-4)^floor(k/4) * {0, 1, -2, 2}[k mod 4]
///   u33: u_k(-3,3) = (-27)^floor(k/6) * {0, 1, -3, 6, -9, 9}[k mod 6]
enum class ClosedFormVariant { u22, u33 };

Residue closed_form_u(ClosedFormVariant variant, std::uint64_t k, const PrimeCtx& ctx);

/// (u, v) of the (-3, 1) sequence at index (p+1)/2. The caller records which
/// of the two vanishes; this function asserts nothing about either.
LucasPair half_index_probe(const PrimeCtx& ctx);

}  // namespace fpdet
