#include "fpdet/lucas.hpp"

namespace fpdet {

LucasPair lucas_uv_mod(LucasParams params, std::uint64_t n, const PrimeCtx& ctx) {
    const Residue a = ctx.reduce(params.a);
    const Residue b = ctx.reduce(params.b);
    Residue u_prev = 0, u_cur = 1 % ctx.p();
    Residue v_prev = 2 % ctx.p(), v_cur = a;
    if (n == 0) return {u_prev, v_prev};
    for (std::uint64_t i = 1; i < n; ++i) {
        const Residue u_next = ctx.sub(ctx.mul(a, u_cur), ctx.mul(b, u_prev));
        const Residue v_next = ctx.sub(ctx.mul(a, v_cur), ctx.mul(b, v_prev));
        u_prev = u_cur;
        u_cur = u_next;
        v_prev = v_cur;
        v_cur = v_next;
    }
    return {u_cur, v_cur};
}

Residue closed_form_u(ClosedFormVariant variant, std::uint64_t k, const PrimeCtx& ctx) {
    // Evaluated mod p throughout: the sign bases overflow 64 bits near k ~ 128.
    static constexpr std::int64_t kTable22[4] = {0, 1, -2, 2};
    static constexpr std::int64_t kTable33[6] = {0, 1, -3, 6, -9, 9};

    const bool is22 = variant == ClosedFormVariant::u22;
    const std::uint64_t period = is22 ? 4 : 6;
    const Residue base = ctx.reduce(is22 ? -4 : -27);
    const std::int64_t entry = is22 ? kTable22[k % 4] : kTable33[k % 6];
    return ctx.mul(ctx.pow(base, k / period), ctx.reduce(entry));
}

LucasPair half_index_probe(const PrimeCtx& ctx) {
    return lucas_uv_mod({-3, 1}, (ctx.p() + 1) / 2, ctx);
}

}  // namespace fpdet
