#include "fpdet/polyreduce.hpp"

#include <utility>

#include "fpdet/lucas.hpp"

namespace fpdet {

ReducedPoly reduce_power_form(const PrimeCtx& ctx, QuadForm form) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t m = p - 1;
    const Residue c = ctx.reduce(form.c);
    const Residue d = ctx.reduce(form.d);

    std::vector<Residue> g(p, 0);     // g[t] = (t^2 + ct + d)^(p-2)
    std::vector<Residue> tinv(p, 0);  // t^{-1}
    for (std::uint64_t t = 1; t < p; ++t) {
        const Residue q = ctx.add(ctx.add(ctx.mul(t, t), ctx.mul(c, t)), d);
        g[t] = ctx.pow(q, p - 2);
        tinv[t] = ctx.inv(t);
    }

    // a_k = -sum_t g(t) t^{-k}; cur[t] steps through the inverse powers so no
    // per-term exponentiation is needed.
    std::vector<Residue> coeffs(m, 0);
    std::vector<Residue> cur(p, 1);
    for (std::uint64_t k = 0; k < m; ++k) {
        Residue acc = 0;
        for (std::uint64_t t = 1; t < p; ++t) acc = ctx.add(acc, ctx.mul(g[t], cur[t]));
        coeffs[k] = ctx.neg(acc);
        if (k + 1 < m) {
            for (std::uint64_t t = 1; t < p; ++t) cur[t] = ctx.mul(cur[t], tinv[t]);
        }
    }
    return ReducedPoly{ctx, form, std::move(coeffs)};
}

Residue eval_poly(const PrimeCtx& ctx, const std::vector<Residue>& coeffs, Residue t) {
    Residue acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = ctx.add(ctx.mul(acc, t), *it);
    return acc;
}

std::vector<Residue> formula_coeffs(CoeffFormula variant, const PrimeCtx& ctx) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t m = p - 1;
    const bool is21 = variant == CoeffFormula::f21;
    const auto variant_u = is21 ? ClosedFormVariant::u22 : ClosedFormVariant::u33;
    const std::uint64_t s = is21 ? 2 : 3;  // 2^{-k} resp. 3^{-k} ladder base

    const Residue scale_inv = ctx.inv(is21 ? ctx.reduce(4) : ctx.reduce(3));
    const Residue step_inv = ctx.inv(ctx.reduce(static_cast<std::int64_t>(s)));
    const Residue lead = ctx.reduce(static_cast<std::int64_t>(s));  // 2(k-1) resp. 3(k-1)

    std::vector<Residue> out(m, 0);
    Residue ladder = 1;  // s^{-k}
    for (std::uint64_t k = 0; k < m; ++k) {
        const std::int64_t ks = static_cast<std::int64_t>(k);
        const Residue t1 = ctx.mul(ctx.reduce(ks + 1), closed_form_u(variant_u, p - k + 1, ctx));
        const Residue t2 = ctx.mul(ctx.mul(lead, ctx.reduce(ks - 1)),
                                   closed_form_u(variant_u, p - k - 1, ctx));
        const Residue inner =
            ctx.sub(ctx.mul(ctx.reduce(static_cast<std::int64_t>(s) * ks + static_cast<std::int64_t>(s) * 2),
                            closed_form_u(variant_u, k, ctx)),
                    ctx.mul(ctx.reduce(ks), closed_form_u(variant_u, k + 2, ctx)));
        const Residue rhs = ctx.add(ctx.sub(t1, t2), ctx.mul(ladder, inner));
        out[k] = ctx.mul(rhs, scale_inv);
        ladder = ctx.mul(ladder, step_inv);
    }
    return out;
}

std::string to_string(CoeffClaim claim) {
    switch (claim) {
        case CoeffClaim::f21: return "f21";
        case CoeffClaim::f23: return "f23";
        case CoeffClaim::f26: return "f26";
        case CoeffClaim::f210: return "f210";
        case CoeffClaim::f213: return "f213";
        case CoeffClaim::sym43: return "sym43";
    }
    throw UsageError("unknown claim");
}

CoeffClaim claim_from_string(const std::string& name) {
    if (name == "f21") return CoeffClaim::f21;
    if (name == "f23") return CoeffClaim::f23;
    if (name == "f26") return CoeffClaim::f26;
    if (name == "f210") return CoeffClaim::f210;
    if (name == "f213") return CoeffClaim::f213;
    if (name == "sym43") return CoeffClaim::sym43;
    throw UsageError("unknown claim: " + name);
}

QuadForm claim_default_form(CoeffClaim claim) {
    switch (claim) {
        case CoeffClaim::f21:
        case CoeffClaim::f23: return QuadForm{2, 2};
        case CoeffClaim::f26:
        case CoeffClaim::f210: return QuadForm{3, 3};
        case CoeffClaim::f213:
        case CoeffClaim::sym43: return QuadForm{3, 1};
    }
    throw UsageError("unknown claim");
}

namespace {

void require_form(const PrimeCtx& ctx, CoeffClaim claim, QuadForm got, QuadForm want) {
    if (ctx.reduce(got.c) != ctx.reduce(want.c) || ctx.reduce(got.d) != ctx.reduce(want.d))
        throw UsageError("claim " + to_string(claim) + " is stated for form (" +
                         std::to_string(want.c) + "," + std::to_string(want.d) + ")");
}

void push_entry(DiagnosticRecord& rec, std::uint64_t index, Residue oracle, Residue claimed) {
    const bool match = oracle == claimed;
    rec.entries.push_back({index, oracle, claimed, match});
    if (match)
        ++rec.match_count;
    else
        ++rec.mismatch_count;
}

}  // namespace

std::vector<DiagnosticRecord> coeff_diagnostics(const PrimeCtx& ctx, QuadForm form,
                                                const std::vector<CoeffClaim>& claims) {
    const std::uint64_t p = ctx.p();
    const std::vector<Residue> oracle = reduce_power_form(ctx, form).coeffs;

    std::vector<DiagnosticRecord> out;
    for (CoeffClaim claim : claims) {
        if (claim != CoeffClaim::sym43) require_form(ctx, claim, form, claim_default_form(claim));
        DiagnosticRecord rec{ctx, form, claim, {}, 0, 0};
        switch (claim) {
            case CoeffClaim::f21:
            case CoeffClaim::f26: {
                const auto formula = formula_coeffs(
                    claim == CoeffClaim::f21 ? CoeffFormula::f21 : CoeffFormula::f26, ctx);
                for (std::uint64_t k = 0; k + 1 < p; ++k)
                    push_entry(rec, k, oracle[k], formula[k]);
                break;
            }
            case CoeffClaim::f23:
                for (std::uint64_t k = 1; k + 1 < p; k += 4) push_entry(rec, k, oracle[k], 0);
                break;
            case CoeffClaim::f210:
                for (std::uint64_t k = 2; k + 1 < p; k += 6) push_entry(rec, k, oracle[k], 0);
                break;
            case CoeffClaim::f213:
                push_entry(rec, (p - 3) / 2, oracle[(p - 3) / 2], 0);
                push_entry(rec, (p + 1) / 2, oracle[(p + 1) / 2], 0);
                break;
            case CoeffClaim::sym43:
                for (std::uint64_t k = 1; k + 1 < p; ++k)
                    push_entry(rec, k, oracle[k], oracle[p - 1 - k]);
                break;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace fpdet
