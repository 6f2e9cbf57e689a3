#include <doctest.h>

#include <random>

#include "fpdet/polyreduce.hpp"
#include "test_helpers.hpp"

using namespace fpdet;
using namespace fpdet::testing;

TEST_CASE("oracle: hand-checked coefficient vectors at p = 7") {
    const PrimeCtx ctx(7);

    const ReducedPoly a = reduce_power_form(ctx, {2, 2});
    CHECK(a.coeffs == std::vector<Residue>{0, 5, 2, 6, 0, 4});
    CHECK(eval_poly(ctx, a.coeffs, 1) == 3);  // g(1) = 5^5 mod 7

    const ReducedPoly b = reduce_power_form(ctx, {3, 1});
    CHECK(b.coeffs == std::vector<Residue>{0, 2, 1, 2, 0, 5});
    CHECK(b.coeffs[0] == 0);
    CHECK(b.coeffs[4] == 0);
}

TEST_CASE("oracle: c=d=0 folds to the single exponent p-3") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 31ull}) {
        const PrimeCtx ctx(p);
        const ReducedPoly poly = reduce_power_form(ctx, {0, 0});
        for (std::uint64_t k = 0; k + 1 < p; ++k)
            CHECK(poly.coeffs[k] == (k == p - 3 ? 1u : 0u));
    }
}

TEST_CASE("oracle: pointwise agreement with the power form") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t p : {5ull, 7ull, 13ull, 31ull, 101ull}) {
        const PrimeCtx ctx(p);
        for (int trial = 0; trial < 5; ++trial) {
            const QuadForm form{static_cast<std::int64_t>(rng() % p),
                                static_cast<std::int64_t>(rng() % p)};
            const ReducedPoly poly = reduce_power_form(ctx, form);
            REQUIRE(poly.coeffs.size() == p - 1);
            const auto g = power_form_values(ctx, form);
            for (std::uint64_t t = 1; t < p; ++t)
                CHECK(eval_poly(ctx, poly.coeffs, t) == g[t]);
        }
    }
}

TEST_CASE("oracle equals Lagrange interpolation and exponent folding for p <= 31") {
    std::mt19937_64 rng(99);
    for (auto& ctx : primes_in_classes(5, 31, {0}, 1)) {
        const std::uint64_t p = ctx.p();
        std::vector<QuadForm> forms = {{2, 2}, {3, 3}, {3, 1}, {0, 0},
                                       {0, static_cast<std::int64_t>(p) - 1}};
        for (int trial = 0; trial < 3; ++trial)
            forms.push_back({static_cast<std::int64_t>(rng() % p),
                             static_cast<std::int64_t>(rng() % p)});
        for (const QuadForm& form : forms) {
            const ReducedPoly poly = reduce_power_form(ctx, form);
            CHECK(poly.coeffs == lagrange_interpolate(ctx, power_form_values(ctx, form)));
            CHECK(poly.coeffs == folded_expansion(ctx, form));
        }
    }
}

TEST_CASE("formula vectors: pinned values") {
    CHECK(formula_coeffs(CoeffFormula::f21, PrimeCtx(7)) ==
          std::vector<Residue>{4, 0, 5, 2, 6, 0});
    const auto f26 = formula_coeffs(CoeffFormula::f26, PrimeCtx(11));
    CHECK(f26 == std::vector<Residue>{1, 7, 0, 5, 6, 7, 2, 3, 0, 10});
    CHECK(f26[0] == 1);  // (w_12 + 3 w_10 + 6 w_0) / 3 = 729/3 mod 11
}

TEST_CASE("diagnostics: hand-checked instances at p = 7") {
    const PrimeCtx ctx(7);

    const auto d213 = coeff_diagnostics(ctx, {3, 1}, {CoeffClaim::f213});
    REQUIRE(d213.size() == 1);
    REQUIRE(d213[0].entries.size() == 2);
    CHECK(d213[0].entries[0].index == 2);
    CHECK(d213[0].entries[0].oracle == 1);
    CHECK(d213[0].entries[0].claimed == 0);
    CHECK_FALSE(d213[0].entries[0].match);
    CHECK(d213[0].entries[1].index == 4);
    CHECK(d213[0].entries[1].oracle == 0);
    CHECK(d213[0].entries[1].match);
    CHECK(d213[0].mismatch_count == 1);

    const auto d23 = coeff_diagnostics(ctx, {2, 2}, {CoeffClaim::f23});
    REQUIRE(d23.size() == 1);
    REQUIRE(d23[0].entries.size() == 2);  // k = 1, 5
    CHECK(d23[0].entries[0].index == 1);
    CHECK(d23[0].entries[0].oracle == 5);
    CHECK_FALSE(d23[0].entries[0].match);

    const auto dsym = coeff_diagnostics(ctx, {3, 1}, {CoeffClaim::sym43});
    REQUIRE(dsym[0].entries.size() == 5);  // k = 1..5
    CHECK(dsym[0].match_count == 1);       // only the middle index k = 3
    CHECK(dsym[0].mismatch_count == 4);
}

TEST_CASE("diagnostics: every in-scope index yields exactly one flag") {
    const PrimeCtx ctx(23);
    const auto recs =
        coeff_diagnostics(ctx, {2, 2}, {CoeffClaim::f21, CoeffClaim::f23});
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].entries.size() == 22);  // f21: every k in [0, p-2]
    CHECK(recs[1].entries.size() == 6);   // f23: k = 1, 5, 9, 13, 17, 21
    for (const auto& rec : recs) {
        CHECK(rec.match_count + rec.mismatch_count == rec.entries.size());
        for (const auto& e : rec.entries) CHECK(e.index <= ctx.p() - 2);
    }
}

TEST_CASE("diagnostics: claim/form pairing") {
    const PrimeCtx ctx(7);
    CHECK_THROWS_AS(coeff_diagnostics(ctx, {3, 1}, {CoeffClaim::f23}), UsageError);
    CHECK_THROWS_AS(coeff_diagnostics(ctx, {2, 2}, {CoeffClaim::f213}), UsageError);
    CHECK_THROWS_AS(coeff_diagnostics(ctx, {3, 1}, {CoeffClaim::f26}), UsageError);
    CHECK_NOTHROW(coeff_diagnostics(ctx, {2, 2}, {CoeffClaim::sym43}));  // form-agnostic
    // forms compare mod p: (2+7, 2-7) is still (2,2)
    CHECK_NOTHROW(coeff_diagnostics(ctx, {9, -5}, {CoeffClaim::f23}));
}

TEST_CASE("claim name round trips") {
    for (CoeffClaim claim : {CoeffClaim::f21, CoeffClaim::f23, CoeffClaim::f26,
                             CoeffClaim::f210, CoeffClaim::f213, CoeffClaim::sym43})
        CHECK(claim_from_string(to_string(claim)) == claim);
    CHECK_THROWS_AS(claim_from_string("f99"), UsageError);
}
