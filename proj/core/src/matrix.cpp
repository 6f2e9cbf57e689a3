#include "fpdet/matrix.hpp"

#include <ostream>
#include <utility>

namespace fpdet {

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::dminus: return "dminus";
        case MatrixKind::dfull: return "dfull";
        case MatrixKind::leg: return "leg";
        case MatrixKind::legz: return "legz";
        case MatrixKind::recipsum: return "recipsum";
        case MatrixKind::recipmix: return "recipmix";
        case MatrixKind::kernelP: return "kernelP";
    }
    throw UsageError("unknown matrix kind");
}

MatrixKind matrix_kind_from_string(const std::string& name) {
    if (name == "dminus") return MatrixKind::dminus;
    if (name == "dfull") return MatrixKind::dfull;
    if (name == "leg") return MatrixKind::leg;
    if (name == "legz") return MatrixKind::legz;
    if (name == "recipsum") return MatrixKind::recipsum;
    if (name == "recipmix") return MatrixKind::recipmix;
    if (name == "kernelP") return MatrixKind::kernelP;
    throw UsageError("unknown matrix kind: " + name);
}

namespace {

Residue quad_value(const PrimeCtx& ctx, Residue c, Residue d, std::uint64_t i, std::uint64_t j) {
    const Residue ii = ctx.mul(i % ctx.p(), i % ctx.p());
    const Residue ij = ctx.mul(i % ctx.p(), j % ctx.p());
    const Residue jj = ctx.mul(j % ctx.p(), j % ctx.p());
    return ctx.add(ctx.add(ii, ctx.mul(c, ij)), ctx.mul(d, jj));
}

// Entry (i^2+cij+dj^2)^(p-2) over [lo, hi]^2, with the p-2 powers memoized per
// distinct base (at most p-1 distinct bases per matrix).
FpMatrix build_power_matrix(MatrixKind kind, const PrimeCtx& ctx, QuadForm form,
                            std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t p = ctx.p();
    const Residue c = ctx.reduce(form.c);
    const Residue d = ctx.reduce(form.d);
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);

    std::vector<Residue> memo(p, p);  // p = not yet computed
    FpMatrix m{ctx, n, kind, form, std::vector<Residue>(n * n, 0)};
    for (std::uint64_t i = lo; i <= hi; ++i) {
        for (std::uint64_t j = lo; j <= hi; ++j) {
            const Residue q = quad_value(ctx, c, d, i, j);
            if (memo[q] == p) memo[q] = ctx.pow(q, p - 2);
            m.at(i - lo, j - lo) = memo[q];
        }
    }
    return m;
}

FpMatrix build_legendre_matrix(MatrixKind kind, const PrimeCtx& ctx, QuadForm form,
                               std::uint64_t lo) {
    const std::uint64_t p = ctx.p();
    const Residue c = ctx.reduce(form.c);
    const Residue d = ctx.reduce(form.d);
    const std::size_t n = static_cast<std::size_t>(p - 1 - lo + 1);

    FpMatrix m{ctx, n, kind, form, std::vector<Residue>(n * n, 0)};
    for (std::uint64_t i = lo; i < p; ++i) {
        for (std::uint64_t j = lo; j < p; ++j) {
            const Residue q = quad_value(ctx, c, d, i, j);
            const int sym = q == 0 ? 0 : (ctx.pow(q, (p - 1) / 2) == 1 ? 1 : -1);
            m.at(i - lo, j - lo) = ctx.reduce(sym);
        }
    }
    return m;
}

FpMatrix build_recip_matrix(MatrixKind kind, const PrimeCtx& ctx, std::uint64_t hi,
                            QuadForm form) {
    const Residue c = ctx.reduce(form.c);
    const Residue d = ctx.reduce(form.d);
    const std::size_t n = static_cast<std::size_t>(hi);

    FpMatrix m{ctx, n, kind, form, std::vector<Residue>(n * n, 0)};
    for (std::uint64_t i = 1; i <= hi; ++i) {
        for (std::uint64_t j = 1; j <= hi; ++j) {
            const Residue q = quad_value(ctx, c, d, i, j);
            if (q == 0)
                throw ZeroDenominatorError(to_string(kind) + ": denominator vanishes at (" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           ") mod " + std::to_string(ctx.p()));
            m.at(i - 1, j - 1) = ctx.inv(q);
        }
    }
    return m;
}

}  // namespace

FpMatrix build_matrix(MatrixKind kind, const PrimeCtx& ctx, QuadForm form) {
    const std::uint64_t p = ctx.p();
    switch (kind) {
        case MatrixKind::dminus:
            if (p < 7) throw UsageError("dminus requires p >= 7");
            return build_power_matrix(kind, ctx, form, 2, p - 2);
        case MatrixKind::dfull:
            return build_power_matrix(kind, ctx, form, 1, p - 1);
        case MatrixKind::leg:
            return build_legendre_matrix(kind, ctx, form, 1);
        case MatrixKind::legz:
            return build_legendre_matrix(kind, ctx, form, 0);
        case MatrixKind::recipsum:
            return build_recip_matrix(kind, ctx, (p - 1) / 2, QuadForm{0, 1});
        case MatrixKind::recipmix:
            return build_recip_matrix(kind, ctx, p - 1, QuadForm{-1, 1});
        case MatrixKind::kernelP:
            throw UsageError("kernelP is built from a ReducedPoly; use build_kernel_matrix");
    }
    throw UsageError("unknown matrix kind");
}

FpMatrix build_kernel_matrix(const ReducedPoly& poly) {
    const PrimeCtx& ctx = poly.ctx;
    const std::uint64_t p = ctx.p();
    if (p < 7) throw UsageError("kernelP requires p >= 7");

    // P at every nonzero residue once; entries are then table lookups.
    std::vector<Residue> values(p, 0);
    for (std::uint64_t t = 1; t < p; ++t) values[t] = eval_poly(ctx, poly.coeffs, t);

    const std::size_t n = static_cast<std::size_t>(p - 3);
    FpMatrix m{ctx, n, MatrixKind::kernelP, poly.form, std::vector<Residue>(n * n, 0)};
    for (std::uint64_t j = 2; j <= p - 2; ++j) {
        const Residue jinv = ctx.inv(j);
        for (std::uint64_t i = 2; i <= p - 2; ++i)
            m.at(i - 2, j - 2) = values[ctx.mul(i, jinv)];
    }
    return m;
}

Residue det_mod(const PrimeCtx& ctx, std::size_t n, std::vector<Residue> a) {
    if (n == 0) throw UsageError("det_mod: dimension 0");
    const std::uint64_t p = ctx.p();
    Residue det = 1;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            negate = !negate;
        }
        const Residue pivot = a[col * n + col];
        det = ctx.mul(det, pivot);
        const Residue pivot_inv = ctx.inv(pivot);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Residue f = ctx.mul(a[r * n + col], pivot_inv);
            if (f == 0) continue;
            const std::uint64_t fneg = p - f;
            const Residue* src = &a[col * n];
            Residue* dst = &a[r * n];
            // fneg*src[j] < 2^40 for p <= 2^20, so the sum fits a u64.
            for (std::size_t j = col; j < n; ++j) dst[j] = (dst[j] + fneg * src[j]) % p;
        }
    }
    return negate ? ctx.neg(det) : det;
}

Residue det_mod(const FpMatrix& m) { return det_mod(m.ctx, m.n, m.entries); }

void dump_matrix(const FpMatrix& m, std::ostream& os) {
    os << m.ctx.p() << ' ' << m.n << ' ' << to_string(m.kind) << ' ' << m.form.c << ' '
       << m.form.d << '\n';
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            if (j != 0) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
}

}  // namespace fpdet
