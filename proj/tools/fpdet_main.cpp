// fpdet — verification sweeps for determinant congruence families over F_p.
//
// Subcommands: verify (sweep checks into jsonl/csv records), det (one
// determinant), poly (reduced-polynomial coefficients), lucas (sequence
// values), diag (per-index coefficient diagnostics), probe (half-index Lucas
// probe).
//
// Exit codes: 0 all asserting checks pass; 1 any asserting check failed
// (diagnostics count only under --strict-diagnostics); 2 usage error;
// 3 internal or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fpdet/checks.hpp"
#include "fpdet/lucas.hpp"
#include "fpdet/matrix.hpp"
#include "fpdet/records.hpp"
#include "fpdet/sweep.hpp"

namespace {

using namespace fpdet;

constexpr std::uint64_t kWarnCeiling = 2003;  // O(p^3) elimination above this

struct OutputSink {
    std::ostream* os = nullptr;
    std::unique_ptr<std::ofstream> file;
};

OutputSink open_sink(const std::string& path) {
    OutputSink sink;
    if (path == "-") {
        sink.os = &std::cout;
        return sink;
    }
    sink.file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*sink.file) throw IoError("cannot open output file: " + path);
    sink.os = sink.file.get();
    return sink;
}

unsigned effective_jobs(unsigned flag_value) {
    if (const char* env = std::getenv("FPDET_JOBS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("FPDET_JOBS is not a positive integer: ") + env);
        }
    }
    return flag_value;
}

std::optional<QuadForm> form_from_flags(const std::optional<std::int64_t>& c,
                                        const std::optional<std::int64_t>& d) {
    if (!c && !d) return std::nullopt;
    if (!c || !d) throw UsageError("--c and --d must be given together");
    return QuadForm{*c, *d};
}

int cmd_verify(const std::vector<std::string>& checks, std::uint64_t pmin, std::uint64_t pmax,
               const std::string& klass, std::optional<std::int64_t> c,
               std::optional<std::int64_t> d, unsigned jobs, const std::string& out,
               const std::string& format, bool strict) {
    SweepConfig cfg;
    cfg.checks = checks;
    cfg.pmin = pmin;
    cfg.pmax = pmax;
    if (!klass.empty()) cfg.klass = parse_residue_class(klass);
    cfg.form = form_from_flags(c, d);
    cfg.jobs = effective_jobs(jobs);
    cfg.strict_diagnostics = strict;

    if (pmax > kWarnCeiling)
        std::cerr << "warning: pmax=" << pmax << " exceeds " << kWarnCeiling
                  << "; determinant cost grows as p^3\n";

    const SweepResult result = run_sweep(cfg);
    OutputSink sink = open_sink(out);
    write_records(result.records, record_format_from_string(format), *sink.os);

    std::cerr << "summary: pass=" << result.summary.passed
              << " fail=" << result.summary.failed
              << " diagnostic=" << result.summary.diagnostics
              << " (records=" << result.records.size() << ")\n";
    return exit_code_for(result.summary, strict);
}

int cmd_det(std::uint64_t p, const std::string& kind_name, std::int64_t c, std::int64_t d,
            const std::string& dump) {
    const PrimeCtx ctx(p);
    const MatrixKind kind = matrix_kind_from_string(kind_name);
    const FpMatrix m = kind == MatrixKind::kernelP
                           ? build_kernel_matrix(reduce_power_form(ctx, {c, d}))
                           : build_matrix(kind, ctx, {c, d});
    if (!dump.empty()) {
        OutputSink sink = open_sink(dump);
        dump_matrix(m, *sink.os);
        if (!*sink.os) throw IoError("cannot write matrix dump: " + dump);
    }
    std::cout << det_mod(m) << '\n';
    return 0;
}

int cmd_poly(std::uint64_t p, std::int64_t c, std::int64_t d, const std::string& source) {
    const PrimeCtx ctx(p);
    std::vector<Residue> coeffs;
    if (source == "oracle") {
        coeffs = reduce_power_form(ctx, {c, d}).coeffs;
    } else if (source == "f21") {
        coeffs = formula_coeffs(CoeffFormula::f21, ctx);
    } else if (source == "f26") {
        coeffs = formula_coeffs(CoeffFormula::f26, ctx);
    } else {
        throw UsageError("--source must be oracle, f21 or f26");
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k != 0) std::cout << ' ';
        std::cout << coeffs[k];
    }
    std::cout << '\n';
    return 0;
}

int cmd_lucas(std::int64_t a, std::int64_t b, std::uint64_t n, std::uint64_t p,
              const std::string& closed) {
    const PrimeCtx ctx(p);
    if (!closed.empty()) {
        ClosedFormVariant variant;
        if (closed == "u22")
            variant = ClosedFormVariant::u22;
        else if (closed == "u33")
            variant = ClosedFormVariant::u33;
        else
            throw UsageError("--closed must be u22 or u33");
        std::cout << closed_form_u(variant, n, ctx) << '\n';
        return 0;
    }
    const LucasPair uv = lucas_uv_mod({a, b}, n, ctx);
    std::cout << uv.u << ' ' << uv.v << '\n';
    return 0;
}

int cmd_diag(const std::string& claim_name, std::optional<std::uint64_t> p, std::uint64_t pmin,
             std::uint64_t pmax, const std::string& klass, std::optional<std::int64_t> c,
             std::optional<std::int64_t> d) {
    const CoeffClaim claim = claim_from_string(claim_name);
    const QuadForm form = form_from_flags(c, d).value_or(claim_default_form(claim));

    std::vector<PrimeCtx> primes;
    if (p) {
        primes.emplace_back(*p);
    } else {
        const ResidueClass rc =
            klass.empty() ? default_class_for("diag_" + claim_name) : parse_residue_class(klass);
        primes = primes_in_classes(pmin, pmax, rc.residues, rc.modulus);
    }

    for (const PrimeCtx& ctx : primes) {
        const auto recs = coeff_diagnostics(ctx, form, {claim});
        const DiagnosticRecord& rec = recs.front();
        for (const DiagnosticEntry& e : rec.entries)
            std::cout << claim_name << " p=" << ctx.p() << " k=" << e.index
                      << " oracle=" << e.oracle << " claimed=" << e.claimed << ' '
                      << (e.match ? "ok" : "MISMATCH") << '\n';
        std::cout << claim_name << " p=" << ctx.p() << " checked=" << rec.entries.size()
                  << " mismatches=" << rec.mismatch_count << '\n';
    }
    return 0;
}

int cmd_probe(std::uint64_t pmin, std::uint64_t pmax, const std::string& klass) {
    const ResidueClass rc =
        klass.empty() ? ResidueClass{{3, 7}, 20} : parse_residue_class(klass);
    for (const PrimeCtx& ctx : primes_in_classes(pmin, pmax, rc.residues, rc.modulus)) {
        const LucasPair uv = half_index_probe(ctx);
        const bool u0 = uv.u == 0;
        const bool v0 = uv.v == 0;
        std::cout << "p=" << ctx.p() << " u=" << uv.u << " v=" << uv.v << " vanishes="
                  << (u0 && v0 ? "both" : (u0 ? "u" : (v0 ? "v" : "none"))) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinant congruence verification over prime fields"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run check sweeps and emit records");
    std::vector<std::string> checks;
    std::uint64_t pmin = 5, pmax = 503;
    std::string klass, out = "-", format = "jsonl";
    std::optional<std::int64_t> form_c, form_d;
    unsigned jobs = 1;
    bool strict = false;
    verify->add_option("--check", checks, "Check ids, comma separated")
        ->required()
        ->delimiter(',');
    verify->add_option("--pmin", pmin, "Lower prime bound (>= 5)");
    verify->add_option("--pmax", pmax, "Upper prime bound");
    verify->add_option("--class", klass, "Residue-class override, e.g. \"3,7 mod 20\"");
    verify->add_option("--c", form_c, "Form coefficient c (bracket, reduction)");
    verify->add_option("--d", form_d, "Form coefficient d (bracket, reduction)");
    verify->add_option("--jobs", jobs, "Worker threads (FPDET_JOBS overrides)");
    verify->add_option("--out", out, "Output path, - for stdout");
    verify->add_option("--format", format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    verify->add_flag("--strict-diagnostics", strict,
                     "Mismatched diagnostics affect the exit code");

    // det
    auto* det = app.add_subcommand("det", "Build one matrix and print its determinant");
    std::uint64_t det_p = 7;
    std::string det_kind = "dminus", det_dump;
    std::int64_t det_c = 0, det_d = 0;
    det->add_option("--p", det_p, "Prime modulus")->required();
    det->add_option("--kind", det_kind,
                    "dminus|dfull|leg|legz|recipsum|recipmix|kernelP")
        ->required();
    det->add_option("--c", det_c, "Form coefficient c");
    det->add_option("--d", det_d, "Form coefficient d");
    det->add_option("--dump", det_dump, "Dump the matrix to this path (- for stdout)");

    // poly
    auto* poly = app.add_subcommand("poly", "Print reduced-polynomial coefficients");
    std::uint64_t poly_p = 7;
    std::int64_t poly_c = 0, poly_d = 0;
    std::string poly_source = "oracle";
    poly->add_option("--p", poly_p, "Prime modulus")->required();
    poly->add_option("--c", poly_c, "Form coefficient c");
    poly->add_option("--d", poly_d, "Form coefficient d");
    poly->add_option("--source", poly_source, "oracle|f21|f26");

    // lucas
    auto* lucas = app.add_subcommand("lucas", "Print u_n and v_n mod p");
    std::int64_t lucas_a = 0, lucas_b = 0;
    std::uint64_t lucas_n = 0, lucas_p = 7;
    std::string lucas_closed;
    lucas->add_option("--A", lucas_a, "Recurrence parameter A");
    lucas->add_option("--B", lucas_b, "Recurrence parameter B");
    lucas->add_option("--n", lucas_n, "Index")->required();
    lucas->add_option("--p", lucas_p, "Prime modulus")->required();
    lucas->add_option("--closed", lucas_closed, "Print the closed form u22|u33 at k=n instead");

    // diag
    auto* diag = app.add_subcommand("diag", "Per-index coefficient diagnostics");
    std::string diag_claim, diag_class;
    std::optional<std::uint64_t> diag_p;
    std::uint64_t diag_pmin = 5, diag_pmax = 200;
    std::optional<std::int64_t> diag_c, diag_d;
    diag->add_option("--claim", diag_claim, "f21|f23|f26|f210|f213|sym43")->required();
    diag->add_option("--p", diag_p, "Single prime (overrides the range)");
    diag->add_option("--pmin", diag_pmin, "Lower prime bound");
    diag->add_option("--pmax", diag_pmax, "Upper prime bound");
    diag->add_option("--class", diag_class, "Residue-class override");
    diag->add_option("--c", diag_c, "Form coefficient c override");
    diag->add_option("--d", diag_d, "Form coefficient d override");

    // probe
    auto* probe = app.add_subcommand("probe", "Half-index Lucas probe for (-3,1)");
    std::uint64_t probe_pmin = 5, probe_pmax = 503;
    std::string probe_class;
    probe->add_option("--pmin", probe_pmin, "Lower prime bound");
    probe->add_option("--pmax", probe_pmax, "Upper prime bound");
    probe->add_option("--class", probe_class, "Residue-class override (default 3,7 mod 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify)
            return cmd_verify(checks, pmin, pmax, klass, form_c, form_d, jobs, out, format,
                              strict);
        if (*det) return cmd_det(det_p, det_kind, det_c, det_d, det_dump);
        if (*poly) return cmd_poly(poly_p, poly_c, poly_d, poly_source);
        if (*lucas) return cmd_lucas(lucas_a, lucas_b, lucas_n, lucas_p, lucas_closed);
        if (*diag)
            return cmd_diag(diag_claim, diag_p, diag_pmin, diag_pmax, diag_class, diag_c,
                            diag_d);
        if (*probe) return cmd_probe(probe_pmin, probe_pmax, probe_class);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ZeroDenominatorError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
