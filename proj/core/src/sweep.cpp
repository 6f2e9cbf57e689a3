#include "fpdet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

namespace fpdet {

ResidueClass parse_residue_class(const std::string& text) {
    const auto pos = text.find("mod");
    if (pos == std::string::npos)
        throw UsageError("residue class must look like \"r1,r2 mod m\", got: " + text);
    ResidueClass rc;
    try {
        rc.modulus = std::stoull(text.substr(pos + 3));
        std::string head = text.substr(0, pos);
        std::size_t start = 0;
        while (start < head.size()) {
            std::size_t comma = head.find(',', start);
            if (comma == std::string::npos) comma = head.size();
            const std::string tok = head.substr(start, comma - start);
            if (tok.find_first_not_of(" \t") != std::string::npos)
                rc.residues.push_back(std::stoll(tok));
            start = comma + 1;
        }
    } catch (const std::exception&) {
        throw UsageError("malformed residue class: " + text);
    }
    if (rc.modulus == 0) throw UsageError("residue class modulus must be positive");
    if (rc.residues.empty()) throw UsageError("residue class has no residues: " + text);
    return rc;
}

namespace {

const ResidueClass kAllPrimes{{0}, 1};

struct CheckEntry {
    ResidueClass default_class;
    // Static precondition beyond the residue class; sweeps skip primes that
    // fail it instead of erroring.
    std::function<bool(std::uint64_t)> qualifies;
    std::function<CheckRecord(const PrimeCtx&, const SweepConfig&)> run;
};

QuadForm config_form(const SweepConfig& cfg, QuadForm fallback) {
    return cfg.form.value_or(fallback);
}

const std::vector<std::pair<std::string, CheckEntry>>& registry() {
    static const std::vector<std::pair<std::string, CheckEntry>> table = [] {
        std::vector<std::pair<std::string, CheckEntry>> t;
        auto any = [](std::uint64_t) { return true; };
        auto ge7 = [](std::uint64_t p) { return p >= 7; };

        t.push_back({"thm_i",
                     {ResidueClass{{7}, 8}, any,
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return verify_theorem(TheoremCase::i, ctx);
                      }}});
        t.push_back({"thm_ii",
                     {ResidueClass{{2}, 3}, [](std::uint64_t p) { return p > 5; },
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return verify_theorem(TheoremCase::ii, ctx);
                      }}});
        t.push_back({"thm_iii",
                     {ResidueClass{{3, 7}, 20}, any,
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return verify_theorem(TheoremCase::iii, ctx);
                      }}});
        t.push_back({"d11",
                     {ResidueClass{{2}, 3}, any,
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return verify_intro_identity(IntroIdentity::d11, ctx);
                      }}});
        t.push_back({"bracket",
                     {kAllPrimes, any,
                      [](const PrimeCtx& ctx, const SweepConfig& cfg) {
                          return verify_intro_identity(IntroIdentity::bracket, ctx,
                                                       config_form(cfg, QuadForm{0, 1}));
                      }}});
        t.push_back({"recip",
                     {ResidueClass{{3}, 4}, any,
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return verify_intro_identity(IntroIdentity::recip, ctx);
                      }}});
        t.push_back({"wsn",
                     {ResidueClass{{5}, 6}, any,
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return verify_intro_identity(IntroIdentity::wsn, ctx);
                      }}});
        t.push_back({"reduction",
                     {kAllPrimes, ge7,
                      [](const PrimeCtx& ctx, const SweepConfig& cfg) {
                          return reduction_crosscheck(ctx, config_form(cfg, QuadForm{2, 2}));
                      }}});
        t.push_back({"halfindex",
                     {ResidueClass{{3, 7}, 20}, any,
                      [](const PrimeCtx& ctx, const SweepConfig&) {
                          return half_index_check(ctx);
                      }}});

        const std::pair<CoeffClaim, ResidueClass> diag_table[] = {
            {CoeffClaim::f21, ResidueClass{{7}, 8}},
            {CoeffClaim::f23, ResidueClass{{7}, 8}},
            {CoeffClaim::f26, ResidueClass{{2}, 3}},
            {CoeffClaim::f210, ResidueClass{{2}, 3}},
            {CoeffClaim::f213, ResidueClass{{3, 7}, 20}},
            {CoeffClaim::sym43, ResidueClass{{3, 7}, 20}},
        };
        for (const auto& [claim, klass] : diag_table) {
            t.push_back({"diag_" + to_string(claim),
                         {klass, any,
                          [claim](const PrimeCtx& ctx, const SweepConfig&) {
                              return diagnostics_check(ctx, claim);
                          }}});
        }
        return t;
    }();
    return table;
}

const CheckEntry& entry_for(const std::string& check) {
    for (const auto& [name, entry] : registry())
        if (name == check) return entry;
    throw UsageError("unknown check: " + check);
}

}  // namespace

const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, entry] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_registered_check(const std::string& check) {
    const auto& names = registered_checks();
    return std::find(names.begin(), names.end(), check) != names.end();
}

ResidueClass default_class_for(const std::string& check) {
    return entry_for(check).default_class;
}

SweepResult run_sweep(const SweepConfig& config) {
    if (config.checks.empty()) throw UsageError("run_sweep: no checks requested");
    if (config.pmin < 5) throw UsageError("run_sweep: pmin must be >= 5");
    if (config.pmax < config.pmin) throw UsageError("run_sweep: pmax < pmin");
    if (config.jobs < 1) throw UsageError("run_sweep: worker count must be >= 1");
    for (const std::string& check : config.checks)
        if (!is_registered_check(check)) throw UsageError("unknown check: " + check);

    // Expand to one task per (check, qualifying prime). Task order fixes the
    // record slots, so scheduling cannot affect the output.
    struct Task {
        std::string check;
        PrimeCtx ctx;
    };
    std::vector<Task> tasks;
    for (const std::string& check : config.checks) {
        const CheckEntry& entry = entry_for(check);
        const ResidueClass& klass = config.klass ? *config.klass : entry.default_class;
        for (const PrimeCtx& ctx :
             primes_in_classes(config.pmin, config.pmax, klass.residues, klass.modulus)) {
            if (!entry.qualifies(ctx.p())) continue;
            if (check == "bracket") {
                const QuadForm f = config.form.value_or(QuadForm{0, 1});
                if (ctx.legendre(f.d) != 1) continue;  // (d/p) = +1 is part of qualifying
            }
            tasks.push_back({check, ctx});
        }
    }

    std::vector<CheckRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const auto t0 = std::chrono::steady_clock::now();
                CheckRecord rec = entry_for(tasks[i].check).run(tasks[i].ctx, config);
                const auto t1 = std::chrono::steady_clock::now();
                rec.ms = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
                records[i] = std::move(rec);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };

    const unsigned jobs = std::min<std::size_t>(config.jobs, std::max<std::size_t>(tasks.size(), 1));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         return std::tie(a.check, a.p, a.c, a.d) <
                                std::tie(b.check, b.p, b.c, b.d);
                     });

    SweepSummary summary;
    for (const CheckRecord& r : records) {
        switch (r.status) {
            case CheckStatus::pass: ++summary.passed; break;
            case CheckStatus::fail: ++summary.failed; break;
            case CheckStatus::diagnostic: ++summary.diagnostics; break;
        }
        if (r.status == CheckStatus::diagnostic && r.diag_mismatch) ++summary.diag_mismatches;
    }
    return {std::move(records), summary};
}

int exit_code_for(const SweepSummary& summary, bool strict_diagnostics) {
    if (summary.failed > 0) return 1;
    if (strict_diagnostics && summary.diag_mismatches > 0) return 1;
    return 0;
}

}  // namespace fpdet
