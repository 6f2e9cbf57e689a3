#include <doctest.h>

#include <sstream>

#include "fpdet/records.hpp"
#include "fpdet/sweep.hpp"

using namespace fpdet;

namespace {

std::vector<std::uint64_t> primes_of(const std::vector<CheckRecord>& records) {
    std::vector<std::uint64_t> out;
    for (const auto& r : records) out.push_back(r.p);
    return out;
}

std::string serialized(const SweepResult& result, RecordFormat format) {
    std::vector<CheckRecord> copy = result.records;
    for (auto& r : copy) r.ms = 0;  // timing is the one permitted difference
    std::ostringstream os;
    write_records(copy, format, os);
    return os.str();
}

}  // namespace

TEST_CASE("parse_residue_class") {
    const ResidueClass a = parse_residue_class("7 mod 8");
    CHECK(a.residues == std::vector<std::int64_t>{7});
    CHECK(a.modulus == 8);
    const ResidueClass b = parse_residue_class("3,7 mod 20");
    CHECK(b.residues == std::vector<std::int64_t>{3, 7});
    CHECK(b.modulus == 20);
    CHECK_THROWS_AS(parse_residue_class("3,7"), UsageError);
    CHECK_THROWS_AS(parse_residue_class("mod 8"), UsageError);
    CHECK_THROWS_AS(parse_residue_class("1 mod 0"), UsageError);
    CHECK_THROWS_AS(parse_residue_class("x mod 8"), UsageError);
}

TEST_CASE("run_sweep: spec'd ranges") {
    SweepConfig cfg;
    cfg.checks = {"thm_i"};
    cfg.pmin = 5;
    cfg.pmax = 50;
    const SweepResult r1 = run_sweep(cfg);
    CHECK(primes_of(r1.records) == std::vector<std::uint64_t>{7, 23, 31, 47});
    CHECK(r1.summary.passed == 4);
    CHECK(r1.summary.failed == 0);

    cfg.checks = {"thm_iii"};
    cfg.pmax = 30;
    CHECK(primes_of(run_sweep(cfg).records) == std::vector<std::uint64_t>{7, 23});

    cfg.checks = {"thm_ii"};
    cfg.pmin = 5;
    cfg.pmax = 5;
    CHECK(run_sweep(cfg).records.empty());  // p > 5 required
}

TEST_CASE("run_sweep: records sorted by (check, p)") {
    SweepConfig cfg;
    cfg.checks = {"thm_iii", "thm_i", "halfindex"};
    cfg.pmax = 60;
    const SweepResult result = run_sweep(cfg);
    for (std::size_t i = 1; i < result.records.size(); ++i) {
        const auto& a = result.records[i - 1];
        const auto& b = result.records[i];
        CHECK((a.check < b.check || (a.check == b.check && a.p < b.p)));
    }
}

TEST_CASE("run_sweep: deterministic across repeats and worker counts") {
    SweepConfig cfg;
    cfg.checks = {"thm_i", "halfindex", "diag_f213"};
    cfg.pmax = 120;
    const std::string a = serialized(run_sweep(cfg), RecordFormat::jsonl);
    const std::string b = serialized(run_sweep(cfg), RecordFormat::jsonl);
    cfg.jobs = 4;
    const std::string c = serialized(run_sweep(cfg), RecordFormat::jsonl);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("run_sweep: bracket qualification filters on (d/p) = +1") {
    SweepConfig cfg;
    cfg.checks = {"bracket"};
    cfg.pmax = 30;
    cfg.form = QuadForm{2, 1};  // d = 1 is a square everywhere
    const SweepResult all = run_sweep(cfg);
    CHECK(primes_of(all.records) == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(all.summary.failed == 0);

    cfg.form = QuadForm{0, 2};  // (2/p) = +1 only for p == 1,7 (mod 8)
    const SweepResult some = run_sweep(cfg);
    CHECK(primes_of(some.records) == std::vector<std::uint64_t>{7, 17, 23});
}

TEST_CASE("run_sweep: class override reaches out-of-class halfindex primes") {
    SweepConfig cfg;
    cfg.checks = {"halfindex"};
    cfg.pmin = 11;
    cfg.pmax = 31;
    cfg.klass = parse_residue_class("11 mod 20");
    const SweepResult result = run_sweep(cfg);
    CHECK(primes_of(result.records) == std::vector<std::uint64_t>{11, 31});
    CHECK(result.summary.diagnostics == 2);
    CHECK(result.summary.diag_mismatches == 2);  // neither u nor v vanishes there
    CHECK(exit_code_for(result.summary, false) == 0);
    CHECK(exit_code_for(result.summary, true) == 1);
}

TEST_CASE("run_sweep: config validation") {
    SweepConfig cfg;
    CHECK_THROWS_AS(run_sweep(cfg), UsageError);  // no checks
    cfg.checks = {"definitely_not_a_check"};
    CHECK_THROWS_AS(run_sweep(cfg), UsageError);
    cfg.checks = {"thm_i"};
    cfg.pmin = 4;
    CHECK_THROWS_AS(run_sweep(cfg), UsageError);
    cfg.pmin = 50;
    cfg.pmax = 5;
    CHECK_THROWS_AS(run_sweep(cfg), UsageError);
    cfg.pmin = 5;
    cfg.pmax = 50;
    cfg.jobs = 0;
    CHECK_THROWS_AS(run_sweep(cfg), UsageError);
}

TEST_CASE("registry") {
    CHECK(is_registered_check("thm_i"));
    CHECK(is_registered_check("diag_sym43"));
    CHECK_FALSE(is_registered_check("thm_iv"));
    CHECK(registered_checks().size() == 15);
    const ResidueClass rc = default_class_for("thm_iii");
    CHECK(rc.residues == std::vector<std::int64_t>{3, 7});
    CHECK(rc.modulus == 20);
    CHECK_THROWS_AS(default_class_for("nope"), UsageError);
}

TEST_CASE("jsonl: exact schema line for the thm_i anchor") {
    SweepConfig cfg;
    cfg.checks = {"thm_i"};
    cfg.pmax = 7;
    SweepResult result = run_sweep(cfg);
    REQUIRE(result.records.size() == 1);
    result.records[0].ms = 0;
    std::ostringstream os;
    const std::size_t bytes = write_records(result.records, RecordFormat::jsonl, os);
    CHECK(os.str() ==
          "{\"check\":\"thm_i\",\"p\":7,\"c\":2,\"d\":2,\"lhs\":0,\"rhs\":0,"
          "\"status\":\"pass\",\"notes\":\"\",\"ms\":0}\n");
    CHECK(bytes == os.str().size());
}

TEST_CASE("jsonl round trip reproduces the records exactly") {
    SweepConfig cfg;
    cfg.checks = {"thm_i", "halfindex", "diag_f23", "reduction"};
    cfg.pmax = 60;
    const SweepResult result = run_sweep(cfg);
    REQUIRE(!result.records.empty());

    std::vector<CheckRecord> with_tricky = result.records;
    CheckRecord tricky;
    tricky.check = "wsn";
    tricky.p = 5;
    tricky.c = -1;
    tricky.d = 1;
    tricky.lhs = -1;
    tricky.rhs = 1;
    tricky.status = CheckStatus::fail;
    tricky.notes = "quotes \" and, commas\nand newlines";
    tricky.ms = 12;
    with_tricky.push_back(tricky);

    std::ostringstream os;
    write_records(with_tricky, RecordFormat::jsonl, os);
    std::istringstream is(os.str());
    const std::vector<CheckRecord> parsed = read_records_jsonl(is);
    REQUIRE(parsed.size() == with_tricky.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].check == with_tricky[i].check);
        CHECK(parsed[i].p == with_tricky[i].p);
        CHECK(parsed[i].c == with_tricky[i].c);
        CHECK(parsed[i].d == with_tricky[i].d);
        CHECK(parsed[i].lhs == with_tricky[i].lhs);
        CHECK(parsed[i].rhs == with_tricky[i].rhs);
        CHECK(parsed[i].status == with_tricky[i].status);
        CHECK(parsed[i].notes == with_tricky[i].notes);
        CHECK(parsed[i].ms == with_tricky[i].ms);
    }
}

TEST_CASE("csv: header always present, fields quoted as needed") {
    std::ostringstream empty;
    write_records({}, RecordFormat::csv, empty);
    CHECK(empty.str() == "check,p,c,d,lhs,rhs,status,notes,ms\n");

    CheckRecord rec;
    rec.check = "wsn";
    rec.p = 11;
    rec.c = -1;
    rec.d = 1;
    rec.lhs = 1;
    rec.rhs = 1;
    rec.status = CheckStatus::pass;
    rec.notes = "a,b \"q\"";
    rec.ms = 3;
    std::ostringstream os;
    write_records({rec}, RecordFormat::csv, os);
    CHECK(os.str() ==
          "check,p,c,d,lhs,rhs,status,notes,ms\n"
          "wsn,11,-1,1,1,1,pass,\"a,b \"\"q\"\"\",3\n");
}

TEST_CASE("exit code contract") {
    CHECK(exit_code_for({10, 0, 0, 0}, false) == 0);
    CHECK(exit_code_for({10, 1, 0, 0}, false) == 1);
    CHECK(exit_code_for({10, 0, 5, 3}, false) == 0);
    CHECK(exit_code_for({10, 0, 5, 3}, true) == 1);
    CHECK(exit_code_for({10, 0, 5, 0}, true) == 0);
}
