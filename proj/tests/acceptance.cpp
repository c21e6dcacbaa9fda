// Acceptance suite: one pass/fail line per criterion.  Every comparison is
// exact symbolic equality; the stated wall-clock budgets are enforced.
//
// The conjecture scan (criterion 7) is evaluated and reported but does not
// gate the exit code, mirroring the CLI's dedicated exit-code-3 channel for
// conjecture-only findings.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "skein3/blocks.hpp"
#include "skein3/census.hpp"
#include "skein3/textio.hpp"
#include "skein3/verify.hpp"

using namespace skein3;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
int conjecture_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, bool pass, double elapsed, double budget, const std::string& note) {
    const bool in_budget = budget <= 0 || elapsed <= budget;
    std::string line = (pass && in_budget) ? "PASS " : "FAIL ";
    line += name;
    char timing[64];
    std::snprintf(timing, sizeof timing, " (%.2fs", elapsed);
    line += timing;
    if (budget > 0) line += " / budget " + std::to_string(static_cast<int>(budget)) + "s";
    line += ")";
    if (!note.empty()) line += " :: " + note;
    std::puts(line.c_str());
    if (!(pass && in_budget)) ++failures;
}

void report_conjecture(const std::string& name, bool pass, double elapsed, const std::string& note) {
    std::printf("%s %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), elapsed,
                note.empty() ? "" : " :: ", note.c_str());
    if (!pass) ++conjecture_failures;
}

std::string summarize(const std::vector<CheckResult>& results, bool& all_pass) {
    std::string first;
    long long cases = 0;
    all_pass = true;
    for (const CheckResult& r : results) {
        cases += r.cases;
        if (!r.pass && all_pass) {
            all_pass = false;
            first = r.name + ": " + r.detail;
        }
    }
    if (all_pass) return std::to_string(cases) + " cases";
    return first;
}

} // namespace

int main() {
    // 1. worked-example parity
    {
        const auto t0 = Clock::now();
        bool ok = true;
        std::string note;
        SkeinOracle oracle(24);
        auto expect = [&](bool cond, const char* what) {
            if (!cond && ok) {
                ok = false;
                note = what;
            }
        };
        expect(jones_3braid(parse_braid("B3: s1^3 s2 s1^3 s2"), oracle) ==
                   HalfLaurent::from_coeffs(3, {1, 0, 1, 0, 0, -1}),
               "V(8_19)");
        expect(jones_3braid(parse_braid("B3: s1^5 s2 s1^3 s2"), oracle) ==
                   HalfLaurent::t_pow(4) + HalfLaurent::t_pow(6) - HalfLaurent::t_pow(10),
               "V(10_124)");
        FullTwistJones f819 = jones_fulltwists(1, parse_braid("B3: s2 s1"), oracle);
        expect(f819.B2 == -HalfLaurent::t_pow(2), "B2(8_19) = -t^2");
        FullTwistJones f10124 = jones_fulltwists(1, parse_braid("B3: s1^3 s2"), oracle);
        expect(f10124.B2 == -HalfLaurent::t_pow(3), "B2(10_124) = -t^3");
        FullTwistJones fmirror = jones_fulltwists(-3, parse_braid("B3: s1^9 s2"), oracle);
        expect(fmirror.B2 == (-A(7)).shifted(6), "B2(mirror 10_161) = -t^3 A_7");
        expect(invert_variable(fmirror.reconstruct()) ==
                   (HalfLaurent::one() - A(6).shifted(6)).shifted(6),
               "V(10_161) = t^3 (1 - t^3 A_6)");
        report("criterion-1 worked-example parity", ok, seconds_since(t0), 1.0, note);
    }

    // 2. identity suite
    {
        const auto t0 = Clock::now();
        VerifyOptions opt;
        bool ok = false;
        const std::string note = summarize(verify_identities(opt), ok);
        report("criterion-2 identity suite", ok, seconds_since(t0), 10.0, note);
    }

    // 3 + 4. closed forms vs oracle at <= 14 crossings, and block structure
    {
        const auto t0 = Clock::now();
        VerifyOptions opt;
        opt.max_crossings = 14;
        opt.jobs = 4;
        const auto results = verify_closed_forms(opt);
        std::vector<CheckResult> oracle_side, block_side;
        for (const CheckResult& r : results) {
            if (r.name.find("block") != std::string::npos || r.name.find("condense") != std::string::npos)
                block_side.push_back(r);
            else
                oracle_side.push_back(r);
        }
        const double elapsed = seconds_since(t0);
        bool ok3 = false, ok4 = false;
        const std::string note3 = summarize(oracle_side, ok3);
        report("criterion-3 oracle equivalence of closed forms", ok3, elapsed, 300.0, note3);
        const std::string note4 = summarize(block_side, ok4);
        report("criterion-4 block structure", ok4, elapsed, 0, note4);
    }

    // 5. classification grid
    {
        const auto t0 = Clock::now();
        VerifyOptions opt;
        opt.x_max = 8;
        opt.y_max = 8;
        opt.z_max = 12;
        opt.jobs = 4;
        std::vector<CheckResult> picked;
        for (const CheckResult& r : verify_classification(opt))
            if (r.name.find("MFW") == std::string::npos && r.name.find("determinism") == std::string::npos)
                picked.push_back(r);
        bool ok = false;
        const std::string note = summarize(picked, ok);
        report("criterion-5 classification (Jones <=> canonical)", ok, seconds_since(t0), 60.0, note);
    }

    // 6. braid index versus the MFW bound, and the tier bound
    {
        const auto t0 = Clock::now();
        VerifyOptions opt;
        opt.jobs = 4;
        std::vector<CheckResult> picked;
        for (const CheckResult& r : verify_classification(opt))
            if (r.name.find("MFW") != std::string::npos) picked.push_back(r);
        bool ok = false;
        const std::string note = summarize(picked, ok);
        report("criterion-6 braid index vs MFW bound", ok, seconds_since(t0), 0, note);
    }

    // 7. conjecture scan (reported, never gating)
    {
        const auto t0 = Clock::now();
        ConjectureScanResult scan = conjecture_scan(20, 4);
        std::string note = std::to_string(scan.scanned) + " condensed words";
        bool ok = scan.counterexamples.empty();
        if (!ok) {
            note += "; " + std::to_string(scan.counterexamples.size()) + " counterexample(s), e.g. ";
            const ConjectureReport& c = scan.counterexamples.front();
            note += c.word + " V**=" + serialize_poly(c.vss) +
                    (c.dense_support ? "" : " [dense-support claim fails]");
        }
        report_conjecture("criterion-7 conjecture scan w<=20 (non-gating)", ok, seconds_since(t0), note);
    }

    // 8. determinism of census and verify outputs
    {
        const auto t0 = Clock::now();
        bool ok = true;
        std::string note;
        const std::string csv1 = census_to_csv(run_census(8, 8, 12, 1));
        const std::string csv4 = census_to_csv(run_census(8, 8, 12, 4));
        const std::string csv1b = census_to_csv(run_census(8, 8, 12, 1));
        if (csv1 != csv4 || csv1 != csv1b) {
            ok = false;
            note = "census bytes differ across runs/worker counts";
        }
        if (census_to_json(run_census(4, 4, 6, 1)) != census_to_json(run_census(4, 4, 6, 5))) {
            ok = false;
            note = "census json differs across worker counts";
        }
        VerifyOptions opt;
        opt.x_max = 4;
        opt.y_max = 4;
        opt.z_max = 6;
        opt.max_crossings = 12;
        auto render = [](const std::vector<CheckResult>& rs) {
            std::string s;
            for (const CheckResult& r : rs)
                s += r.suite + "/" + r.name + ":" + (r.pass ? "1" : "0") + ":" + std::to_string(r.cases) +
                     ":" + r.detail + "\n";
            return s;
        };
        VerifyOptions opt4 = opt;
        opt4.jobs = 4;
        // the classification suite shards its grids across workers
        if (render(verify_classification(opt)) != render(verify_classification(opt4))) {
            ok = false;
            note = "verify output differs across worker counts";
        }
        report("criterion-8 determinism", ok, seconds_since(t0), 0, note);
    }

    if (failures > 0) {
        std::printf("ACCEPTANCE: %d gating criterion(s) failed\n", failures);
        return 1;
    }
    if (conjecture_failures > 0) {
        std::printf("ACCEPTANCE: gating criteria passed; conjecture scan reported counterexamples "
                    "(see the decisions record; CLI exit code 3 channel)\n");
        return 0;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
