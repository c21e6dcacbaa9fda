// Command-line surface for the twisted 3-braid skein toolkit: polynomial
// evaluation, T-link normalization and classification, the canonical-form
// census, the verification suites and the block/conjecture reports.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 conjecture-only failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skein3/blocks.hpp"
#include "skein3/census.hpp"
#include "skein3/textio.hpp"
#include "skein3/verify.hpp"

using namespace skein3;

namespace {

bool looks_like_tlink(const std::string& s) { return !s.empty() && s[0] == 'T'; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("failed writing " + path);
}

int cmd_poly(const std::string& input, int max_crossings) {
    SkeinOracle oracle(max_crossings);
    HalfLaurent v;
    if (looks_like_tlink(input)) {
        TLink L = parse_tlink(input);
        const int b = braid_index(L).b;
        if (b <= 3) {
            v = tlink_jones_closed(L);
        } else {
            v = oracle.kauffman_jones(to_braid(L));
        }
        std::cout << "tlink: " << render_tlink(normalize(L)) << "\n";
        std::cout << "braid_index: " << b << "\n";
    } else {
        BraidWord w = parse_braid(input);
        v = (w.strands() == 3) ? jones_3braid(w, oracle) : oracle.kauffman_jones(w);
        const ClosureShape s = closure_shape(w);
        std::cout << "writhe: " << s.writhe << "\n";
        std::cout << "components: " << s.components << "\n";
    }
    std::cout << "jones: " << render_poly(v) << "\n";
    std::cout << "jones_serialized: " << serialize_poly(v) << "\n";
    return 0;
}

int cmd_normalize(const std::string& input) {
    TLink L = parse_tlink(input);
    TLink N = normalize(L);
    std::cout << "normalized: " << render_tlink(N) << "\n";
    if (!(N.tiers() == 1 && N.pairs[0].second == 1))
        std::cout << "dual: " << render_tlink(dual(N)) << "\n";
    const auto bi = braid_index(N);
    std::cout << "braid_index: " << bi.b << " (i0=" << bi.i0 << ", j0=" << bi.j0 << ")\n";
    std::cout << "tier_bound_ok: " << (max_tiers_check(N) ? "true" : "false") << "\n";
    return 0;
}

int cmd_classify(const std::string& input) {
    TierReduction red;
    if (looks_like_tlink(input)) {
        red = tier_reduce(parse_tlink(input));
    } else {
        CanonicalForm3 c = canonical_form(parse_braid(input));
        red.braid_index = 3;
        red.canonical = c;
        red.torus = torus_detect(c);
    }
    std::cout << "braid_index: " << red.braid_index << "\n";
    if (red.two_braid) {
        std::cout << "class: " << (*red.two_braid == 1 ? "unknot" : "two-braid torus") << "\n";
        std::cout << "torus: T(2," << *red.two_braid << ")\n";
        return 0;
    }
    std::cout << "canonical: " << render_canonical(*red.canonical) << "\n";
    if (red.torus)
        std::cout << "torus: T(" << red.torus->first << "," << red.torus->second << ")\n";
    else
        std::cout << "torus: none\n";
    std::cout << "tlink_forms:";
    for (const std::string& f : classification_tlink_forms(*red.canonical)) std::cout << " " << f;
    std::cout << "\n";
    return 0;
}

int cmd_census(int x_max, int y_max, int z_max, const std::string& out_path, const std::string& format,
               int jobs) {
    const auto rows = run_census(x_max, y_max, z_max, jobs);
    const std::string text = (format == "json") ? census_to_json(rows) : census_to_csv(rows);
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_file(out_path, text);
    std::cerr << rows.size() << " rows\n";
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& out_path) {
    const auto results = run_verify_suite(suite, opt);
    std::string report;
    bool hard_fail = false, conjecture_fail = false;
    for (const CheckResult& r : results) {
        std::string line = (r.pass ? "PASS " : "FAIL ") + r.suite + "/" + r.name + " (" +
                           std::to_string(r.cases) + " cases)";
        if (!r.pass) {
            line += " :: " + r.detail;
            (r.conjecture_only ? conjecture_fail : hard_fail) = true;
        }
        std::cout << line << "\n";
        report += line + "\n";
    }
    if (!out_path.empty()) write_file(out_path, report);
    if (hard_fail) return 2;
    if (conjecture_fail) return 3;
    return 0;
}

int cmd_blocks(const std::string& input, int max_crossings) {
    BraidWord b = parse_braid(input);
    const std::vector<int> es = detail::alternating_exponents(b, 2);
    SkeinOracle oracle(std::max(max_crossings, 4 * b.crossings()));
    BlockDecomp bd = general_blocks(es, oracle);
    std::cout << "word: " << render_braid(b) << "\n";
    std::cout << "w_star: " << bd.w_star << "\n";
    std::cout << "e1: " << bd.e1 << "\n";
    std::cout << "M: " << bd.gap_multiplier.str() << "\n";
    std::cout << "B1: " << render_poly(bd.B1) << "\n";
    std::cout << "gap: " << render_poly(bd.gap_poly()) << " (starts at t^" << bd.gap_start << ", index A_"
              << bd.gap_index << ")\n";
    std::cout << "B2: " << render_poly(bd.B2) << " (shifted by t^" << bd.e1 + 2 << ")\n";
    std::cout << "vstar: " << render_poly(bd.reconstruct()) << "\n";
    return 0;
}

int cmd_conjecture_scan(int max_writhe, int jobs) {
    ConjectureScanResult scan = conjecture_scan(max_writhe, jobs);
    std::cout << "scanned: " << scan.scanned << " condensed words (writhe <= " << max_writhe << ")\n";
    if (scan.counterexamples.empty()) {
        std::cout << "counterexamples: none\n";
        return 0;
    }
    std::cout << "counterexamples: " << scan.counterexamples.size() << "\n";
    for (const ConjectureReport& c : scan.counterexamples) {
        std::cout << "  " << c.word << " | w=" << c.writhe << " r=" << c.rank
                  << " trivial=" << c.trivial_count << " V**=" << serialize_poly(c.vss)
                  << " | sign=" << (c.sign_pattern ? "ok" : "VIOLATED")
                  << " degree=" << (c.degree_claim ? "ok" : "VIOLATED")
                  << " dense=" << (c.dense_support ? "ok" : "VIOLATED") << "\n";
    }
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skein3: exact skein polynomials for twisted 3-braid links and T-links"};
    app.require_subcommand(1);

    std::string input, out_path, format = "csv", suite = "all";
    int max_crossings = kDefaultCrossingLimit;
    int x_max = 8, y_max = 8, z_max = 12, max_writhe = 20, jobs = 1;

    auto* poly = app.add_subcommand("poly", "Jones polynomial of a braid closure or T-link");
    poly->add_option("input", input, "braid (\"B3: s1^3 s2\") or T-link (\"T((2,4),(3,4))\")")->required();
    poly->add_option("--max-crossings", max_crossings, "oracle crossing limit");

    auto* norm = app.add_subcommand("normalize", "tier-normalized form, dual and braid index of a T-link");
    norm->add_option("input", input, "T-link literal")->required();

    auto* cls = app.add_subcommand("classify", "canonical form beta(x,y,z) of a T-link or 3-braid word");
    cls->add_option("input", input, "T-link literal or braid word")->required();

    auto* census = app.add_subcommand("census", "enumerate canonical forms with link data");
    census->add_option("--x", x_max, "max x")->required();
    census->add_option("--y", y_max, "max y")->required();
    census->add_option("--z", z_max, "max z (>= 3)")->required();
    census->add_option("--out", out_path, "output path ('-' for stdout)");
    census->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--jobs", jobs, "worker count");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "identities, closed-forms, classification, conjecture, all")
        ->check(CLI::IsMember({"identities", "closed-forms", "classification", "conjecture", "all"}));
    verify->add_option("--max-crossings", max_crossings, "oracle crossing limit");
    verify->add_option("--x", x_max, "classification grid x bound");
    verify->add_option("--y", y_max, "classification grid y bound");
    verify->add_option("--z", z_max, "classification grid z bound");
    verify->add_option("--max-writhe", max_writhe, "conjecture scan writhe bound");
    verify->add_option("--jobs", jobs, "worker count");
    verify->add_option("--out", out_path, "also write the report to a file");

    auto* blocks = app.add_subcommand("blocks", "block decomposition of a positive alternating 3-braid");
    blocks->add_option("input", input, "braid word, e.g. \"B3: s1^7 s2 s1^2 s2^2\"")->required();
    blocks->add_option("--max-crossings", max_crossings, "oracle crossing limit");

    auto* scan = app.add_subcommand("conjecture-scan", "scan condensed braids against the coefficient conjecture");
    scan->add_option("--max-writhe", max_writhe, "writhe bound");
    scan->add_option("--jobs", jobs, "worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) return cmd_poly(input, max_crossings);
        if (norm->parsed()) return cmd_normalize(input);
        if (cls->parsed()) return cmd_classify(input);
        if (census->parsed()) return cmd_census(x_max, y_max, z_max, out_path, format, jobs);
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.max_crossings = max_crossings;
            opt.x_max = x_max;
            opt.y_max = y_max;
            opt.z_max = z_max;
            opt.conjecture_max_writhe = max_writhe;
            opt.jobs = jobs;
            return cmd_verify(suite, opt, out_path);
        }
        if (blocks->parsed()) return cmd_blocks(input, max_crossings);
        if (scan->parsed()) return cmd_conjecture_scan(max_writhe, jobs);
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
