#pragma once

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skein3/blocks.hpp"
#include "skein3/census.hpp"
#include "skein3/jones3.hpp"
#include "skein3/oracle.hpp"
#include "skein3/parallel.hpp"
#include "skein3/textio.hpp"
#include "skein3/tlink.hpp"

namespace skein3 {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = true;
    bool conjecture_only = false;
    long long cases = 0;
    std::string detail; // first counterexample payload on failure
};

struct VerifyOptions {
    int max_crossings = kDefaultCrossingLimit;
    int x_max = 8;
    int y_max = 8;
    int z_max = 12;
    int conjecture_max_writhe = 20;
    int jobs = 1;
};

namespace verify_detail {

class Harness {
public:
    Harness(std::string suite, std::string name) : result_{std::move(suite), std::move(name)} {}

    void expect(bool ok, const std::function<std::string()>& payload) {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = payload();
        }
    }
    void expect(bool ok, const std::string& payload) {
        expect(ok, [&payload] { return payload; });
    }

    CheckResult finish() const { return result_; }

private:
    CheckResult result_;
};

inline BraidWord word_from_exponents(const std::vector<int>& es) {
    return detail::from_alternating_exponents(es);
}

inline BraidWord assemble_fulltwists(int a, const BraidWord& gamma) {
    BraidWord w = BraidWord::identity(3);
    for (int j = 0; j < 3 * std::abs(a); ++j) {
        if (a > 0) {
            w.append(1, 1);
            w.append(2, 1);
        } else {
            w.append(2, -1);
            w.append(1, -1);
        }
    }
    w.append(gamma);
    return free_reduce(w);
}

inline BraidWord xyz_word(int x, int y, int z) {
    BraidWord w = BraidWord::identity(3);
    if (x) w.append(1, x);
    if (y) w.append(2, y);
    for (int j = 0; j < z; ++j) {
        w.append(1, 1);
        w.append(2, 1);
    }
    return w;
}

inline std::vector<BraidWord> random_words(int count, int strands, int max_letters, int max_exp,
                                           unsigned seed, bool positive_only = false) {
    std::mt19937 rng(seed);
    std::vector<BraidWord> out;
    std::uniform_int_distribution<int> len(1, max_letters);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> exp(positive_only ? 1 : -max_exp, max_exp);
    while (static_cast<int>(out.size()) < count) {
        BraidWord w = BraidWord::identity(strands);
        const int L = len(rng);
        for (int j = 0; j < L; ++j) {
            const int e = exp(rng);
            if (e != 0) w.append(gen(rng), e);
        }
        out.push_back(free_reduce(w));
    }
    return out;
}

/// All positive alternating exponent vectors of the given rank and writhe.
inline void alternating_compositions(int writhe, int rank, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> es(static_cast<std::size_t>(2 * rank), 1);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == 2 * rank - 1) {
            if (left >= 1) {
                es[static_cast<std::size_t>(idx)] = left;
                fn(es);
            }
            return;
        }
        for (int e = 1; e <= left - (2 * rank - 1 - idx); ++e) {
            es[static_cast<std::size_t>(idx)] = e;
            rec(idx + 1, left - e);
        }
    };
    rec(0, writhe);
}

inline std::string poly_payload(const char* tag, const HalfLaurent& got, const HalfLaurent& want) {
    return std::string(tag) + ": got " + serialize_poly(got) + " want " + serialize_poly(want);
}

} // namespace verify_detail

// ---------------------------------------------------------------------------
// identities suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_identities(const VerifyOptions& opt) {
    using namespace verify_detail;
    std::vector<CheckResult> out;

    {
        Harness h("identities", "A-recursion A_w = t^z A_{w-z} + eps_{w-z} A_z");
        for (int w = -15; w <= 15; ++w)
            for (int z = -15; z <= 15; ++z)
                h.expect(A(w) == A(w - z).shifted(2 * z) + Int(sign_pow(w - z)) * A(z),
                         "w=" + std::to_string(w) + " z=" + std::to_string(z));
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "A-product A_{w+z-1} = A_w A_z + t A_{w-1} A_{z-1}");
        for (int w = -15; w <= 15; ++w)
            for (int z = -15; z <= 15; ++z)
                h.expect(A(w + z - 1) == A(w) * A(z) + (A(w - 1) * A(z - 1)).shifted(2),
                         "w=" + std::to_string(w) + " z=" + std::to_string(z));
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "A_x A_y coefficient table");
        for (int x = 0; x <= 12; ++x)
            for (int y = 0; y <= x; ++y) {
                HalfLaurent table;
                for (int j = 0; j <= y - 2; ++j)
                    table += HalfLaurent::term(2 * (x + y - 2 - j), Int(sign_pow(j)) * (j + 1));
                for (int j = y - 1; j <= x - 1; ++j)
                    table += HalfLaurent::term(2 * (x + y - 2 - j), Int(sign_pow(j)) * y);
                for (int j = x; j <= x + y - 2; ++j)
                    table += HalfLaurent::term(2 * (x + y - 2 - j), Int(sign_pow(j)) * (x + y - 1 - j));
                h.expect(table == A(x) * A(y), "x=" + std::to_string(x) + " y=" + std::to_string(y));
            }
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "three-window product partition");
        for (int x = 0; x <= 12; ++x)
            for (int y = 0; y <= x; ++y) {
                ProductPartition parts = product_partition(x, y);
                bool ok = parts.total() == A(x) * A(y);
                // pairwise disjoint supports
                for (const auto& [hL, cL] : parts.left.terms())
                    ok = ok && parts.mid.coeff_halves(hL) == 0 && parts.right.coeff_halves(hL) == 0 && cL != 0;
                for (const auto& [hM, cM] : parts.mid.terms())
                    ok = ok && parts.right.coeff_halves(hM) == 0 && cM != 0;
                h.expect(ok, "x=" + std::to_string(x) + " y=" + std::to_string(y));
            }
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "L/R recurrences");
        for (int b = 0; b <= 15; ++b) {
            h.expect(L_sum(b) == A(b + 1) + L_sum(b - 1).shifted(2), "L b=" + std::to_string(b));
            h.expect(R_sum(b) == A(b + 1) - R_sum(b - 1), "R b=" + std::to_string(b));
        }
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "product decomposition (reassembly, AC shape, bounds)");
        auto check_one = [&](int x0, const std::vector<int>& xs) {
            ProdDecomposition d = prod_decompose(x0, xs);
            HalfLaurent direct = A(x0);
            Int lambda_expect = 1;
            long long s = 0;
            for (int x : xs) {
                direct *= A(x);
                lambda_expect *= x;
                s += x;
            }
            const int m = static_cast<int>(xs.size());
            lambda_expect *= sign_pow(m + s);
            std::string key = "x0=" + std::to_string(x0) + " m=" + std::to_string(m);
            h.expect(d.total() == direct, key + " reassembly");
            h.expect(d.lambda == lambda_expect, key + " lambda");
            h.expect(d.shift == static_cast<int>(s) - m && d.middle_index == x0 + m - static_cast<int>(s) &&
                         d.g_shift == x0,
                     key + " windows");
            bool all_ones = true;
            for (int x : xs) all_ones = all_ones && x == 1;
            if (all_ones) {
                h.expect(d.f.is_zero() && d.g.is_zero(), key + " trivial f,g");
            } else {
                h.expect(!d.f.is_zero() && d.f.max_degree() == static_cast<int>(s) - m - 1, key + " deg f");
                h.expect(!d.g.is_zero() && d.g.max_degree() + x0 == x0 + static_cast<int>(s) - m - 1, key + " deg g");
                h.expect(is_ac(d.f) && is_ac(d.g), key + " AC");
                auto monotone = [&](const HalfLaurent& p, bool up) {
                    auto [lo, v] = coeff_vector(p);
                    (void)lo;
                    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
                        if (up && !(abs(v[j]) < abs(v[j + 1]))) return false;
                        if (!up && !(abs(v[j]) > abs(v[j + 1]))) return false;
                    }
                    for (const Int& c : v)
                        if (!(abs(c) < abs(d.lambda))) return false;
                    return true;
                };
                h.expect(monotone(d.f, true) && monotone(d.g, false), key + " monotone bounds");
            }
            // independent checker: expand fully, split support into the
            // three fixed windows, and compare each piece
            {
                const int smm = static_cast<int>(s) - m;
                HalfLaurent f_win, mid_win, g_win;
                for (const auto& [half, coef] : direct.terms()) {
                    const int deg = half / 2;
                    if (deg < smm)
                        f_win += HalfLaurent::term(half, coef);
                    else if (deg < x0)
                        mid_win += HalfLaurent::term(half, coef);
                    else
                        g_win += HalfLaurent::term(half, coef);
                }
                h.expect(f_win == d.f &&
                             mid_win == (HalfLaurent::constant(d.lambda) * A(d.middle_index)).shifted(2 * d.shift) &&
                             g_win == d.g.shifted(2 * x0),
                         key + " window split");
            }
        };
        for (int x0 = 1; x0 <= 12; ++x0)
            for (int x1 = 1; x1 <= std::min(x0, 5); ++x1) check_one(x0, {x1});
        for (int x1 = 1; x1 <= 4; ++x1)
            for (int x2 = 1; x2 <= 4; ++x2)
                for (int extra = 0; extra <= 2; ++extra) check_one(x1 + x2 - 1 + extra, {x1, x2});
        for (int x1 = 1; x1 <= 3; ++x1)
            for (int x2 = 1; x2 <= 3; ++x2)
                for (int x3 = 1; x3 <= 3; ++x3)
                    for (int extra = 0; extra <= 2; ++extra) check_one(x1 + x2 + x3 - 2 + extra, {x1, x2, x3});
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "f parity dependence and g independence of x0");
        for (int x1 = 1; x1 <= 3; ++x1)
            for (int x2 = 1; x2 <= 3; ++x2) {
                const int s = x1 + x2;
                const int base = s - 1;
                ProdDecomposition d0 = prod_decompose(base, {x1, x2});
                ProdDecomposition d2 = prod_decompose(base + 2, {x1, x2});
                ProdDecomposition d1 = prod_decompose(base + 1, {x1, x2});
                h.expect(d0.f == d2.f, "f parity x1=" + std::to_string(x1) + " x2=" + std::to_string(x2));
                h.expect(d0.g == d2.g && d0.g == d1.g, "g independence x1=" + std::to_string(x1));
            }
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "lambda_extend matches prod_decompose");
        ProdDecomposition base = prod_decompose(5, {2});
        ProdDecomposition ext = lambda_extend(base.f, base.lambda, base.shift - 1, base.middle_index, base.g, 2);
        ProdDecomposition direct = prod_decompose(5, {2, 2});
        h.expect(ext.f == direct.f && ext.lambda == direct.lambda && ext.g == direct.g &&
                     ext.shift == direct.shift && ext.middle_index == direct.middle_index,
                 "A_5 A_2 extended by A_2");
        h.expect(direct.lambda == 4 && direct.f == HalfLaurent::from_coeffs(0, {1, -3}) &&
                     direct.g == HalfLaurent::from_coeffs(0, {-3, 1}),
                 "frozen A_5 A_2 A_2 blocks");
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "partition of t^k A_s");
        for (int k = 0; k <= 6; ++k)
            for (int s = 1; s <= 8; ++s)
                for (int g1 = std::max(1, k); g1 <= 8; ++g1)
                    for (int b2 = g1; b2 <= 9; ++b2) {
                        PartitionShift ps = partition_shift(k, s, g1, b2);
                        h.expect(ps.total(k, g1, b2) == A(s).shifted(2 * k),
                                 "k=" + std::to_string(k) + " s=" + std::to_string(s) + " g1=" +
                                     std::to_string(g1) + " b2=" + std::to_string(b2));
                    }
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "polynomial algebra properties");
        std::mt19937 rng(20240811u);
        std::uniform_int_distribution<int> coeff(-6, 6);
        std::uniform_int_distribution<int> expo(-6, 6);
        std::uniform_int_distribution<int> nterms(0, 5);
        auto random_poly = [&] {
            HalfLaurent p;
            const int n = nterms(rng);
            for (int j = 0; j < n; ++j) p += HalfLaurent::term(expo(rng), coeff(rng));
            return p;
        };
        for (int it = 0; it < 300; ++it) {
            HalfLaurent p = random_poly(), q = random_poly(), r = random_poly();
            h.expect(p * q == q * p, "commutativity");
            h.expect((p * q) * r == p * (q * r), "associativity");
            h.expect(invert_variable(invert_variable(p)) == p, "inversion involution");
            if (!q.is_zero()) h.expect(exact_div(p * q, q) == p, "division inverts multiplication");
            if (p.has_integer_exponents() && !p.is_zero()) {
                auto [lo, v] = coeff_vector(p);
                h.expect(HalfLaurent::from_coeffs(lo, v) == p, "coefficient vector round trip");
            }
            h.expect(parse_poly(serialize_poly(p)) == p, "serialization round trip");
        }
        for (int w = -20; w <= 20; ++w)
            if (w != 0) {
                HalfLaurent aw = A(w);
                HalfLaurent norm = w > 0 ? aw : aw.shifted(-aw.min_halves());
                h.expect(is_ac(norm), "A_w alternating, w=" + std::to_string(w));
            }
        out.push_back(h.finish());
    }
    {
        Harness h("identities", "j-form counts, reverse invariance, M recursion");
        auto binom = [](long long n, long long k) {
            if (k < 0 || k > n) return Int(0);
            Int r = 1;
            for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return r;
        };
        for (int r = 1; r <= 6; ++r)
            for (int j = 1; j <= 2 * r - 1; j += 2)
                h.expect(jform_count(r, j) == binom(r + (j - 1) / 2, j),
                         "count r=" + std::to_string(r) + " j=" + std::to_string(j));
        auto check_word = [&](const std::vector<int>& es) {
            const int r = static_cast<int>(es.size()) / 2;
            std::vector<int> rev{es[0]};
            for (std::size_t j = es.size() - 1; j >= 1; --j) rev.push_back(es[j]);
            h.expect(jform_M(es).M == jform_M(rev).M, "M reverse invariance r=" + std::to_string(r));
            // M(gamma) = -f_{2r} - sum_j M(eta_{j-1}) f_{2j-1} f_{2r} + M(eta_{r-1})
            Int rhs = -Int(es[2 * r - 1]);
            for (int j = 2; j <= r; ++j) {
                std::vector<int> eta(es.begin(), es.begin() + 2 * (j - 1));
                rhs -= jform_M(eta).M * es[2 * j - 2] * es[2 * r - 1];
            }
            std::vector<int> eta(es.begin(), es.begin() + 2 * (r - 1));
            rhs += jform_M(eta).M;
            h.expect(jform_M(es).M == rhs, "M recursion r=" + std::to_string(r));
        };
        for (int r = 2; r <= 4; ++r) { // exhaustive over exponents <= 4
            std::vector<int> es(static_cast<std::size_t>(2 * r), 1);
            while (true) {
                check_word(es);
                int pos = 2 * r - 1;
                while (pos >= 0 && es[static_cast<std::size_t>(pos)] == 4) es[static_cast<std::size_t>(pos--)] = 1;
                if (pos < 0) break;
                ++es[static_cast<std::size_t>(pos)];
            }
        }
        std::mt19937 rng(7u);
        std::uniform_int_distribution<int> expo(1, 4);
        for (int trial = 0; trial < 300; ++trial) { // sampled at rank 5
            std::vector<int> es;
            for (int j = 0; j < 10; ++j) es.push_back(expo(rng));
            check_word(es);
        }
        out.push_back(h.finish());
    }
    (void)opt;
    return out;
}

// ---------------------------------------------------------------------------
// closed-forms suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_closed_forms(const VerifyOptions& opt) {
    using namespace verify_detail;
    std::vector<CheckResult> out;
    const int limit = opt.max_crossings;
    SkeinOracle oracle(limit);
    SkeinOracle deep(64); // skein-tree oracle for closed-form cross-checks past the state-sum limit

    auto oracle_jones_checked = [&](const BraidWord& w, Harness& h) {
        HalfLaurent vk = oracle.kauffman_jones(w);
        HalfLaurent vh = specialize(oracle.homfly(w), SkeinTarget::jones);
        h.expect(vk == vh, [&] { return "bracket vs Homflypt specialization at " + render_braid(w); });
        return vk;
    };

    {
        Harness h("closed-forms", "two-braid torus closed forms vs oracle");
        for (int w = -std::min(limit, 10); w <= std::min(limit, 12); ++w) {
            BraidWord b(2, {{1, w}});
            h.expect(jones_2braid(w) == oracle_jones_checked(b, h),
                     "V(T(2," + std::to_string(w) + "))");
            h.expect(alexander_2braid(w) == specialize(oracle.conway(b), SkeinTarget::alexander),
                     "Delta(T(2," + std::to_string(w) + "))");
        }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "three-braid Jones via Alexander vs oracle");
        for (int rank = 1; rank <= 3; ++rank)
            for (int w = 2 * rank; w <= std::min(limit, 14); ++w)
                alternating_compositions(w, rank, [&](const std::vector<int>& es) {
                    BraidWord b = word_from_exponents(es);
                    h.expect(jones_3braid(b, oracle) == oracle_jones_checked(b, h),
                             [&] { return "word " + render_braid(b); });
                });
        for (const BraidWord& b : random_words(60, 3, 5, 3, 42u))
            if (b.crossings() <= std::min(limit, 12))
                h.expect(jones_3braid(b, oracle) == oracle_jones_checked(b, h),
                         [&] { return "word " + render_braid(b); });
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "T(3,m) torus closed form vs oracle");
        for (int m = 1; 2 * m <= limit; ++m)
            h.expect(jones_torus3(m) == oracle_jones_checked(xyz_word(0, 0, m), h),
                     "m=" + std::to_string(m));
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "syllable recursions for Homflypt, Conway, Jones");
        std::mt19937 rng(11u);
        for (const BraidWord& beta : random_words(40, 3, 3, 2, 99u)) {
            std::uniform_int_distribution<int> gen(1, 2);
            std::uniform_int_distribution<int> edist(0, 5);
            const int i = gen(rng), e = edist(rng);
            BraidWord full = beta;
            if (e != 0) full.append(i, e);
            BraidWord one = beta;
            one.append(i, 1);
            if (full.crossings() > 12 || beta.crossings() + 1 > 12) continue;
            const TwoVarPoly pe = deep.homfly(full);
            const TwoVarPoly p1 = deep.homfly(one);
            const TwoVarPoly p0 = deep.homfly(beta);
            auto [ce, he_] = torus_two_strand(e);
            auto [ce1, he1_] = torus_two_strand(e - 1);
            (void)he_;
            (void)he1_;
            h.expect(pe == p1.shifted(e - 1, 0) * ce + p0.shifted(e, 0) * ce1,
                     [&] { return "Homflypt recursion at " + render_braid(full); });
            h.expect(pe.at_v_one() == p1.at_v_one() * ce + p0.at_v_one() * ce1,
                     [&] { return "Conway recursion at " + render_braid(full); });
            h.expect(syllable_step_jones(beta, i, e, deep) == jones_3braid(full, deep),
                     [&] { return "Jones recursion at " + render_braid(full); });
        }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "V*/V** shape and symmetry for positive braids");
        for (int rank = 1; 2 * rank <= 16; ++rank)
            for (int w = 2 * rank; w <= 16; ++w)
                alternating_compositions(w, rank, [&](const std::vector<int>& es) {
                    VStarPair vp = vstar(word_from_exponents(es), deep);
                    h.expect(vp.vstarstar.has_value(), "V** extraction");
                    const HalfLaurent& vss = *vp.vstarstar;
                    if (!vss.is_zero()) {
                        bool sym = true;
                        const int jlo = std::min(vss.min_degree(), w - 2 - vss.max_degree());
                        const int jhi = std::max(vss.max_degree(), w - 2 - vss.min_degree());
                        for (int j = jlo; j <= jhi; ++j)
                            sym = sym && vss.coeff(j) == Int(sign_pow(w)) * vss.coeff(w - j - 2);
                        h.expect(sym, [&] {
                            return "V** symmetry at " + render_braid(word_from_exponents(es));
                        });
                        if (rank >= 2)
                            h.expect(vss.max_degree() <= w - 3, [&] {
                                return "deg V** bound at " + render_braid(word_from_exponents(es));
                            });
                    }
                });
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "rank-two V* grouping: parity in a, B2 independent of a");
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d) {
                    Rank2VStar prev1 = rank2_vstar(1, b, c, d);
                    Rank2VStar prev2 = rank2_vstar(2, b, c, d);
                    for (int a = 1; a <= 6; ++a) {
                        Rank2VStar cur = rank2_vstar(a, b, c, d);
                        const std::string key = "(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + "," + std::to_string(d) + ")";
                        h.expect(cur.total() == vstar(word_from_exponents({a, b, c, d}), deep).vstar,
                                 key + " reassembly");
                        const Rank2VStar& same_parity = (a % 2 == 1) ? prev1 : prev2;
                        h.expect(cur.B1 == same_parity.B1, key + " B1 parity");
                        h.expect(cur.B2 == prev1.B2, key + " B2 independence");
                    }
                }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "full-twist decompositions vs assembled words");
        std::vector<BraidWord> gammas = random_words(25, 3, 4, 2, 7u);
        gammas.push_back(BraidWord::identity(3));
        gammas.push_back(parse_braid("B3: s2 s1"));
        gammas.push_back(parse_braid("B3: s1^3 s2"));
        gammas.push_back(parse_braid("B3: s1^9 s2"));
        for (const BraidWord& gamma : gammas) {
            if (gamma.crossings() > 8) continue;
            for (int a = -3; a <= 3; ++a) {
                BraidWord assembled = assemble_fulltwists(a, gamma);
                FullTwistJones ft = jones_fulltwists(a, gamma, deep);
                h.expect(ft.reconstruct() == jones_3braid(assembled, deep), [&] {
                    return "Jones full twists a=" + std::to_string(a) + " gamma=" + render_braid(gamma);
                });
                if (assembled.crossings() <= limit)
                    h.expect(ft.reconstruct() == oracle.kauffman_jones(assembled), [&] {
                        return "Jones full twists (bracket) a=" + std::to_string(a) + " gamma=" + render_braid(gamma);
                    });
                if (a != 0)
                    h.expect(homfly_fulltwists(a, gamma, deep) == deep.homfly(assembled), [&] {
                        return "Homflypt full twists a=" + std::to_string(a) + " gamma=" + render_braid(gamma);
                    });
            }
        }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "V* of sigma_1^x sigma_2^y [1,3]^z vs oracle");
        for (int z = 0; z <= opt.z_max; ++z)
            for (int x = 0; x <= opt.x_max; ++x)
                for (int y = 0; y <= opt.y_max; ++y) {
                    const int crossings = x + y + 2 * z;
                    if (crossings > 24) continue;
                    VStarPair vp = jones_xy_fulltwists(x, y, z);
                    const BraidWord w = xyz_word(x, y, z);
                    const std::string key =
                        "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
                    if (crossings <= std::min(limit, 14))
                        h.expect(vp.reconstruct() == oracle_jones_checked(w, h), key + " bracket");
                    else
                        h.expect(vp.reconstruct() == jones_3braid(w, deep), key + " skein");
                }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "two-tier T-link Jones vs oracle");
        for (int x = 0; x <= 8; ++x)
            for (int s = 1; s <= 8; ++s) {
                BraidWord w = BraidWord::identity(3);
                if (x) w.append(1, x);
                for (int j = 0; j < s; ++j) {
                    w.append(1, 1);
                    w.append(2, 1);
                }
                const std::string key = "T((2," + std::to_string(x) + "),(3," + std::to_string(s) + "))";
                if (w.crossings() <= std::min(limit, 14))
                    h.expect(jones_2tier_tlink(x, s) == oracle_jones_checked(w, h), key);
                else
                    h.expect(jones_2tier_tlink(x, s) == jones_3braid(w, deep), key);
            }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "second-block closed form for x,y >= 3 full twists");
        for (int x = 3; x <= 8; ++x)
            for (int y = 3; y <= x; ++y)
                for (int z = 3; z <= 9; z += 3) {
                    Rank1FullTwistBlocks bl = rank1_fulltwist_blocks(x, y, z);
                    h.expect(bl.vstar() == jones_xy_fulltwists(x, y, z).vstar,
                             "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                 std::to_string(z) + ")");
                }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "two-strand torus recursions vs skein oracle");
        for (int e = 0; e <= 10; ++e) {
            auto [cn, hp] = torus_two_strand(e);
            BraidWord b(2, {{1, e}});
            h.expect(hp == deep.homfly(b), "P(T_" + std::to_string(e) + ")");
            h.expect(cn == deep.conway(b), "Conway(T_" + std::to_string(e) + ")");
            auto [cm, hm] = torus_two_strand(-e);
            BraidWord bm(2, {{1, -e}});
            h.expect(hm == deep.homfly(bm) && cm == deep.conway(bm), "mirror T_" + std::to_string(-e));
        }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "skein residual, specialization and mirror");
        std::mt19937 rng(5u);
        for (const BraidWord& b : random_words(40, 3, 4, 2, 3u)) {
            if (b.crossings() > std::min(limit, 12) || b.empty()) continue;
            // skein residual at a random crossing of a random letter
            std::uniform_int_distribution<int> pick(0, static_cast<int>(b.letters().size()) - 1);
            const int li = pick(rng);
            std::vector<Letter> plus, minus, smooth;
            for (int j = 0; j < static_cast<int>(b.letters().size()); ++j) {
                Letter l = b.letters()[static_cast<std::size_t>(j)];
                if (j == li) {
                    const int e = l.exponent;
                    const int sgn = e > 0 ? 1 : -1;
                    Letter rest{l.index, e - sgn};
                    // D+ has the distinguished crossing positive
                    plus.push_back(rest);
                    plus.push_back({l.index, 1});
                    minus.push_back(rest);
                    minus.push_back({l.index, -1});
                    smooth.push_back(rest);
                } else {
                    plus.push_back(l);
                    minus.push_back(l);
                    smooth.push_back(l);
                }
            }
            TwoVarPoly lhs = deep.homfly(BraidWord(3, plus));
            TwoVarPoly rhs = deep.homfly(BraidWord(3, smooth)).shifted(1, 1) +
                             deep.homfly(BraidWord(3, minus)).shifted(2, 0);
            h.expect(lhs == rhs, [&] { return "skein residual at " + render_braid(b); });
            h.expect(specialize(oracle.homfly(b), SkeinTarget::jones) == oracle.kauffman_jones(b),
                     [&] { return "specialization at " + render_braid(b); });
            h.expect(oracle.kauffman_jones(b.mirrored()) == invert_variable(oracle.kauffman_jones(b)),
                     [&] { return "mirror rule at " + render_braid(b); });
        }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "braid moves preserve the closure invariants");
        std::mt19937 rng(17u);
        for (const BraidWord& b : random_words(40, 3, 4, 2, 23u)) {
            if (b.crossings() > std::min(limit, 12)) continue;
            const HalfLaurent v = oracle.kauffman_jones(b);
            const ClosureShape s = closure_shape(b);
            std::uniform_int_distribution<int> rot(0, 6);
            const BraidWord rotated = cyclic_rotate(b, rot(rng));
            const BraidWord reflected = reflect(b);
            const BraidWord reduced = free_reduce(b);
            h.expect(oracle.kauffman_jones(rotated) == v, [&] { return "rotation at " + render_braid(b); });
            h.expect(oracle.kauffman_jones(reflected) == v, [&] { return "reflection at " + render_braid(b); });
            h.expect(oracle.kauffman_jones(reduced) == v, [&] { return "free reduction at " + render_braid(b); });
            h.expect(closure_shape(rotated).writhe == s.writhe && closure_shape(reflected).writhe == s.writhe &&
                         closure_shape(reduced).writhe == s.writhe,
                     [&] { return "writhe invariance at " + render_braid(b); });
            h.expect(closure_shape(rotated).components == s.components &&
                         closure_shape(reflected).components == s.components,
                     [&] { return "component invariance at " + render_braid(b); });
        }
        // reverse on alternating positive words
        for (int w = 8; w <= 12; ++w)
            alternating_compositions(w, 2, [&](const std::vector<int>& es) {
                BraidWord b = word_from_exponents(es);
                h.expect(oracle.kauffman_jones(reverse(b)) == oracle.kauffman_jones(b),
                         [&] { return "reverse at " + render_braid(b); });
            });
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "Markov destabilization of tall twist braids");
        for (int m = 2; m <= 4; ++m)
            for (int mx = m; mx <= 5; ++mx)
                for (int rho = 1; rho <= m; ++rho)
                    for (int ge = 0; ge <= 4; ge += 2) {
                        BraidWord gamma = BraidWord::identity(m);
                        if (ge > 0) gamma.append(1, ge);
                        if (ge > 2 && m >= 3) gamma.append(2, 1);
                        BraidWord tall = BraidWord::identity(mx);
                        tall.append(BraidWord(mx, gamma.letters()));
                        for (int j = 0; j < rho; ++j) tall.append(interval_word(mx, 1, mx));
                        if (tall.crossings() > std::min(limit, 12)) continue;
                        BraidWord reduced = destabilize_reduce(gamma, mx, rho);
                        h.expect(oracle.kauffman_jones(reduced) == oracle.kauffman_jones(tall),
                                 "m=" + std::to_string(m) + " m+x=" + std::to_string(mx) + " rho=" +
                                     std::to_string(rho) + " gamma=" + render_braid(gamma));
                    }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "first-block/gap/second-block partition, rank two");
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d)
                    for (int a = b + c + d; a <= 12; ++a) {
                        BlockDecomp bd = rank2_blocks(a, b, c, d);
                        const std::string key = "(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + "," + std::to_string(d) + ")";
                        h.expect(bd.reconstruct() == vstar(word_from_exponents({a, b, c, d}), deep).vstar,
                                 key + " reconstruction");
                        h.expect(bd.gap_multiplier == jform_M({a, b, c, d}).M, key + " gap = M");
                        h.expect(bd.B1.is_zero() || bd.B1.max_degree() <= bd.w_star, key + " deg B1");
                        h.expect(bd.B2.is_zero() || bd.B2.max_degree() <= bd.w_star - 3, key + " deg B2");
                    }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "first-block/gap/second-block partition, rank three");
        for (int e2 = 1; e2 <= 3; ++e2)
            for (int e3 = 1; e3 <= 3; ++e3)
                for (int e4 = 1; e4 <= 3; ++e4)
                    for (int e5 = 1; e5 <= 3; ++e5)
                        for (int e6 = 1; e6 <= 3; ++e6) {
                            const int wstar = e2 + e3 + e4 + e5 + e6;
                            BlockDecomp base = general_blocks({wstar, e2, e3, e4, e5, e6}, deep);
                            BlockDecomp odd = general_blocks({wstar + 1, e2, e3, e4, e5, e6}, deep);
                            BlockDecomp even = general_blocks({wstar + 2, e2, e3, e4, e5, e6}, deep);
                            const std::string key = "(e2..e6)=(" + std::to_string(e2) + "," +
                                                    std::to_string(e3) + "," + std::to_string(e4) + "," +
                                                    std::to_string(e5) + "," + std::to_string(e6) + ")";
                            h.expect(base.B2 == odd.B2 && base.B2 == even.B2, key + " B2 e1-independence");
                            h.expect(base.B1 == even.B1, key + " B1 parity");
                            h.expect(base.B1.is_zero() || base.B1.max_degree() <= base.w_star, key + " deg B1");
                            h.expect(base.B2.is_zero() || base.B2.max_degree() <= base.w_star - 3,
                                     key + " deg B2");
                        }
        out.push_back(h.finish());
    }
    {
        Harness h("closed-forms", "condense certifies closure equality");
        for (int w = 4; w <= 13; ++w)
            for (int rank = 2; rank <= 3; ++rank)
                alternating_compositions(w, rank, [&](const std::vector<int>& es) {
                    BraidWord b = word_from_exponents(es);
                    CondenseResult cr = condense(b);
                    BraidWord assembled = assemble_fulltwists(cr.a, cr.gamma);
                    h.expect(jones_3braid(b, deep) == jones_3braid(assembled, deep),
                             [&] { return "condense at " + render_braid(b); });
                    if (cr.gamma.letters().size() >= 4) {
                        h.expect(is_condensed(cr.gamma),
                                 [&] { return "condense output shape at " + render_braid(b); });
                    }
                });
        out.push_back(h.finish());
    }
    return out;
}

// ---------------------------------------------------------------------------
// classification suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_classification(const VerifyOptions& opt) {
    using namespace verify_detail;
    std::vector<CheckResult> out;
    SkeinOracle oracle(opt.max_crossings);

    {
        Harness h("classification", "Jones is a complete invariant on the canonical grid");
        const auto grid = census_grid(opt.x_max, opt.y_max, opt.z_max);
        const auto polys = parallel_map_indexed<HalfLaurent>(grid.size(), opt.jobs, [&](std::size_t i) {
            return jones_xy_fulltwists(grid[i].x, grid[i].y, grid[i].z).reconstruct();
        });
        std::map<HalfLaurent, CanonicalForm3> seen;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            auto [it, inserted] = seen.emplace(polys[i], grid[i]);
            h.expect(inserted, [&] {
                return "Jones collision between " + render_canonical(it->second) + " and " +
                       render_canonical(grid[i]);
            });
        }
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "canonical rewrites preserve the Jones polynomial");
        for (int z = 0; z <= opt.z_max; ++z)
            for (int x = 0; x <= opt.x_max; ++x)
                for (int y = 0; y <= x; ++y) {
                    const std::string key =
                        "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
                    try {
                        CanonicalForm3 c = canonical_form(x, y, z);
                        h.expect(jones_xy_fulltwists(x, y, z).reconstruct() ==
                                     jones_xy_fulltwists(c.x, c.y, c.z).reconstruct(),
                                 key + " vs " + render_canonical(c));
                    } catch (const NotRepresentable&) {
                        // degenerate inputs: the closure has braid index <= 2 or is composite
                        const bool degenerate = z == 0 || z == 1 || (z == 2 && std::min(x, y) == 0);
                        h.expect(degenerate, key + " unexpected rejection");
                    }
                }
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "two-tier T((3,y),(n,3)) families collapse as listed");
        for (int y = 1; y <= 9; ++y)
            for (int n = 4; n <= 12; ++n) {
                TLink L({{3, y}, {n, 3}});
                TierReduction red = tier_reduce(L);
                const std::string key = render_tlink(L);
                h.expect(red.canonical.has_value(), key + " reduces");
                if (!red.canonical) continue;
                if (y % 3 == 0 || n % 3 == 0) {
                    h.expect(red.torus.has_value() && red.torus->second == n + y, key + " torus T(3,n+y)");
                } else {
                    h.expect(tlink_jones_closed(L) ==
                                 jones_xy_fulltwists(red.canonical->x, red.canonical->y, red.canonical->z)
                                     .reconstruct(),
                             key + " closed Jones consistent");
                }
            }
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "three- and four-tier duplicate lists collapse");
        // 3-tier symmetric list: sigma_1^x sigma_2^y [1,3]^z <-> T((2,x),(3,z-2),(3+y,2)), etc.
        for (int x = 2; x <= 5; ++x)
            for (int y = 2; y <= 5; ++y)
                for (int z = 3; z <= 9; z += 3) {
                    if (x == 2 && y == 2) continue;
                    const CanonicalForm3 want = canonical_form(x, y, z);
                    std::vector<TLink> forms = {
                        TLink({{2, x}, {3, z - 2}, {3 + y, 2}}),
                        TLink({{2, y}, {3, z - 2}, {3 + x, 2}}),
                        TLink({{2, x - 1}, {3, z - 1}, {2 + y, 2}}),
                        TLink({{2, y - 1}, {3, z - 1}, {2 + x, 2}}),
                    };
                    if (z >= 4) forms.push_back(TLink({{2, y}, {z, 1}, {x + z, 2}}));
                    for (const TLink& L : forms) {
                        TierReduction red = tier_reduce(L);
                        h.expect(red.canonical && *red.canonical == want, [&] {
                            return render_tlink(L) + " -> " +
                                   (red.canonical ? render_canonical(*red.canonical) : "none") + " want " +
                                   render_canonical(want);
                        });
                    }
                }
        // 4-tier general form reduces to a 2-/3-tier equal link
        for (int s1 = 1; s1 <= 3; ++s1)
            for (int s2 = 1; s2 <= 3; ++s2)
                for (int r3 = 4; r3 <= 6; ++r3)
                    for (int r4 = r3 + 1; r4 <= 8; ++r4) {
                        TLink L({{2, s1}, {3, s2}, {r3, 1}, {r4, 2}});
                        TierReduction red = tier_reduce(L);
                        h.expect(red.canonical.has_value(), render_tlink(L) + " reduces");
                        if (red.canonical) {
                            const auto forms = classification_tlink_forms(*red.canonical);
                            bool any = false;
                            for (const std::string& f : forms)
                                any = any || equal_links(parse_tlink(f), L);
                            h.expect(any, render_tlink(L) + " equals a listed form");
                        }
                    }
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "k7_39 chain and S=37 symmetry family");
        h.expect(equal_links(parse_tlink("T((3,3),(11,2))"), parse_tlink("T((2,8),(3,5))")), "k7_39 chain");
        h.expect(tier_reduce(parse_tlink("T((3,3),(11,2))")).canonical == CanonicalForm3{11, 1, 3},
                 "k7_39 canonical");
        const auto fam = symmetry_family(parse_tlink("T((7,27),(10,7))"));
        const std::vector<std::string> expected = {"T((7,27),(10,7))", "T((7,20),(17,7))",
                                                   "T((7,13),(24,7))", "T((7,6),(31,7))",
                                                   "T((7,10),(27,7))"};
        for (const std::string& e : expected)
            h.expect(std::find(fam.begin(), fam.end(), parse_tlink(e)) != fam.end(), "family member " + e);
        for (const TLink& L : fam)
            h.expect(equal_links(L, parse_tlink("T((7,27),(10,7))")), "family equality " + render_tlink(L));
        // the two S=37 residue families share no parameter pair
        std::set<std::pair<int, int>> eq29, eq30;
        for (const TLink& L : fam) {
            const int n = L.pairs.size() == 2 ? L.pairs[1].first : 0;
            if (n % 7 == 3) eq29.insert({L.pairs[0].second, n});
            if (n % 7 == 6) eq30.insert({L.pairs[0].second, n});
        }
        for (const auto& p : eq29) h.expect(!eq30.count(p), "family parameter disjointness");
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "equal-links pairs from the two-tier analysis");
        for (int y = 1; y <= 6; ++y)
            for (int rho = 5; rho <= 11; rho += 3) { // rho = 2 mod 3
                h.expect(equal_links(TLink({{2, 2 + y}, {3, rho - 1}}), TLink({{2, y}, {3, rho}})),
                         "T((2,2+y),(3,rho-1)) = T((2,y),(3,rho)) at y=" + std::to_string(y) +
                             " rho=" + std::to_string(rho));
            }
        h.expect(!equal_links(parse_tlink("T((2,4),(3,4))"), parse_tlink("T((2,6),(3,4))")),
                 "k3_1 distinct from k5_11");
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "duality and tier reduction agree with the oracle");
        std::vector<TLink> grid;
        for (int r1 = 2; r1 <= 8; ++r1)
            for (int s1 = 1; s1 <= 8; ++s1) {
                grid.push_back(TLink({{r1, s1}}));
                for (int r2 = r1 + 1; r2 <= 8; ++r2)
                    for (int s2 = 1; s2 <= 8; ++s2) {
                        grid.push_back(TLink({{r1, s1}, {r2, s2}}));
                        for (int r3 = r2 + 1; r3 <= 8; ++r3)
                            for (int s3 = 1; s3 <= 3; ++s3) {
                                grid.push_back(TLink({{r1, s1}, {r2, s2}, {r3, s3}}));
                                for (int r4 = r3 + 1; r4 <= 8; ++r4)
                                    for (int s4 = 1; s4 <= 2; ++s4)
                                        grid.push_back(TLink({{r1, s1}, {r2, s2}, {r3, s3}, {r4, s4}}));
                            }
                    }
            }
        std::vector<const TLink*> testable;
        for (const TLink& L : grid)
            if (to_braid(L).crossings() <= opt.max_crossings) testable.push_back(&L);
        const auto results = parallel_map_indexed<std::string>(
            testable.size(), opt.jobs, [&](std::size_t i) -> std::string {
                const TLink& L = *testable[i];
                SkeinOracle local(opt.max_crossings);
                const HalfLaurent direct = local.kauffman_jones(to_braid(L));
                const TLink N = normalize(L);
                if (to_braid(N).crossings() <= opt.max_crossings &&
                    local.kauffman_jones(to_braid(N)) != direct)
                    return render_tlink(L) + ": Markov normalization changed the Jones polynomial";
                const bool unknot = (N.tiers() == 1 && N.pairs[0].second == 1);
                if (!unknot) {
                    const TLink D = dual(N);
                    if (to_braid(D).crossings() <= opt.max_crossings &&
                        local.kauffman_jones(to_braid(D)) != direct)
                        return render_tlink(L) + ": dual Jones mismatch";
                }
                const int b = braid_index(L).b;
                if (b <= 3 && tlink_jones_closed(L) != direct)
                    return render_tlink(L) + ": closed-form Jones mismatch";
                if (!max_tiers_check(L)) return render_tlink(L) + ": tier bound violated";
                if (mfw_bound(local.homfly(to_braid(L))) != b)
                    return render_tlink(L) + ": MFW bound disagrees with the braid index rule";
                return {};
            });
        for (const std::string& r : results) h.expect(r.empty(), r);
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "braid index rule equals the MFW bound on the census");
        const auto grid = census_grid(std::min(opt.x_max, 6), std::min(opt.y_max, 6), std::min(opt.z_max, 9));
        SkeinOracle deep(40);
        const auto results =
            parallel_map_indexed<std::string>(grid.size(), opt.jobs, [&](std::size_t i) -> std::string {
                const CanonicalForm3& c = grid[i];
                const BraidWord w = canonical_to_braid(c);
                if (w.crossings() > 20) return {};
                const int mfw = mfw_bound(deep.homfly(w));
                if (mfw != 3) return render_canonical(c) + ": MFW " + std::to_string(mfw);
                for (const std::string& form : classification_tlink_forms(c)) {
                    if (braid_index(parse_tlink(form)).b != 3)
                        return form + ": braid index rule disagrees";
                    if (!max_tiers_check(parse_tlink(form))) return form + ": tier bound";
                }
                return {};
            });
        for (const std::string& r : results) h.expect(r.empty(), r);
        out.push_back(h.finish());
    }
    {
        Harness h("classification", "census determinism and round trips");
        const auto rows1 = run_census(3, 3, 6, 1);
        const auto rows4 = run_census(3, 3, 6, 4);
        h.expect(census_to_csv(rows1) == census_to_csv(rows4), "csv identical across worker counts");
        h.expect(census_to_json(rows1) == census_to_json(rows4), "json identical across worker counts");
        for (const CensusRow& r : rows1) {
            CensusRow back = parse_census_csv_row(census_row_csv(r));
            h.expect(back.canonical == r.canonical && back.jones == r.jones &&
                         back.tlink_forms == r.tlink_forms && back.torus == r.torus,
                     "csv row round trip " + render_canonical(r.canonical));
            h.expect(r.jones == jones_xy_fulltwists(r.canonical.x, r.canonical.y, r.canonical.z).reconstruct(),
                     "jones field reconstructs " + render_canonical(r.canonical));
        }
        for (const std::string& text : {std::string("B3: s1^3 s2 [1,3]^2"), std::string("T((2,4),(3,4))")}) {
            if (text[0] == 'B')
                h.expect(parse_braid(render_braid(parse_braid(text))) == parse_braid(text),
                         "braid round trip");
            else
                h.expect(parse_tlink(render_tlink(parse_tlink(text))) == parse_tlink(text),
                         "tlink round trip");
        }
        out.push_back(h.finish());
    }
    return out;
}

// ---------------------------------------------------------------------------
// conjecture suite (reported separately; never gates the other suites)
// ---------------------------------------------------------------------------

struct ConjectureScanResult {
    long long scanned = 0;
    std::vector<ConjectureReport> counterexamples;
};

inline ConjectureScanResult conjecture_scan(int max_writhe, int jobs = 1) {
    using namespace verify_detail;
    std::vector<std::vector<int>> words;
    for (int w = 4; w <= max_writhe; ++w)
        for (int rank = 2; 2 * rank <= w; ++rank)
            alternating_compositions(w, rank, [&](const std::vector<int>& es) {
                if (!detail::is_condensed_seq(es)) return;
                // dedup by the dihedral class of the cyclic exponent sequence
                std::vector<int> best = es;
                for (const auto& img : detail::dihedral_images(es))
                    if (img < best) best = img;
                if (best == es) words.push_back(es);
            });
    SkeinOracle deep(4 * max_writhe);
    const auto reports = parallel_map_indexed<ConjectureReport>(words.size(), jobs, [&](std::size_t i) {
        return conjecture_check(word_from_exponents(words[i]), deep);
    });
    ConjectureScanResult out;
    out.scanned = static_cast<long long>(words.size());
    for (const ConjectureReport& r : reports)
        if (!r.all_pass()) out.counterexamples.push_back(r);
    return out;
}

inline std::vector<CheckResult> verify_conjecture(const VerifyOptions& opt) {
    ConjectureScanResult scan = conjecture_scan(opt.conjecture_max_writhe, opt.jobs);
    CheckResult r;
    r.suite = "conjecture";
    r.name = "coefficient conjecture scan, writhe <= " + std::to_string(opt.conjecture_max_writhe);
    r.conjecture_only = true;
    r.cases = scan.scanned;
    r.pass = scan.counterexamples.empty();
    if (!r.pass) {
        std::ostringstream os;
        os << scan.counterexamples.size() << " counterexample(s); first: ";
        const ConjectureReport& c = scan.counterexamples.front();
        os << c.word << " w=" << c.writhe << " r=" << c.rank << " trivial=" << c.trivial_count
           << " V**=" << serialize_poly(c.vss) << " sign=" << c.sign_pattern << " degree=" << c.degree_claim
           << " dense=" << c.dense_support;
        r.detail = os.str();
    }
    return {r};
}

inline std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "identities") return verify_identities(opt);
    if (suite == "closed-forms") return verify_closed_forms(opt);
    if (suite == "classification") return verify_classification(opt);
    if (suite == "conjecture") return verify_conjecture(opt);
    if (suite == "all") {
        std::vector<CheckResult> all = verify_identities(opt);
        for (auto&& r : verify_closed_forms(opt)) all.push_back(r);
        for (auto&& r : verify_classification(opt)) all.push_back(r);
        for (auto&& r : verify_conjecture(opt)) all.push_back(r);
        return all;
    }
    throw ParameterOutOfRange("unknown verify suite: " + suite);
}

} // namespace skein3
