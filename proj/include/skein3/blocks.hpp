#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "skein3/alexander_family.hpp"
#include "skein3/braid_word.hpp"
#include "skein3/errors.hpp"
#include "skein3/jones3.hpp"

namespace skein3 {

/// Sums of j-forms of an alternating word with twist exponents e_1..e_{2r}:
/// products over subscript sequences k_1 < ... < k_j alternating
/// even, odd, even, ... (so each j-form starts on a sigma_2 exponent).
/// m[j] is the sum for odd j; M = sum_k eps_k m_{2k-1}.
struct JFormSums {
    std::vector<Int> m; // indexed by j, odd entries meaningful
    Int M = 0;
};

inline JFormSums jform_M(const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    if (n < 2 || n % 2 != 0) throw PreconditionViolated("jform_M: need exponents e_1..e_{2r} with r >= 1");
    std::vector<Int> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= n; ++k) {
        const bool even_subscript = (k % 2 == 0);
        for (int j = n; j >= 1; --j) {
            const bool j_wants_even = (j % 2 == 1); // k_j has parity of j+1
            if (j_wants_even == even_subscript) dp[j] += dp[j - 1] * exponents[k - 1];
        }
    }
    JFormSums out;
    out.m = dp;
    for (int j = 1; j <= n; j += 2) out.M += Int(sign_pow((j + 1) / 2)) * dp[j];
    return out;
}

/// Number of j-forms for rank r and odd j (same recursion with all
/// exponents one); used against the binomial count in tests.
inline Int jform_count(int r, int j) {
    JFormSums s = jform_M(std::vector<int>(static_cast<std::size_t>(2 * r), 1));
    return s.m[static_cast<std::size_t>(j)];
}

/// Block structure of V* for a highly twisted positive three-braid:
///   V* = B1 + t^{w*+1} eps_{w*} gap_multiplier A_{e1+1-w*} + t^{e1+2} B2.
struct BlockDecomp {
    HalfLaurent B1;
    Int gap_multiplier = 0;
    int gap_start = 0; // w* + 1
    int gap_index = 0; // e1 + 1 - w*
    HalfLaurent B2;
    int w_star = 0;
    int e1 = 0;

    HalfLaurent gap_poly() const {
        return (Int(sign_pow(w_star)) * gap_multiplier * A(gap_index)).shifted(2 * gap_start);
    }
    HalfLaurent reconstruct() const { return B1 + gap_poly() + B2.shifted(2 * (e1 + 2)); }
};

/// Explicit component formulas for rank two, sigma_1^a sigma_2^b sigma_1^c
/// sigma_2^d with a >= w* = b+c+d; gap multiplier bcd - b - d.
inline BlockDecomp rank2_blocks(int a, int b, int c, int d) {
    if (b < 1 || c < 1 || d < 1) throw PreconditionViolated("rank2_blocks: exponents must be positive");
    const int wstar = b + c + d;
    if (a < wstar) throw PreconditionViolated("rank2_blocks: need a >= b + c + d");
    const int w = a + wstar;

    ProdDecomposition abcd = prod_decompose(a, {b, c, d});
    const HalfLaurent f_beta = abcd.f;
    const HalfLaurent g_beta = abcd.g;

    BlockDecomp out;
    out.w_star = wstar;
    out.e1 = a;
    out.gap_start = wstar + 1;
    out.gap_index = a + 1 - wstar;
    out.gap_multiplier = Int(b) * c * d - b - d;

    const HalfLaurent AbAd = A(b) * A(d);
    out.B1 = Int(sign_pow(w)) * HalfLaurent::from_coeffs(0, {1, 0, 1}) +
             HalfLaurent::term(2 * (b + d + 1), sign_pow(a + c)) +
             (Int(sign_pow(a)) * AbAd).shifted(2 * (c + 2)) +
             (Int(2 * sign_pow(a + c - 1)) * AbAd).shifted(4) +
             (Int(sign_pow(a + c + d)) * L_sum(b - 2)).shifted(4) +
             (Int(b) * sign_pow(a) * A(c + d)).shifted(2 * (b + 1)) +
             (Int(sign_pow(a + b + c)) * L_sum(d - 2)).shifted(4) +
             (Int(d) * sign_pow(a) * A(b + c)).shifted(2 * (d + 1)) + f_beta.shifted(6) +
             HalfLaurent::term(2 * wstar, Int(sign_pow(a + 1)) * b * c * d);
    out.B2 = HalfLaurent::term(2 * (c - 1), sign_pow(b + d)) + Int(sign_pow(d)) * (A(b) * A(c)) +
             Int(sign_pow(c)) * AbAd + Int(sign_pow(b)) * (A(c) * A(d)) +
             Int(sign_pow(c + d)) * R_sum(b - 2) + Int(sign_pow(b + c)) * R_sum(d - 2) +
             HalfLaurent::constant(Int(sign_pow(1 + wstar)) * b * c * d) + g_beta.shifted(2);
    return out;
}

/// General-rank block split: the gap is pinned by M(beta,0) and the two
/// blocks fall out of V* by subtracting the gap and cutting the support at
/// the fixed windows [0, w*] and [e1+2, ...).  Any support left strictly
/// inside the gap window signals a formula violation.
inline BlockDecomp general_blocks(const std::vector<int>& exponents,
                                  const SkeinOracle& oracle = default_oracle()) {
    const int n = static_cast<int>(exponents.size());
    if (n < 4 || n % 2 != 0) throw PreconditionViolated("general_blocks: need rank >= 2");
    for (int e : exponents)
        if (e < 1) throw PreconditionViolated("general_blocks: exponents must be positive");
    const int e1 = exponents[0];
    int wstar = 0;
    for (int j = 1; j < n; ++j) wstar += exponents[j];
    if (e1 < wstar) throw PreconditionViolated("general_blocks: need e_1 >= w - e_1");

    BlockDecomp out;
    out.w_star = wstar;
    out.e1 = e1;
    out.gap_start = wstar + 1;
    out.gap_index = e1 + 1 - wstar;
    out.gap_multiplier = jform_M(exponents).M;

    const HalfLaurent vs = vstar(detail::from_alternating_exponents(exponents), oracle).vstar;
    HalfLaurent rest = vs - out.gap_poly();
    for (const auto& [h, coef] : rest.terms()) {
        const int deg = h / 2;
        if (deg <= wstar)
            out.B1 += HalfLaurent::term(h, coef);
        else if (deg >= e1 + 2)
            out.B2 += HalfLaurent::term(h - 2 * (e1 + 2), coef);
        else
            throw GapOverlap("general_blocks: residual support at degree " + std::to_string(deg) +
                             " inside the gap window");
    }
    return out;
}

/// Result of condensing a positive three-braid: the closure equals the
/// closure of [1,3]^{3a} gamma, with the rewrite chain kept for audit.
struct CondenseResult {
    int a = 0;
    BraidWord gamma;
    std::vector<std::string> chain;
};

namespace detail {

// cyclic merge of an alternating exponent sequence after a rewrite may have
// produced zero exponents; returns the reduced sequence (possibly rank <= 1,
// encoded as a shorter vector, with element 0 meaning sigma_1 slot first)
inline std::vector<int> normalize_alternating(std::vector<int> es) {
    // es[j] is the exponent of sigma_1 for even j, sigma_2 for odd j.
    // remove zeros by merging the two neighbours (they share a generator)
    bool changed = true;
    while (changed && es.size() >= 2) {
        changed = false;
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (es[j] != 0) continue;
            if (es.size() == 2) {
                es.erase(es.begin() + static_cast<long>(j));
                changed = true;
                break;
            }
            const std::size_t prev = (j + es.size() - 1) % es.size();
            const std::size_t next = (j + 1) % es.size();
            es[prev] += es[next];
            // erase j and next (larger index first)
            if (next > j) {
                es.erase(es.begin() + static_cast<long>(next));
                es.erase(es.begin() + static_cast<long>(j));
            } else {
                es.erase(es.begin() + static_cast<long>(j));
                es.erase(es.begin() + static_cast<long>(next));
            }
            changed = true;
            break;
        }
    }
    return es;
}

inline std::vector<int> rotate_seq(const std::vector<int>& es, std::size_t k) {
    std::vector<int> out;
    out.reserve(es.size());
    for (std::size_t j = 0; j < es.size(); ++j) out.push_back(es[(j + k) % es.size()]);
    return out;
}

inline std::vector<int> reverse_seq(const std::vector<int>& es) {
    return std::vector<int>(es.rbegin(), es.rend());
}

/// All dihedral images of the cyclic exponent sequence.  Rotation by one
/// slot is braid reflection plus conjugation and reversal flips the diagram;
/// both preserve the closure's Jones polynomial.
inline std::vector<std::vector<int>> dihedral_images(const std::vector<int>& es) {
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < es.size(); ++k) out.push_back(rotate_seq(es, k));
    const std::vector<int> rev = reverse_seq(es);
    for (std::size_t k = 0; k < es.size(); ++k) out.push_back(rotate_seq(rev, k));
    return out;
}

inline bool is_condensed_seq(const std::vector<int>& es) {
    if (es.size() < 4) return false;
    std::vector<std::size_t> trivial;
    for (std::size_t j = 0; j < es.size(); ++j)
        if (es[j] == 1) trivial.push_back(j);
    if (trivial.empty()) return true;
    if (trivial.size() > 1) return false;
    const std::size_t j = trivial[0];
    const int left = es[(j + es.size() - 1) % es.size()];
    const int right = es[(j + 1) % es.size()];
    return left >= 3 && right >= 3;
}

} // namespace detail

/// True when the positive alternating word is condensed: rank >= 2 with no
/// trivial syllable, or a single trivial syllable whose two cyclic
/// neighbours both have length >= 3.
inline bool is_condensed(const BraidWord& b) {
    return detail::is_condensed_seq(detail::alternating_exponents(b, 1));
}

/// Rewrites a positive alternating three-braid of rank >= 2 as
/// [1,3]^{3a} gamma with gamma condensed or of rank <= 1, by the three
/// rewrite cases in order: adjacent trivial pair, trivial syllable with an
/// adjacent length-two syllable, then the trivial-distance reduction.  The
/// closure (hence the Jones polynomial) is preserved at every step.
inline CondenseResult condense(const BraidWord& b) {
    std::vector<int> es = detail::alternating_exponents(b, 2);
    CondenseResult out;

    auto find_case1 = [](const std::vector<int>& s) -> std::optional<std::vector<int>> {
        // image with the adjacent trivial pair in the last two slots
        for (const auto& img : detail::dihedral_images(s))
            if (img[img.size() - 2] == 1 && img[img.size() - 1] == 1) return img;
        return std::nullopt;
    };
    auto find_case2 = [](const std::vector<int>& s) -> std::optional<std::vector<int>> {
        // image reading (x, 1, 2, y, ...) with x >= 2
        for (const auto& img : detail::dihedral_images(s))
            if (img[0] >= 2 && img[1] == 1 && img[2] == 2) return img;
        return std::nullopt;
    };
    auto find_case3 = [](const std::vector<int>& s) -> std::optional<std::vector<int>> {
        // image reading (x, 1, u, ...) with x, u >= 3, chosen so the slot-1
        // trivial is the one nearest (forward) to the next trivial; pushing
        // it right then strictly shrinks that distance, which bounds the
        // rewrite chain.
        std::optional<std::vector<int>> best;
        std::size_t best_dist = 0;
        for (const auto& img : detail::dihedral_images(s)) {
            if (!(img[0] >= 3 && img[1] == 1 && img[2] >= 3)) continue;
            std::size_t dist = 0;
            for (std::size_t step = 1; step < img.size(); ++step)
                if (img[(1 + step) % img.size()] == 1) {
                    dist = step;
                    break;
                }
            if (!best || dist < best_dist || (dist == best_dist && img < *best)) {
                best = img;
                best_dist = dist;
            }
        }
        return best;
    };

    while (es.size() >= 4 && !detail::is_condensed_seq(es)) {
        if (auto img = find_case1(es)) {
            std::vector<int> s = *img;
            const std::size_t r2 = s.size();
            std::vector<int> next;
            if (r2 == 4) {
                next = {s[0] + s[1] + 1, 1};
            } else {
                // (a1.., a_{r-1}, b_{r-1}, 1, 1) -> c1 = a1 + b_{r-1}, c_{r-1} = a_{r-1}+1, d_{r-1} = 1
                next.assign(s.begin(), s.end() - 2);
                next[0] = s[0] + s[r2 - 3];
                next[r2 - 4] = s[r2 - 4] + 1;
                next[r2 - 3] = 1;
            }
            out.chain.push_back("adjacent-trivial-pair");
            es = detail::normalize_alternating(next);
        } else if (auto img2 = find_case2(es)) {
            std::vector<int> s = *img2;
            // sigma_1^x sigma_2 sigma_1^2 sigma_2^y ... = [1,3]^3 sigma_1^{x-2} sigma_2^{y-1} ...
            std::vector<int> next;
            next.push_back(s[0] - 2);
            next.push_back(s[3] - 1);
            next.insert(next.end(), s.begin() + 4, s.end());
            out.a += 1;
            out.chain.push_back("min-adjacent-two");
            es = detail::normalize_alternating(next);
        } else if (auto img3 = find_case3(es)) {
            std::vector<int> s = *img3;
            // sigma_1^x sigma_2 sigma_1^u sigma_2^y ... = sigma_1^{x-1} sigma_2^u sigma_1 sigma_2^{y+1} ...
            std::vector<int> next;
            next.push_back(s[0] - 1);
            next.push_back(s[2]);
            next.push_back(1);
            next.push_back(s[3] + 1);
            next.insert(next.end(), s.begin() + 4, s.end());
            out.chain.push_back("distance-reduction");
            es = detail::normalize_alternating(next);
        } else {
            throw Error("condense: no rewrite case applies (internal)");
        }
    }

    if (es.empty()) {
        out.gamma = BraidWord::identity(3);
    } else if (es.size() == 1) {
        out.gamma = BraidWord(3, {{1, es[0]}});
    } else {
        out.gamma = detail::from_alternating_exponents(es);
    }
    return out;
}

/// Per-claim outcome of the conjecture scan for one condensed word.
struct ConjectureReport {
    std::string word;
    int writhe = 0;
    int rank = 0;
    int trivial_count = 0;
    HalfLaurent vss;

    bool sign_pattern = false;  // [V**]_j has sign eps_{r+1+j+w}
    bool degree_claim = false;  // degree and leading coefficient
    bool dense_support = false; // support is exactly [w-2-deg, deg]
    int observed_degree = 0;
    int expected_degree = 0;

    bool all_pass() const { return sign_pattern && degree_claim && dense_support; }
};

inline ConjectureReport conjecture_check(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    const std::vector<int> es = detail::alternating_exponents(b, 1);
    if (!detail::is_condensed_seq(es)) throw NotCondensed("conjecture_check: word is not condensed");
    const int r = static_cast<int>(es.size()) / 2;
    const int w = b.writhe();
    int trivial = 0;
    for (int e : es) trivial += (e == 1);

    ConjectureReport rep;
    rep.word = b.key();
    rep.writhe = w;
    rep.rank = r;
    rep.trivial_count = trivial;
    rep.vss = *vstar(b, oracle).vstarstar;
    rep.expected_degree = (trivial == 0) ? w - r - 1 : w - r - 2;

    if (rep.vss.is_zero()) {
        rep.sign_pattern = rep.degree_claim = rep.dense_support = false;
        return rep;
    }
    rep.observed_degree = rep.vss.max_degree();

    const Int expect_lead = (trivial == 0) ? 1 : -1;
    rep.degree_claim = (rep.observed_degree == rep.expected_degree) && (rep.vss.leading_coeff() == expect_lead);

    auto [lo, coeffs] = coeff_vector(rep.vss);
    rep.dense_support = (lo == w - 2 - rep.observed_degree);
    rep.sign_pattern = true;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) {
            rep.dense_support = false;
            continue;
        }
        const int deg = lo + static_cast<int>(j);
        const int want = sign_pow(r + 1 + deg + w);
        if ((coeffs[j] > 0 ? 1 : -1) != want) rep.sign_pattern = false;
    }
    return rep;
}

} // namespace skein3
