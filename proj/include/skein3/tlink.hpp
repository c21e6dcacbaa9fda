#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "skein3/braid_word.hpp"
#include "skein3/errors.hpp"
#include "skein3/jones3.hpp"

namespace skein3 {

/// T((r_1,s_1),...,(r_k,s_k)): the closure of [1,r_1]^{s_1}...[1,r_k]^{s_k},
/// with 2 <= r_1, r_i <= r_{i+1} and s_i >= 1.
struct TLink {
    std::vector<std::pair<int, int>> pairs;

    TLink() = default;
    explicit TLink(std::vector<std::pair<int, int>> ps) : pairs(std::move(ps)) { validate(); }

    void validate() const {
        if (pairs.empty()) throw ParameterOutOfRange("T-link: needs at least one (r,s) pair");
        int prev = 2;
        for (const auto& [r, s] : pairs) {
            if (r < prev) throw ParameterOutOfRange("T-link: needs 2 <= r_1 and r_i <= r_{i+1}");
            if (s < 1) throw ParameterOutOfRange("T-link: needs s_i >= 1");
            prev = r;
        }
    }

    int tiers() const { return static_cast<int>(pairs.size()); }

    friend bool operator==(const TLink& a, const TLink& b) { return a.pairs == b.pairs; }
    friend bool operator<(const TLink& a, const TLink& b) { return a.pairs < b.pairs; }
};

inline std::string render_tlink(const TLink& L) {
    std::string s = "T(";
    for (std::size_t i = 0; i < L.pairs.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(L.pairs[i].first) + "," + std::to_string(L.pairs[i].second) + ")";
    }
    return s + ")";
}

/// Braid representation [1,r_1]^{s_1} ... [1,r_k]^{s_k} in B_{r_k}.
inline BraidWord to_braid(const TLink& L) {
    L.validate();
    const int n = L.pairs.back().first;
    BraidWord w = BraidWord::identity(n);
    for (const auto& [r, s] : L.pairs)
        for (int j = 0; j < s; ++j) w.append(interval_word(n, 1, r));
    return free_reduce(w);
}

/// Merge equal-r tiers (adding s) so r is strictly increasing.
inline TLink tier_normalize(const TLink& L) {
    L.validate();
    std::vector<std::pair<int, int>> out;
    for (const auto& [r, s] : L.pairs) {
        if (!out.empty() && out.back().first == r)
            out.back().second += s;
        else
            out.push_back({r, s});
    }
    return TLink(std::move(out));
}

/// Tier-normalize and enforce s_k >= 2: a trailing (r_k, 1) tier Markov-
/// reduces onto the previous tier ((...,(q,s),(r,1)) has the same closure as
/// (...,(q,s+1))); a lone (r,1) is the unknot, kept as T((2,1)).
inline TLink normalize(const TLink& L0) {
    TLink L = tier_normalize(L0);
    while (L.pairs.size() > 1 && L.pairs.back().second == 1) {
        L.pairs.pop_back();
        L.pairs.back().second += 1;
        L = tier_normalize(L);
    }
    if (L.pairs.size() == 1 && L.pairs.back().second == 1) return TLink({{2, 1}});
    return L;
}

/// Duality (an involution on normalized forms):
///   rbar_i = s_k + ... + s_{k+1-i},  sbar_i = r_{k+1-i} - r_{k-i},  r_0 = 0.
inline TLink dual(const TLink& L0) {
    TLink L = tier_normalize(L0);
    const int k = L.tiers();
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k; ++i) {
        int rbar = 0;
        for (int j = k + 1 - i; j <= k; ++j) rbar += L.pairs[j - 1].second;
        const int r_hi = L.pairs[k - i].first;
        const int r_lo = (k - i - 1 >= 0) ? L.pairs[k - i - 1].first : 0;
        out.push_back({rbar, r_hi - r_lo});
    }
    return TLink(std::move(out));
}

/// Braid index by the dual-form minimization, with the refinements of the
/// rule asserted: i0 = min{i : r_i >= rbar_{k-i}}, j0 = min{j : rbar_j >= r_{k-j}},
/// b = min(r_{i0}, rbar_{j0}), convention r_0 = rbar_0 = 0.
struct BraidIndexResult {
    int b = 0;
    int i0 = 0;
    int j0 = 0;
};

inline BraidIndexResult braid_index(const TLink& L0) {
    TLink L = normalize(L0);
    if (L.pairs.size() == 1 && L.pairs[0].second == 1) return {1, 1, 1}; // unknot T((2,1))
    TLink D = dual(L);
    const int k = L.tiers();
    auto r = [&](int i) { return i == 0 ? 0 : L.pairs[i - 1].first; };
    auto rbar = [&](int i) { return i == 0 ? 0 : D.pairs[i - 1].first; };
    int i0 = k, j0 = k;
    for (int i = 1; i <= k; ++i)
        if (r(i) >= rbar(k - i)) {
            i0 = i;
            break;
        }
    for (int j = 1; j <= k; ++j)
        if (rbar(j) >= r(k - j)) {
            j0 = j;
            break;
        }
    BraidIndexResult out{std::min(r(i0), rbar(j0)), i0, j0};
    // refinements of the minimization; violations would contradict the rule
    if (r(i0) == rbar(k - i0)) {
        if (j0 != k - i0 || out.b != r(i0)) throw Error("braid_index: refinement violated (internal)");
    } else if (r(i0) > rbar(k - i0)) {
        if (j0 != 1 + k - i0 || out.b != std::min(r(i0), rbar(1 + k - i0)))
            throw Error("braid_index: refinement violated (internal)");
    }
    for (int i = 1; i <= k; ++i)
        if (r(i) < i + 1 || rbar(i) < i + 1) throw Error("braid_index: r_i >= i+1 violated (internal)");
    return out;
}

/// Raw tier bound k <= 2b - 2 (exposed for the negative-control self test).
inline bool tiers_bound_ok(int k, int b) { return k <= 2 * b - 2; }

/// Checks the maximal-tier bound on a T-link; when the bound is met with
/// equality, also verifies the forced shape r_i = i+1 = rbar_i for i <= b-1.
inline bool max_tiers_check(const TLink& L0) {
    TLink L = normalize(L0);
    if (L.tiers() == 1 && L.pairs[0].second == 1) return true; // unknot marker T((2,1))
    const auto bi = braid_index(L);
    const int k = L.tiers();
    if (!tiers_bound_ok(k, bi.b)) return false;
    if (k == 2 * bi.b - 2 && k >= 2) {
        TLink D = dual(L);
        for (int i = 1; i <= bi.b - 1; ++i) {
            if (L.pairs[i - 1].first != i + 1 || D.pairs[i - 1].first != i + 1)
                throw Error("max_tiers_check: equality-case shape violated (internal)");
        }
    }
    return true;
}

/// Classification target: the closure of sigma_1^x sigma_2^y [1,3]^z with
/// x >= y >= 0, z >= 3 and z = 0 mod 3; unique per link.
struct CanonicalForm3 {
    int x = 0;
    int y = 0;
    int z = 3;

    friend bool operator==(const CanonicalForm3&, const CanonicalForm3&) = default;
    friend bool operator<(const CanonicalForm3& a, const CanonicalForm3& b) {
        return std::tie(a.z, a.x, a.y) < std::tie(b.z, b.x, b.y);
    }
};

inline std::string render_canonical(const CanonicalForm3& c) {
    return "beta(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," + std::to_string(c.z) + ")";
}

inline BraidWord canonical_to_braid(const CanonicalForm3& c) {
    BraidWord w = BraidWord::identity(3);
    if (c.x) w.append(1, c.x);
    if (c.y) w.append(2, c.y);
    for (int j = 0; j < c.z; ++j) {
        w.append(1, 1);
        w.append(2, 1);
    }
    return w;
}

/// Normalize (x, y, z) with x, y, z >= 0 to the unique canonical triple:
/// z = 1 mod 3 rewrites to (1+x+y, 1, z-1); z = 2 mod 3 to (x-1, y-1, z+1)
/// when x, y >= 1 and to (3+max(x,y), 1, z-2) otherwise; then sort x >= y.
/// Throws NotRepresentable when no z >= 3 form exists (the connect-sum and
/// braid-index <= 2 degeneracies).
inline CanonicalForm3 canonical_form(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw PreconditionViolated("canonical_form: need x, y, z >= 0");
    switch (z % 3) {
    case 1:
        x = 1 + x + y;
        y = 1;
        z = z - 1;
        break;
    case 2:
        if (x >= 1 && y >= 1) {
            x -= 1;
            y -= 1;
            z += 1;
        } else {
            x = 3 + std::max(x, y);
            y = 1;
            z -= 2;
        }
        break;
    default:
        break;
    }
    if (z < 3)
        throw NotRepresentable("canonical_form: no sigma_1^x sigma_2^y [1,3]^z form with z >= 3 (braid index "
                               "below three or a connected sum)");
    CanonicalForm3 out;
    out.x = std::max(x, y);
    out.y = std::min(x, y);
    out.z = z;
    return out;
}

/// Word form of canonical_form: accepts any word that free-reduces to
/// sigma_1^x sigma_2^y [1,3]^z with x, y, z >= 0 (maximal trailing [1,3]^z).
inline CanonicalForm3 canonical_form(const BraidWord& b) {
    if (b.strands() != 3) throw ShapeMismatch("canonical_form: expected a word in B_3");
    std::vector<Letter> ls = free_reduce(b).letters();
    for (const Letter& l : ls)
        if (l.exponent < 0) throw ShapeMismatch("canonical_form: expected a positive word");
    int z = 0;
    while (ls.size() >= 2 && ls[ls.size() - 2].index == 1 && ls[ls.size() - 2].exponent == 1 &&
           ls.back().index == 2 && ls.back().exponent == 1) {
        ls.pop_back();
        ls.pop_back();
        ++z;
    }
    int x = 0, y = 0;
    if (ls.size() == 1 && ls[0].index == 1) {
        x = ls[0].exponent;
    } else if (ls.size() == 1 && ls[0].index == 2) {
        y = ls[0].exponent;
    } else if (ls.size() == 2 && ls[0].index == 1 && ls[1].index == 2) {
        x = ls[0].exponent;
        y = ls[1].exponent;
    } else if (!ls.empty()) {
        throw ShapeMismatch("canonical_form: word is not of the shape sigma_1^x sigma_2^y [1,3]^z");
    }
    return canonical_form(x, y, z);
}

/// Torus identification of a canonical form per the classification list:
/// (0,0,z) -> T(3,z); (1,1,z) -> T(3,z+1); (3,1,z) -> T(3,z+2); else none.
inline std::optional<std::pair<int, int>> torus_detect(const CanonicalForm3& c) {
    if (c.x == 0 && c.y == 0) return std::make_pair(3, c.z);
    if (c.x == 1 && c.y == 1) return std::make_pair(3, c.z + 1);
    if (c.x == 3 && c.y == 1) return std::make_pair(3, c.z + 2);
    return std::nullopt;
}

/// Result of reducing a T-link of braid index <= 3.
struct TierReduction {
    int braid_index = 0;
    std::optional<int> two_braid;              // T(2, m) when braid index <= 2 (m = 1: unknot)
    std::optional<CanonicalForm3> canonical;   // braid index 3
    std::optional<std::pair<int, int>> torus;  // (3, m) when the canonical form is a torus link
};

namespace detail {

struct XYZ {
    int x, y, z;
};

/// T((2,y),(3,rho)), rho >= 3, as a sigma_1^x sigma_2^y [1,3]^z triple.
inline XYZ reduce_2tier_2_3(int y, int rho) {
    switch (rho % 3) {
    case 0: return {y, 0, rho};
    case 1: return {1 + y, 1, rho - 1};
    default: return {3 + y, 1, rho - 2};
    }
}

/// T((3,y),(n,3)) with n > 3 by the residue pairs of [n]_3, [y]_3.
inline XYZ reduce_2tier_3_n3(int y, int n) {
    const int a = n % 3, b = y % 3;
    if (a == 0 || b == 0) {
        const int m = n + y; // torus T(3, m)
        switch (m % 3) {
        case 0: return {0, 0, m};
        case 1: return {1, 1, m - 1};
        default: return {3, 1, m - 2};
        }
    }
    if (a == 1 && b == 1) return {2, 2, y + n - 2};
    if (a == 2 && b == 2) return {2, 0, y + n - 1};
    return {5, 1, y + n - 3}; // residues {1,2}
}

/// T((2,s1),(3,s2),(r3,2)) with r3 >= 4 (the symmetric 3-tier family).
inline XYZ reduce_3tier_form_a(int s1, int s2, int r3) {
    switch (s2 % 3) {
    case 0: return {s1 + r3, 1, s2};
    case 1: return {s1, r3 - 3, s2 + 2};
    default: return {s1 + 1, r3 - 2, s2 + 1};
    }
}

} // namespace detail

/// Reduce a T-link with braid index <= 3 through the two-, three- and
/// four-tier case tables to its unique canonical descriptor.  Throws
/// BraidIndexTooLarge above index three.
inline TierReduction tier_reduce(const TLink& L0) {
    TLink L = normalize(L0);
    const auto bi = braid_index(L);
    TierReduction out;
    out.braid_index = bi.b;

    if (bi.b <= 2) {
        // braid index <= 2: single tier T(2,s) / T(n,2), or 2-tier T((2,y),(n,2))
        if (L.tiers() == 1) {
            const auto [r, s] = L.pairs[0];
            if (r == 2)
                out.two_braid = s;
            else if (s == 2)
                out.two_braid = r;
            else if (s == 1 || r == 1)
                out.two_braid = 1;
            else
                throw Error("tier_reduce: unexpected single-tier form at braid index <= 2");
        } else if (L.tiers() == 2 && L.pairs[0].first == 2 && L.pairs[1].second == 2) {
            out.two_braid = L.pairs[0].second + L.pairs[1].first;
        } else {
            TLink D = normalize(dual(L));
            if (D.tiers() == 2 && D.pairs[0].first == 2 && D.pairs[1].second == 2)
                out.two_braid = D.pairs[0].second + D.pairs[1].first;
            else
                throw Error("tier_reduce: unexpected form at braid index <= 2");
        }
        if (out.two_braid && *out.two_braid == 1) out.braid_index = 1;
        return out;
    }
    if (bi.b > 3) throw BraidIndexTooLarge("tier_reduce: braid index " + std::to_string(bi.b));

    detail::XYZ xyz{0, 0, 0};
    const int k = L.tiers();
    if (k == 1) {
        const auto [r, s] = L.pairs[0];
        // braid index 3 single tier: T(3,s) with s >= 3, or T(n,3) -> dual T(3,n)
        const int m = (r == 3) ? s : r;
        switch (m % 3) {
        case 0: xyz = {0, 0, m}; break;
        case 1: xyz = {1, 1, m - 1}; break;
        default: xyz = {3, 1, m - 2}; break;
        }
    } else if (k == 2) {
        const auto [r1, s1] = L.pairs[0];
        const auto [r2, s2] = L.pairs[1];
        if (r1 == 2 && r2 == 3) {
            xyz = detail::reduce_2tier_2_3(s1, s2);
        } else if (r1 == 2 && s2 == 3) {
            xyz = detail::reduce_2tier_2_3(s1, r2); // T((2,y),(n,3)) = T((2,y),(3,n))
        } else if (r1 == 3 && s2 == 3) {
            xyz = detail::reduce_2tier_3_n3(s1, r2);
        } else if (r1 == 3 && s2 == 2) {
            xyz = detail::reduce_2tier_2_3(r2 - 3, s1 + 2); // duality + T((2,y),(n,3)) relation
        } else if (s1 == 1 && s2 == 2 && r1 > 3) {
            xyz = detail::reduce_2tier_2_3(r2 - r1, r1); // T((m,1),(n,2)) = T((2,n-m),(3,m))
        } else {
            throw Error("tier_reduce: 2-tier form outside the braid-index-3 list (internal)");
        }
    } else if (k == 3) {
        auto handle_3tier = [&](const TLink& T) -> detail::XYZ {
            const auto [r1, s1] = T.pairs[0];
            const auto [r2, s2] = T.pairs[1];
            const auto [r3, s3] = T.pairs[2];
            if (r1 == s3) {
                if (r1 != 2) throw Error("tier_reduce: 3-tier r1 = s3 requires r1 = 2 (internal)");
                if (r2 == 3) return detail::reduce_3tier_form_a(s1, s2, r3);
                if (s2 == 1) {
                    // dual form T((2, r3-r2), (3, r2-2), (3+s1, 2))
                    return detail::reduce_3tier_form_a(r3 - r2, r2 - 2, 3 + s1);
                }
                throw Error("tier_reduce: 3-tier r1 = s3 case outside the list (internal)");
            }
            // r1 > s3: forced form T((3,s1),(r2,1),(r3,2))
            if (!(r1 == 3 && s2 == 1 && s3 == 2))
                throw Error("tier_reduce: 3-tier r1 > s3 case outside the list (internal)");
            switch (s1 % 3) {
            case 0: return detail::reduce_2tier_2_3(r3 - r2, s1 + r2);
            case 2: return detail::reduce_2tier_2_3(r3 - r2 + 2, s1 + r2 - 1);
            default:
                switch (r2 % 3) {
                case 0: return {r3 - r2 + 1, 1, s1 + r2 - 1};
                case 1: return {r3 - r2 + 2, 2, s1 + r2 - 2};
                default: return {r3 - r2 + 5, 1, s1 + r2 - 3};
                }
            }
        };
        const int r1 = L.pairs[0].first, s3 = L.pairs[2].second;
        xyz = (r1 >= s3) ? handle_3tier(L) : handle_3tier(normalize(dual(L)));
    } else if (k == 4) {
        const auto [r1, s1] = L.pairs[0];
        const auto [r2, s2] = L.pairs[1];
        const auto [r3, s3] = L.pairs[2];
        const auto [r4, s4] = L.pairs[3];
        if (!(r1 == 2 && r2 == 3 && s3 == 1 && s4 == 2))
            throw Error("tier_reduce: 4-tier braid-index-3 forms are T((2,s1),(3,s2),(r3,1),(r4,2)) (internal)");
        const int u = r4 - r3;
        switch (s2 % 3) {
        case 0:
            switch (r3 % 3) {
            case 0: xyz = {s1, u, s2 + r3}; break;
            case 1: xyz = {s1 + 1, u + 1, s2 + r3 - 1}; break;
            default: xyz = {s1 + u + 3, 1, s2 + r3 - 2}; break;
            }
            break;
        case 1:
            switch (r3 % 3) {
            case 0: xyz = {s1 + 1, u + 1, s2 + r3 - 1}; break;
            case 1: xyz = {s1 + 2, u + 2, s2 + r3 - 2}; break;
            default: xyz = {s1 + u + 5, 1, s2 + r3 - 3}; break;
            }
            break;
        default:
            switch (r3 % 3) {
            case 0: xyz = {s1 + u + 3, 1, s2 + r3 - 2}; break;
            case 1: xyz = {s1 + u + 5, 1, s2 + r3 - 3}; break;
            default: xyz = {s1 + u + 2, 0, s2 + r3 - 1}; break;
            }
            break;
        }
    } else {
        throw Error("tier_reduce: braid index 3 admits at most four tiers (internal)");
    }

    out.canonical = canonical_form(xyz.x, xyz.y, xyz.z);
    out.torus = torus_detect(*out.canonical);
    return out;
}

/// Closed-form Jones polynomial of a T-link of braid index <= 3.
inline HalfLaurent tlink_jones_closed(const TLink& L) {
    TierReduction red = tier_reduce(L);
    if (red.two_braid) return jones_2braid(*red.two_braid);
    const CanonicalForm3& c = *red.canonical;
    return jones_xy_fulltwists(c.x, c.y, c.z).reconstruct();
}

inline std::vector<TLink> symmetry_family(const TLink& L0);

/// Link equality at the level the theory decides it: for braid index <= 3 by
/// the unique canonical descriptor (equivalent to Jones equality, which is
/// cross-checked); above index three only through the constructive moves
/// (normalization, duality, the two-tier twist symmetries).
inline bool equal_links(const TLink& a, const TLink& b) {
    const int ba = braid_index(a).b, bb = braid_index(b).b;
    if (ba <= 3 && bb <= 3) {
        TierReduction ra = tier_reduce(a), rb = tier_reduce(b);
        bool same = false;
        if (ra.two_braid && rb.two_braid)
            same = (*ra.two_braid == *rb.two_braid);
        else if (ra.canonical && rb.canonical)
            same = (*ra.canonical == *rb.canonical);
        const bool jones_same = tlink_jones_closed(a) == tlink_jones_closed(b);
        if (same != jones_same)
            throw Error("equal_links: canonical equality and Jones equality disagree (internal)");
        return same;
    }
    if (ba != bb) return false;
    const TLink na = normalize(a), nb = normalize(b);
    if (na == nb || normalize(dual(na)) == nb) return true;
    try {
        const auto fam = symmetry_family(na);
        if (std::find(fam.begin(), fam.end(), nb) != fam.end()) return true;
        const TLink db = normalize(dual(nb));
        if (std::find(fam.begin(), fam.end(), db) != fam.end()) return true;
    } catch (const ShapeMismatch&) {
    }
    throw BraidIndexTooLarge("equal_links: no decision procedure above braid index three beyond the "
                             "constructive symmetries");
}

inline bool equal_links(const CanonicalForm3& a, const CanonicalForm3& b) { return a == b; }

/// The family of equal T-links generated by the two-tier twist symmetries
/// (n1 + y1 = n2 + y2 with [n1]_m = [n2]_m, or with [n1]_m = [y2]_m) and the
/// final-pair swap (r_{k-1} <= s_k <= r_k with s_k | r_k), deduplicated.
inline std::vector<TLink> symmetry_family(const TLink& L0) {
    TLink L = tier_normalize(L0);
    std::set<TLink> family;
    const int k = L.tiers();

    const bool two_tier_twist = (k == 2 && L.pairs[1].second == L.pairs[0].first);
    const auto [rk, sk] = L.pairs.back();
    const int r_prev = (k >= 2) ? L.pairs[k - 2].first : 2;
    const bool swap_last = (k >= 2 && r_prev <= sk && sk <= rk && rk % sk == 0);
    if (!two_tier_twist && !swap_last)
        throw ShapeMismatch("symmetry_family: no applicable symmetry shape");

    if (two_tier_twist) {
        const int m = L.pairs[0].first;
        const int S = L.pairs[0].second + L.pairs[1].first;
        std::vector<TLink> queue{L};
        family.insert(L);
        while (!queue.empty()) {
            TLink cur = queue.back();
            queue.pop_back();
            const int y = cur.pairs[0].second, n = cur.pairs[1].first;
            auto push = [&](int y2, int n2) {
                if (y2 < 1 || n2 <= m || n2 + y2 != S) return;
                TLink next(std::vector<std::pair<int, int>>{{m, y2}, {n2, m}});
                if (family.insert(next).second) queue.push_back(next);
            };
            for (int n2 = m + 1; n2 < S; ++n2) {
                if (n2 % m == n % m) push(S - n2, n2);   // same total, same residue of n
                const int y2 = S - n2;
                if (y2 >= 1 && y2 % m == n % m) push(y2, n2); // reversed-residue form
            }
        }
    }
    if (swap_last) {
        TLink swapped = L;
        swapped.pairs.back() = {sk, rk};
        std::sort(swapped.pairs.begin(), swapped.pairs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        family.insert(tier_normalize(TLink(swapped.pairs)));
        family.insert(L);
    }
    return std::vector<TLink>(family.begin(), family.end());
}

/// T-link parser: "T((r1,s1),(r2,s2),...)".
inline TLink parse_tlink(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw SyntaxError(std::string("T-link: expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError("T-link: expected an integer at offset " + std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != 'T') throw SyntaxError("T-link: expected leading 'T'");
    ++pos;
    expect('(');
    std::vector<std::pair<int, int>> pairs;
    while (true) {
        expect('(');
        const int r = parse_int();
        expect(',');
        const int s = parse_int();
        expect(')');
        pairs.push_back({r, s});
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(')');
    skip_ws();
    if (pos != text.size()) throw SyntaxError("T-link: trailing characters");
    return TLink(std::move(pairs));
}

} // namespace skein3
