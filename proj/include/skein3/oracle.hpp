#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein3/braid_word.hpp"
#include "skein3/errors.hpp"
#include "skein3/half_laurent.hpp"
#include "skein3/two_var_poly.hpp"

namespace skein3 {

inline constexpr int kDefaultCrossingLimit = 16;

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Single crossings of a word: (0-based position, sign).
inline std::vector<std::pair<int, int>> expand_crossings(const BraidWord& b) {
    std::vector<std::pair<int, int>> cs;
    for (const Letter& l : b.letters()) {
        const int s = l.exponent > 0 ? 1 : -1;
        for (int j = 0; j < std::abs(l.exponent); ++j) cs.push_back({l.index - 1, s});
    }
    return cs;
}

/// First-visit data for every crossing along the closure traversal:
/// components are walked in order of least top position, each from its
/// least top position downward.
struct FirstVisits {
    std::vector<int> stamp;            // global visit time of the first passage
    std::vector<bool> from_left;       // first passage entered at the left position
};

inline FirstVisits closure_first_visits(int strands, const std::vector<std::pair<int, int>>& cs) {
    FirstVisits fv;
    fv.stamp.assign(cs.size(), -1);
    fv.from_left.assign(cs.size(), false);
    int t = 0;
    std::vector<bool> started(strands, false);
    for (int start = 0; start < strands; ++start) {
        if (started[start]) continue;
        int p = start;
        do {
            started[p] = true;
            int cur = p;
            for (std::size_t h = 0; h < cs.size(); ++h) {
                const int i = cs[h].first;
                if (cur == i || cur == i + 1) {
                    if (fv.stamp[h] < 0) {
                        fv.stamp[h] = t;
                        fv.from_left[h] = (cur == i);
                    }
                    ++t;
                    cur = (cur == i) ? i + 1 : i;
                }
            }
            p = cur;
        } while (p != start);
    }
    return fv;
}

} // namespace detail

/// Brute-force skein-polynomial oracle over braid closures.  All operations
/// are link invariants of the standard closure with sigma_i positive.
///
/// kauffman_jones runs the full 2^c Kauffman bracket state sum with
/// union-find loop counting.  homfly resolves the skein relation
/// P(D+) = vz P(D0) + v^2 P(D-) at the first crossing, in closure traversal
/// order, that is not visited over-strand-first; switched diagrams lose one
/// violation and smoothed diagrams lose one crossing, so the tree terminates
/// at descending diagrams, which close to unlinks.  Memoization is keyed by
/// the free-reduced word (plus its least cyclic rotation) and never changes
/// results.
class SkeinOracle {
public:
    explicit SkeinOracle(int max_crossings = kDefaultCrossingLimit) : limit_(max_crossings) {}

    int max_crossings() const { return limit_; }
    void set_max_crossings(int c) { limit_ = c; }

    /// Jones polynomial of the closure, normalized so the unknot maps to 1.
    /// Convention fixed so positive torus braids give positive degrees:
    /// V(T(2,2)) = -t^(1/2) - t^(5/2), V(T(2,3)) = t + t^3 - t^4.
    HalfLaurent kauffman_jones(const BraidWord& b) const {
        check_limit(b, "kauffman_jones");
        const BraidWord word = free_reduce(b);
        const auto cs = detail::expand_crossings(word);
        const int c = static_cast<int>(cs.size());
        const int n = word.strands();
        const int w = word.writhe();

        // bucket counts by (A exponent from smoothing choices, loop count)
        std::map<std::pair<int, int>, long long> buckets;
        for (std::uint64_t state = 0; state < (std::uint64_t(1) << c); ++state) {
            detail::UnionFind uf;
            std::vector<int> cur(n);
            for (int p = 0; p < n; ++p) cur[p] = uf.make();
            int aexp = 0;
            for (int h = 0; h < c; ++h) {
                const auto [i, s] = cs[h];
                const bool cap = (state >> h) & 1;
                // <sigma_i> = A <1> + A^-1 <e_i>; inverse crossing swaps weights
                if (cap) {
                    aexp -= s;
                    uf.unite(cur[i], cur[i + 1]);
                    const int fresh = uf.make();
                    cur[i] = fresh;
                    cur[i + 1] = fresh;
                } else {
                    aexp += s;
                }
            }
            for (int p = 0; p < n; ++p) uf.unite(cur[p], p);
            int loops = 0;
            for (int id = 0; id < static_cast<int>(uf.parent.size()); ++id)
                if (uf.find(id) == id) ++loops;
            ++buckets[{aexp, loops}];
        }

        // <D> in A, then V = (-1)^w A^(-3w) <D> at t = A^-4.
        std::map<int, Int> bracket;
        std::map<int, Int> delta_pow = {{0, 1}}; // (-A^2 - A^-2)^k, built incrementally
        int built = 0;
        auto delta_power = [&](int k) -> const std::map<int, Int>& {
            while (built < k) {
                std::map<int, Int> next;
                for (const auto& [e, coef] : delta_pow) {
                    next[e + 2] -= coef;
                    next[e - 2] -= coef;
                }
                delta_pow = std::move(next);
                ++built;
            }
            return delta_pow;
        };
        std::vector<std::pair<std::pair<int, int>, long long>> items(buckets.begin(), buckets.end());
        std::sort(items.begin(), items.end(),
                  [](const auto& x, const auto& y) { return x.first.second < y.first.second; });
        for (const auto& [key, count] : items) {
            const auto& dp = delta_power(key.second - 1);
            for (const auto& [e, coef] : dp) bracket[key.first + e] += coef * count;
        }
        HalfLaurent v;
        for (const auto& [e, coef] : bracket) {
            if (coef == 0) continue;
            const int shifted = e - 3 * w;
            if (shifted % 2 != 0) throw Error("kauffman_jones: odd bracket exponent");
            v += HalfLaurent::term(-shifted / 2, Int(sign_pow(w)) * coef);
        }
        return v;
    }

    /// Homflypt polynomial of the closure via the recursive skein tree.
    TwoVarPoly homfly(const BraidWord& b) const {
        check_limit(b, "homfly_skein");
        return homfly_impl(free_reduce(b));
    }

    /// Conway polynomial: v = 1 specialization of the Homflypt skein.
    TwoVarPoly conway(const BraidWord& b) const { return homfly(b).at_v_one(); }

private:
    void check_limit(const BraidWord& b, const char* who) const {
        if (b.crossings() > limit_)
            throw CrossingLimitExceeded(std::string(who) + ": " + std::to_string(b.crossings()) +
                                        " crossings exceeds limit " + std::to_string(limit_));
    }

    static std::string cyclic_key(const BraidWord& b) {
        // least rotation of the letter sequence; closures agree under rotation
        const auto& ls = b.letters();
        const int m = static_cast<int>(ls.size());
        std::string best;
        for (int r = 0; r < std::max(m, 1); ++r) {
            std::string k = "B" + std::to_string(b.strands()) + ":";
            for (int j = 0; j < m; ++j) {
                const Letter& l = ls[(r + j) % m];
                k += " " + std::to_string(l.index) + "^" + std::to_string(l.exponent);
            }
            if (r == 0 || k < best) best = std::move(k);
        }
        return best;
    }

    TwoVarPoly homfly_impl(const BraidWord& word0) const {
        BraidWord word = free_reduce(word0);

        // Split off unused top strands, destabilize a lone top generator.
        int split_unknots = 0;
        for (bool changed = true; changed;) {
            changed = false;
            const int n = word.strands();
            int top_uses = 0;
            int max_used = 0;
            for (const Letter& l : word.letters()) {
                max_used = std::max(max_used, l.index);
                if (l.index == n - 1) top_uses += std::abs(l.exponent);
            }
            if (n > 1 && max_used < n - 1) {
                word = BraidWord(n - 1, word.letters());
                ++split_unknots;
                changed = true;
            } else if (n > 1 && top_uses == 1) {
                std::vector<Letter> rest;
                for (const Letter& l : word.letters())
                    if (l.index != n - 1) rest.push_back(l);
                word = free_reduce(BraidWord(n - 1, std::move(rest)));
                changed = true;
            }
        }

        TwoVarPoly result;
        const std::string key = cyclic_key(word);
        if (lookup(key, result)) {
            // cached
        } else {
            result = homfly_resolve(word);
            store(key, result);
        }
        for (int j = 0; j < split_unknots; ++j) result *= TwoVarPoly::unlink_delta();
        return result;
    }

    TwoVarPoly homfly_resolve(const BraidWord& word) const {
        const auto cs = detail::expand_crossings(word);
        const int n = word.strands();
        if (cs.empty()) {
            TwoVarPoly p = TwoVarPoly::one();
            for (int j = 1; j < n; ++j) p *= TwoVarPoly::unlink_delta();
            return p;
        }

        // First crossing, in first-visit order, whose first passage is the
        // under strand.  For sigma_i the left-entering strand is the over one.
        const auto fv = detail::closure_first_visits(n, cs);
        int bad = -1, best_stamp = -1;
        for (std::size_t h = 0; h < cs.size(); ++h) {
            const bool good = (cs[h].second > 0) == fv.from_left[h];
            if (!good && (bad < 0 || fv.stamp[h] < best_stamp)) {
                bad = static_cast<int>(h);
                best_stamp = fv.stamp[h];
            }
        }

        if (bad < 0) {
            // descending closure: an unlink with one loop per permutation cycle
            const int comps = closure_shape(word).components;
            TwoVarPoly p = TwoVarPoly::one();
            for (int j = 1; j < comps; ++j) p *= TwoVarPoly::unlink_delta();
            return p;
        }

        auto word_without = [&](int h) {
            std::vector<Letter> ls;
            for (int j = 0; j < static_cast<int>(cs.size()); ++j)
                if (j != h) ls.push_back({cs[j].first + 1, cs[j].second});
            return BraidWord(n, std::move(ls));
        };
        auto word_switched = [&](int h) {
            std::vector<Letter> ls;
            for (int j = 0; j < static_cast<int>(cs.size()); ++j)
                ls.push_back({cs[j].first + 1, j == h ? -cs[j].second : cs[j].second});
            return BraidWord(n, std::move(ls));
        };

        const TwoVarPoly smoothed = homfly_impl(word_without(bad));
        const TwoVarPoly switched = homfly_impl(word_switched(bad));
        if (cs[bad].second > 0) {
            // P(D+) = vz P(D0) + v^2 P(D-)
            return smoothed.shifted(1, 1) + switched.shifted(2, 0);
        }
        // P(D-) = v^-2 P(D+) - v^-1 z P(D0)
        return switched.shifted(-2, 0) - smoothed.shifted(-1, 1);
    }

    bool lookup(const std::string& key, TwoVarPoly& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it == memo_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const TwoVarPoly& val) const {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(key, val);
    }

    int limit_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, TwoVarPoly> memo_;
};

/// Process-wide oracle with the default crossing limit; memoization only.
inline const SkeinOracle& default_oracle() {
    static SkeinOracle oracle(kDefaultCrossingLimit);
    return oracle;
}

inline HalfLaurent kauffman_jones(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    return oracle.kauffman_jones(b);
}

inline TwoVarPoly homfly_skein(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    return oracle.homfly(b);
}

inline TwoVarPoly conway(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    return oracle.conway(b);
}

/// Conway and Homflypt polynomials of the elementary torus link T(2,e) by
/// their two-term recursions; negative e through the mirror rule.
inline std::pair<TwoVarPoly, TwoVarPoly> torus_two_strand(int e) {
    if (e < 0) {
        auto [c, p] = torus_two_strand(-e);
        return {c.mirrored(), p.mirrored()};
    }
    TwoVarPoly conway_prev = TwoVarPoly::zero(), conway_cur = TwoVarPoly::one();
    TwoVarPoly hom_prev = TwoVarPoly::unlink_delta(), hom_cur = TwoVarPoly::one();
    if (e == 0) return {conway_prev, hom_prev};
    for (int j = 2; j <= e; ++j) {
        TwoVarPoly cn = conway_cur.shifted(0, 1) + conway_prev;
        conway_prev = std::move(conway_cur);
        conway_cur = std::move(cn);
        TwoVarPoly pn = hom_cur.shifted(1, 1) + hom_prev.shifted(2, 0);
        hom_prev = std::move(hom_cur);
        hom_cur = std::move(pn);
    }
    return {conway_cur, hom_cur};
}

} // namespace skein3
