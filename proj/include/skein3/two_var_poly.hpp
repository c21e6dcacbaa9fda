#pragma once

#include <map>
#include <utility>

#include "skein3/errors.hpp"
#include "skein3/half_laurent.hpp"

namespace skein3 {

/// Laurent polynomial over the integers in v and z; value type of the
/// Homflypt oracle.  Canonical form: no zero coefficients stored.
class TwoVarPoly {
public:
    using Key = std::pair<int, int>; // (v exponent, z exponent)
    using Terms = std::map<Key, Int>;

    TwoVarPoly() = default;

    static TwoVarPoly zero() { return {}; }

    static TwoVarPoly constant(Int c) {
        TwoVarPoly p;
        if (c != 0) p.terms_[{0, 0}] = std::move(c);
        return p;
    }

    static TwoVarPoly one() { return constant(1); }

    static TwoVarPoly term(int ve, int ze, Int c) {
        TwoVarPoly p;
        if (c != 0) p.terms_[{ve, ze}] = std::move(c);
        return p;
    }

    /// delta = (v^-1 - v)/z, the value of the 2-component unlink.
    static TwoVarPoly unlink_delta() {
        TwoVarPoly p;
        p.terms_[{-1, -1}] = 1;
        p.terms_[{1, -1}] = -1;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(int ve, int ze) const {
        auto it = terms_.find({ve, ze});
        return it == terms_.end() ? Int(0) : it->second;
    }

    TwoVarPoly& operator+=(const TwoVarPoly& q) {
        for (const auto& [k, c] : q.terms_) {
            Int& slot = terms_[k];
            slot += c;
            if (slot == 0) terms_.erase(k);
        }
        return *this;
    }

    TwoVarPoly& operator-=(const TwoVarPoly& q) {
        for (const auto& [k, c] : q.terms_) {
            Int& slot = terms_[k];
            slot -= c;
            if (slot == 0) terms_.erase(k);
        }
        return *this;
    }

    friend TwoVarPoly operator+(TwoVarPoly p, const TwoVarPoly& q) { return p += q; }
    friend TwoVarPoly operator-(TwoVarPoly p, const TwoVarPoly& q) { return p -= q; }

    friend TwoVarPoly operator*(const TwoVarPoly& p, const TwoVarPoly& q) {
        TwoVarPoly r;
        for (const auto& [kp, cp] : p.terms_)
            for (const auto& [kq, cq] : q.terms_) {
                Key k{kp.first + kq.first, kp.second + kq.second};
                Int& slot = r.terms_[k];
                slot += cp * cq;
                if (slot == 0) r.terms_.erase(k);
            }
        return r;
    }

    TwoVarPoly& operator*=(const TwoVarPoly& q) { return *this = *this * q; }

    /// Multiply by v^ve z^ze.
    TwoVarPoly shifted(int ve, int ze) const {
        TwoVarPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first + ve, k.second + ze}] = c;
        return r;
    }

    TwoVarPoly operator-() const {
        TwoVarPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    /// Mirror image: v -> 1/v, z -> -z.
    TwoVarPoly mirrored() const {
        TwoVarPoly r;
        for (const auto& [k, c] : terms_)
            r.terms_[{-k.first, k.second}] = (k.second % 2 == 0) ? c : -c;
        return r;
    }

    /// Substitute v = 1, collapsing onto v-degree zero (the Conway direction).
    TwoVarPoly at_v_one() const {
        TwoVarPoly r;
        for (const auto& [k, c] : terms_) {
            Key kk{0, k.second};
            Int& slot = r.terms_[kk];
            slot += c;
            if (slot == 0) r.terms_.erase(kk);
        }
        return r;
    }

    int min_v_exp() const { return minmax_v().first; }
    int max_v_exp() const { return minmax_v().second; }

    friend bool operator==(const TwoVarPoly& p, const TwoVarPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const TwoVarPoly& p, const TwoVarPoly& q) { return !(p == q); }

private:
    std::pair<int, int> minmax_v() const {
        if (terms_.empty()) throw ZeroPolynomial("v breadth of zero polynomial");
        int lo = terms_.begin()->first.first, hi = lo;
        for (const auto& [k, c] : terms_) {
            (void)c;
            lo = std::min(lo, k.first);
            hi = std::max(hi, k.first);
        }
        return {lo, hi};
    }

    Terms terms_;
};

enum class SkeinTarget { jones, alexander };

/// Specialize P(v, z): jones takes v -> t, z -> t^(1/2) - t^(-1/2);
/// alexander takes v -> 1 with the same z.  Exact in HalfLaurent; negative
/// z powers are cleared by one exact division at the end.
inline HalfLaurent specialize(const TwoVarPoly& p, SkeinTarget target) {
    if (p.is_zero()) return {};
    int min_z = 0;
    for (const auto& [k, c] : p.terms()) {
        (void)c;
        min_z = std::min(min_z, k.second);
    }
    const HalfLaurent zsub = HalfLaurent::term(1, 1) - HalfLaurent::term(-1, 1);
    // Accumulate p * z^(-min_z), a genuine polynomial in z, then divide back.
    HalfLaurent acc;
    for (const auto& [k, c] : p.terms()) {
        HalfLaurent term = HalfLaurent::constant(c);
        if (target == SkeinTarget::jones) term = term.shifted(2 * k.first);
        term *= pow(zsub, k.second - min_z);
        acc += term;
    }
    if (min_z == 0) return acc;
    return exact_div(acc, pow(zsub, -min_z));
}

/// Morton-Franks-Williams braid index lower bound: v-breadth/2 + 1.
inline int mfw_bound(const TwoVarPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("mfw_bound: zero polynomial");
    return (p.max_v_exp() - p.min_v_exp()) / 2 + 1;
}

} // namespace skein3
