#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skein3/errors.hpp"

namespace skein3 {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial over the integers in t with exponents in (1/2)Z.
///
/// Exponents are stored as integers counting half-units, so the key k stands
/// for t^(k/2) and t^(1/2) is exact.  The zero polynomial is the empty term
/// map; constructors and arithmetic strip zero coefficients eagerly, so two
/// values are equal iff their term maps are identical.
class HalfLaurent {
public:
    using Terms = std::map<int, Int>;

    HalfLaurent() = default;

    static HalfLaurent zero() { return HalfLaurent{}; }

    static HalfLaurent constant(Int c) {
        HalfLaurent p;
        if (c != 0) p.terms_[0] = std::move(c);
        return p;
    }

    static HalfLaurent one() { return constant(1); }

    /// c * t^(halves/2)
    static HalfLaurent term(int halves, Int c) {
        HalfLaurent p;
        if (c != 0) p.terms_[halves] = std::move(c);
        return p;
    }

    /// t^e for integer e
    static HalfLaurent t_pow(int e) { return term(2 * e, 1); }

    /// t^(halves/2)
    static HalfLaurent t_half_pow(int halves) { return term(halves, 1); }

    /// Dense integer-exponent polynomial from the coefficient of t^min_degree up.
    static HalfLaurent from_coeffs(int min_degree, const std::vector<Int>& coeffs) {
        HalfLaurent p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.terms_[2 * (min_degree + static_cast<int>(i))] = coeffs[i];
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of t^(halves/2); zero when absent.
    Int coeff_halves(int halves) const {
        auto it = terms_.find(halves);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Coefficient of t^e, integer e.
    Int coeff(int e) const { return coeff_halves(2 * e); }

    int min_halves() const {
        require_nonzero("min_halves");
        return terms_.begin()->first;
    }

    int max_halves() const {
        require_nonzero("max_halves");
        return terms_.rbegin()->first;
    }

    bool has_integer_exponents() const {
        for (const auto& [h, c] : terms_) {
            (void)c;
            if (h % 2 != 0) return false;
        }
        return true;
    }

    /// Degree for integer-exponent polynomials.
    int max_degree() const {
        ensure_integer("max_degree");
        return max_halves() / 2;
    }

    int min_degree() const {
        ensure_integer("min_degree");
        return min_halves() / 2;
    }

    Int leading_coeff() const {
        require_nonzero("leading_coeff");
        return terms_.rbegin()->second;
    }

    HalfLaurent operator-() const {
        HalfLaurent r;
        for (const auto& [h, c] : terms_) r.terms_[h] = -c;
        return r;
    }

    HalfLaurent& operator+=(const HalfLaurent& q) {
        for (const auto& [h, c] : q.terms_) {
            Int& slot = terms_[h];
            slot += c;
            if (slot == 0) terms_.erase(h);
        }
        return *this;
    }

    HalfLaurent& operator-=(const HalfLaurent& q) {
        for (const auto& [h, c] : q.terms_) {
            Int& slot = terms_[h];
            slot -= c;
            if (slot == 0) terms_.erase(h);
        }
        return *this;
    }

    friend HalfLaurent operator+(HalfLaurent p, const HalfLaurent& q) { return p += q; }
    friend HalfLaurent operator-(HalfLaurent p, const HalfLaurent& q) { return p -= q; }

    friend HalfLaurent operator*(const HalfLaurent& p, const HalfLaurent& q) {
        HalfLaurent r;
        for (const auto& [hp, cp] : p.terms_)
            for (const auto& [hq, cq] : q.terms_) {
                Int& slot = r.terms_[hp + hq];
                slot += cp * cq;
                if (slot == 0) r.terms_.erase(hp + hq);
            }
        return r;
    }

    HalfLaurent& operator*=(const HalfLaurent& q) { return *this = *this * q; }

    friend HalfLaurent operator*(const HalfLaurent& p, const Int& s) {
        HalfLaurent r;
        if (s == 0) return r;
        for (const auto& [h, c] : p.terms_) r.terms_[h] = c * s;
        return r;
    }

    friend HalfLaurent operator*(const Int& s, const HalfLaurent& p) { return p * s; }

    /// Multiply by t^(halves/2).
    HalfLaurent shifted(int halves) const {
        HalfLaurent r;
        for (const auto& [h, c] : terms_) r.terms_[h + halves] = c;
        return r;
    }

    friend bool operator==(const HalfLaurent& p, const HalfLaurent& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const HalfLaurent& p, const HalfLaurent& q) { return !(p == q); }
    friend bool operator<(const HalfLaurent& p, const HalfLaurent& q) { return p.terms_ < q.terms_; }

private:
    void require_nonzero(const char* who) const {
        if (terms_.empty()) throw ZeroPolynomial(std::string(who) + ": zero polynomial");
    }
    void ensure_integer(const char* who) const {
        for (const auto& [h, c] : terms_) {
            (void)c;
            if (h % 2 != 0)
                throw HalfExponentPresent(std::string(who) + ": exponent " + std::to_string(h) + "/2");
        }
    }

    Terms terms_;
};

/// p with t replaced by 1/t; used for mirror images.
inline HalfLaurent invert_variable(const HalfLaurent& p) {
    HalfLaurent r;
    for (const auto& [h, c] : p.terms()) r += HalfLaurent::term(-h, c);
    return r;
}

/// Dense coefficient list from min to max degree inclusive.  The zero
/// polynomial yields an empty list (its min degree is undefined).
/// Throws HalfExponentPresent when any exponent is non-integral.
inline std::pair<int, std::vector<Int>> coeff_vector(const HalfLaurent& p) {
    if (p.is_zero()) return {0, {}};
    for (const auto& [h, c] : p.terms()) {
        (void)c;
        if (h % 2 != 0)
            throw HalfExponentPresent("coeff_vector: exponent " + std::to_string(h) + "/2");
    }
    const int lo = p.min_halves() / 2;
    const int hi = p.max_halves() / 2;
    std::vector<Int> v(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (const auto& [h, c] : p.terms()) v[static_cast<std::size_t>(h / 2 - lo)] = c;
    return {lo, v};
}

/// AC (alternating coefficient) test: nonzero and [p]_j * [p]_{j+1} < 0 for
/// all j between min and max degree.  Interior zeros fail the test.
inline bool is_ac(const HalfLaurent& p) {
    if (p.is_zero()) return false;
    auto [lo, v] = coeff_vector(p);
    (void)lo;
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] * v[j + 1] >= 0) return false;
    return true;
}

/// Exact quotient p/d; throws NotDivisible when no Laurent quotient over Z exists.
inline HalfLaurent exact_div(const HalfLaurent& p, const HalfLaurent& d) {
    if (d.is_zero()) throw NotDivisible("exact_div: division by zero");
    if (p.is_zero()) return {};
    // In a valid division q = p/d the lowest quotient exponent is fixed by
    // the bottom terms, which bounds the long division from below.
    const int q_min = p.min_halves() - d.min_halves();
    const int dh = d.max_halves();
    const Int dc = d.leading_coeff();
    HalfLaurent q;
    HalfLaurent rem = p;
    while (!rem.is_zero()) {
        const int th = rem.max_halves() - dh;
        if (th < q_min) throw NotDivisible("exact_div: nonzero remainder");
        const Int rc = rem.leading_coeff();
        if (rc % dc != 0) throw NotDivisible("exact_div: leading coefficient");
        HalfLaurent t = HalfLaurent::term(th, rc / dc);
        q += t;
        rem -= t * d;
    }
    return q;
}

inline HalfLaurent pow(const HalfLaurent& p, int e) {
    HalfLaurent r = HalfLaurent::one();
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

/// (-1)^x
inline int sign_pow(long long x) { return (x % 2 == 0) ? 1 : -1; }

/// G = 1 + t + t^2
inline HalfLaurent poly_G() {
    return HalfLaurent::from_coeffs(0, {1, 1, 1});
}

} // namespace skein3
