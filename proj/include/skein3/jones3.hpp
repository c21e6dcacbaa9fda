#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein3/alexander_family.hpp"
#include "skein3/braid_word.hpp"
#include "skein3/errors.hpp"
#include "skein3/half_laurent.hpp"
#include "skein3/oracle.hpp"
#include "skein3/two_var_poly.hpp"

namespace skein3 {

/// Jones polynomial of the elementary torus link T(2,w) for any w:
/// -t^{(w-1)/2} (eps_w + t^2 A_{w-1}).
inline HalfLaurent jones_2braid(int w) {
    HalfLaurent inner = HalfLaurent::constant(sign_pow(w)) + A(w - 1).shifted(4);
    return (-inner).shifted(w - 1);
}

/// Alexander polynomial of T(2,w): t^{-(w-1)/2} A_w.
inline HalfLaurent alexander_2braid(int w) { return A(w).shifted(-(w - 1)); }

/// Alexander polynomial of a closure from the Conway oracle.
inline HalfLaurent alexander_of(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    return specialize(oracle.conway(b), SkeinTarget::alexander);
}

/// Jones polynomial of any three-braid link from its writhe and Alexander
/// polynomial:  V = t^{(w-2)/2} { t^{w+1} + eps_w G - G t^{w/2} Delta }.
inline HalfLaurent jones_3braid(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    if (b.strands() != 3) throw ShapeMismatch("jones_3braid: expected a word in B_3");
    const int w = b.writhe();
    const HalfLaurent delta = alexander_of(b, oracle);
    HalfLaurent inner = HalfLaurent::t_pow(w + 1) + Int(sign_pow(w)) * poly_G() - (poly_G() * delta).shifted(w);
    return inner.shifted(w - 2);
}

/// Jones polynomial of the torus link T(3,m), m >= 1.
inline HalfLaurent jones_torus3(int m) {
    if (m < 1) throw PreconditionViolated("jones_torus3: need m >= 1");
    HalfLaurent inner = HalfLaurent::from_coeffs(0, {1, 0, 1});
    if (m % 3 == 0)
        inner += HalfLaurent::term(2 * (m + 1), 2);
    else
        inner -= HalfLaurent::t_pow(m + 1);
    return inner.shifted(2 * (m - 1));
}

/// One syllable step of the Jones recursion:
///   V(beta sigma_i^e closure) = t^{(e-1)/2} A_e V(beta sigma_i closure)
///                             + t^{(e+2)/2} A_{e-1} V(beta closure).
/// Returns the right-hand side evaluated through jones_3braid.
inline HalfLaurent syllable_step_jones(const BraidWord& beta, int i, int e,
                                       const SkeinOracle& oracle = default_oracle()) {
    BraidWord with_sigma = beta;
    with_sigma.append(i, 1);
    const HalfLaurent v1 = jones_3braid(with_sigma, oracle);
    const HalfLaurent v0 = jones_3braid(beta, oracle);
    return (A(e) * v1).shifted(e - 1) + (A(e - 1) * v0).shifted(e + 2);
}

/// V = t^{(w-2)/2} V* with V* = eps_w (1 + t^2) + t^2 V**.
struct VStarPair {
    int shift_halves = 0; // w - 2, the prefactor exponent in half units
    HalfLaurent vstar;
    std::optional<HalfLaurent> vstarstar;

    HalfLaurent reconstruct() const { return vstar.shifted(shift_halves); }
};

namespace detail {

inline VStarPair make_vstar_pair(int writhe, const HalfLaurent& v) {
    VStarPair out;
    out.shift_halves = writhe - 2;
    out.vstar = v.shifted(-(writhe - 2));
    if (!out.vstar.has_integer_exponents())
        throw HalfExponentPresent("V*: residual half exponent after removing t^{(w-2)/2}");
    HalfLaurent core = out.vstar - Int(sign_pow(writhe)) * HalfLaurent::from_coeffs(0, {1, 0, 1});
    if (core.is_zero())
        out.vstarstar = HalfLaurent{};
    else if (core.min_degree() >= 2)
        out.vstarstar = core.shifted(-4);
    return out;
}

/// Closed form of V** for the rank-one word sigma_1^a sigma_2^b.
inline HalfLaurent vstarstar_rank1(int a, int b) {
    const int w = a + b;
    const int lo = std::min(a, b), hi = std::max(a, b);
    if (lo == 1 && hi == 2) return {};
    if (lo == 1 && hi == 1) return HalfLaurent::constant(-1);
    if (lo == 1) return (-A(w - 3)).shifted(2);
    return HalfLaurent::constant(sign_pow(w)) + (Int(sign_pow(b)) * A(a - 2)).shifted(2) +
           (Int(sign_pow(a)) * A(b - 2)).shifted(2) + (A(a - 1) * A(b - 1)).shifted(4);
}

} // namespace detail

/// V*/V** of a positive alternating 3-braid closure, with the rank-one
/// closed forms cross-checked against the extraction.
inline VStarPair vstar(const BraidWord& b, const SkeinOracle& oracle = default_oracle()) {
    const std::vector<int> es = detail::alternating_exponents(b, 1);
    VStarPair out = detail::make_vstar_pair(b.writhe(), jones_3braid(b, oracle));
    if (!out.vstarstar)
        throw Error("vstar: V** extraction failed for a positive alternating word");
    if (es.size() == 2 && *out.vstarstar != detail::vstarstar_rank1(es[0], es[1]))
        throw Error("vstar: rank-one closed form mismatch (internal)");
    return out;
}

/// The rank-two grouping of V* for sigma_1^a sigma_2^b sigma_1^c sigma_2^d:
/// V* = B1 + t^{a+2} B2 + Q, with B1 fixed by the parity of a and B2
/// independent of a.
struct Rank2VStar {
    HalfLaurent B1;
    HalfLaurent B2;
    HalfLaurent Q;
    int a = 0;

    HalfLaurent total() const { return B1 + B2.shifted(2 * (a + 2)) + Q; }
};

inline Rank2VStar rank2_vstar(int a, int b, int c, int d) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw PreconditionViolated("rank2_vstar: exponents must be positive");
    const int w = a + b + c + d;
    Rank2VStar out;
    out.a = a;
    const HalfLaurent AbAd = A(b) * A(d);
    out.B1 = Int(sign_pow(w)) * HalfLaurent::from_coeffs(0, {1, 0, 1}) +
             HalfLaurent::term(2 * (b + d + 1), sign_pow(a + c)) +
             (Int(sign_pow(a)) * AbAd).shifted(2 * (c + 2)) + (Int(2 * sign_pow(a + c - 1)) * AbAd).shifted(4);
    out.B2 = HalfLaurent::term(2 * (c - 1), sign_pow(b + d)) + Int(sign_pow(d)) * (A(b) * A(c)) +
             Int(sign_pow(c)) * AbAd + Int(sign_pow(b)) * (A(c) * A(d));
    out.Q = (Int(sign_pow(c + d)) * (A(a) * A(b))).shifted(4) +
            (Int(sign_pow(b + c)) * (A(a) * A(d))).shifted(4) + (A(a) * A(b) * A(c) * A(d)).shifted(6);
    return out;
}

/// Homflypt polynomial of the closure of [1,3]^{3a} gamma from the full-twist
/// decomposition; P_{T_w} values come from the two-strand recursions.
inline TwoVarPoly homfly_fulltwists(int a, const BraidWord& gamma,
                                    const SkeinOracle& oracle = default_oracle()) {
    if (a == 0) throw PreconditionViolated("homfly_fulltwists: need a != 0");
    if (gamma.strands() != 3) throw ShapeMismatch("homfly_fulltwists: gamma must be in B_3");
    const int w = gamma.writhe();
    const TwoVarPoly pg = oracle.homfly(gamma);
    auto torus_p = [](int e) { return torus_two_strand(e).second; };
    TwoVarPoly acc;
    if (a > 0) {
        acc = pg.shifted(6 * a, 0);
        for (int j = 1; j <= a; ++j) {
            acc += torus_p(w + 6 * j - 1).shifted(6 * a - 6 * j, 0);
            acc -= torus_p(w + 6 * j - 5).shifted(6 + 6 * a - 6 * j, 0);
        }
    } else {
        const int m = -a;
        acc = pg.shifted(-6 * m, 0);
        for (int j = 1; j <= m; ++j) {
            acc += torus_p(w - 6 * j + 1).shifted(6 * j - 6 * m, 0);
            acc -= torus_p(w - 6 * j + 5).shifted(6 * j - 6 * m - 6, 0);
        }
    }
    return acc;
}

/// The two-block form of V for beta = [1,3]^{3a} gamma:
///   V = t^{(w(beta)-2)/2} { eps_{w(gamma)} (1+t^2) + t^{3a} B2(t,gamma) },
///   B2(t,gamma) = t^{(2-w(gamma))/2} V(gamma closure) + eps_{w(gamma)+1} (1+t^2).
struct FullTwistJones {
    int shift_halves = 0; // w(beta) - 2
    HalfLaurent first_block;
    HalfLaurent B2;
    int a = 0;

    HalfLaurent reconstruct() const { return (first_block + B2.shifted(6 * a)).shifted(shift_halves); }
};

inline FullTwistJones jones_fulltwists(int a, const BraidWord& gamma,
                                       const SkeinOracle& oracle = default_oracle()) {
    if (gamma.strands() != 3) throw ShapeMismatch("jones_fulltwists: gamma must be in B_3");
    const int wg = gamma.writhe();
    FullTwistJones out;
    out.a = a;
    out.shift_halves = wg + 6 * a - 2;
    out.first_block = Int(sign_pow(wg)) * HalfLaurent::from_coeffs(0, {1, 0, 1});
    out.B2 = jones_3braid(gamma, oracle).shifted(2 - wg) +
             Int(sign_pow(wg + 1)) * HalfLaurent::from_coeffs(0, {1, 0, 1});
    return out;
}

/// V* for the closure of sigma_1^x sigma_2^y [1,3]^z, x, y, z >= 0,
/// dispatching on z mod 3.  The z = 0 mod 3 case uses the A-polynomial form,
/// the z = 2 mod 3 case divides exactly by (1+t)^2.
inline VStarPair jones_xy_fulltwists(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw PreconditionViolated("jones_xy_fulltwists: need x, y, z >= 0");
    const int w = x + y + 2 * z;
    const HalfLaurent one_t2 = HalfLaurent::from_coeffs(0, {1, 0, 1});
    const Int eps_xy = sign_pow(x + y);
    HalfLaurent vs;
    switch (z % 3) {
    case 0: {
        HalfLaurent tail = HalfLaurent::constant(sign_pow(x + y + 1)) + Int(sign_pow(y)) * A(x - 1) +
                           Int(sign_pow(x)) * A(y - 1) + (A(x - 1) * A(y - 1)).shifted(4);
        vs = eps_xy * one_t2 + tail.shifted(2 * (z + 2));
        break;
    }
    case 1: {
        vs = eps_xy * one_t2 - A(x + y - 1).shifted(2 * (z + 2));
        break;
    }
    default: {
        HalfLaurent num = HalfLaurent::t_pow(x + y) + (Int(sign_pow(x - 1)) * poly_G()).shifted(2 * y) +
                          (Int(sign_pow(y - 1)) * poly_G()).shifted(2 * x) + eps_xy * HalfLaurent::t_pow(2);
        const HalfLaurent onep_t_sq = HalfLaurent::from_coeffs(0, {1, 2, 1});
        vs = eps_xy * one_t2 + exact_div(num, onep_t_sq).shifted(2 * (z + 1));
        break;
    }
    }
    VStarPair out;
    out.shift_halves = w - 2;
    out.vstar = vs;
    HalfLaurent core = vs - eps_xy * one_t2;
    if (core.is_zero())
        out.vstarstar = HalfLaurent{};
    else if (core.min_degree() >= 2)
        out.vstarstar = core.shifted(-4);
    return out;
}

/// Jones polynomial of the two-tier T-link T((2,x),(3,s)), x >= 0, s >= 1,
/// by the three cases of s mod 3; x = 0 gives the T(3,s) torus values.
inline HalfLaurent jones_2tier_tlink(int x, int s) {
    if (x < 0 || s < 1) throw PreconditionViolated("jones_2tier_tlink: need x >= 0, s >= 1");
    const int a = s / 3;
    const HalfLaurent one_t2 = HalfLaurent::from_coeffs(0, {1, 0, 1});
    if (x == 0) return jones_torus3(s);
    const Int eps_x = sign_pow(x);
    switch (s % 3) {
    case 0: {
        HalfLaurent tail = (HalfLaurent::constant(eps_x) + HalfLaurent::t_pow(x)).shifted(2 * (3 * a + 1));
        return (eps_x * one_t2 + tail).shifted(6 * a + x - 2);
    }
    case 1:
        return (eps_x * one_t2 - A(x - 1).shifted(2 * (3 * a + 3))).shifted(6 * a + x);
    default:
        return (eps_x * one_t2 - A(x + 1).shifted(2 * (3 * a + 3))).shifted(6 * a + x + 2);
    }
}

/// Second-block closed form for sigma_1^x sigma_2^y [1,3]^z with
/// x >= y >= 3 and z = 0 mod 3:  V* = eps_{x+y}(1+t^2) + t^{z+2} B2.
struct Rank1FullTwistBlocks {
    HalfLaurent first_block;
    HalfLaurent B2;
    int z = 0;

    HalfLaurent vstar() const { return first_block + B2.shifted(2 * (z + 2)); }
};

inline Rank1FullTwistBlocks rank1_fulltwist_blocks(int x, int y, int z) {
    if (x < y || y < 3 || z < 3 || z % 3 != 0)
        throw PreconditionViolated("rank1_fulltwist_blocks: need x >= y >= 3 and z >= 3, z = 0 mod 3");
    Rank1FullTwistBlocks out;
    out.z = z;
    out.first_block = Int(sign_pow(x + y)) * HalfLaurent::from_coeffs(0, {1, 0, 1});
    if (x == y) {
        out.B2 = Int(sign_pow(x)) * L_sum(x - 2) + HalfLaurent::term(2 * (x - 1), Int(sign_pow(x + 1)) * (x - 2)) +
                 R_sum(x - 2).shifted(2 * x);
    } else {
        out.B2 = Int(sign_pow(x)) * L_sum(y - 2) + HalfLaurent::term(2 * (y - 1), Int(sign_pow(x + 1)) * (y - 1)) +
                 (Int(sign_pow(y)) * y * A(x - y - 1)).shifted(2 * y) +
                 HalfLaurent::term(2 * (x - 1), Int(sign_pow(y + 1)) * (y - 1)) + R_sum(y - 2).shifted(2 * x);
    }
    return out;
}

/// Jones delta: V of the k-component unlink is (-t^{1/2} - t^{-1/2})^{k-1}.
inline HalfLaurent jones_unlink_delta() {
    return -(HalfLaurent::t_half_pow(1) + HalfLaurent::t_half_pow(-1));
}

} // namespace skein3
