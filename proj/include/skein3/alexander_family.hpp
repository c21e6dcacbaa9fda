#pragma once

#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "skein3/errors.hpp"
#include "skein3/half_laurent.hpp"

namespace skein3 {

/// A_w = (t^w + eps_{w-1})/(t+1), the two-strand torus Alexander family.
/// Computed by the explicit alternating sum for w > 0 and the mirror
/// identity A_w = eps_{w-1} t^w A_{|w|} for w < 0; A_0 = 0.
inline HalfLaurent A(int w) {
    if (w == 0) return {};
    if (w > 0) {
        HalfLaurent p;
        for (int j = 0; j < w; ++j) p += HalfLaurent::term(2 * (w - 1 - j), sign_pow(j));
        return p;
    }
    return (sign_pow(w - 1) * A(-w)).shifted(2 * w);
}

/// L(b) = sum_{j=0}^{b} eps_j (1+b-j) t^{b-j}; zero for b < 0.
inline HalfLaurent L_sum(int b) {
    HalfLaurent p;
    for (int j = 0; j <= b; ++j) p += HalfLaurent::term(2 * (b - j), Int(sign_pow(j)) * (1 + b - j));
    return p;
}

/// R(b) = sum_{j=0}^{b} eps_j (j+1) t^{b-j}; zero for b < 0.
inline HalfLaurent R_sum(int b) {
    HalfLaurent p;
    for (int j = 0; j <= b; ++j) p += HalfLaurent::term(2 * (b - j), Int(sign_pow(j)) * (j + 1));
    return p;
}

/// The three disjoint pieces of A_x A_y for x >= y >= 0:
///   A_x A_y = eps_x L(y-2) - y eps_y t^{y-1} A_{x-y+1} + t^x R(y-2).
struct ProductPartition {
    HalfLaurent left;
    HalfLaurent mid;
    HalfLaurent right;

    HalfLaurent total() const { return left + mid + right; }
};

inline ProductPartition product_partition(int x, int y) {
    if (x < y || y < 0)
        throw PreconditionViolated("product_partition: need x >= y >= 0, got (" + std::to_string(x) + "," +
                                   std::to_string(y) + ")");
    ProductPartition parts;
    parts.left = Int(sign_pow(x)) * L_sum(y - 2);
    parts.mid = (Int(-y) * sign_pow(y) * A(x - y + 1)).shifted(2 * (y - 1));
    parts.right = R_sum(y - 2).shifted(2 * x);
    return parts;
}

/// Decomposition  f + lambda t^shift A_{middle_index} + t^{g_shift} g  of a
/// product of A's, with f, g AC of rising/falling coefficient size.
struct ProdDecomposition {
    HalfLaurent f;
    Int lambda = 0;
    int shift = 0;        // power of t on the middle A term
    int middle_index = 0; // index of the middle A term
    HalfLaurent g;
    int g_shift = 0;

    HalfLaurent total() const {
        return f + (HalfLaurent::constant(lambda) * A(middle_index)).shifted(2 * shift) + g.shifted(2 * g_shift);
    }
};

namespace detail {

inline void check_strict_abs_monotone(const HalfLaurent& p, bool increasing, const Int& bound,
                                      const char* which) {
    if (p.is_zero()) return;
    if (!is_ac(p)) throw HypothesisViolated(std::string(which) + " is not an AC polynomial");
    auto [lo, v] = coeff_vector(p);
    (void)lo;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        const Int a = abs(v[j]), b = abs(v[j + 1]);
        if (increasing ? !(a < b) : !(a > b))
            throw HypothesisViolated(std::string(which) + ": coefficient sizes not strictly " +
                                     (increasing ? "increasing" : "decreasing"));
    }
    for (const Int& c : v)
        if (!(abs(c) < bound))
            throw HypothesisViolated(std::string(which) + ": coefficient size reaches |lambda|");
}

} // namespace detail

/// One step of the hereditary AC-product lemma: given
///   Lambda = f + lambda t^{d+1} A_r + t^{d+r+1} g
/// with the stated monotonicity bounds, returns the same-shaped decomposition
/// of Lambda * A_y for 1 <= y <= r:
///   f_y = f A_y + lambda t^{d+1} eps_r L(y-2),  lambda_y = -eps_y y lambda,
///   g_y = lambda R(y-2) + g A_y.
inline ProdDecomposition lambda_extend(const HalfLaurent& f, const Int& lambda, int d, int r,
                                       const HalfLaurent& g, int y) {
    if (lambda == 0) throw HypothesisViolated("lambda_extend: lambda must be nonzero");
    if (r <= 0) throw HypothesisViolated("lambda_extend: middle index r must be positive");
    if (y < 1 || y > r)
        throw HypothesisViolated("lambda_extend: need 1 <= y <= r, got y=" + std::to_string(y) +
                                 ", r=" + std::to_string(r));
    if (!f.is_zero() && f.max_degree() != d)
        throw HypothesisViolated("lambda_extend: f does not have degree d");
    if (!g.is_zero() && g.max_degree() != d)
        throw HypothesisViolated("lambda_extend: g does not have degree d");
    detail::check_strict_abs_monotone(f, /*increasing=*/true, abs(lambda), "lambda_extend: f");
    detail::check_strict_abs_monotone(g, /*increasing=*/false, abs(lambda), "lambda_extend: g");

    ProdDecomposition out;
    out.f = f * A(y) + (Int(sign_pow(r)) * lambda * L_sum(y - 2)).shifted(2 * (d + 1));
    out.lambda = Int(-sign_pow(y)) * y * lambda;
    out.shift = d + y;
    out.middle_index = r - y + 1;
    out.g = HalfLaurent::constant(lambda) * R_sum(y - 2) + g * A(y);
    out.g_shift = d + r + 1;
    return out;
}

/// Partition of prod_{j=0..m} A_{x_j} (x_0 first, xs the rest) as
///   f + lambda t^{s-m} A_{x0+m-s} + t^{x0} g,  lambda = eps_{m+s} prod xs,
/// built by folding lambda_extend over xs from the seed A_{x0}.
inline ProdDecomposition prod_decompose(int x0, const std::vector<int>& xs) {
    const int m = static_cast<int>(xs.size());
    if (m < 1) throw PreconditionViolated("prod_decompose: need at least one factor beyond x0");
    long long s = 0;
    for (int x : xs) {
        if (x < 1) throw PreconditionViolated("prod_decompose: factors must be positive");
        s += x;
    }
    if (x0 < 1 || x0 + m - 1 < s)
        throw PreconditionViolated("prod_decompose: need x0 + m - 1 >= sum(xs)");

    ProdDecomposition acc;
    acc.f = {};
    acc.lambda = 1;
    acc.shift = 0;
    acc.middle_index = x0;
    acc.g = {};
    acc.g_shift = x0;
    for (int y : xs) acc = lambda_extend(acc.f, acc.lambda, acc.shift - 1, acc.middle_index, acc.g, y);
    return acc;
}

/// Disjoint three-window partition of t^k A_s used when splitting terms
/// across the first block, inter-block gap and second block:
///   t^k A_s = lambda1 t^k A_{z1} + lambda2 t^{g1} A_{z2} + t^{b2} A_{z3}.
struct PartitionShift {
    Int lambda1 = 0;
    int z1 = 0;
    Int lambda2 = 0;
    int z2 = 0;
    int z3 = 0;

    HalfLaurent total(int k, int g1, int b2) const {
        return (HalfLaurent::constant(lambda1) * A(z1)).shifted(2 * k) +
               (HalfLaurent::constant(lambda2) * A(z2)).shifted(2 * g1) + A(z3).shifted(2 * b2);
    }
};

inline PartitionShift partition_shift(int k, int s, int g1, int b2) {
    if (k < 0 || s <= 0 || g1 <= 0 || b2 <= 0 || k > g1 || g1 > b2)
        throw PreconditionViolated("partition_shift: need k >= 0, s,g1,b2 > 0, k <= g1 <= b2");
    PartitionShift out;
    if (g1 <= k + s) {
        out.z1 = g1 - k;
        out.lambda1 = sign_pow(g1 + k + s);
    } else {
        out.z1 = s;
        out.lambda1 = 1;
    }
    if (b2 <= k + s) {
        out.z2 = b2 - g1;
        out.lambda2 = sign_pow(b2 + k + s);
    } else if (g1 <= k + s) {
        out.z2 = k + s - g1;
        out.lambda2 = 1;
    } else {
        out.z2 = 0;
        out.lambda2 = 1;
    }
    out.z3 = (k + s >= b2) ? k + s - b2 : 0;
    return out;
}

} // namespace skein3
