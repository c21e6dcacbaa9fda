#include <catch2/catch_amalgamated.hpp>

#include "skein3/alexander_family.hpp"

using namespace skein3;

TEST_CASE("A family values") {
    CHECK(A(0).is_zero());
    CHECK(A(1) == HalfLaurent::one());
    CHECK(A(3) == HalfLaurent::from_coeffs(0, {1, -1, 1}));
    CHECK(A(-2) == HalfLaurent::from_coeffs(-2, {1, -1}));
    // division definition cross-check: A_w (t+1) = t^w + eps_{w-1}
    const HalfLaurent tp1 = HalfLaurent::from_coeffs(0, {1, 1});
    for (int w = -8; w <= 8; ++w)
        CHECK(A(w) * tp1 == HalfLaurent::t_pow(w) + HalfLaurent::constant(sign_pow(w - 1)));
    for (int w = -8; w <= 8; ++w)
        CHECK(invert_variable(A(w)) == (Int(sign_pow(w - 1)) * A(w)).shifted(2 * (1 - w)));
}

TEST_CASE("boundary sums") {
    CHECK(L_sum(0) == HalfLaurent::one());
    CHECK(R_sum(0) == HalfLaurent::one());
    CHECK(L_sum(2) == HalfLaurent::from_coeffs(0, {1, -2, 3}));
    CHECK(R_sum(2) == HalfLaurent::from_coeffs(0, {3, -2, 1}));
    CHECK(L_sum(-1).is_zero());
    CHECK(R_sum(-1).is_zero());
    for (int b = 0; b <= 15; ++b) {
        CHECK(L_sum(b) == A(b + 1) + L_sum(b - 1).shifted(2));
        CHECK(R_sum(b) == A(b + 1) - R_sum(b - 1));
    }
}

TEST_CASE("A recursions") {
    for (int w = -10; w <= 10; ++w)
        for (int z = -10; z <= 10; ++z) {
            CHECK(A(w) == A(w - z).shifted(2 * z) + Int(sign_pow(w - z)) * A(z));
            CHECK(A(w + z - 1) == A(w) * A(z) + (A(w - 1) * A(z - 1)).shifted(2));
        }
}

TEST_CASE("three-window product partition") {
    SECTION("worked values") {
        ProductPartition p32 = product_partition(3, 2);
        CHECK(p32.total() == A(3) * A(2));
        CHECK(p32.total() == HalfLaurent::from_coeffs(0, {-1, 2, -2, 1}));
        ProductPartition px1 = product_partition(7, 1);
        CHECK(px1.left.is_zero());
        CHECK(px1.right.is_zero());
        CHECK(px1.mid == A(7));
        ProductPartition p22 = product_partition(2, 2);
        CHECK(p22.total() == HalfLaurent::from_coeffs(0, {1, -2, 1}));
    }
    SECTION("grid with disjoint supports") {
        for (int x = 0; x <= 10; ++x)
            for (int y = 0; y <= x; ++y) {
                ProductPartition parts = product_partition(x, y);
                CHECK(parts.total() == A(x) * A(y));
                for (const auto& [h, c] : parts.left.terms()) {
                    (void)c;
                    CHECK(parts.mid.coeff_halves(h) == 0);
                    CHECK(parts.right.coeff_halves(h) == 0);
                }
                for (const auto& [h, c] : parts.mid.terms()) {
                    (void)c;
                    CHECK(parts.right.coeff_halves(h) == 0);
                }
            }
    }
    CHECK_THROWS_AS(product_partition(2, 3), PreconditionViolated);
    CHECK_THROWS_AS(product_partition(3, -1), PreconditionViolated);
}

TEST_CASE("product decomposition") {
    SECTION("A_5 A_2 A_2") {
        ProdDecomposition d = prod_decompose(5, {2, 2});
        CHECK(d.lambda == 4);
        CHECK(d.f == HalfLaurent::from_coeffs(0, {1, -3}));
        CHECK(d.g == HalfLaurent::from_coeffs(0, {-3, 1}));
        CHECK(d.shift == 2);
        CHECK(d.middle_index == 3);
        CHECK(d.g_shift == 5);
        CHECK(d.total() == HalfLaurent::from_coeffs(0, {1, -3, 4, -4, 4, -3, 1}));
        CHECK(d.total() == A(5) * A(2) * A(2));
    }
    SECTION("all unit factors collapse f and g") {
        ProdDecomposition d = prod_decompose(3, {1});
        CHECK(d.lambda == 1);
        CHECK(d.f.is_zero());
        CHECK(d.g.is_zero());
        CHECK(d.total() == A(3));
    }
    SECTION("f depends on x0 only through parity; g not at all") {
        ProdDecomposition d5 = prod_decompose(5, {2, 2});
        ProdDecomposition d7 = prod_decompose(7, {2, 2});
        ProdDecomposition d6 = prod_decompose(6, {2, 2});
        CHECK(d5.f == d7.f);
        CHECK(d5.g == d7.g);
        CHECK(d5.g == d6.g);
    }
    SECTION("grid reassembly") {
        for (int x1 = 1; x1 <= 4; ++x1)
            for (int x2 = 1; x2 <= 4; ++x2)
                for (int x0 = x1 + x2 - 1; x0 <= x1 + x2 + 2; ++x0) {
                    ProdDecomposition d = prod_decompose(x0, {x1, x2});
                    CHECK(d.total() == A(x0) * A(x1) * A(x2));
                }
    }
    CHECK_THROWS_AS(prod_decompose(2, {2, 2}), PreconditionViolated);
    CHECK_THROWS_AS(prod_decompose(5, {}), PreconditionViolated);
}

TEST_CASE("one extension step") {
    SECTION("y = 1 is the identity") {
        ProdDecomposition base = prod_decompose(6, {2, 2});
        ProdDecomposition ext = lambda_extend(base.f, base.lambda, base.shift - 1, base.middle_index, base.g, 1);
        CHECK(ext.f == base.f);
        CHECK(ext.lambda == base.lambda);
        CHECK(ext.g == base.g);
        CHECK(ext.middle_index == base.middle_index);
    }
    SECTION("matches the two-step decomposition") {
        ProdDecomposition base = prod_decompose(5, {2});
        ProdDecomposition ext = lambda_extend(base.f, base.lambda, base.shift - 1, base.middle_index, base.g, 2);
        ProdDecomposition direct = prod_decompose(5, {2, 2});
        CHECK(ext.f == direct.f);
        CHECK(ext.lambda == direct.lambda);
        CHECK(ext.g == direct.g);
        CHECK(ext.shift == direct.shift);
    }
    SECTION("lambda sign rule") {
        ProdDecomposition base = prod_decompose(5, {2});
        ProdDecomposition ext = lambda_extend(base.f, base.lambda, base.shift - 1, base.middle_index, base.g, 2);
        CHECK(ext.lambda == Int(-sign_pow(2)) * 2 * base.lambda);
    }
    SECTION("hypothesis guards") {
        ProdDecomposition base = prod_decompose(5, {2});
        CHECK_THROWS_AS(
            lambda_extend(base.f, base.lambda, base.shift - 1, base.middle_index, base.g, base.middle_index + 1),
            HypothesisViolated);
        CHECK_THROWS_AS(lambda_extend(HalfLaurent::from_coeffs(0, {1, 1}), 5, 1, 3, HalfLaurent{}, 2),
                        HypothesisViolated);
        CHECK_THROWS_AS(lambda_extend(HalfLaurent{}, 0, -1, 3, HalfLaurent{}, 1), HypothesisViolated);
    }
}

TEST_CASE("partition of t^k A_s") {
    SECTION("case table values") {
        PartitionShift a = partition_shift(0, 5, 2, 4);
        CHECK((a.lambda1 == -1 && a.z1 == 2));
        CHECK((a.lambda2 == -1 && a.z2 == 2));
        CHECK(a.z3 == 1);
        PartitionShift b = partition_shift(0, 2, 5, 7);
        CHECK((b.lambda1 == 1 && b.z1 == 2 && b.lambda2 == 1 && b.z2 == 0 && b.z3 == 0));
        PartitionShift c = partition_shift(0, 3, 2, 5);
        CHECK((c.lambda1 == -1 && c.z1 == 2 && c.lambda2 == 1 && c.z2 == 1 && c.z3 == 0));
    }
    SECTION("reconstruction grid") {
        for (int k = 0; k <= 5; ++k)
            for (int s = 1; s <= 7; ++s)
                for (int g1 = std::max(1, k); g1 <= 7; ++g1)
                    for (int b2 = g1; b2 <= 8; ++b2)
                        CHECK(partition_shift(k, s, g1, b2).total(k, g1, b2) == A(s).shifted(2 * k));
    }
    CHECK_THROWS_AS(partition_shift(3, 2, 2, 5), PreconditionViolated);
    CHECK_THROWS_AS(partition_shift(0, 2, 5, 4), PreconditionViolated);
}

TEST_CASE("A_w stays alternating") {
    for (int w = -20; w <= 20; ++w) {
        if (w == 0) continue;
        HalfLaurent aw = A(w);
        if (w < 0) aw = aw.shifted(-aw.min_halves());
        CHECK(is_ac(aw));
    }
}
