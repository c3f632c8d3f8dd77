#include "support.hpp"

#include <gtest/gtest.h>

using namespace tst;

namespace {

// Closed forms per simple block.
Scalar expected_genus(Ring r, int n, const Scalar& R, int g) {
    Scalar base = (R * q(n)).pow(2 - 2 * g);
    switch (r) {
        case Ring::C:
        case Ring::R: return base;
        case Ring::C_R: return q(2) * base;
        case Ring::H_R: return q(2).pow(2 - 2 * g) * base;
    }
    return {};
}

Scalar expected_group(const std::vector<int>& dims, const Scalar& R, int g) {
    Scalar s;
    for (int d : dims) s += q(d).pow(2 - 2 * g);
    return R.pow(2 - 2 * g) * s;
}

}  // namespace

TEST(Epsilon, Examples) {
    auto F = frobenius_fhk(matrix_algebra(2, Ring::C), q(1));
    EXPECT_EQ(F->eps(F->algebra()->unit()), q(4));
    auto G = frobenius_group(cyclic_group_algebra(2), q(1));
    EXPECT_EQ(G->eps(G->algebra()->basis(0)), q(2));
    EXPECT_EQ(G->eps(G->algebra()->basis(1)), q(0));
}

TEST(FromElement, SpecialnessEnforced) {
    auto A = matrix_algebra(1, Ring::C);
    EXPECT_THROW(frobenius_from_element(A, Vec{q(3)}, q(1, 3)), FrobeniusError);
    EXPECT_NO_THROW(frobenius_from_element(A, Vec{q(3)}, q(3)));
    EXPECT_THROW(frobenius_from_element(A, Vec{q(0)}, q(1)), FrobeniusError);
}

TEST(Construction, Rejects) {
    auto A = matrix_algebra(2, Ring::C);
    EXPECT_THROW(frobenius_fhk(A, q(0)), FrobeniusError);
    EXPECT_THROW(frobenius_raw(A, Vec(4), q(1)), FrobeniusError);  // degenerate
    EXPECT_THROW(frobenius_group(A, q(1)), FrobeniusError);
}

TEST(BForm, MatrixAlgebra) {
    for (int n = 2; n <= 3; ++n)
        for (const Scalar& R : {q(1), q(1, 2)}) {
            auto F = frobenius_fhk(matrix_algebra(n, Ring::C), R);
            for (int a = 0; a < n * n; ++a)
                for (int b = 0; b < n * n; ++b) {
                    int l = a / n, m = a % n, l2 = b / n, m2 = b % n;
                    Scalar want = (l == m2 && m == l2) ? (R * q(n)).inverse() : q(0);
                    EXPECT_EQ(F->B_up()(a, b), want);
                }
        }
}

TEST(BForm, GroupAlgebra) {
    for (const Scalar& R : {q(1), q(1, 2)}) {
        auto F = frobenius_group(cyclic_group_algebra(2), R);
        Scalar h = (q(2) * R).inverse();
        EXPECT_EQ(F->B_up()(0, 0), h);
        EXPECT_EQ(F->B_up()(1, 1), h);
        EXPECT_EQ(F->B_up()(0, 1), q(0));
    }
}

TEST(Nakayama, SymmetricIsIdentity) {
    for (const auto& [name, F] : standard_models(q(1))) {
        EXPECT_TRUE(F->symmetric()) << name;
        EXPECT_EQ(F->nakayama(), Matrix::identity(F->dim())) << name;
    }
}

TEST(Nakayama, ConjugationByX) {
    auto A = matrix_algebra(2, Ring::C);
    Vec x = diag_element(*A, 2, {q(1), q(2)});
    auto F = frobenius_from_element(A, x, q(2, 3));  // R Tr(x^-1) = 2/3 * 3/2
    Vec xi = *A->inverse(x);
    for (int b = 0; b < 4; ++b) {
        EXPECT_EQ(F->sigma(A->basis(b)), A->mul(A->mul(xi, A->basis(b)), x)) << b;
        for (int a = 0; a < 4; ++a)
            EXPECT_EQ(F->eps(A->mul(A->basis(a), A->basis(b))), F->eps(A->mul(F->sigma(A->basis(b)), A->basis(a))));
    }
    EXPECT_TRUE(verify_nakayama_automorphism(*F).ok());
    EXPECT_FALSE(sigma_involutive(*F));
    EXPECT_FALSE(spherical_condition(*F));
    EXPECT_FALSE(b_symmetry_split(*F));
}

TEST(Nakayama, SphericalNonSymmetric) {
    auto F = nonsymmetric_superalgebra();
    EXPECT_FALSE(F->symmetric());
    EXPECT_TRUE(sigma_involutive(*F));
    EXPECT_TRUE(spherical_condition(*F));
    EXPECT_TRUE(b_symmetry_split(*F));
}

TEST(Identities, AllModels) {
    for (const Scalar& R : {q(1), q(1, 2)})
        for (const auto& [name, F] : standard_models(R)) {
            EXPECT_TRUE(verify_frobenius_identities(*F).ok()) << name;
            EXPECT_TRUE(verify_nakayama_automorphism(*F).ok()) << name;
            EXPECT_TRUE(F->special()) << name;
        }
}

TEST(Separability, Examples) {
    EXPECT_TRUE(verify_separability(*frobenius_fhk(matrix_algebra(2, Ring::C), q(1))).ok());
    EXPECT_TRUE(verify_separability(*frobenius_group(cyclic_group_algebra(4), q(1))).ok());
    auto scaled = frobenius_fhk(matrix_algebra(2, Ring::C), q(1))->with_epsilon_scaled(q(2));
    auto rep = verify_separability(*scaled);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.failures.back(), "m(t) != 1");
}

TEST(ClosedGenus, MatrixAlgebras) {
    for (Ring r : {Ring::R, Ring::C, Ring::C_R, Ring::H_R})
        for (int n = 1; n <= 3; ++n)
            for (const Scalar& R : {q(1), q(1, 2)}) {
                auto F = frobenius_fhk(matrix_algebra(n, r), R);
                for (int g = 0; g <= 3; ++g)
                    EXPECT_EQ(closed_genus_invariant(*F, g), expected_genus(r, n, R, g)) << ring_name(r) << n << " g=" << g;
            }
}

TEST(ClosedGenus, GroupAlgebras) {
    for (int m = 1; m <= 6; ++m)
        for (const Scalar& R : {q(1), q(1, 2)}) {
            auto F = frobenius_group(cyclic_group_algebra(m), R);
            for (int g = 0; g <= 3; ++g)
                EXPECT_EQ(closed_genus_invariant(*F, g), expected_group(std::vector<int>(m, 1), R, g)) << m << " " << g;
        }
    auto S3 = frobenius_group(group_algebra(symmetric_group(3)), q(1));
    for (int g = 0; g <= 3; ++g) EXPECT_EQ(closed_genus_invariant(*S3, g), expected_group({1, 1, 2}, q(1), g));
    EXPECT_EQ(closed_genus_invariant(*frobenius_group(cyclic_group_algebra(2), q(1)), 0), q(2));
}

TEST(ClosedGenus, Examples) {
    auto F = frobenius_fhk(matrix_algebra(2, Ring::C), q(1));
    EXPECT_EQ(closed_genus_invariant(*F, 0), q(4));
    EXPECT_EQ(closed_genus_invariant(*F, 1), q(1));
    EXPECT_EQ(closed_genus_invariant(*F, 3), q(1, 16));
    EXPECT_THROW(closed_genus_invariant(*F, -1), FrobeniusError);
    EXPECT_THROW(closed_genus_invariant(*F->with_epsilon_scaled(q(2)), 1), FrobeniusError);
}
